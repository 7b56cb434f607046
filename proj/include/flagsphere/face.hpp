#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagsphere {

using VertexId = int;

/// Hard cap on ambient vertex count; lets a vertex set live in two machine
/// words. Exceeding it is a clean error, never silent truncation.
inline constexpr int kMaxVertices = 128;

/// A face: a duplicate-free vertex set packed into machine words, ordered as
/// the sorted list of its elements.
class Face {
public:
    static constexpr int kWords = kMaxVertices / 64;

    Face() : words_{} {}

    Face(std::initializer_list<VertexId> vs) : words_{} {
        for (VertexId v : vs) insert(v);
    }

    static Face from_vertices(const std::vector<VertexId>& vs) {
        Face f;
        for (VertexId v : vs) f.insert(v);
        return f;
    }

    /// {0, 1, ..., n-1}
    static Face full(int n) {
        Face f;
        if (n <= 0) return f;
        check_vertex(n - 1);
        for (int v = 0; v < n; ++v) f.insert(v);
        return f;
    }

    bool contains(VertexId v) const {
        if (v < 0 || v >= kMaxVertices) return false;
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(VertexId v) {
        check_vertex(v);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void erase(VertexId v) {
        if (v < 0 || v >= kMaxVertices) return;
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    bool subset_of(const Face& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Face& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    Face unite(const Face& o) const {
        Face r;
        for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    Face intersect(const Face& o) const {
        Face r;
        for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    Face minus(const Face& o) const {
        Face r;
        for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    Face with(VertexId v) const {
        Face r = *this;
        r.insert(v);
        return r;
    }

    Face without(VertexId v) const {
        Face r = *this;
        r.erase(v);
        return r;
    }

    VertexId min_vertex() const {  // -1 when empty
        for (int i = 0; i < kWords; ++i)
            if (words_[i]) return i * 64 + __builtin_ctzll(words_[i]);
        return -1;
    }

    VertexId max_vertex() const {  // -1 when empty
        for (int i = kWords - 1; i >= 0; --i)
            if (words_[i]) return i * 64 + 63 - __builtin_clzll(words_[i]);
        return -1;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(size());
        for_each([&](VertexId v) { out.push_back(v); });
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (int i = 0; i < kWords; ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(i * 64 + b);
                w &= w - 1;
            }
        }
    }

    bool operator==(const Face&) const = default;

    /// Lexicographic order on the sorted vertex sequences, so {0,5} < {1,2}
    /// and {1} < {1,2}.
    bool operator<(const Face& o) const {
        for (int i = 0; i < kWords; ++i) {
            uint64_t diff = words_[i] ^ o.words_[i];
            if (!diff) continue;
            int b = __builtin_ctzll(diff);
            if ((words_[i] >> b) & 1u) {
                // our next element is b; the other side either ran out (we
                // are longer, hence greater) or continues with something > b
                return other_has_beyond(o, i, b);
            }
            return !this->other_has_beyond_self(i, b);
        }
        return false;
    }

    size_t hash() const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t w : words_) h = h * 0x100000001b3ull ^ w;
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](VertexId v) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

    const std::array<uint64_t, kWords>& words() const { return words_; }

private:
    static void check_vertex(VertexId v) {
        if (v < 0 || v >= kMaxVertices)
            throw std::invalid_argument("vertex id " + std::to_string(v) +
                                        " outside supported range [0, " +
                                        std::to_string(kMaxVertices) + ")");
    }

    // does `o` contain any element strictly beyond bit (i, b)?
    static bool has_beyond(const std::array<uint64_t, kWords>& ws, int i, int b) {
        if ((ws[i] >> b) >> 1) return true;
        for (int j = i + 1; j < kWords; ++j)
            if (ws[j]) return true;
        return false;
    }
    bool other_has_beyond(const Face& o, int i, int b) const {
        return has_beyond(o.words_, i, b);
    }
    bool other_has_beyond_self(int i, int b) const {
        return has_beyond(words_, i, b);
    }

    std::array<uint64_t, kWords> words_;
};

struct FaceHash {
    size_t operator()(const Face& f) const { return f.hash(); }
};

}  // namespace flagsphere
