#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagsphere {

/// Exact integer type for all face/h/gamma arithmetic. Counts stay exact at
/// any size; no floating point anywhere in the pipeline.
using Integer = boost::multiprecision::cpp_int;

inline Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Dense integer polynomial, normalized so the trailing (highest-degree)
/// coefficient is nonzero; the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;

    IntPolynomial(std::initializer_list<long long> cs) {
        for (long long c : cs) c_.emplace_back(c);
        normalize();
    }

    explicit IntPolynomial(std::vector<Integer> cs) : c_(std::move(cs)) {
        normalize();
    }

    static IntPolynomial zero() { return IntPolynomial(); }

    /// (1+t)^k
    static IntPolynomial one_plus_t_power(int k) {
        if (k < 0) throw std::invalid_argument("negative power");
        std::vector<Integer> cs(k + 1);
        for (int i = 0; i <= k; ++i) cs[i] = binomial(k, i);
        return IntPolynomial(std::move(cs));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Integer& coeff(int i) const {
        static const Integer kZero = 0;
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[i];
    }

    void set_coeff(int i, Integer v) {
        if (i < 0) throw std::invalid_argument("negative index");
        if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
        c_[i] = std::move(v);
        normalize();
    }

    const std::vector<Integer>& coeffs() const { return c_; }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<Integer> cs(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) + o.coeff(i);
        return IntPolynomial(std::move(cs));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<Integer> cs(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < cs.size(); ++i) cs[i] = coeff(i) - o.coeff(i);
        return IntPolynomial(std::move(cs));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return IntPolynomial();
        std::vector<Integer> cs(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) cs[i + j] += c_[i] * o.c_[j];
        return IntPolynomial(std::move(cs));
    }

    IntPolynomial operator*(const Integer& s) const {
        std::vector<Integer> cs(c_);
        for (auto& c : cs) c *= s;
        return IntPolynomial(std::move(cs));
    }

    /// multiply by t^k
    IntPolynomial shifted(int k) const {
        if (k < 0) throw std::invalid_argument("negative shift");
        if (is_zero()) return IntPolynomial();
        std::vector<Integer> cs(c_.size() + k);
        std::copy(c_.begin(), c_.end(), cs.begin() + k);
        return IntPolynomial(std::move(cs));
    }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    /// "(1, 3, 1)" — coefficient list, constant term first.
    std::string to_string() const {
        if (c_.empty()) return "(0)";
        std::string s = "(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].str();
        }
        return s + ")";
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

/// Coefficientwise p <= q with the shorter side zero-padded.
inline bool poly_leq(const IntPolynomial& p, const IntPolynomial& q) {
    int d = std::max(p.degree(), q.degree());
    for (int i = 0; i <= d; ++i)
        if (p.coeff(i) > q.coeff(i)) return false;
    return true;
}

}  // namespace flagsphere
