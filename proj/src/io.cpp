#include "flagsphere/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace flagsphere {

namespace {

using ordered_json = nlohmann::ordered_json;

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

std::string strip_leading_zeros(const std::string& s) {
    size_t i = s.find_first_not_of('0');
    return i == std::string::npos ? "0" : s.substr(i);
}

/// Total label order: integer labels numerically (arbitrary width), before
/// all non-integer labels; ties (leading zeros) and non-integer labels
/// break lexicographically.
bool label_less(const std::string& a, const std::string& b) {
    const bool na = all_digits(a), nb = all_digits(b);
    if (na != nb) return na;
    if (!na) return a < b;
    const std::string ca = strip_leading_zeros(a), cb = strip_leading_zeros(b);
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    if (ca != cb) return ca < cb;
    return a < b;
}

/// Shared tail of both readers: label facets -> complex, with the label
/// table ordered by label_less so that writing is reproducible.
SimplicialComplex assemble(const std::vector<std::vector<std::string>>& facets) {
    if (facets.empty()) throw ParseError("no facets");
    std::set<std::string, bool (*)(const std::string&, const std::string&)>
        distinct(label_less);
    for (const auto& f : facets)
        for (const auto& lbl : f) distinct.insert(lbl);
    if (static_cast<int>(distinct.size()) > kMaxVertices)
        throw ParseError("too many vertices (" +
                         std::to_string(distinct.size()) + "; the cap is " +
                         std::to_string(kMaxVertices) + ")");
    std::map<std::string, VertexId, bool (*)(const std::string&, const std::string&)>
        id_of(label_less);
    std::vector<std::string> labels;
    for (const auto& lbl : distinct) {
        id_of[lbl] = static_cast<VertexId>(labels.size());
        labels.push_back(lbl);
    }
    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (const auto& f : facets) {
        Face face;
        for (const auto& lbl : f) face.insert(id_of[lbl]);
        faces.push_back(face);
    }
    return SimplicialComplex::from_facets(std::move(faces), std::move(labels));
}

bool negative_integer_token(const std::string& tok) {
    return tok.size() >= 2 && tok[0] == '-' &&
           all_digits(tok.substr(1));
}

std::vector<std::vector<std::string>> ordered_label_facets(
    const SimplicialComplex& k) {
    std::vector<std::vector<std::string>> out;
    out.reserve(k.facets().size());
    for (const Face& f : k.facets()) {
        std::vector<std::string> lbls;
        f.for_each([&](VertexId v) { lbls.push_back(k.label(v)); });
        std::sort(lbls.begin(), lbls.end(), label_less);
        out.push_back(std::move(lbls));
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<std::string>& a,
                 const std::vector<std::string>& b) {
                  return std::lexicographical_compare(
                      a.begin(), a.end(), b.begin(), b.end(), label_less);
              });
    return out;
}

int line_of_byte(const std::string& text, size_t byte) {
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json parse_document(std::istream& in) {
    const std::string text = slurp(in);
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), line_of_byte(text, e.byte));
    }
}

/// Label from a structured facet entry (integer or string).
std::string entry_label(const ordered_json& entry) {
    if (entry.is_string()) return entry.get<std::string>();
    if (entry.is_number_integer()) {
        long long v = entry.get<long long>();
        if (v < 0) throw ParseError("negative vertex label " + entry.dump());
        return std::to_string(v);
    }
    throw ParseError("facet entry must be an integer or string, got " +
                     entry.dump());
}

}  // namespace

FileFormat format_for_path(const std::string& path) {
    const std::string suffix = ".json";
    if (path.size() >= suffix.size() &&
        path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return FileFormat::kStructured;
    return FileFormat::kText;
}

ComplexDocument read_complex_text(std::istream& in) {
    std::vector<std::vector<std::string>> facets;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream toks(line);
        std::vector<std::string> facet;
        std::set<std::string> seen;
        std::string tok;
        while (toks >> tok) {
            if (negative_integer_token(tok))
                throw ParseError("negative vertex label \"" + tok + "\"",
                                 line_no);
            if (!seen.insert(tok).second)
                throw ParseError("vertex \"" + tok +
                                     "\" repeated in one facet",
                                 line_no);
            facet.push_back(tok);
        }
        facets.push_back(std::move(facet));
    }
    return {assemble(facets), ""};
}

ComplexDocument read_complex_structured(std::istream& in) {
    const ordered_json doc = parse_document(in);
    if (!doc.is_object()) throw ParseError("document must be an object");
    if (!doc.contains("facets") || !doc["facets"].is_array())
        throw ParseError("missing \"facets\" array");

    std::vector<std::vector<std::string>> facets;
    for (const auto& entry : doc["facets"]) {
        if (!entry.is_array())
            throw ParseError("each facet must be an array, got " +
                             entry.dump());
        std::vector<std::string> facet;
        std::set<std::string> seen;
        for (const auto& lbl : entry) {
            std::string s = entry_label(lbl);
            if (!seen.insert(s).second)
                throw ParseError("vertex \"" + s + "\" repeated in facet " +
                                 entry.dump());
            facet.push_back(std::move(s));
        }
        facets.push_back(std::move(facet));
    }

    ComplexDocument out{assemble(facets), ""};
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ParseError("\"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }
    if (doc.contains("dim")) {
        if (!doc["dim"].is_number_integer())
            throw ParseError("\"dim\" must be an integer");
        const int declared = doc["dim"].get<int>();
        if (declared != out.complex.dim())
            throw ParseError("declared dim " + std::to_string(declared) +
                             " but the facets give dim " +
                             std::to_string(out.complex.dim()));
    }
    return out;
}

ComplexDocument read_complex_file(const std::string& path) {
    return read_complex_file(path, format_for_path(path));
}

ComplexDocument read_complex_file(const std::string& path, FileFormat fmt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return fmt == FileFormat::kText ? read_complex_text(in)
                                    : read_complex_structured(in);
}

void write_complex_text(std::ostream& out, const SimplicialComplex& k) {
    if (k.dim() < 0)
        throw std::invalid_argument(
            "the empty complex has no text spelling; use the structured "
            "format");
    for (const auto& facet : ordered_label_facets(k)) {
        for (size_t i = 0; i < facet.size(); ++i) {
            if (i) out << ' ';
            out << facet[i];
        }
        out << '\n';
    }
}

void write_complex_structured(std::ostream& out, const SimplicialComplex& k,
                              const std::string& name) {
    ordered_json doc;
    if (!name.empty()) doc["name"] = name;
    doc["dim"] = k.dim();
    ordered_json facets = ordered_json::array();
    for (const auto& facet : ordered_label_facets(k)) {
        ordered_json row = ordered_json::array();
        for (const std::string& lbl : facet) {
            // keep integer labels as numbers (only when the decimal
            // spelling is canonical, so the label round-trips exactly)
            if (all_digits(lbl) && lbl.size() <= 18 &&
                strip_leading_zeros(lbl) == lbl)
                row.push_back(std::stoll(lbl));
            else
                row.push_back(lbl);
        }
        facets.push_back(std::move(row));
    }
    doc["facets"] = std::move(facets);
    out << doc.dump(2) << '\n';
}

void write_complex_file(const std::string& path, const SimplicialComplex& k,
                        const std::string& name) {
    write_complex_file(path, k, format_for_path(path), name);
}

void write_complex_file(const std::string& path, const SimplicialComplex& k,
                        FileFormat fmt, const std::string& name) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    if (fmt == FileFormat::kText)
        write_complex_text(out, k);
    else
        write_complex_structured(out, k, name);
}

void write_script(std::ostream& out, const SubdivisionScript& s) {
    ordered_json doc;
    doc["d"] = s.d;
    if (s.seeded) doc["seed"] = s.seed;
    ordered_json steps = ordered_json::array();
    for (const Edge& e : s.steps)
        steps.push_back(ordered_json::array({e.u, e.v}));
    doc["steps"] = std::move(steps);
    out << doc.dump(2) << '\n';
}

SubdivisionScript read_script(std::istream& in) {
    const ordered_json doc = parse_document(in);
    if (!doc.is_object()) throw ParseError("script must be an object");
    SubdivisionScript s;
    if (!doc.contains("d") || !doc["d"].is_number_integer())
        throw ParseError("script needs an integer \"d\"");
    s.d = doc["d"].get<int>();
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned())
            throw ParseError("\"seed\" must be a nonnegative integer");
        s.seeded = true;
        s.seed = doc["seed"].get<uint64_t>();
    }
    if (!doc.contains("steps") || !doc["steps"].is_array())
        throw ParseError("script needs a \"steps\" array");
    for (const auto& step : doc["steps"]) {
        if (!step.is_array() || step.size() != 2 ||
            !step[0].is_number_integer() || !step[1].is_number_integer())
            throw ParseError("each step must be a pair of vertex ids, got " +
                             step.dump());
        const long long u = step[0].get<long long>();
        const long long v = step[1].get<long long>();
        if (u < 0 || v < 0 || u == v || u >= kMaxVertices || v >= kMaxVertices)
            throw ParseError("step is not an edge: " + step.dump());
        s.steps.push_back(make_edge(static_cast<VertexId>(u),
                                    static_cast<VertexId>(v)));
    }
    return s;
}

void write_script_file(const std::string& path, const SubdivisionScript& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_script(out, s);
}

SubdivisionScript read_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_script(in);
}

}  // namespace flagsphere
