#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "flagsphere/complex.hpp"
#include "flagsphere/moves.hpp"

namespace flagsphere {

/// Input rejected while parsing; carries a 1-based line number when one is
/// known (0 otherwise). what() already includes the position.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                            message
                                      : message),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

enum class FileFormat { kText, kStructured };

/// ".json" means structured, anything else text.
FileFormat format_for_path(const std::string& path);

struct ComplexDocument {
    SimplicialComplex complex;
    std::string name;  // empty when the source carries none
};

/// Text facet lists: one facet per line, whitespace-separated vertex labels,
/// lines starting with '#' (after optional blanks) are comments, blank lines
/// skipped. Rejected with line numbers: negative integer labels, a label
/// repeated inside one facet, no facets at all. Note the complex {∅} has no
/// text spelling; use the structured format for it.
ComplexDocument read_complex_text(std::istream& in);

/// Structured facet lists: an object with optional "name" (string),
/// optional "dim" (validated against the parsed complex), and "facets"
/// (array of arrays of nonnegative integers or strings; an integer and its
/// decimal spelling are the same label).
ComplexDocument read_complex_structured(std::istream& in);

ComplexDocument read_complex_file(const std::string& path);  // by extension
ComplexDocument read_complex_file(const std::string& path, FileFormat fmt);

/// Writers are byte-stable: vertices within a facet and facets against each
/// other are ordered by label (integer labels numerically, before and apart
/// from non-integer ones), so write(read(write(k))) == write(k).
void write_complex_text(std::ostream& out, const SimplicialComplex& k);
void write_complex_structured(std::ostream& out, const SimplicialComplex& k,
                              const std::string& name = "");
void write_complex_file(const std::string& path, const SimplicialComplex& k,
                        const std::string& name = "");
void write_complex_file(const std::string& path, const SimplicialComplex& k,
                        FileFormat fmt, const std::string& name = "");

/// Subdivision scripts as structured documents: {"d": ..., "seed": ...
/// (only when seeded), "steps": [[u, v], ...]}.
void write_script(std::ostream& out, const SubdivisionScript& s);
SubdivisionScript read_script(std::istream& in);
void write_script_file(const std::string& path, const SubdivisionScript& s);
SubdivisionScript read_script_file(const std::string& path);

}  // namespace flagsphere
