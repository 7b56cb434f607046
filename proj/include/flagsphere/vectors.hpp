#pragma once

#include <optional>
#include <vector>

#include "flagsphere/complex.hpp"
#include "flagsphere/polynomial.hpp"

namespace flagsphere {

/// f_K(t) = sum_i f_{i-1} t^i, constant term 1 for the empty face.
IntPolynomial f_polynomial(const SimplicialComplex& k);

/// h-vector of a complex whose facets have at most d vertices:
/// h_j = sum_{i<=j} (-1)^{j-i} C(d-i, j-i) f_{i-1}.
IntPolynomial h_from_f(const IntPolynomial& f, int d);

/// Inverse transform: f_j = sum_i C(d-i, j-i) h_i.
IntPolynomial f_from_h(const IntPolynomial& h, int d);

/// Dehn–Sommerville symmetry h_i = h_{d-i}.
bool check_dehn_sommerville(const IntPolynomial& h, int d);

/// Expand h in the basis t^i (1+t)^(d-2i). Errors ("Dehn–Sommerville
/// violated") when h is not palindromic, because the expansion only exists
/// on palindromes.
IntPolynomial gamma_from_h(const IntPolynomial& h, int d);

/// h(t) = sum_i gamma_i t^i (1+t)^(d-2i) — inverse of gamma_from_h.
IntPolynomial h_from_gamma(const IntPolynomial& gamma, int d);

struct VectorReport {
    int d = 0;  // dim + 1
    IntPolynomial f;
    IntPolynomial h;
    bool dehn_sommerville = false;
    std::optional<IntPolynomial> gamma;  // present iff dehn_sommerville
};

VectorReport vector_report(const SimplicialComplex& k);

/// Convenience f -> h -> gamma; throws like gamma_from_h on non-palindromic h.
IntPolynomial gamma_polynomial(const SimplicialComplex& k);

/// Per-index check of sum_v h_{i-1}(lk_v K) = i*h_i + (d-i+1)*h_{i-1},
/// i = 1..d.
struct McMullenRow {
    int i;
    Integer lhs;
    Integer rhs;
};
struct McMullenCheck {
    bool pass = false;
    int d = 0;
    std::vector<McMullenRow> rows;
};
McMullenCheck mcmullen_identity_check(const SimplicialComplex& k);

/// sum over vertices of h(lk_v); shared by several inequality checks.
IntPolynomial vertex_link_h_sum(const SimplicialComplex& k);

}  // namespace flagsphere
