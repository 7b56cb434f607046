#include "flagsphere/vectors.hpp"

#include <stdexcept>

namespace flagsphere {

IntPolynomial f_polynomial(const SimplicialComplex& k) {
    std::vector<Integer> cs;
    for (long long c : k.f_vector()) cs.emplace_back(c);
    return IntPolynomial(std::move(cs));
}

IntPolynomial h_from_f(const IntPolynomial& f, int d) {
    if (f.degree() > d)
        throw std::invalid_argument("f-polynomial degree exceeds d");
    std::vector<Integer> h(d + 1);
    for (int j = 0; j <= d; ++j) {
        Integer s = 0;
        for (int i = 0; i <= j; ++i) {
            Integer term = binomial(d - i, j - i) * f.coeff(i);
            if ((j - i) % 2) s -= term;
            else s += term;
        }
        h[j] = s;
    }
    return IntPolynomial(std::move(h));
}

IntPolynomial f_from_h(const IntPolynomial& h, int d) {
    if (h.degree() > d)
        throw std::invalid_argument("h-polynomial degree exceeds d");
    std::vector<Integer> f(d + 1);
    for (int j = 0; j <= d; ++j) {
        Integer s = 0;
        for (int i = 0; i <= j; ++i) s += binomial(d - i, j - i) * h.coeff(i);
        f[j] = s;
    }
    return IntPolynomial(std::move(f));
}

bool check_dehn_sommerville(const IntPolynomial& h, int d) {
    if (h.degree() > d) return false;
    for (int i = 0; i <= d; ++i)
        if (h.coeff(i) != h.coeff(d - i)) return false;
    return true;
}

IntPolynomial gamma_from_h(const IntPolynomial& h, int d) {
    if (!check_dehn_sommerville(h, d))
        throw std::domain_error("Dehn–Sommerville violated");
    IntPolynomial rest = h;
    std::vector<Integer> gamma(d / 2 + 1);
    for (int i = 0; i <= d / 2; ++i) {
        gamma[i] = rest.coeff(i);
        if (gamma[i] != 0)
            rest = rest - IntPolynomial::one_plus_t_power(d - 2 * i)
                              .shifted(i) * gamma[i];
    }
    if (!rest.is_zero())
        throw std::logic_error("gamma expansion did not terminate");
    return IntPolynomial(std::move(gamma));
}

IntPolynomial h_from_gamma(const IntPolynomial& gamma, int d) {
    if (2 * gamma.degree() > d)
        throw std::invalid_argument("gamma degree exceeds d/2");
    IntPolynomial h;
    for (int i = 0; i <= gamma.degree(); ++i)
        h = h + IntPolynomial::one_plus_t_power(d - 2 * i).shifted(i) *
                    gamma.coeff(i);
    return h;
}

VectorReport vector_report(const SimplicialComplex& k) {
    VectorReport r;
    r.d = k.dim() + 1;
    r.f = f_polynomial(k);
    r.h = h_from_f(r.f, r.d);
    r.dehn_sommerville = check_dehn_sommerville(r.h, r.d);
    if (r.dehn_sommerville) r.gamma = gamma_from_h(r.h, r.d);
    return r;
}

IntPolynomial gamma_polynomial(const SimplicialComplex& k) {
    int d = k.dim() + 1;
    return gamma_from_h(h_from_f(f_polynomial(k), d), d);
}

IntPolynomial vertex_link_h_sum(const SimplicialComplex& k) {
    IntPolynomial sum;
    const auto& buckets = k.faces_by_card();
    if (buckets.size() <= 1) return sum;
    for (const Face& v : buckets[1]) {
        SimplicialComplex lk = k.link(v);
        sum = sum + h_from_f(f_polynomial(lk), lk.dim() + 1);
    }
    return sum;
}

McMullenCheck mcmullen_identity_check(const SimplicialComplex& k) {
    McMullenCheck out;
    out.d = k.dim() + 1;
    IntPolynomial h = h_from_f(f_polynomial(k), out.d);
    IntPolynomial link_sum = vertex_link_h_sum(k);
    out.pass = true;
    for (int i = 1; i <= out.d; ++i) {
        McMullenRow row;
        row.i = i;
        row.lhs = link_sum.coeff(i - 1);
        row.rhs = Integer(i) * h.coeff(i) +
                  Integer(out.d - i + 1) * h.coeff(i - 1);
        if (row.lhs != row.rhs) out.pass = false;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace flagsphere
