#include "jetvpa/poly_gcd.hpp"

#include <map>
#include <stdexcept>

namespace jetvpa {

namespace {

const MonomialOrder kOrder = MonomialOrder::weighted_degrevlex();

int degree_in(const Polynomial& p, VarId v) {
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(v));
    return d;
}

// p as a univariate polynomial in v: v-degree -> coefficient polynomial
// (free of v).
std::map<int, Polynomial> univariate_view(const Polynomial& p, VarId v) {
    std::map<int, Polynomial> view;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        Monomial rest = e > 0 ? *(m / Monomial::variable(v, e)) : m;
        view[e] += Polynomial::term(rest, c);
    }
    return view;
}

Polynomial coefficient_in(const std::map<int, Polynomial>& view, int k) {
    auto it = view.find(k);
    return it == view.end() ? Polynomial() : it->second;
}

// lc(b)^t * a  -  q * b with v-degree(result) < v-degree(b); the standard
// pseudo-remainder.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, VarId v) {
    int db = degree_in(b, v);
    auto bview = univariate_view(b, v);
    Polynomial lcb = coefficient_in(bview, db);
    while (!a.is_zero()) {
        int da = degree_in(a, v);
        if (da < db) break;
        auto aview = univariate_view(a, v);
        Polynomial lca = coefficient_in(aview, da);
        Polynomial shift = Polynomial::term(Monomial::variable(v, da - db), Scalar(1));
        a = a * lcb - b * (lca * shift);
    }
    return a;
}

Polynomial gcd_rec(Polynomial a, Polynomial b);

Polynomial content_in(const Polynomial& p, VarId v) {
    Polynomial cont;
    for (const auto& [e, coeff] : univariate_view(p, v)) cont = gcd_rec(cont, coeff);
    return cont;
}

Polynomial gcd_rec(Polynomial a, Polynomial b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic(kOrder);
    if (b.is_zero()) return a.monic(kOrder);
    if (a.is_constant() || b.is_constant()) return Polynomial(Scalar(1));

    auto va = a.variables();
    auto vb = b.variables();
    VarId v = std::max(*va.rbegin(), *vb.rbegin());

    int da = degree_in(a, v);
    int db = degree_in(b, v);
    if (da == 0) return gcd_rec(a, content_in(b, v));
    if (db == 0) return gcd_rec(content_in(a, v), b);

    Polynomial cont_a = content_in(a, v);
    Polynomial cont_b = content_in(b, v);
    Polynomial pa = poly_exact_divide(a, cont_a);
    Polynomial pb = poly_exact_divide(b, cont_b);
    if (da < db) std::swap(pa, pb);

    while (!pb.is_zero()) {
        Polynomial r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        pb = r.is_zero() ? r : poly_exact_divide(r, content_in(r, v));
    }
    return (gcd_rec(cont_a, cont_b) * pa).monic(kOrder);
}

}  // namespace

Polynomial poly_exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_exact_divide: division by zero");
    Polynomial q;
    Polynomial r = a;
    auto [lmb, lcb] = b.leading_term(kOrder);
    while (!r.is_zero()) {
        auto [lmr, lcr] = r.leading_term(kOrder);
        auto quot = lmr / lmb;
        if (!quot) throw std::invalid_argument("poly_exact_divide: not an exact multiple");
        Polynomial t = Polynomial::term(*quot, lcr / lcb);
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) { return gcd_rec(a, b); }

}  // namespace jetvpa
