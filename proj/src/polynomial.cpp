#include "jetvpa/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace jetvpa {

Polynomial::Polynomial(Scalar constant) {
    if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial::Polynomial(long constant) : Polynomial(Scalar(constant)) {}

Polynomial Polynomial::variable(VarId v) {
    return term(Monomial::variable(v), Scalar(1));
}

Polynomial Polynomial::term(Monomial m, Scalar c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

long Polynomial::weight() const {
    long w = -1;
    for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
    return w;
}

int Polynomial::max_level() const {
    int lvl = 0;
    for (const auto& [m, c] : terms_) lvl = std::max(lvl, m.max_level());
    return lvl;
}

bool Polynomial::is_weight_homogeneous() const {
    if (terms_.empty()) return true;
    long w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return false;
    return true;
}

Polynomial Polynomial::weight_component(long w) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.weight() == w) out.terms_.emplace(m, c);
    return out;
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.insert(v);
    return vars;
}

bool Polynomial::only_level(int level) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (v.level != level) return false;
    return true;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    out += rhs;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    out -= rhs;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(Scalar(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::partial_derivative(VarId v) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        auto quotient = m / Monomial::variable(v);
        out.add_term(*quotient, c * e);
    }
    return out;
}

std::pair<Monomial, Scalar> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::invalid_argument("leading_term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).first;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    Scalar lc = leading_term(order).second;
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c / lc);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // sort descending under the default order
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto* a, const auto* b) { return order.greater(a->first, b->first); });

    std::string s;
    bool first = true;
    for (const auto* t : sorted) {
        const Monomial& m = t->first;
        Scalar c = t->second;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        if (m.is_unit()) {
            s += to_string(c);
        } else if (c == 1) {
            s += m.str();
        } else {
            s += to_string(c) + "*" + m.str();
        }
    }
    return s;
}

}  // namespace jetvpa
