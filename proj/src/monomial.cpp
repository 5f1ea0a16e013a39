#include "jetvpa/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetvpa {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    // merge duplicates, drop zero exponents
    std::vector<Factor> merged;
    for (const auto& f : factors_) {
        if (f.second < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (f.second == 0) continue;
        if (!merged.empty() && merged.back().first == f.first)
            merged.back().second += f.second;
        else
            merged.push_back(f);
    }
    factors_ = std::move(merged);
    recompute_caches();
}

Monomial Monomial::variable(VarId v, int exp) {
    return Monomial({{v, exp}});
}

void Monomial::recompute_caches() {
    degree_ = 0;
    weight_ = 0;
    for (const auto& [v, e] : factors_) {
        degree_ += e;
        weight_ += static_cast<long>(v.level) * e;
    }
}

int Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

int Monomial::max_level() const {
    int lvl = 0;
    for (const auto& [v, e] : factors_) lvl = std::max(lvl, v.level);
    return lvl;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    std::vector<Factor> out;
    out.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin(), b = rhs.factors_.begin();
    while (a != factors_.end() && b != rhs.factors_.end()) {
        if (a->first == b->first) {
            out.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        } else if (a->first < b->first) {
            out.push_back(*a++);
        } else {
            out.push_back(*b++);
        }
    }
    out.insert(out.end(), a, factors_.end());
    out.insert(out.end(), b, rhs.factors_.end());
    Monomial m;
    m.factors_ = std::move(out);
    m.recompute_caches();
    return m;
}

std::optional<Monomial> Monomial::operator/(const Monomial& rhs) const {
    std::vector<Factor> out;
    auto a = factors_.begin(), b = rhs.factors_.begin();
    while (b != rhs.factors_.end()) {
        if (a == factors_.end() || b->first < a->first) return std::nullopt;
        if (a->first < b->first) {
            out.push_back(*a++);
            continue;
        }
        if (a->second < b->second) return std::nullopt;
        if (a->second > b->second) out.push_back({a->first, a->second - b->second});
        ++a;
        ++b;
    }
    out.insert(out.end(), a, factors_.end());
    Monomial m;
    m.factors_ = std::move(out);
    m.recompute_caches();
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end()) {
        while (b != other.factors_.end() && b->first < a->first) ++b;
        if (b == other.factors_.end() || !(b->first == a->first) || b->second < a->second)
            return false;
        ++a;
    }
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first == b->first) return false;
        if (a->first < b->first)
            ++a;
        else
            ++b;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<Factor> out;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first == j->first) {
            out.push_back({i->first, std::max(i->second, j->second)});
            ++i;
            ++j;
        } else if (i->first < j->first) {
            out.push_back(*i++);
        } else {
            out.push_back(*j++);
        }
    }
    out.insert(out.end(), i, a.factors_.end());
    out.insert(out.end(), j, b.factors_.end());
    Monomial m;
    m.factors_ = std::move(out);
    m.recompute_caches();
    return m;
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace jetvpa
