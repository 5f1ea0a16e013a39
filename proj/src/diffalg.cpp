#include "jetvpa/diffalg.hpp"

#include <stdexcept>

namespace jetvpa {

void Presentation::validate() const {
    if (num_generators < 1)
        throw std::invalid_argument("Presentation: num_generators must be >= 1");
    if (!names.empty() && static_cast<int>(names.size()) != num_generators)
        throw std::invalid_argument("Presentation: names must match num_generators");
    for (const Polynomial& f : relations) {
        if (!f.only_level(1))
            throw std::invalid_argument(
                "Presentation: relations must mention level-1 variables only");
        for (VarId v : f.variables())
            if (v.gen > num_generators)
                throw std::invalid_argument("Presentation: relation mentions generator " +
                                            std::to_string(v.gen) + " out of range");
    }
}

long Presentation::max_relation_weight() const {
    long w = -1;
    for (const Polynomial& f : relations) w = std::max(w, f.weight());
    return w;
}

DifferentialRing::DifferentialRing(Presentation pres, std::optional<int> truncation_order)
    : pres_(std::move(pres)), truncation_(truncation_order) {
    pres_.validate();
    if (truncation_ && *truncation_ < 0)
        throw std::invalid_argument("DifferentialRing: truncation order must be >= 0");
}

int DifferentialRing::max_level() const {
    if (!truncation_) throw std::logic_error("max_level of an unbounded ring");
    return *truncation_ + 1;
}

std::vector<VarId> DifferentialRing::variables() const {
    std::vector<VarId> vars;
    for (int level = 1; level <= max_level(); ++level)
        for (int gen = 1; gen <= pres_.num_generators; ++gen)
            vars.push_back(jet_var(gen, level));
    return vars;
}

std::vector<VarId> DifferentialRing::variables_up_to_weight(long max_weight) const {
    std::vector<VarId> vars;
    long top = max_weight;
    if (truncation_) top = std::min<long>(top, max_level());
    for (int level = 1; level <= top; ++level)
        for (int gen = 1; gen <= pres_.num_generators; ++gen)
            vars.push_back(jet_var(gen, level));
    return vars;
}

bool DifferentialRing::in_range(const Polynomial& p) const {
    for (VarId v : p.variables()) {
        if (v.gen > pres_.num_generators) return false;
        if (truncation_ && v.level > max_level()) return false;
    }
    return true;
}

Polynomial derive(const DifferentialRing& ring, const Polynomial& p) {
    const std::optional<int> trunc = ring.truncation_order();
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.factors()) {
            // variables at the truncation boundary (and beyond) map to zero
            if (trunc && v.level >= *trunc + 1) continue;
            Monomial rest = *(m / Monomial::variable(v));
            Monomial bumped = rest * Monomial::variable(jet_var(v.gen, v.level + 1));
            out += Polynomial::term(bumped, c * e * v.level);
        }
    }
    return out;
}

Polynomial derive_n(const DifferentialRing& ring, const Polynomial& p, int n) {
    if (n < 0) throw std::invalid_argument("derive_n: n must be >= 0");
    Polynomial out = p;
    for (int i = 0; i < n; ++i) out = derive(ring, out);
    return out;
}

JetIdeal jet_ideal(const Presentation& pres, int order) {
    DifferentialRing ring = DifferentialRing::truncated(pres, order);
    std::vector<Polynomial> gens;
    for (const Polynomial& f : pres.relations) {
        Polynomial g = f;
        for (int j = 0; j <= order; ++j) {
            if (!g.is_zero()) gens.push_back(g);
            g = derive(ring, g);
        }
    }
    std::vector<VarId> vars = ring.variables();
    return JetIdeal{std::move(ring), std::move(gens), std::move(vars)};
}

JetIdeal arc_ideal_truncation(const Presentation& pres, long max_weight) {
    DifferentialRing ring = DifferentialRing::unbounded(pres);
    if (max_weight < pres.max_relation_weight())
        throw std::invalid_argument(
            "arc_ideal_truncation: max_weight below a relation weight");
    std::vector<Polynomial> gens;
    for (const Polynomial& f : pres.relations) {
        Polynomial g = f;
        while (!g.is_zero() && g.weight() <= max_weight) {
            gens.push_back(g);
            g = derive(ring, g);
        }
    }
    std::vector<VarId> vars = ring.variables_up_to_weight(max_weight);
    return JetIdeal{std::move(ring), std::move(gens), std::move(vars)};
}

}  // namespace jetvpa
