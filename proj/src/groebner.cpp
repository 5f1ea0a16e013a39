#include "jetvpa/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace jetvpa {

namespace {

using LeadTerm = std::pair<Monomial, Scalar>;

std::vector<LeadTerm> lead_terms(const std::vector<Polynomial>& basis,
                                 const MonomialOrder& order) {
    std::vector<LeadTerm> leads;
    leads.reserve(basis.size());
    for (const Polynomial& g : basis) leads.push_back(g.leading_term(order));
    return leads;
}

Polynomial reduce_with_leads(const Polynomial& p, const std::vector<Polynomial>& basis,
                             const std::vector<LeadTerm>& leads, const MonomialOrder& order) {
    Polynomial remainder;
    Polynomial h = p;
    while (!h.is_zero()) {
        auto [lm, lc] = h.leading_term(order);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (auto q = lm / leads[k].first) {
                h -= Polynomial::term(*q, lc / leads[k].second) * basis[k];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial t = Polynomial::term(lm, lc);
            remainder += t;
            h -= t;
        }
    }
    return remainder;
}

Polynomial reduce_against(const Polynomial& p, const std::vector<Polynomial>& basis,
                          const MonomialOrder& order) {
    return reduce_with_leads(p, basis, lead_terms(basis, order), order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    auto [fm, fc] = f.leading_term(order);
    auto [gm, gc] = g.leading_term(order);
    Monomial l = Monomial::lcm(fm, gm);
    Polynomial left = Polynomial::term(*(l / fm), Scalar(1) / fc) * f;
    Polynomial right = Polynomial::term(*(l / gm), Scalar(1) / gc) * g;
    return left - right;
}

std::vector<VarId> collect_variables(const std::vector<Polynomial>& gens) {
    std::set<VarId> vars;
    for (const Polynomial& g : gens)
        for (VarId v : g.variables()) vars.insert(v);
    return {vars.begin(), vars.end()};
}

void check_ambient(const std::vector<Polynomial>& polys, const std::vector<VarId>& ambient) {
    std::set<VarId> allowed(ambient.begin(), ambient.end());
    for (const Polynomial& p : polys)
        for (VarId v : p.variables())
            if (!allowed.count(v))
                throw std::invalid_argument("polynomial mentions variable " + var_name(v) +
                                            " outside the ambient set");
}

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
    return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order,
                         std::vector<VarId> variables) {
    std::sort(variables.begin(), variables.end());
    variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
    check_ambient(generators, variables);

    std::vector<Polynomial> g;
    for (const Polynomial& f : generators)
        if (!f.is_zero()) g.push_back(f.monic(order));
    std::vector<LeadTerm> leads = lead_terms(g, order);

    // pending S-pairs keyed by their lcm (normal selection strategy:
    // smallest lcm first, ties by index)
    struct Pending {
        Monomial lcm;
        size_t i, j;
    };
    auto pending_less = [&order](const Pending& a, const Pending& b) {
        auto c = order.compare(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pending, decltype(pending_less)> pending(pending_less);
    std::set<std::pair<size_t, size_t>> pending_index;
    auto push_pair = [&](size_t i, size_t j) {
        pending.insert(Pending{Monomial::lcm(leads[i].first, leads[j].first), i, j});
        pending_index.insert({i, j});
    };
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) push_pair(i, j);

    while (!pending.empty()) {
        auto [best_lcm, i, j] = *pending.begin();
        pending.erase(pending.begin());
        pending_index.erase({i, j});

        if (leads[i].first.coprime(leads[j].first)) continue;  // first criterion

        // chain criterion: some k with lm_k | lcm(i,j) and both pairs
        // (i,k), (j,k) already handled
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!leads[k].first.divides(best_lcm)) continue;
            if (!pending_index.count({std::min(i, k), std::max(i, k)}) &&
                !pending_index.count({std::min(j, k), std::max(j, k)}))
                skip = true;
        }
        if (skip) continue;

        Polynomial h =
            reduce_with_leads(s_polynomial(g[i], g[j], order), g, leads, order);
        if (h.is_zero()) continue;
        g.push_back(h.monic(order));
        leads.push_back(g.back().leading_term(order));
        size_t n = g.size() - 1;
        for (size_t k = 0; k < n; ++k) push_pair(k, n);
    }

    // minimalize: drop elements whose leading monomial is divisible by
    // another's; scanning ascending keeps exactly the minimal generators
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    std::vector<Polynomial> minimal;
    for (const Polynomial& p : g) {
        const Monomial lm = p.leading_monomial(order);
        bool covered = false;
        for (const Polynomial& k : minimal)
            if (k.leading_monomial(order).divides(lm)) {
                covered = true;
                break;
            }
        if (!covered) minimal.push_back(p);
    }

    // tail-reduce each element against the others; leading terms are
    // pairwise non-divisible so they survive and the result is the
    // unique reduced basis
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(reduce_against(minimal[i], others, order).monic(order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });

    return GroebnerBasis{order, std::move(reduced), std::move(variables)};
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
    return buchberger(generators, order, collect_variables(generators));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    check_ambient({p}, gb.variables);
    return reduce_against(p, gb.basis, gb.order);
}

bool ideal_contains(const GroebnerBasis& a, const std::vector<Polynomial>& gens_b) {
    for (const Polynomial& f : gens_b)
        if (!normal_form(f, a).is_zero()) return false;
    return true;
}

namespace {

struct IndependentSetSearch {
    const std::vector<uint64_t>& lead_masks;
    int num_vars;
    int best_count = -1;
    uint64_t best_mask = 0;

    bool independent(uint64_t candidate) const {
        for (uint64_t m : lead_masks)
            if ((m & ~candidate) == 0) return false;
        return true;
    }

    void dfs(int var, uint64_t mask, int count) {
        if (count + (num_vars - var) <= best_count) return;
        if (var == num_vars) {
            best_count = count;
            best_mask = mask;
            return;
        }
        uint64_t with = mask | (uint64_t(1) << var);
        if (independent(with)) dfs(var + 1, with, count + 1);
        dfs(var + 1, mask, count);
    }
};

}  // namespace

DimensionReport krull_dimension(const GroebnerBasis& gb) {
    DimensionReport report;
    if (gb.is_unit_ideal()) {
        report.krull_dimension = -1;
        report.zero_dimensional = false;
        report.unit_ideal = true;
        return report;
    }

    const int n = static_cast<int>(gb.variables.size());
    if (n > 40)
        throw std::invalid_argument("krull_dimension: too many variables for subset search");

    std::vector<uint64_t> masks;
    for (const Polynomial& g : gb.basis) {
        uint64_t m = 0;
        const Monomial lm = g.leading_monomial(gb.order);
        for (const auto& [v, e] : lm.factors()) {
            auto it = std::lower_bound(gb.variables.begin(), gb.variables.end(), v);
            m |= uint64_t(1) << (it - gb.variables.begin());
        }
        masks.push_back(m);
    }
    // keep only inclusion-minimal supports
    std::vector<uint64_t> minimal;
    for (uint64_t m : masks) {
        bool dominated = false;
        for (uint64_t k : masks)
            if (k != m && (k & ~m) == 0) {
                dominated = true;
                break;
            }
        if (!dominated && std::find(minimal.begin(), minimal.end(), m) == minimal.end())
            minimal.push_back(m);
    }

    IndependentSetSearch search{minimal, n};
    search.dfs(0, 0, 0);
    report.krull_dimension = search.best_count;
    report.zero_dimensional = (search.best_count == 0);
    for (int i = 0; i < n; ++i)
        if (search.best_mask & (uint64_t(1) << i)) report.independent_set.push_back(gb.variables[i]);

    if (report.zero_dimensional)
        report.quotient_dimension = static_cast<long>(quotient_basis(gb).size());
    return report;
}

std::vector<Monomial> quotient_basis(const GroebnerBasis& gb) {
    if (gb.is_unit_ideal())
        throw std::invalid_argument("quotient_basis: unit ideal (the zero ring)");

    const int n = static_cast<int>(gb.variables.size());
    // per-variable staircase bound: the minimal pure power of each
    // variable among the leading monomials
    std::vector<int> bound(n, -1);
    for (const Polynomial& g : gb.basis) {
        const Monomial lm = g.leading_monomial(gb.order);
        if (lm.factors().size() != 1) continue;
        auto [v, e] = lm.factors().front();
        auto it = std::lower_bound(gb.variables.begin(), gb.variables.end(), v);
        int idx = static_cast<int>(it - gb.variables.begin());
        if (bound[idx] < 0 || e < bound[idx]) bound[idx] = e;
    }
    for (int i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw std::invalid_argument(
                "quotient_basis: ideal is not zero-dimensional (variable " +
                var_name(gb.variables[i]) + " has no pure power leading term)");

    std::vector<Monomial> lead;
    for (const Polynomial& g : gb.basis) lead.push_back(g.leading_monomial(gb.order));

    std::vector<Monomial> out;
    std::vector<int> exps(n, 0);
    // enumerate all exponent tuples under the staircase bounds
    while (true) {
        std::vector<Monomial::Factor> factors;
        for (int i = 0; i < n; ++i)
            if (exps[i] > 0) factors.push_back({gb.variables[i], exps[i]});
        Monomial m(std::move(factors));
        bool standard = true;
        for (const Monomial& l : lead)
            if (l.divides(m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(m);

        int i = 0;
        while (i < n) {
            if (++exps[i] < bound[i]) break;
            exps[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return gb.order.less(a, b);
    });
    return out;
}

}  // namespace jetvpa
