#include "jetvpa/vpa.hpp"

#include <algorithm>
#include <random>

#include "jetvpa/poly_gcd.hpp"

namespace jetvpa {

PoissonStructure::PoissonStructure(int num_generators) : r_(num_generators) {
    if (num_generators < 1)
        throw std::invalid_argument("PoissonStructure: need at least one generator");
}

void PoissonStructure::set_bracket(int a, int b, Polynomial value) {
    if (a < 1 || b < 1 || a > r_ || b > r_)
        throw std::invalid_argument("PoissonStructure: generator index out of range");
    if (a == b) throw std::invalid_argument("PoissonStructure: {x,x} is zero by definition");
    if (!value.only_level(1))
        throw std::invalid_argument("PoissonStructure: bracket values must be level-1");
    for (VarId v : value.variables())
        if (v.gen > r_)
            throw std::invalid_argument("PoissonStructure: bracket value out of range");
    validated_ = false;
    if (a > b) {
        std::swap(a, b);
        value = -value;
    }
    if (value.is_zero())
        table_.erase({a, b});
    else
        table_[{a, b}] = std::move(value);
}

Polynomial PoissonStructure::generator_bracket(int a, int b) const {
    if (a == b) return Polynomial{};
    bool flip = a > b;
    if (flip) std::swap(a, b);
    auto it = table_.find({a, b});
    if (it == table_.end()) return Polynomial{};
    return flip ? -it->second : it->second;
}

namespace {

// biderivation extension of the generator table to level-1 polynomials
Polynomial bracket_raw(const PoissonStructure& ps, const Polynomial& u, const Polynomial& v) {
    Polynomial out;
    for (int a = 1; a <= ps.num_generators(); ++a) {
        Polynomial du = u.partial_derivative(base_var(a));
        if (du.is_zero()) continue;
        for (int b = 1; b <= ps.num_generators(); ++b) {
            Polynomial tab = ps.generator_bracket(a, b);
            if (tab.is_zero()) continue;
            Polynomial dv = v.partial_derivative(base_var(b));
            if (dv.is_zero()) continue;
            out += du * dv * tab;
        }
    }
    return out;
}

void require_level1(const Polynomial& p, const char* what) {
    if (!p.only_level(1))
        throw std::invalid_argument(std::string(what) +
                                    " must mention level-1 variables only");
}

}  // namespace

PoissonStructure validate_poisson(PoissonStructure ps) {
    const int r = ps.num_generators();
    for (int a = 1; a <= r; ++a) {
        Polynomial xa = Polynomial::variable(base_var(a));
        for (int b = a + 1; b <= r; ++b) {
            Polynomial xb = Polynomial::variable(base_var(b));
            for (int c = b + 1; c <= r; ++c) {
                Polynomial xc = Polynomial::variable(base_var(c));
                Polynomial residual =
                    bracket_raw(ps, xa, bracket_raw(ps, xb, xc)) +
                    bracket_raw(ps, xb, bracket_raw(ps, xc, xa)) +
                    bracket_raw(ps, xc, bracket_raw(ps, xa, xb));
                if (!residual.is_zero()) throw JacobiViolation(a, b, c, residual);
            }
        }
    }
    ps.validated_ = true;
    return ps;
}

VpaContext::VpaContext(DifferentialRing ring_in, PoissonStructure poisson_in)
    : ring(std::move(ring_in)), poisson(std::move(poisson_in)) {
    if (!poisson.validated())
        throw std::invalid_argument("VpaContext: Poisson structure not validated");
    if (poisson.num_generators() != ring.num_generators())
        throw std::invalid_argument("VpaContext: ring and Poisson generator counts differ");
}

Polynomial bracket(const VpaContext& ctx, const Polynomial& u, const Polynomial& v) {
    require_level1(u, "bracket: first argument");
    require_level1(v, "bracket: second argument");
    return bracket_raw(ctx.poisson, u, v);
}

Polynomial nth_product_base(const VpaContext& ctx, const Polynomial& u, int n,
                            const Polynomial& target) {
    require_level1(u, "nth_product_base: u");
    if (n < 0) throw std::invalid_argument("nth_product_base: n must be >= 0");

    // {u, x^j} per generator, computed once
    std::map<int, Polynomial> gen_bracket;
    auto u_bracket_with = [&](int gen) -> const Polynomial& {
        auto it = gen_bracket.find(gen);
        if (it == gen_bracket.end())
            it = gen_bracket
                     .emplace(gen, bracket_raw(ctx.poisson, u,
                                               Polynomial::variable(base_var(gen))))
                     .first;
        return it->second;
    };

    std::map<VarId, Polynomial> var_value;  // u_(n) x^j_(-i)
    auto value_on = [&](VarId v) -> const Polynomial& {
        auto it = var_value.find(v);
        if (it == var_value.end()) {
            int l = v.level - 1;
            Polynomial val;
            if (l >= n) {
                val = derive_n(ctx.ring, u_bracket_with(v.gen), l - n);
                val = val * (Scalar(1) / factorial(static_cast<unsigned long>(l - n)));
            }
            it = var_value.emplace(v, std::move(val)).first;
        }
        return it->second;
    };

    Polynomial out;
    for (const auto& [m, c] : target.terms()) {
        for (const auto& [v, e] : m.factors()) {
            const Polynomial& val = value_on(v);
            if (val.is_zero()) continue;
            Monomial rest = *(m / Monomial::variable(v));
            out += Polynomial::term(rest, c * e) * val;
        }
    }
    return out;
}

std::vector<std::pair<int, Polynomial>> minus_field(const VpaContext& ctx,
                                                    const Polynomial& a, int k,
                                                    const Polynomial& u) {
    require_level1(u, "minus_field: u");
    if (k < 0) throw std::invalid_argument("minus_field: k must be >= 0");

    // u_(m) a vanishes once m exceeds every level - 1 in a
    const int m_max = std::max(a.max_level() - 1, -1);
    std::vector<Polynomial> um;
    for (int m = 0; m <= m_max; ++m) um.push_back(nth_product_base(ctx, u, m, a));

    std::vector<std::pair<int, Polynomial>> out;
    for (int n = 0; n <= m_max + k; ++n) {
        Polynomial acc;
        for (int m = std::max(0, n - k); m <= m_max; ++m) {
            if (um[m].is_zero()) continue;
            int p = m + k - n;
            // (-1)^{m+1} (m+k)!/m! T^p(u_(m) a) / p!
            Scalar coeff = falling_factorial(static_cast<unsigned long>(m + k),
                                             static_cast<unsigned long>(k)) /
                           factorial(static_cast<unsigned long>(p));
            if ((m + 1) % 2 != 0) coeff = -coeff;
            acc += derive_n(ctx.ring, um[m], p) * coeff;
        }
        if (!acc.is_zero()) out.emplace_back(n, std::move(acc));
    }
    return out;
}

Polynomial apply_nth(const VpaContext& ctx, const Polynomial& a, int n,
                     const Polynomial& target) {
    if (n < 0) throw std::invalid_argument("apply_nth: n must be >= 0");

    // a_(n) x^j_(-i) = [coefficient n of a_-(z) T^{i-1} x^j] / (i-1)!
    std::map<VarId, Polynomial> var_value;
    auto value_on = [&](VarId v) -> const Polynomial& {
        auto it = var_value.find(v);
        if (it == var_value.end()) {
            Polynomial val;
            auto coeffs = minus_field(ctx, a, v.level - 1, Polynomial::variable(base_var(v.gen)));
            for (const auto& [idx, poly] : coeffs)
                if (idx == n) val = poly * (Scalar(1) / factorial(v.level - 1));
            it = var_value.emplace(v, std::move(val)).first;
        }
        return it->second;
    };

    Polynomial out;
    for (const auto& [m, c] : target.terms()) {
        for (const auto& [v, e] : m.factors()) {
            const Polynomial& val = value_on(v);
            if (val.is_zero()) continue;
            Monomial rest = *(m / Monomial::variable(v));
            out += Polynomial::term(rest, c * e) * val;
        }
    }
    return out;
}

namespace {

class RandomElements {
  public:
    RandomElements(std::mt19937_64& rng, int num_generators, long max_weight)
        : rng_(rng), r_(num_generators), max_weight_(max_weight) {}

    Scalar coefficient() {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 3);
        int n = num(rng_);
        if (n == 0) n = 1;
        return make_scalar(n, den(rng_));
    }

    Monomial monomial(long weight_budget) {
        std::vector<Monomial::Factor> factors;
        std::uniform_int_distribution<int> nvars(0, 2);
        int vars = nvars(rng_);
        long budget = weight_budget;
        for (int i = 0; i < vars && budget >= 1; ++i) {
            std::uniform_int_distribution<int> lvl(1, static_cast<int>(budget));
            int level = lvl(rng_);
            std::uniform_int_distribution<int> gen(1, r_);
            factors.push_back({jet_var(gen(rng_), level), 1});
            budget -= level;
        }
        return Monomial(std::move(factors));
    }

    Polynomial element() {
        std::uniform_int_distribution<int> nterms(1, 2);
        Polynomial p;
        int terms = nterms(rng_);
        for (int t = 0; t < terms; ++t)
            p += Polynomial::term(monomial(max_weight_), coefficient());
        return p;
    }

    int small(int hi) {
        std::uniform_int_distribution<int> d(0, hi);
        return d(rng_);
    }

  private:
    std::mt19937_64& rng_;
    int r_;
    long max_weight_;
};

int minus_field_reach(const Polynomial& a, const Polynomial& b) {
    // beyond this index every a_(n) b vanishes
    return std::max(a.max_level() - 1, 0) + std::max(b.max_level() - 1, 0);
}

}  // namespace

AxiomCheckReport check_vpa_axioms(const VpaContext& ctx, int samples, std::uint64_t seed,
                                  long max_weight) {
    if (samples < 1) throw std::invalid_argument("check_vpa_axioms: samples must be >= 1");
    AxiomCheckReport report;
    report.samples = samples;
    report.seed = seed;
    report.max_weight = max_weight;

    std::mt19937_64 rng(seed);
    RandomElements gen(rng, ctx.poisson.num_generators(), max_weight);

    auto fail = [&](const std::string& which, const Polynomial& a, const Polynomial& b,
                    const std::string& detail) {
        report.passed = false;
        if (report.failures.size() < 8)
            report.failures.push_back(which + " fails for a = " + a.str() + ", b = " + b.str() +
                                      (detail.empty() ? "" : "; " + detail));
    };

    for (int s = 0; s < samples; ++s) {
        Polynomial a = gen.element();
        Polynomial b = gen.element();
        Polynomial c = gen.element();

        // translation: (Ta)_(n) = -n a_(n-1)
        {
            int n = gen.small(3);
            Polynomial lhs = apply_nth(ctx, derive(ctx.ring, a), n, b);
            Polynomial rhs =
                n == 0 ? Polynomial{} : apply_nth(ctx, a, n - 1, b) * Scalar(-n);
            ++report.checks;
            if (lhs != rhs) fail("translation axiom", a, b, "n = " + std::to_string(n));
        }

        // skew-symmetry: a_(n) b = sum_j (-1)^{n+j+1} T^j (b_(n+j) a) / j!
        {
            int n = gen.small(3);
            Polynomial lhs = apply_nth(ctx, a, n, b);
            Polynomial rhs;
            int reach = minus_field_reach(a, b);
            for (int j = 0; n + j <= reach; ++j) {
                Polynomial inner = apply_nth(ctx, b, n + j, a);
                if (inner.is_zero()) continue;
                Scalar coeff = Scalar(1) / factorial(static_cast<unsigned long>(j));
                if ((n + j + 1) % 2 != 0) coeff = -coeff;
                rhs += derive_n(ctx.ring, inner, j) * coeff;
            }
            ++report.checks;
            if (lhs != rhs) fail("skew-symmetry axiom", a, b, "n = " + std::to_string(n));
        }

        // commutator: [a_(m), b_(n)] = sum_j C(m,j) (a_(j) b)_(m+n-j), as
        // operators on c
        {
            int m = gen.small(3), n = gen.small(3);
            Polynomial lhs = apply_nth(ctx, a, m, apply_nth(ctx, b, n, c)) -
                             apply_nth(ctx, b, n, apply_nth(ctx, a, m, c));
            Polynomial rhs;
            for (int j = 0; j <= m; ++j) {
                Polynomial ab = apply_nth(ctx, a, j, b);
                if (ab.is_zero()) continue;
                if (m + n - j < 0) continue;
                rhs += apply_nth(ctx, ab, m + n - j, c) *
                       binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j));
            }
            ++report.checks;
            if (lhs != rhs)
                fail("commutator identity", a, b,
                     "m = " + std::to_string(m) + ", n = " + std::to_string(n) +
                         ", c = " + c.str());
        }

        // derivation: a_(n)(b c) = (a_(n) b) c + b (a_(n) c)
        {
            int n = gen.small(3);
            Polynomial lhs = apply_nth(ctx, a, n, b * c);
            Polynomial rhs = apply_nth(ctx, a, n, b) * c + b * apply_nth(ctx, a, n, c);
            ++report.checks;
            if (lhs != rhs)
                fail("derivation axiom", a, b, "n = " + std::to_string(n) + ", c = " + c.str());
        }
    }
    return report;
}

AxiomCheckReport check_vpa_axioms(const DifferentialRing& ring, const PoissonStructure& table,
                                  int samples, std::uint64_t seed, long max_weight) {
    try {
        VpaContext ctx(ring, validate_poisson(table));
        return check_vpa_axioms(ctx, samples, seed, max_weight);
    } catch (const JacobiViolation& violation) {
        AxiomCheckReport report;
        report.passed = false;
        report.samples = samples;
        report.seed = seed;
        report.max_weight = max_weight;
        report.failures.push_back(violation.what());
        return report;
    }
}

GroebnerBasis poisson_closure(const VpaContext& ctx, const std::vector<Polynomial>& gens,
                              int max_rounds) {
    const int r = ctx.poisson.num_generators();
    std::vector<VarId> ambient;
    for (int gen = 1; gen <= r; ++gen) ambient.push_back(base_var(gen));

    std::vector<Polynomial> current;
    for (const Polynomial& g : gens) {
        require_level1(g, "poisson_closure: generator");
        if (!g.is_zero()) current.push_back(g);
    }

    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    GroebnerBasis gb = buchberger(current, order, ambient);
    for (int round = 0;; ++round) {
        std::vector<Polynomial> fresh;
        for (int a = 1; a <= r; ++a) {
            Polynomial xa = Polynomial::variable(base_var(a));
            for (const Polynomial& g : gb.basis) {
                Polynomial br = normal_form(bracket(ctx, xa, g), gb);
                if (!br.is_zero()) fresh.push_back(br);
            }
        }
        if (fresh.empty()) return gb;
        if (round >= max_rounds) throw ClosureNonTermination(max_rounds);
        std::vector<Polynomial> next = gb.basis;
        next.insert(next.end(), fresh.begin(), fresh.end());
        gb = buchberger(next, order, ambient);
    }
}

JetIdeal differential_closure(const VpaContext& ctx, const std::vector<Polynomial>& gens,
                              long max_weight) {
    DifferentialRing ring = DifferentialRing::unbounded(ctx.ring.presentation());
    for (const Polynomial& g : gens)
        if (!g.is_zero() && g.weight() > max_weight)
            throw std::invalid_argument("differential_closure: generator exceeds max_weight");

    std::vector<Polynomial> out;
    for (const Polynomial& f : gens) {
        Polynomial g = f;
        while (!g.is_zero() && g.weight() <= max_weight) {
            out.push_back(g);
            g = derive(ring, g);
        }
    }
    std::vector<VarId> vars = ring.variables_up_to_weight(max_weight);
    return JetIdeal{std::move(ring), std::move(out), std::move(vars)};
}

Polynomial radical_principal(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("radical_principal: zero polynomial");
    const MonomialOrder order = MonomialOrder::weighted_degrevlex();
    if (p.is_constant()) return Polynomial(Scalar(1));
    Polynomial g = p;
    for (VarId v : p.variables()) g = poly_gcd(g, p.partial_derivative(v));
    return poly_exact_divide(p, g).monic(order);
}

}  // namespace jetvpa
