#include "jetvpa/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetvpa {

void LieAlgebraData::set_constant(int i, int j, int k, Scalar value) {
    if (i < 1 || j < 1 || k < 1 || i > dimension || j > dimension || k > dimension)
        throw std::invalid_argument("LieAlgebraData: index out of range");
    if (i == j) throw std::invalid_argument("LieAlgebraData: [x,x] = 0, no constant to set");
    if (i > j) {
        std::swap(i, j);
        value = -value;
    }
    if (value == 0)
        structure.erase({i, j, k});
    else
        structure[{i, j, k}] = std::move(value);
}

Scalar LieAlgebraData::constant(int i, int j, int k) const {
    if (i == j) return Scalar(0);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = structure.find({i, j, k});
    if (it == structure.end()) return Scalar(0);
    return flip ? -it->second : it->second;
}

int LieAlgebraData::index_of(const std::string& name) const {
    auto it = std::find(basis.begin(), basis.end(), name);
    if (it == basis.end())
        throw std::invalid_argument("unknown basis name '" + name + "'");
    return static_cast<int>(it - basis.begin()) + 1;
}

void LieAlgebraData::validate() const {
    if (dimension < 1) throw std::invalid_argument("LieAlgebraData: dimension must be >= 1");
    if (!basis.empty() && static_cast<int>(basis.size()) != dimension)
        throw std::invalid_argument("LieAlgebraData: basis names must match dimension");
    // Jacobi: sum over m of c^m_{jk} c^n_{im} + c^m_{ki} c^n_{jm} + c^m_{ij} c^n_{km} = 0
    for (int i = 1; i <= dimension; ++i)
        for (int j = i + 1; j <= dimension; ++j)
            for (int k = j + 1; k <= dimension; ++k)
                for (int n = 1; n <= dimension; ++n) {
                    Scalar acc(0);
                    for (int m = 1; m <= dimension; ++m) {
                        acc += constant(j, k, m) * constant(i, m, n);
                        acc += constant(k, i, m) * constant(j, m, n);
                        acc += constant(i, j, m) * constant(k, m, n);
                    }
                    if (acc != 0)
                        throw std::invalid_argument(
                            "LieAlgebraData: Jacobi identity fails on triple (" +
                            std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ") component " + std::to_string(n));
                }
}

LieAlgebraData LieAlgebraData::sl2() {
    LieAlgebraData g;
    g.dimension = 3;
    g.basis = {"e", "h", "f"};
    g.set_constant(2, 1, 1, Scalar(2));    // [h,e] = 2e
    g.set_constant(2, 3, 3, Scalar(-2));   // [h,f] = -2f
    g.set_constant(1, 3, 2, Scalar(1));    // [e,f] = h
    return g;
}

LieAlgebraData LieAlgebraData::abelian(int dimension) {
    LieAlgebraData g;
    g.dimension = dimension;
    for (int i = 1; i <= dimension; ++i) g.basis.push_back("x" + std::to_string(i));
    return g;
}

PoissonStructure kirillov_kostant(const LieAlgebraData& data) {
    data.validate();
    PoissonStructure ps(data.dimension);
    for (int i = 1; i <= data.dimension; ++i)
        for (int j = i + 1; j <= data.dimension; ++j) {
            Polynomial value;
            for (int k = 1; k <= data.dimension; ++k) {
                Scalar c = data.constant(i, j, k);
                if (c != 0) value += Polynomial::term(Monomial::variable(base_var(k)), c);
            }
            if (!value.is_zero()) ps.set_bracket(i, j, std::move(value));
        }
    return validate_poisson(std::move(ps));
}

namespace {

VpaContext affine_context(const LieAlgebraData& data) {
    Presentation free_presentation{data.dimension, {}, data.basis};
    return VpaContext(DifferentialRing::unbounded(std::move(free_presentation)),
                      kirillov_kostant(data));
}

}  // namespace

ClosureCheckReport integrable_closure_check(const LieAlgebraData& data, int root_index,
                                            int power) {
    if (root_index < 1 || root_index > data.dimension)
        throw std::invalid_argument("integrable_closure_check: root index out of range");
    if (power < 1) throw std::invalid_argument("integrable_closure_check: power must be >= 1");

    VpaContext ctx = affine_context(data);
    Polynomial nilpotent = Polynomial::variable(base_var(root_index)).pow(power);
    Polynomial radical = radical_principal(nilpotent);

    ClosureCheckReport report;
    report.root_index = root_index;
    report.power = power;
    report.radical_generator = radical;
    report.closure = poisson_closure(ctx, {radical});

    std::vector<Polynomial> generators;
    for (int g = 1; g <= data.dimension; ++g)
        generators.push_back(Polynomial::variable(base_var(g)));
    report.closure_is_augmentation = ideal_contains(report.closure, generators);
    return report;
}

namespace {

// explicit enumeration of jet monomials of a given weight
void count_monomials(const std::vector<int>& levels, size_t idx, long budget, mpz_class& count) {
    if (budget == 0) {
        ++count;
        return;
    }
    if (idx == levels.size()) return;
    for (long e = 0; e * levels[idx] <= budget; ++e)
        count_monomials(levels, idx + 1, budget - e * levels[idx], count);
}

}  // namespace

GradedDimsReport graded_dims_jet_vs_pbw(const LieAlgebraData& data, long max_weight) {
    if (max_weight < 1)
        throw std::invalid_argument("graded_dims_jet_vs_pbw: max_weight must be >= 1");
    const int d = data.dimension;

    GradedDimsReport report;
    report.max_weight = max_weight;
    report.all_equal = true;

    // jet route: one variable per (level, generator) pair
    std::vector<int> levels;
    for (long level = 1; level <= max_weight; ++level)
        for (int g = 0; g < d; ++g) levels.push_back(static_cast<int>(level));

    // PBW route: coefficients of prod_{i>=1} (1 - t^i)^{-d}, multisets of
    // d-colored parts counted through binomials
    std::vector<mpz_class> pbw(max_weight + 1, 0);
    pbw[0] = 1;
    for (long i = 1; i <= max_weight; ++i) {
        std::vector<mpz_class> next(max_weight + 1, 0);
        for (long w = 0; w <= max_weight; ++w) {
            if (pbw[w] == 0) continue;
            for (long j = 0; w + i * j <= max_weight; ++j) {
                mpz_class ways;
                mpz_bin_uiui(ways.get_mpz_t(), static_cast<unsigned long>(j + d - 1),
                             static_cast<unsigned long>(d - 1));
                next[w + i * j] += pbw[w] * ways;
            }
        }
        pbw = std::move(next);
    }

    for (long w = 0; w <= max_weight; ++w) {
        mpz_class jet_count = 0;
        count_monomials(levels, 0, w, jet_count);
        if (jet_count != pbw[w]) report.all_equal = false;
        report.rows.push_back(GradedDimsRow{w, jet_count, pbw[w]});
    }
    return report;
}

}  // namespace jetvpa
