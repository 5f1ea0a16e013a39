#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "jetvpa/groebner.hpp"
#include "jetvpa/vpa.hpp"

namespace jetvpa {

// A finite-dimensional Lie algebra by structure constants:
// [x_i, x_j] = sum_k c^k_{ij} x_k. Entries are stored for i < j;
// antisymmetry is built in and the Jacobi identity is checked by
// validate().
struct LieAlgebraData {
    int dimension = 0;
    std::vector<std::string> basis;                       // names, size == dimension
    std::map<std::tuple<int, int, int>, Scalar> structure;  // (i<j, k) -> c^k_{ij}

    void set_constant(int i, int j, int k, Scalar value);
    Scalar constant(int i, int j, int k) const;  // signed
    int index_of(const std::string& name) const;  // 1-based; throws on unknown
    void validate() const;  // throws std::invalid_argument on a Jacobi failure

    // [h,e] = 2e, [h,f] = -2f, [e,f] = h on basis (e, h, f)
    static LieAlgebraData sl2();
    static LieAlgebraData abelian(int dimension);
};

// The linear Poisson bracket {x^i, x^j} = sum_k c^k_{ij} x^k on the dual
// space; returned validated (Jacobi transfers from the Lie algebra).
PoissonStructure kirillov_kostant(const LieAlgebraData& data);

struct ClosureCheckReport {
    int root_index = 0;
    int power = 1;
    Polynomial radical_generator;     // radical_principal(x_root^power)
    GroebnerBasis closure;            // Poisson closure of the radical
    bool closure_is_augmentation = false;  // contains every generator
    // verdict "associated variety = {0}" holds iff the flag above is set
};

// Machine check of the nilpotent-generator argument: the radical of
// <x_root^power> is Poisson-closed into an ideal; when that closure is
// the augmentation ideal the support collapses to the origin.
ClosureCheckReport integrable_closure_check(const LieAlgebraData& data, int root_index,
                                            int power);

struct GradedDimsRow {
    long weight;
    mpz_class jet_count;  // monomials of this weight in the jet ring, by enumeration
    mpz_class pbw_count;  // colored-partition count of S(g[t^-1] t^-1)
};

struct GradedDimsReport {
    long max_weight = 0;
    std::vector<GradedDimsRow> rows;  // weights 0..max_weight
    bool all_equal = false;
};

// Weight-by-weight comparison of the jet polynomial ring on dim(g)
// generators against the PBW counts; the two totals agree for every Lie
// algebra (the graded dimensions are independent of the level).
GradedDimsReport graded_dims_jet_vs_pbw(const LieAlgebraData& data, long max_weight);

}  // namespace jetvpa
