#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jetvpa/groebner.hpp"
#include "jetvpa/linalg.hpp"
#include "jetvpa/scalar.hpp"

namespace jetvpa {

struct VirasoroParams {
    Scalar central_charge;
    std::optional<std::pair<int, int>> minimal_pq;  // when c came from the minimal series
};

// c = 1 - 6 (p-q)^2 / (p q) for coprime p, q >= 2; throws on bad input.
Scalar minimal_central_charge(int p, int q);
VirasoroParams minimal_params(int p, int q);

// A partition, parts weakly decreasing; encodes the state
// L_{-n1} ... L_{-nk} (vac or highest-weight vector).
using Partition = std::vector<int>;

// Partitions of n into parts >= min_part, descending lexicographic.
std::vector<Partition> partitions(int n, int min_part);

// Per-level monomial basis of the vacuum module (parts >= 2, the image of
// the L_{-1} quotient), levels 0..N.
std::vector<std::vector<Partition>> vacuum_basis(int N);

// Exact model of a highest-weight module over the Virasoro algebra up to
// a conformal-weight cutoff. The vacuum kind works in the quotient where
// L_{-1} vac = 0 (basis partitions with parts >= 2); the highest-weight
// kind keeps parts >= 1. Gram matrices are those of the contravariant
// form, computed by exhaustive commutator reduction with
// [L_m, L_n] = (m - n) L_{m+n} + delta_{m+n,0} (m^3 - m)/12 c.
class VirasoroModule {
  public:
    static VirasoroModule vacuum(VirasoroParams params, int cutoff);
    static VirasoroModule highest_weight(VirasoroParams params, Scalar h, int cutoff);

    const VirasoroParams& params() const { return params_; }
    int cutoff() const { return cutoff_; }
    bool is_vacuum() const { return vacuum_; }
    const Scalar& weight() const { return h_; }

    const std::vector<Partition>& level_basis(int level) const;
    const QMatrix& gram_matrix(int level) const;
    Scalar gram_determinant(int level) const;

    // Linear combination of basis states, fully normal ordered.
    using State = std::map<Partition, Scalar>;
    // L_{-j} applied to a normal-ordered word, j >= 1.
    State lower(int j, const Partition& word) const;
    // L_m applied to a normal-ordered word, m >= 1.
    State raise(int m, const Partition& word) const;

  private:
    VirasoroModule(VirasoroParams params, Scalar h, bool vacuum, int cutoff);

    VirasoroParams params_;
    Scalar h_;
    bool vacuum_;
    int cutoff_;
    mutable std::map<int, std::vector<Partition>> basis_cache_;
    mutable std::map<int, QMatrix> gram_cache_;

    Scalar pair_with_vacuum_side(const Partition& bra, const Partition& ket) const;
};

struct SingularLevel {
    int level;
    std::vector<QVector> kernel;  // coordinates in level_basis(level)
};

// Exact Gram kernels per level up to the cutoff; nonzero kernels only.
// Kernel vectors generate graded pieces of the maximal submodule (an
// under-approximation at finite cutoff).
std::vector<SingularLevel> singular_levels(const VirasoroModule& module);

// Image of the detected kernel vectors in Q[x] = Vir/C2: only the pure
// L_{-2}^k coefficient survives (every monomial containing some L_{-n},
// n >= 3, lies in C2). Returns the Groebner basis of the ideal the
// images generate in the single variable x1_1.
GroebnerBasis c2_image(const VirasoroModule& module);

}  // namespace jetvpa
