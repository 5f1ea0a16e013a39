#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jetvpa/diffalg.hpp"
#include "jetvpa/groebner.hpp"
#include "jetvpa/polynomial.hpp"

namespace jetvpa {

class JacobiViolation : public std::runtime_error {
  public:
    JacobiViolation(int a, int b, int c, Polynomial residual)
        : std::runtime_error("Jacobi identity fails on generators (" + std::to_string(a) +
                             "," + std::to_string(b) + "," + std::to_string(c) +
                             "): residual " + residual.str()),
          gen_a(a),
          gen_b(b),
          gen_c(c),
          residual(std::move(residual)) {}

    int gen_a, gen_b, gen_c;
    Polynomial residual;
};

class ClosureNonTermination : public std::runtime_error {
  public:
    explicit ClosureNonTermination(int rounds)
        : std::runtime_error("poisson_closure did not stabilize after " +
                             std::to_string(rounds) + " rounds"),
          rounds(rounds) {}
    int rounds;
};

// A Poisson bracket on the base ring Q[x^1..x^r], given by its values
// {x^a, x^b} (polynomials in level-1 variables) for a < b; extended to
// all polynomials as a biderivation. Antisymmetry holds by construction;
// the Jacobi identity is established by validate_poisson.
class PoissonStructure {
  public:
    explicit PoissonStructure(int num_generators);
    static PoissonStructure trivial(int num_generators) {
        return PoissonStructure(num_generators);
    }

    // a != b, in range; value must be a level-1 polynomial. Stores the
    // (a, b) entry (negated when a > b) and clears the validated flag.
    void set_bracket(int a, int b, Polynomial value);

    // {x^a, x^b} with signs: (b, a) is the negative of (a, b), (a, a) = 0.
    Polynomial generator_bracket(int a, int b) const;

    int num_generators() const { return r_; }
    bool validated() const { return validated_; }
    const std::map<std::pair<int, int>, Polynomial>& table() const { return table_; }

    friend PoissonStructure validate_poisson(PoissonStructure ps);

  private:
    int r_;
    std::map<std::pair<int, int>, Polynomial> table_;  // keys a < b, nonzero values
    bool validated_ = false;
};

// Checks the Jacobi identity {a,{b,c}} + {b,{c,a}} + {c,{a,b}} = 0 as an
// exact polynomial identity on every generator triple; throws
// JacobiViolation otherwise.
PoissonStructure validate_poisson(PoissonStructure ps);

// A differential jet ring together with a validated Poisson structure on
// its base: the data carrying the level-0 vertex Poisson structure.
struct VpaContext {
    DifferentialRing ring;
    PoissonStructure poisson;

    VpaContext(DifferentialRing ring, PoissonStructure poisson);
};

// Poisson bracket of two level-1 polynomials (biderivation extension of
// the table). Throws if either input mentions level >= 2 variables.
Polynomial bracket(const VpaContext& ctx, const Polynomial& u, const Polynomial& v);

// u_(n) applied to target for level-1 u: on a variable x^j_(-i) it is
//   T^{i-1-n} {u, x^j} / (i-1-n)!   when i-1 >= n, else 0,
// extended to the whole jet ring as a derivation. In particular
// u_(0) v = {u, v} and u_(n) v = 0 (n > 0) for level-1 v.
Polynomial nth_product_base(const VpaContext& ctx, const Polynomial& u, int n,
                            const Polynomial& target);

// The coefficients a_(n)(T^k u) of the singular part of
// e^{zT} (-d/dz)^k u_-(-z) a, for a in the jet ring and level-1 u.
// Returns the nonzero coefficients as (n, value) pairs, n ascending; the
// expansion is exact since u_-(z) a has finitely many terms.
std::vector<std::pair<int, Polynomial>> minus_field(const VpaContext& ctx,
                                                    const Polynomial& a, int k,
                                                    const Polynomial& u);

// a_(n) applied to target for an arbitrary jet-ring element a: the
// derivation whose variable values come from minus_field.
Polynomial apply_nth(const VpaContext& ctx, const Polynomial& a, int n,
                     const Polynomial& target);

struct AxiomCheckReport {
    bool passed = true;
    int samples = 0;
    std::uint64_t seed = 0;
    long max_weight = 0;
    long checks = 0;                     // individual identities verified
    std::vector<std::string> failures;   // counterexamples, empty when passed
};

// Verifies the translation, skew-symmetry, commutator and derivation
// identities of the level-0 structure on seeded random weight-bounded
// elements (commutators evaluated as operators on a third element).
// Failures are report content, never exceptions.
AxiomCheckReport check_vpa_axioms(const VpaContext& ctx, int samples, std::uint64_t seed,
                                  long max_weight);

// Same, but starting from an unvalidated table: a Jacobi violation is
// reported as a failure with its counterexample instead of throwing.
AxiomCheckReport check_vpa_axioms(const DifferentialRing& ring, const PoissonStructure& table,
                                  int samples, std::uint64_t seed, long max_weight);

// Smallest ideal containing gens (level-1) closed under bracket with
// every generator x^a: fixpoint iteration interleaving Groebner reduction
// with bracket generation. Throws ClosureNonTermination past max_rounds.
GroebnerBasis poisson_closure(const VpaContext& ctx, const std::vector<Polynomial>& gens,
                              int max_rounds = 64);

// gens plus all T-derivatives of weight <= max_weight under the
// untruncated derivation: the weight window of the smallest T-stable
// ideal containing gens.
JetIdeal differential_closure(const VpaContext& ctx, const std::vector<Polynomial>& gens,
                              long max_weight);

// Squarefree part of p (the radical of the principal ideal <p>), via gcd
// with the partial derivatives; monic. Throws on zero input.
Polynomial radical_principal(const Polynomial& p);

}  // namespace jetvpa
