// Exact rational scalars. All coefficient arithmetic in this library is
// exact; there is no floating-point mode.
#pragma once

#include <gmpxx.h>

#include <string>

namespace jetvpa {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (GMP keeps results canonical as long as inputs are).
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline Scalar factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(f);
}

// n! / (n-k)!, the falling factorial n (n-1) ... (n-k+1).
inline Scalar falling_factorial(unsigned long n, unsigned long k) {
    mpz_class acc = 1;
    for (unsigned long i = 0; i < k; ++i) acc *= mpz_class(n - i);
    return Scalar(acc);
}

inline Scalar binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(b);
}

}  // namespace jetvpa
