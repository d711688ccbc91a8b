#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace degen {

/// One projective rational root [a : b] in lowest terms with b > 0.
using ProjRoot = std::pair<mpz_class, mpz_class>;

struct RationalRootResult {
    /// Roots repeated according to multiplicity.
    std::vector<ProjRoot> roots;
    /// True when the roots account for the full degree, i.e. the form splits
    /// into rational linear factors.
    bool complete = false;
};

/// Prime factorization by trial division plus Pollard rho (deterministic
/// Brent variant); exponents by repeated division.  n must be positive.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

/// All positive divisors of n (n > 0), in increasing order.
std::vector<mpz_class> divisors(const mpz_class& n);

/// Exact rational roots of the degree-4 binary form
///   c[4]·u⁴ + c[3]·u³v + c[2]·u²v² + c[1]·uv³ + c[0]·v⁴
/// with integer coefficients, as projective pairs [a : b] for u/v = a/b.
/// Requires c[4] ≠ 0 and c[0] ≠ 0 (no roots at [1:0] or [0:1]), so every
/// root has a, b ≠ 0.  Multiplicities are extracted by deflation.
RationalRootResult rational_roots_quartic(const std::vector<mpz_class>& c);

}  // namespace degen
