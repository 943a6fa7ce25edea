#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "piproj/field.hpp"

namespace piproj {

/// Univariate polynomials over a Field, coefficients lowest degree first.
/// The zero polynomial is the empty vector; all routines keep results
/// trimmed of leading zeros.
using Poly = std::vector<felem>;

namespace poly {

Poly trim(Poly f);
int deg(const Poly& f);  // deg 0 polynomial has deg 0; zero polynomial -1
bool is_zero(const Poly& f);
Poly constant(felem c);
Poly monomial(int d, felem c);

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, felem c);

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& b);

Poly monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, Poly a, Poly b);  // monic gcd
Poly derivative(const Field& F, const Poly& a);
felem eval(const Field& F, const Poly& a, felem x);

Poly pow_mod(const Field& F, Poly base, std::uint64_t e, const Poly& m);

/// Exhaustive trial-division irreducibility check (monic input, deg >= 1).
/// Intended for desk-scale degrees, e.g. field modulus validation.
bool is_irreducible_exhaustive(const Field& F, const Poly& f);

/// Full factorization into monic irreducibles with multiplicities,
/// deterministic for a fixed seed (equal-degree splitting draws from a
/// seeded stream). Input must be nonzero; the leading coefficient is
/// discarded (factors of a monic associate are returned).
std::vector<std::pair<Poly, int>> factor(const Field& F, const Poly& f,
                                         std::uint64_t seed = 0x5eed);

}  // namespace poly
}  // namespace piproj
