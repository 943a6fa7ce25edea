#pragma once

// Internal machinery for finite dimensional algebras given by a matrix
// basis: structure constants, a soundness-certified locality test, and
// matrix minimal polynomials. Not installed; decompose.cpp and
// homalg.cpp share it.

#include <cstdint>
#include <vector>

#include "piproj/matrix.hpp"
#include "piproj/poly.hpp"

namespace piproj {
namespace detail {

/// Structure constants of composition: sc[i][j] are the coordinates of
/// basis[i] * basis[j] in the given basis (which must span an algebra).
struct AlgebraStructure {
  Field field;
  std::uint32_t h = 0;
  std::vector<std::vector<std::vector<felem>>> sc;
  std::vector<felem> id_coords;  // coordinates of the identity matrix
};

AlgebraStructure algebra_structure(const Field& F,
                                   const std::vector<Matrix>& basis);

/// Locality decision for the algebra. Sound in both directions: `local`
/// is true iff a nilpotent ideal R with field quotient was exhibited
/// (then R = rad and e = dim of the quotient); false means the
/// certificate failed, i.e. the algebra is not local.
struct LocalCheck {
  bool local = false;
  std::uint32_t e = 0;
  std::vector<std::vector<felem>> rad_rows;  // coordinate basis of rad
  bool quotient_commutative = false;
};

LocalCheck local_certificate(const AlgebraStructure& alg, std::uint64_t seed);

Poly matrix_minpoly(const Matrix& a);

/// Multiply two coordinate vectors through the structure constants.
std::vector<felem> sc_mul(const AlgebraStructure& alg,
                          const std::vector<felem>& u,
                          const std::vector<felem>& v);

}  // namespace detail
}  // namespace piproj
