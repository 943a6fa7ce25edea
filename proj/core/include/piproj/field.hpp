#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace piproj {

/// A field element of GF(p^n), packed as the base-p value of its
/// coefficient vector (polynomial basis, lowest degree first).
/// The digit expansion of the packed value *is* the coefficient vector.
using felem = std::uint16_t;

/// Exact arithmetic in GF(p^n). Immutable; cheap to copy (shared impl).
///
/// The modulus is a monic irreducible of degree n over GF(p), stored as
/// n+1 coefficients, constant term first. When no modulus is given the
/// lexicographically least monic irreducible is selected (coefficients
/// read as base-p digits, constant term least significant), so the same
/// (p, n) always produces the same field.
class Field {
 public:
  static Field make(std::uint32_t p, std::uint32_t n);
  static Field make(std::uint32_t p, std::uint32_t n,
                    const std::vector<std::uint16_t>& modulus);

  std::uint32_t p() const;
  std::uint32_t n() const;
  std::uint32_t q() const;  // p^n
  const std::vector<std::uint16_t>& modulus() const;

  felem zero() const { return 0; }
  felem one() const { return 1; }

  felem add(felem a, felem b) const;
  felem sub(felem a, felem b) const;
  felem neg(felem a) const;
  felem mul(felem a, felem b) const;
  felem inv(felem a) const;  // throws on zero
  felem pow(felem a, std::int64_t e) const;

  /// Scalar of the prime subfield (c in [0,p)) as an element.
  felem from_int(std::uint32_t c) const { return static_cast<felem>(c % p()); }

  std::vector<std::uint16_t> to_digits(felem a) const;
  felem from_digits(const std::vector<std::uint16_t>& digits) const;

  /// Image of each element of this field under the canonical embedding
  /// into K (indexed by packed value). Requires p equal and n() | K.n();
  /// the embedding sends the polynomial-basis generator to the first
  /// root of this->modulus() in K, in packed-value order.
  std::vector<felem> embedding_into(const Field& K) const;

  /// dst[k] += c * src[k] for k < len. The workhorse of row reduction;
  /// specialised per field so elimination stays out of per-element calls.
  void row_axpy(felem* dst, const felem* src, felem c, std::size_t len) const;
  /// dst[k] *= c for k < len.
  void row_scale(felem* dst, felem c, std::size_t len) const;

  bool same(const Field& other) const;  // identical (p, n, modulus)
  bool operator==(const Field& other) const { return same(other); }

  std::string describe() const;  // "GF(4)[t^2+t+1]" style, for messages

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace piproj
