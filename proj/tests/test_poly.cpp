#include <doctest.h>

#include "piproj/poly.hpp"

using namespace piproj;
using piproj::poly::Poly;

namespace {

Poly pmul_all(const Field& F, const std::vector<std::pair<Poly, int>>& facs) {
  Poly acc = poly::constant(1);
  for (const auto& [g, m] : facs)
    for (int i = 0; i < m; ++i) acc = poly::mul(F, acc, g);
  return acc;
}

}  // namespace

TEST_CASE("divmod and gcd") {
  Field f2 = Field::make(2, 1);
  Poly a = {1, 0, 1, 1};  // 1 + t^2 + t^3
  Poly b = {1, 1};        // 1 + t
  auto [q, r] = poly::divmod(f2, a, b);
  CHECK(poly::add(f2, poly::mul(f2, q, b), r) == a);
  CHECK(poly::deg(r) < poly::deg(b));

  // gcd((t+1)^2 t, (t+1) t^2) = (t+1) t over GF(2)
  Poly t = poly::monomial(1, 1);
  Poly t1 = {1, 1};
  Poly x = poly::mul(f2, poly::mul(f2, t1, t1), t);
  Poly y = poly::mul(f2, t1, poly::mul(f2, t, t));
  CHECK(poly::gcd(f2, x, y) == poly::mul(f2, t1, t));
}

TEST_CASE("derivative in characteristic p") {
  Field f3 = Field::make(3, 1);
  // d/dt (t^3 + t) = 1 over GF(3)
  Poly f = {0, 1, 0, 1};
  CHECK(poly::derivative(f3, f) == poly::constant(1));
  // d/dt (t^3) = 0
  CHECK(poly::is_zero(poly::derivative(f3, poly::monomial(3, 1))));
}

TEST_CASE("exhaustive irreducibility") {
  Field f2 = Field::make(2, 1);
  CHECK(poly::is_irreducible_exhaustive(f2, {1, 1, 1}));       // t^2+t+1
  CHECK(!poly::is_irreducible_exhaustive(f2, {1, 0, 1}));      // (t+1)^2
  CHECK(poly::is_irreducible_exhaustive(f2, {1, 1, 0, 1}));    // t^3+t+1
  CHECK(poly::is_irreducible_exhaustive(f2, {1, 1, 0, 0, 1})); // t^4+t+1
  CHECK(!poly::is_irreducible_exhaustive(f2, {1, 1, 1, 1}));   // (t+1)(t^2+t+1)? t^3+t^2+t+1 = (t+1)^3
}

TEST_CASE("factor round trips and finds irreducibles") {
  Field f2 = Field::make(2, 1);
  // (t+1)^2 * t^3 * (t^2+t+1)
  Poly f = pmul_all(f2, {{{1, 1}, 2}, {{0, 1}, 3}, {{1, 1, 1}, 1}});
  auto facs = poly::factor(f2, f);
  CHECK(pmul_all(f2, facs) == f);
  for (const auto& [g, m] : facs) {
    CHECK(poly::is_irreducible_exhaustive(f2, g));
    CHECK(g.back() == 1);
  }
  CHECK(facs.size() == 3);

  // Derivative-zero input: t^2 + 1 = (t+1)^2 over GF(2).
  auto sq = poly::factor(f2, {1, 0, 1});
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].first == Poly{1, 1});
  CHECK(sq[0].second == 2);
}

TEST_CASE("factor over small fields, exhaustive cross-check") {
  for (auto [p, n] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}}) {
    Field F = Field::make(p, n);
    const std::uint32_t q = F.q();
    // Every monic polynomial of degree 4 factors back to itself.
    std::uint64_t count = 1;
    for (int i = 0; i < 4; ++i) count *= q;
    for (std::uint64_t v = 0; v < count; v += 3) {  // stride keeps it quick
      Poly f(5, 0);
      std::uint64_t t = v;
      for (int i = 0; i < 4; ++i) {
        f[i] = static_cast<felem>(t % q);
        t /= q;
      }
      f[4] = 1;
      auto facs = poly::factor(F, f);
      CHECK(pmul_all(F, facs) == f);
      bool claims_irreducible = facs.size() == 1 && facs[0].second == 1;
      CHECK(claims_irreducible == poly::is_irreducible_exhaustive(F, f));
    }
  }
}

TEST_CASE("pow_mod") {
  Field f3 = Field::make(3, 1);
  Poly m = {1, 0, 1};  // t^2+1, irreducible over GF(3)
  Poly t = poly::monomial(1, 1);
  // t^(9-1) = 1 mod m since GF(9)* has order 8.
  CHECK(poly::pow_mod(f3, t, 8, m) == poly::constant(1));
}
