#include <doctest.h>

#include <stdexcept>

#include "piproj/field.hpp"

using namespace piproj;

TEST_CASE("prime field basics") {
  Field f2 = Field::make(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.mul(1, 1) == 1);
  CHECK(f2.inv(1) == 1);

  Field f5 = Field::make(5, 1);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.neg(2) == 3);
  CHECK(f5.pow(2, 4) == 1);
  CHECK(f5.pow(2, -1) == 3);
}

TEST_CASE("non-prime p rejected") {
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(6, 2), std::invalid_argument);
}

TEST_CASE("canonical moduli are the lexicographically least irreducibles") {
  // GF(4): t^2+t+1 is the unique irreducible quadratic over GF(2).
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint16_t>{1, 1, 1});
  CHECK(Field::make(2, 3).modulus() == std::vector<std::uint16_t>{1, 1, 0, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<std::uint16_t>{1, 0, 1});
  CHECK(Field::make(3, 3).modulus() == std::vector<std::uint16_t>{1, 2, 0, 1});
  // Stability: same (p, n) -> same modulus.
  CHECK(Field::make(2, 4).modulus() == Field::make(2, 4).modulus());
}

TEST_CASE("reducible modulus rejected") {
  // t^2+1 = (t+1)^2 in characteristic 2.
  CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 2, {1, 1, 0}), std::invalid_argument);  // not monic
}

TEST_CASE("GF(4) arithmetic") {
  Field f4 = Field::make(2, 2);
  const felem t = 2, t1 = 3;
  CHECK(f4.mul(t, t) == t1);           // t*t = t+1
  CHECK(f4.inv(t) == t1);              // t*(t+1) = 1
  CHECK(f4.mul(t, t1) == 1);
  CHECK(f4.add(t, t1) == 1);
  CHECK_THROWS_AS(f4.inv(0), std::domain_error);
}

TEST_CASE("field axioms by exhaustion for q <= 81") {
  for (auto [p, n] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                      {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 6},
                      {3, 4}}) {
    Field f = Field::make(p, n);
    const std::uint32_t q = f.q();
    REQUIRE(q <= 81);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("digit round trip") {
  Field f9 = Field::make(3, 2);
  for (std::uint32_t v = 0; v < 9; ++v) {
    auto d = f9.to_digits(static_cast<felem>(v));
    CHECK(d.size() == 2);
    CHECK(f9.from_digits(d) == v);
  }
  CHECK_THROWS_AS(f9.from_digits({1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(f9.from_digits({3, 0}), std::invalid_argument);
}

TEST_CASE("embeddings are ring homomorphisms") {
  Field f2 = Field::make(2, 1);
  Field f4 = Field::make(2, 2);
  auto e = f2.embedding_into(f4);
  CHECK(e[0] == 0);
  CHECK(e[1] == 1);
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      CHECK(e[f2.add(a, b)] == f4.add(e[a], e[b]));

  Field f16 = Field::make(2, 4);
  auto e2 = f4.embedding_into(f16);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      CHECK(e2[f4.add(a, b)] == f16.add(e2[a], e2[b]));
      CHECK(e2[f4.mul(a, b)] == f16.mul(e2[a], e2[b]));
    }
  CHECK(e2[1] == 1);

  Field f3 = Field::make(3, 1);
  Field f9 = Field::make(3, 2);
  auto e3 = f3.embedding_into(f9);
  CHECK(e3[0] == 0);
  CHECK(e3[1] == 1);

  CHECK_THROWS_AS(f3.embedding_into(f4), std::invalid_argument);
  CHECK_THROWS_AS(f4.embedding_into(Field::make(2, 3)), std::invalid_argument);
}
