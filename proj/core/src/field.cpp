#include "piproj/field.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "piproj/poly.hpp"

namespace piproj {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint16_t> unpack(std::uint32_t v, std::uint32_t n,
                                  std::uint32_t p) {
  std::vector<std::uint16_t> d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint16_t>(v % p);
    v /= p;
  }
  return d;
}

std::uint32_t pack(const std::vector<std::uint16_t>& d, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return static_cast<std::uint32_t>(v);
}

}  // namespace

struct Field::Impl {
  std::uint32_t p = 0, n = 0, q = 0;
  std::vector<std::uint16_t> modulus;  // n+1 digits, monic

  // Lookup tables, filled when q <= 256.
  std::vector<felem> add_t, mul_t, inv_t, neg_t;
  bool tabled = false;

  // Digit-level arithmetic, independent of the tables.
  felem raw_add(felem a, felem b) const {
    if (n == 1) return static_cast<felem>((a + b) % p);
    std::uint32_t out = 0, mult = 1;
    std::uint32_t x = a, y = b;
    for (std::uint32_t i = 0; i < n; ++i) {
      out += ((x % p + y % p) % p) * mult;
      x /= p;
      y /= p;
      mult *= p;
    }
    return static_cast<felem>(out);
  }

  felem raw_neg(felem a) const {
    if (n == 1) return static_cast<felem>((p - a) % p);
    std::uint32_t out = 0, mult = 1, x = a;
    for (std::uint32_t i = 0; i < n; ++i) {
      out += ((p - x % p) % p) * mult;
      x /= p;
      mult *= p;
    }
    return static_cast<felem>(out);
  }

  felem raw_mul(felem a, felem b) const {
    if (n == 1) return static_cast<felem>((std::uint32_t(a) * b) % p);
    auto da = unpack(a, n, p);
    auto db = unpack(b, n, p);
    std::vector<std::uint32_t> prod(2 * n - 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j)
        prod[i + j] = (prod[i + j] + std::uint32_t(da[i]) * db[j]) % p;
    }
    // Reduce by the monic modulus, top coefficient down.
    for (std::size_t i = prod.size(); i-- > n;) {
      std::uint32_t c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (std::uint32_t j = 0; j < n; ++j) {
        std::uint32_t sub = (c * modulus[j]) % p;
        prod[i - n + j] = (prod[i - n + j] + p - sub) % p;
      }
    }
    std::uint32_t out = 0, mult = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      out += prod[i] * mult;
      mult *= p;
    }
    return static_cast<felem>(out);
  }

  felem raw_pow(felem a, std::uint64_t e) const {
    felem acc = 1, base = a;
    while (e) {
      if (e & 1) acc = raw_mul(acc, base);
      base = raw_mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  void build_tables() {
    if (q > 256) return;
    add_t.resize(std::size_t(q) * q);
    mul_t.resize(std::size_t(q) * q);
    inv_t.assign(q, 0);
    neg_t.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      neg_t[a] = raw_neg(static_cast<felem>(a));
      for (std::uint32_t b = 0; b < q; ++b) {
        add_t[std::size_t(a) * q + b] =
            raw_add(static_cast<felem>(a), static_cast<felem>(b));
        mul_t[std::size_t(a) * q + b] =
            raw_mul(static_cast<felem>(a), static_cast<felem>(b));
      }
      if (a != 0) inv_t[a] = raw_pow(static_cast<felem>(a), q - 2);
    }
    tabled = true;
  }
};

Field Field::make(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
  if (n < 1) throw std::invalid_argument("field: extension degree must be >= 1");
  if (n == 1) {
    // Canonical degree-1 modulus is t itself (lexicographically least).
    return make(p, 1, {0, 1});
  }
  Field prime = make(p, 1);
  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn *= p;
  if (qn > 65535) throw std::invalid_argument("field: p^n exceeds 2^16-1");
  for (std::uint64_t m = 0; m < qn; ++m) {
    Poly cand = unpack(static_cast<std::uint32_t>(m), n, p);
    cand.push_back(1);  // monic
    if (poly::is_irreducible_exhaustive(prime, cand)) {
      std::vector<std::uint16_t> mod(cand.begin(), cand.end());
      return make(p, n, mod);
    }
  }
  throw std::logic_error("field: no irreducible modulus found");  // unreachable
}

Field Field::make(std::uint32_t p, std::uint32_t n,
                  const std::vector<std::uint16_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
  if (n < 1) throw std::invalid_argument("field: extension degree must be >= 1");
  if (modulus.size() != n + 1)
    throw std::invalid_argument("field: modulus must have n+1 coefficients");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("field: modulus coefficient not reduced mod p");
  if (modulus.back() != 1)
    throw std::invalid_argument("field: modulus must be monic");
  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn *= p;
  if (qn > 65535) throw std::invalid_argument("field: p^n exceeds 2^16-1");

  if (n >= 2) {
    Field prime = make(p, 1);
    Poly f(modulus.begin(), modulus.end());
    if (!poly::is_irreducible_exhaustive(prime, f))
      throw std::invalid_argument("field: modulus is reducible");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->n = n;
  impl->q = static_cast<std::uint32_t>(qn);
  impl->modulus = modulus;
  impl->build_tables();
  return Field(std::move(impl));
}

std::uint32_t Field::p() const { return impl_->p; }
std::uint32_t Field::n() const { return impl_->n; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint16_t>& Field::modulus() const {
  return impl_->modulus;
}

felem Field::add(felem a, felem b) const {
  const auto& im = *impl_;
  if (im.tabled) return im.add_t[std::size_t(a) * im.q + b];
  return im.raw_add(a, b);
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::neg(felem a) const {
  const auto& im = *impl_;
  if (im.tabled) return im.neg_t[a];
  return im.raw_neg(a);
}

felem Field::mul(felem a, felem b) const {
  const auto& im = *impl_;
  if (im.tabled) return im.mul_t[std::size_t(a) * im.q + b];
  return im.raw_mul(a, b);
}

felem Field::inv(felem a) const {
  if (a == 0) throw std::domain_error("field: inversion of zero");
  const auto& im = *impl_;
  if (im.tabled) return im.inv_t[a];
  return im.raw_pow(a, im.q - 2);
}

felem Field::pow(felem a, std::int64_t e) const {
  if (e < 0) {
    return impl_->raw_pow(inv(a), static_cast<std::uint64_t>(-e));
  }
  return impl_->raw_pow(a, static_cast<std::uint64_t>(e));
}

std::vector<std::uint16_t> Field::to_digits(felem a) const {
  return unpack(a, impl_->n, impl_->p);
}

felem Field::from_digits(const std::vector<std::uint16_t>& digits) const {
  if (digits.size() != impl_->n)
    throw std::invalid_argument("field: digit vector has wrong length");
  for (auto d : digits)
    if (d >= impl_->p)
      throw std::invalid_argument("field: digit not reduced mod p");
  return static_cast<felem>(pack(digits, impl_->p));
}

std::vector<felem> Field::embedding_into(const Field& K) const {
  if (K.p() != p())
    throw std::invalid_argument("field: embedding with incompatible characteristic");
  if (K.n() % n() != 0)
    throw std::invalid_argument("field: no subfield embedding (degree does not divide)");
  std::vector<felem> table(q());
  if (same(K)) {
    for (std::uint32_t v = 0; v < q(); ++v) table[v] = static_cast<felem>(v);
    return table;
  }
  // First root of our modulus in K, scanning packed values in order.
  felem root = 0;
  bool found = false;
  for (std::uint32_t x = 0; x < K.q(); ++x) {
    felem acc = 0, xp = 1;
    for (std::uint32_t i = 0; i <= n(); ++i) {
      acc = K.add(acc, K.mul(static_cast<felem>(impl_->modulus[i]), xp));
      xp = K.mul(xp, static_cast<felem>(x));
    }
    if (acc == 0) {
      root = static_cast<felem>(x);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("field: embedding root not found");
  for (std::uint32_t v = 0; v < q(); ++v) {
    auto d = unpack(v, n(), p());
    felem acc = 0, rp = 1;
    for (std::uint32_t i = 0; i < n(); ++i) {
      acc = K.add(acc, K.mul(static_cast<felem>(d[i]), rp));
      rp = K.mul(rp, root);
    }
    table[v] = acc;
  }
  return table;
}

void Field::row_axpy(felem* dst, const felem* src, felem c,
                     std::size_t len) const {
  if (c == 0 || len == 0) return;
  const auto& im = *impl_;
  if (im.q == 2) {
    for (std::size_t k = 0; k < len; ++k) dst[k] ^= src[k];
    return;
  }
  if (im.tabled) {
    const felem* mulc = &im.mul_t[std::size_t(c) * im.q];
    const felem* addt = im.add_t.data();
    const std::uint32_t q = im.q;
    for (std::size_t k = 0; k < len; ++k)
      dst[k] = addt[std::size_t(dst[k]) * q + mulc[src[k]]];
    return;
  }
  if (im.n == 1) {
    const std::uint32_t p = im.p;
    for (std::size_t k = 0; k < len; ++k)
      dst[k] = static_cast<felem>((dst[k] + std::uint32_t(c) * src[k]) % p);
    return;
  }
  for (std::size_t k = 0; k < len; ++k)
    dst[k] = im.raw_add(dst[k], im.raw_mul(c, src[k]));
}

void Field::row_scale(felem* dst, felem c, std::size_t len) const {
  const auto& im = *impl_;
  if (c == 1) return;
  if (c == 0) {
    for (std::size_t k = 0; k < len; ++k) dst[k] = 0;
    return;
  }
  if (im.tabled) {
    const felem* mulc = &im.mul_t[std::size_t(c) * im.q];
    for (std::size_t k = 0; k < len; ++k) dst[k] = mulc[dst[k]];
    return;
  }
  for (std::size_t k = 0; k < len; ++k) dst[k] = im.raw_mul(c, dst[k]);
}

bool Field::same(const Field& other) const {
  return impl_ == other.impl_ ||
         (impl_->p == other.impl_->p && impl_->n == other.impl_->n &&
          impl_->modulus == other.impl_->modulus);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q() << ")";
  if (n() > 1) {
    os << "[";
    bool first = true;
    for (std::size_t i = impl_->modulus.size(); i-- > 0;) {
      if (impl_->modulus[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || impl_->modulus[i] != 1) os << impl_->modulus[i];
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
    }
    os << "]";
  }
  return os.str();
}

}  // namespace piproj
