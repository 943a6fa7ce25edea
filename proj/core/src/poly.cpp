#include "piproj/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace piproj {
namespace poly {

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

bool is_zero(const Poly& f) { return f.empty(); }

Poly constant(felem c) { return c == 0 ? Poly{} : Poly{c}; }

Poly monomial(int d, felem c) {
  if (c == 0) return {};
  Poly f(d + 1, 0);
  f[d] = c;
  return f;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    felem x = i < a.size() ? a[i] : 0;
    felem y = i < b.size() ? b[i] : 0;
    out[i] = F.add(x, y);
  }
  return trim(std::move(out));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    felem x = i < a.size() ? a[i] : 0;
    felem y = i < b.size() ? b[i] : 0;
    out[i] = F.sub(x, y);
  }
  return trim(std::move(out));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return trim(std::move(out));
}

Poly scale(const Field& F, const Poly& a, felem c) {
  if (c == 0) return {};
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  return trim(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("poly: division by zero");
  Poly rem = trim(a);
  const int db = deg(b);
  if (deg(rem) < db) return {Poly{}, std::move(rem)};
  Poly quot(rem.size() - db, 0);
  const felem lead_inv = F.inv(b.back());
  for (int i = deg(rem); i >= db; --i) {
    felem c = rem[i];
    if (c == 0) continue;
    c = F.mul(c, lead_inv);
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b[j]));
  }
  return {trim(std::move(quot)), trim(std::move(rem))};
}

Poly mod(const Field& F, const Poly& a, const Poly& b) {
  return divmod(F, a, b).second;
}

Poly monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly derivative(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    felem c = 0;
    for (std::uint32_t k = 0; k < i % F.p(); ++k) c = F.add(c, a[i]);
    out[i - 1] = c;
  }
  return trim(std::move(out));
}

felem eval(const Field& F, const Poly& a, felem x) {
  felem acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

Poly pow_mod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
  Poly acc = constant(1);
  base = mod(F, base, m);
  while (e) {
    if (e & 1) acc = mod(F, mul(F, acc, base), m);
    base = mod(F, mul(F, base, base), m);
    e >>= 1;
  }
  return acc;
}

bool is_irreducible_exhaustive(const Field& F, const Poly& f) {
  int d = deg(f);
  if (d < 1) throw std::invalid_argument("poly: irreducibility of a constant");
  if (d == 1) return true;
  // Roots first (cheap, settles degrees 2 and 3).
  for (std::uint32_t x = 0; x < F.q(); ++x)
    if (eval(F, f, static_cast<felem>(x)) == 0) return false;
  if (d <= 3) return true;
  // Trial division by every monic polynomial of degree 2..d/2.
  for (int dv = 2; 2 * dv <= d; ++dv) {
    std::uint64_t count = 1;
    for (int i = 0; i < dv; ++i) count *= F.q();
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(dv + 1, 0);
      std::uint64_t t = v;
      for (int i = 0; i < dv; ++i) {
        g[i] = static_cast<felem>(t % F.q());
        t /= F.q();
      }
      g[dv] = 1;
      if (mod(F, f, g).empty()) return false;
    }
  }
  return true;
}

namespace {

// Coefficient-wise p-th root: f must satisfy f'(t) = 0, i.e. only
// exponents divisible by p occur.
Poly pth_root(const Field& F, const Poly& f) {
  const std::uint32_t p = F.p();
  Poly out((f.size() + p - 1) / p, 0);
  std::uint64_t root_exp = F.q() / p;  // a^(q/p) is the p-th root in GF(q)
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    if (i % p != 0) throw std::logic_error("poly: pth_root of non p-power");
    out[i / p] = F.pow(f[i], static_cast<std::int64_t>(root_exp));
  }
  return trim(std::move(out));
}

void squarefree_into(const Field& F, Poly f, int mult,
                     std::vector<std::pair<Poly, int>>& out) {
  f = monic(F, trim(std::move(f)));
  if (deg(f) < 1) return;
  Poly d = derivative(F, f);
  if (is_zero(d)) {
    squarefree_into(F, pth_root(F, f), mult * static_cast<int>(F.p()), out);
    return;
  }
  Poly c = gcd(F, f, d);
  Poly w = divmod(F, f, c).first;
  int i = 1;
  while (deg(w) > 0) {
    Poly y = gcd(F, w, c);
    Poly z = divmod(F, w, y).first;
    if (deg(z) > 0) out.emplace_back(monic(F, z), mult * i);
    w = std::move(y);
    c = divmod(F, c, w).first;
    ++i;
  }
  if (deg(c) > 0)
    squarefree_into(F, c, mult * static_cast<int>(F.p()), out);
}

// g squarefree monic -> list of (product of irreducibles of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Field& F, Poly g) {
  std::vector<std::pair<Poly, int>> out;
  Poly h = monomial(1, 1);  // t
  int i = 1;
  while (deg(g) >= 2 * i) {
    h = pow_mod(F, h, F.q(), g);
    Poly d = gcd(F, sub(F, h, monomial(1, 1)), g);
    if (deg(d) > 0) {
      out.emplace_back(d, i);
      g = divmod(F, g, d).first;
      h = mod(F, h, g);
    }
    ++i;
  }
  if (deg(g) > 0) out.emplace_back(g, deg(g));
  return out;
}

Poly random_poly(const Field& F, int below_deg, std::mt19937_64& rng) {
  // rng() % q instead of uniform_int_distribution: the mt19937_64 stream
  // is pinned by the standard, the distribution is not, and dumps must be
  // byte-identical across platforms.
  Poly f(below_deg, 0);
  for (auto& c : f) c = static_cast<felem>(rng() % F.q());
  return trim(std::move(f));
}

// h = product of >= 1 monic irreducibles, all of degree d.
void equal_degree_into(const Field& F, Poly h, int d, std::mt19937_64& rng,
                       std::vector<Poly>& out) {
  if (deg(h) == d) {
    out.push_back(monic(F, h));
    return;
  }
  const std::uint32_t q = F.q();
  while (true) {
    Poly a = random_poly(F, deg(h), rng);
    if (deg(a) < 1) continue;
    Poly g = gcd(F, a, h);
    if (deg(g) == 0) {
      if (q % 2 == 1) {
        // b = a^((q^d-1)/2) - 1 via the Frobenius chain
        // a^(1+q+...+q^(d-1)) raised to (q-1)/2.
        Poly s = constant(1);
        Poly frob = mod(F, a, h);
        for (int j = 0; j < d; ++j) {
          s = mod(F, mul(F, s, frob), h);
          frob = pow_mod(F, frob, q, h);
        }
        Poly b = pow_mod(F, s, (q - 1) / 2, h);
        g = gcd(F, sub(F, b, constant(1)), h);
      } else {
        // Characteristic 2: additive trace map.
        int m = 0;
        for (std::uint32_t t = 1; t < q; t *= 2) ++m;
        Poly tr = {};
        Poly cur = mod(F, a, h);
        for (int j = 0; j < d * m; ++j) {
          tr = add(F, tr, cur);
          cur = mod(F, mul(F, cur, cur), h);
        }
        g = gcd(F, tr, h);
      }
    }
    if (deg(g) > 0 && deg(g) < deg(h)) {
      equal_degree_into(F, g, d, rng, out);
      equal_degree_into(F, divmod(F, h, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Field& F, const Poly& f,
                                         std::uint64_t seed) {
  Poly g = monic(F, trim(f));
  if (is_zero(g)) throw std::invalid_argument("poly: factor of zero");
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_into(F, g, 1, sqf);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [prod, d] : distinct_degree(F, part)) {
      std::vector<Poly> irr;
      equal_degree_into(F, prod, d, rng, irr);
      for (auto& one : irr) out.emplace_back(std::move(one), mult);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace poly
}  // namespace piproj
