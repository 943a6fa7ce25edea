#include "piproj/decompose.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "local_algebra.hpp"
#include "piproj/homalg.hpp"

namespace piproj {

namespace {

Matrix poly_at_matrix(const Field& F, const Poly& g, const Matrix& a) {
  Matrix acc(F, a.rows, a.rows);
  for (std::size_t i = g.size(); i-- > 0;) {
    acc = mat_mul(acc, a);
    if (g[i] != 0)
      for (std::uint32_t d = 0; d < a.rows; ++d)
        acc.at(d, d) = F.add(acc.at(d, d), g[i]);
  }
  return acc;
}

// Primary decomposition of N along an endomorphism whose minimal
// polynomial has at least two distinct irreducible factors.
std::vector<Module> fitting_split(const Module& n, const Matrix& phi,
                                  const std::vector<std::pair<Poly, int>>& facs) {
  std::vector<Module> pieces;
  std::uint32_t total = 0;
  for (const auto& [g, mult] : facs) {
    Matrix gm = mat_pow(poly_at_matrix(n.field, g, phi),
                        static_cast<std::uint32_t>(mult));
    Matrix colb = transpose(kernel_basis(gm));
    Module piece = submodule(n, colb).sub;
    total += piece.dim;
    pieces.push_back(std::move(piece));
  }
  if (total != n.dim)
    throw std::logic_error("decompose: primary components do not fill");
  return pieces;
}

// Stream of splitting candidates: basis elements, pairwise sums, then
// seeded random combinations.
std::optional<std::vector<Module>> try_split(const Module& n,
                                             const std::vector<Matrix>& endo,
                                             std::uint64_t seed,
                                             int random_budget) {
  const Field& F = n.field;
  const std::uint32_t h = static_cast<std::uint32_t>(endo.size());
  auto attempt = [&](const Matrix& phi) -> std::optional<std::vector<Module>> {
    Poly mu = detail::matrix_minpoly(phi);
    if (poly::deg(mu) < 2) return std::nullopt;
    auto facs = poly::factor(F, mu, seed ^ 0xabcdef12345ULL);
    if (facs.size() < 2) return std::nullopt;
    return fitting_split(n, phi, facs);
  };
  for (const auto& phi : endo)
    if (auto s = attempt(phi)) return s;
  for (std::uint32_t i = 0; i < h; ++i)
    for (std::uint32_t j = i + 1; j < h; ++j)
      if (auto s = attempt(mat_add(endo[i], endo[j]))) return s;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_budget; ++t) {
    Matrix phi(F, n.dim, n.dim);
    for (const auto& b : endo) {
      felem c = static_cast<felem>(rng() % F.q());
      if (c == 0) continue;
      Matrix scaled = mat_scale(b, c);
      phi = mat_add(phi, scaled);
    }
    if (auto s = attempt(phi)) return s;
  }
  return std::nullopt;
}

// Exhaustive last resort: enumerate the whole endomorphism ring looking
// for a nontrivial idempotent; only used when q^h is small.
std::optional<std::vector<Module>> exhaustive_split(
    const Module& n, const std::vector<Matrix>& endo) {
  const Field& F = n.field;
  const std::uint32_t h = static_cast<std::uint32_t>(endo.size());
  double logsz = h * std::log2(double(F.q()));
  if (logsz > 22.0) return std::nullopt;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < h; ++i) count *= F.q();
  for (std::uint64_t v = 1; v < count; ++v) {
    Matrix phi(F, n.dim, n.dim);
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < h; ++i) {
      felem c = static_cast<felem>(t % F.q());
      t /= F.q();
      if (c != 0) phi = mat_add(phi, mat_scale(endo[i], c));
    }
    Poly mu = detail::matrix_minpoly(phi);
    if (poly::deg(mu) < 2) continue;
    auto facs = poly::factor(F, mu, 0x5eedULL);
    if (facs.size() >= 2) return fitting_split(n, phi, facs);
  }
  return std::nullopt;
}

std::string summand_sort_key(const Module& m) {
  std::ostringstream os;
  os.width(8);
  os.fill('0');
  os << m.dim;
  os << '|' << invariant_key(m) << '|' << m.fingerprint();
  return os.str();
}

}  // namespace

Decomposition decompose(const Module& m, std::uint64_t seed) {
  std::vector<Module> indec;
  std::vector<Module> work{m};
  std::uint64_t salt = 0;
  while (!work.empty()) {
    Module n = std::move(work.back());
    work.pop_back();
    if (n.dim == 0) continue;
    std::vector<Matrix> endo = hom_basis(n, n).basis;
    if (endo.size() == 1) {
      indec.push_back(std::move(n));
      continue;
    }
    auto alg = detail::algebra_structure(n.field, endo);
    auto cert = detail::local_certificate(alg, seed ^ (salt * 0x9e37ULL));
    ++salt;
    if (cert.local) {
      indec.push_back(std::move(n));
      continue;
    }
    auto split = try_split(n, endo, seed + salt, 2000);
    if (!split) split = exhaustive_split(n, endo);
    if (!split)
      throw std::logic_error(
          "decompose: non-local endomorphism ring but no splitting found");
    for (auto& piece : *split) work.push_back(std::move(piece));
  }

  // Group isomorphic pieces; canonical order by (dim, invariants, bytes).
  std::vector<std::pair<Module, std::uint32_t>> grouped;
  for (auto& piece : indec) {
    bool merged = false;
    for (auto& [rep, mult] : grouped)
      if (rep.dim == piece.dim && indecomposable_isomorphic(rep, piece)) {
        ++mult;
        merged = true;
        break;
      }
    if (!merged) grouped.emplace_back(std::move(piece), 1u);
  }
  std::sort(grouped.begin(), grouped.end(),
            [](const auto& a, const auto& b) {
              return summand_sort_key(a.first) < summand_sort_key(b.first);
            });
  Decomposition out{std::move(grouped)};
  if (out.total_dim() != m.dim)
    throw std::logic_error("decompose: dimensions do not add up");
  return out;
}

bool indecomposable_isomorphic(const Module& a, const Module& b) {
  if (!(a.group == b.group) || !a.field.same(b.field))
    throw std::invalid_argument("iso: group/field mismatch");
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  auto fwd = hom_basis(a, b).basis;
  if (fwd.empty()) return false;
  auto bwd = hom_basis(b, a).basis;
  // a, b indecomposable: some composition g∘f is an automorphism iff
  // a ≅ b (unit-pairing in the local ring End(a)).
  for (const auto& g : bwd)
    for (const auto& f : fwd)
      if (is_invertible(mat_mul(g, f))) return true;
  return false;
}

bool is_isomorphic(const Module& a, const Module& b) {
  if (!(a.group == b.group) || !a.field.same(b.field))
    throw std::invalid_argument("iso: group/field mismatch");
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  if (invariant_key(a) != invariant_key(b)) return false;
  auto fwd = hom_basis(a, b).basis;
  if (fwd.empty()) return false;
  std::mt19937_64 rng(0x150150150ULL);
  for (int t = 0; t < 48; ++t) {
    Matrix phi(a.field, b.dim, a.dim);
    for (const auto& f : fwd) {
      felem c = static_cast<felem>(rng() % a.field.q());
      if (c != 0) phi = mat_add(phi, mat_scale(f, c));
    }
    if (is_invertible(phi)) return true;
  }
  // Complete fallback through Krull-Schmidt.
  Decomposition da = decompose(a, 0xdecul);
  Decomposition db = decompose(b, 0xdecul + 1);
  if (da.summands.size() != db.summands.size()) return false;
  std::vector<bool> used(db.summands.size(), false);
  for (const auto& [ma, multa] : da.summands) {
    bool found = false;
    for (std::size_t j = 0; j < db.summands.size(); ++j) {
      if (used[j] || db.summands[j].second != multa) continue;
      if (db.summands[j].first.dim != ma.dim) continue;
      if (indecomposable_isomorphic(ma, db.summands[j].first)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Module random_module(std::uint64_t seed, GroupDesc group, const Field& field,
                     std::uint32_t dim_min, std::uint32_t dim_max) {
  if (dim_min == 0 || dim_max < dim_min)
    throw std::invalid_argument("random_module: bad bounds");
  std::mt19937_64 rng(seed);
  auto rnd = [&](std::uint64_t n) { return n == 0 ? 0 : rng() % n; };

  // Pool of building blocks, grown as we go.
  std::vector<Module> pool{trivial_module(group, field),
                           omega(trivial_module(group, field), 1)};

  auto random_quotient = [&]() {
    std::uint32_t rank = 1 + static_cast<std::uint32_t>(rnd(2));
    Module f = free_module(group, field, rank);
    std::uint32_t ngen = 1 + static_cast<std::uint32_t>(rnd(f.dim - 1));
    Matrix gens(field, f.dim, ngen);
    for (std::uint32_t j = 0; j < ngen; ++j)
      for (std::uint32_t i = 0; i < f.dim; ++i)
        gens.at(i, j) = static_cast<felem>(rnd(field.q()));
    Matrix sub = spin(f, gens);
    if (sub.cols == f.dim) return trivial_module(group, field);
    return quotient(f, sub).quot;
  };

  for (int attempt = 0; attempt < 400; ++attempt) {
    Module cand = trivial_module(group, field);
    int kind = static_cast<int>(rnd(6));
    std::ostringstream prov;
    switch (kind) {
      case 0:
        cand = random_quotient();
        prov << "rq";
        break;
      case 1: {
        int shift = 1 + static_cast<int>(rnd(2));
        if (rnd(2)) shift = -shift;
        cand = omega(pool[rnd(pool.size())], shift);
        prov << "om(" << shift << ")";
        break;
      }
      case 2: {
        const Module& a = pool[rnd(pool.size())];
        const Module& b = pool[rnd(pool.size())];
        if (std::uint64_t(a.dim) * b.dim > dim_max + group.algebra_dim())
          continue;
        cand = tensor(a, b);
        prov << "tn";
        break;
      }
      case 3:
        cand = dual(pool[rnd(pool.size())]);
        prov << "du";
        break;
      case 4: {
        const Module& a = pool[rnd(pool.size())];
        const Module& b = pool[rnd(pool.size())];
        cand = direct_sum_mod(a, b);
        prov << "ds";
        break;
      }
      default:
        cand = omega(random_quotient(), 1 - static_cast<int>(rnd(3)));
        prov << "omq";
        break;
    }
    if (cand.dim >= 1 && cand.dim <= dim_max + 6 && pool.size() < 24)
      pool.push_back(cand);
    if (cand.dim >= dim_min && cand.dim <= dim_max) {
      std::ostringstream full;
      full << "rand(" << seed << "," << attempt << "," << prov.str() << ")";
      cand.provenance = full.str();
      return cand;
    }
  }
  // Bounded fallback: a sum of trivial modules of dimension dim_min.
  Module acc = trivial_module(group, field);
  while (acc.dim < dim_min)
    acc = direct_sum_mod(acc, trivial_module(group, field));
  std::ostringstream full;
  full << "rand(" << seed << ",fallback)";
  acc.provenance = full.str();
  return acc;
}

}  // namespace piproj
