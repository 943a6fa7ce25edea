#include "piproj/homalg.hpp"

#include <sstream>
#include <stdexcept>

#include "local_algebra.hpp"

namespace piproj {

namespace {

Matrix hom_system(const Module& x, const Module& m) {
  // f X_i = M_i f for the row-major flattening of f (dim(m) x dim(x)).
  const Field& F = x.field;
  Matrix idm = Matrix::identity(F, m.dim);
  Matrix idx = Matrix::identity(F, x.dim);
  Matrix stacked(F, 0, m.dim * x.dim);
  for (std::uint32_t i = 0; i < x.group.r; ++i) {
    Matrix s = mat_sub(kron(idm, transpose(x.actions[i])),
                       kron(m.actions[i], idx));
    stacked = stacked.rows == 0 ? s : vstack(stacked, s);
  }
  return stacked;
}

void require_compatible(const Module& x, const Module& m) {
  if (!(x.group == m.group) || !x.field.same(m.field))
    throw std::invalid_argument("homalg: group/field mismatch");
}

// Basis of Hom(X, kE) through the symmetrizing form: each functional
// theta on X gives the map x |-> sum_u theta(x^comp(u) . x) e_u.
std::vector<Matrix> hom_to_free_rank_one(const Module& x) {
  const GroupDesc g = x.group;
  const std::uint32_t a = g.algebra_dim();
  std::vector<std::vector<std::uint32_t>> exps;
  {
    std::vector<std::uint32_t> e(g.r, 0);
    for (std::uint32_t v = 0; v < a; ++v) {
      std::uint32_t t = v;
      for (std::uint32_t i = 0; i < g.r; ++i) {
        e[i] = t % g.p;
        t /= g.p;
      }
      exps.push_back(e);
    }
  }
  std::vector<Matrix> acts(a, Matrix(x.field, 0, 0));
  for (std::uint32_t w = 0; w < a; ++w) acts[w] = monomial_action(x, exps[w]);
  std::vector<Matrix> out;
  out.reserve(x.dim);
  for (std::uint32_t t = 0; t < x.dim; ++t) {
    Matrix gm(x.field, a, x.dim);
    for (std::uint32_t u = 0; u < a; ++u) {
      std::vector<std::uint32_t> comp(g.r);
      for (std::uint32_t i = 0; i < g.r; ++i)
        comp[i] = (g.p - 1) - exps[u][i];
      const Matrix& act = acts[monomial_index(g, comp)];
      for (std::uint32_t j = 0; j < x.dim; ++j) gm.at(u, j) = act.at(t, j);
    }
    out.push_back(std::move(gm));
  }
  return out;
}

}  // namespace

HomSpace hom_basis(const Module& x, const Module& m) {
  require_compatible(x, m);
  HomSpace out{x, m, {}};
  if (x.dim == 0 || m.dim == 0) return out;
  Matrix ker = kernel_basis(hom_system(x, m));
  for (std::uint32_t i = 0; i < ker.rows; ++i) {
    Matrix f(x.field, m.dim, x.dim);
    for (std::uint32_t k = 0; k < m.dim * x.dim; ++k) f.e[k] = ker.at(i, k);
    out.basis.push_back(std::move(f));
  }
  return out;
}

std::uint32_t hom_dim(const Module& x, const Module& m) {
  require_compatible(x, m);
  if (x.dim == 0 || m.dim == 0) return 0;
  Matrix sys = hom_system(x, m);
  return x.dim * m.dim - rank(sys);
}

EndRing end_ring(const Module& m) {
  EndRing out{m, hom_basis(m, m).basis, {}, {}};
  auto alg = detail::algebra_structure(m.field, out.basis);
  out.structure = std::move(alg.sc);
  out.identity_coords = std::move(alg.id_coords);
  return out;
}

std::uint32_t phom_dim(const Module& x, const Module& m) {
  require_compatible(x, m);
  if (x.dim == 0 || m.dim == 0) return 0;
  const std::uint32_t a = x.group.algebra_dim();
  CoverResult cv = projective_cover(m);
  const std::uint32_t t = cv.cover_module.dim / a;
  if (t == 0) return 0;
  auto gs = hom_to_free_rank_one(x);
  // Stack cover∘(copy c of g) as flat rows; the image dimension is phom.
  Matrix rows(x.field, t * x.dim, m.dim * x.dim);
  std::uint32_t rw = 0;
  for (std::uint32_t c = 0; c < t; ++c) {
    Matrix block(x.field, m.dim, a);
    for (std::uint32_t i = 0; i < m.dim; ++i)
      for (std::uint32_t u = 0; u < a; ++u)
        block.at(i, u) = cv.cover.at(i, c * a + u);
    for (const auto& g : gs) {
      Matrix comp = mat_mul(block, g);
      for (std::uint32_t k = 0; k < comp.e.size(); ++k) rows.at(rw, k) = comp.e[k];
      ++rw;
    }
  }
  return rank(rows);
}

std::uint32_t phom_dim_literal(const Module& x, const Module& m) {
  require_compatible(x, m);
  if (x.dim == 0 || m.dim == 0) return 0;
  CoverResult cv = projective_cover(m);
  auto homs = hom_basis(x, cv.cover_module).basis;
  if (homs.empty()) return 0;
  Matrix rows(x.field, static_cast<std::uint32_t>(homs.size()),
              m.dim * x.dim);
  for (std::size_t i = 0; i < homs.size(); ++i) {
    Matrix comp = mat_mul(cv.cover, homs[i]);
    for (std::uint32_t k = 0; k < comp.e.size(); ++k)
      rows.at(static_cast<std::uint32_t>(i), k) = comp.e[k];
  }
  return rank(rows);
}

std::uint32_t stable_hom_dim(const Module& x, const Module& m) {
  return hom_dim(x, m) - phom_dim(x, m);
}

std::uint32_t ext_dim(std::uint32_t n, const Module& x, const Module& m) {
  if (n < 1) throw std::invalid_argument("ext_dim: degree must be >= 1");
  return stable_hom_dim(omega(x, static_cast<int>(n)), m);
}

std::uint32_t tate_ext_dim(int n, const Module& x, const Module& m) {
  return stable_hom_dim(omega(x, n), m);
}

std::uint32_t end_simple_dim(const Module& m) {
  if (m.dim == 0)
    throw std::invalid_argument("end_simple_dim: zero module");
  auto endo = hom_basis(m, m).basis;
  if (endo.size() == 1) return 1;  // End = k
  auto alg = detail::algebra_structure(m.field, endo);
  auto cert = detail::local_certificate(alg, 0xe5d5ULL);
  if (!cert.local)
    throw std::domain_error("end_simple_dim: endomorphism ring not local");
  return cert.e;
}

void validate_sequence(const ShortExactSeq& s) {
  require_compatible(s.X, s.Y);
  require_compatible(s.Y, s.Z);
  if (s.inj.rows != s.Y.dim || s.inj.cols != s.X.dim)
    throw std::invalid_argument("sequence: inj has wrong shape");
  if (s.surj.rows != s.Z.dim || s.surj.cols != s.Y.dim)
    throw std::invalid_argument("sequence: surj has wrong shape");
  if (s.X.dim + s.Z.dim != s.Y.dim)
    throw std::invalid_argument("sequence: dimension count off");
  if (rank(s.inj) != s.X.dim)
    throw std::invalid_argument("sequence: inj not injective");
  if (rank(s.surj) != s.Z.dim)
    throw std::invalid_argument("sequence: surj not surjective");
  if (!is_zero(mat_mul(s.surj, s.inj)))
    throw std::invalid_argument("sequence: surj . inj nonzero");
  for (std::uint32_t i = 0; i < s.X.group.r; ++i) {
    if (!(mat_mul(s.inj, s.X.actions[i]) ==
          mat_mul(s.Y.actions[i], s.inj)))
      throw std::invalid_argument("sequence: inj not equivariant");
    if (!(mat_mul(s.surj, s.Y.actions[i]) ==
          mat_mul(s.Z.actions[i], s.surj)))
      throw std::invalid_argument("sequence: surj not equivariant");
  }
}

ShortExactSeq split_sequence(const Module& x, const Module& z) {
  require_compatible(x, z);
  Module y = direct_sum_mod(x, z);
  Matrix inj(x.field, y.dim, x.dim);
  for (std::uint32_t i = 0; i < x.dim; ++i) inj.at(i, i) = 1;
  Matrix surj(x.field, z.dim, y.dim);
  for (std::uint32_t i = 0; i < z.dim; ++i) surj.at(i, x.dim + i) = 1;
  ShortExactSeq s{x, std::move(y), z, std::move(inj), std::move(surj)};
  validate_sequence(s);
  return s;
}

ShortExactSeq realize_extension(const Matrix& cls, const Module& omega_z,
                                const Module& z, const Module& m) {
  require_compatible(omega_z, m);
  require_compatible(z, m);
  if (cls.rows != m.dim || cls.cols != omega_z.dim)
    throw std::invalid_argument("realize: class has wrong shape");
  for (std::uint32_t i = 0; i < m.group.r; ++i)
    if (!(mat_mul(cls, omega_z.actions[i]) ==
          mat_mul(m.actions[i], cls)))
      throw std::invalid_argument("realize: class not equivariant");

  CoverResult cv = projective_cover(z);
  Matrix kb = transpose(kernel_basis(cv.cover));  // dim(P) x dim(omega_z)
  if (kb.cols != omega_z.dim)
    throw std::invalid_argument("realize: class domain is not Omega Z");

  Module big = direct_sum_mod(m, cv.cover_module);
  const std::uint32_t D = big.dim;
  // Graph of (-class): columns (cls(w), -kb(w)).
  Matrix u(m.field, D, omega_z.dim);
  for (std::uint32_t j = 0; j < omega_z.dim; ++j) {
    for (std::uint32_t i = 0; i < m.dim; ++i) u.at(i, j) = cls.at(i, j);
    for (std::uint32_t i = 0; i < kb.rows; ++i)
      u.at(m.dim + i, j) = m.field.neg(kb.at(i, j));
  }
  QuotientResult q = quotient(big, u);

  Matrix inj(m.field, q.quot.dim, m.dim);
  for (std::uint32_t i = 0; i < q.quot.dim; ++i)
    for (std::uint32_t j = 0; j < m.dim; ++j) inj.at(i, j) = q.projection.at(i, j);

  // surj: induced by (mm, pp) -> cover(pp); compute through a right
  // inverse of the projection.
  Matrix s0(m.field, z.dim, D);
  for (std::uint32_t i = 0; i < z.dim; ++i)
    for (std::uint32_t j = 0; j < cv.cover_module.dim; ++j)
      s0.at(i, m.dim + j) = cv.cover.at(i, j);
  Matrix rinv(m.field, D, q.quot.dim);
  for (std::uint32_t c = 0; c < q.quot.dim; ++c) {
    std::vector<felem> b(q.quot.dim, 0);
    b[c] = 1;
    auto sol = solve(q.projection, b);
    if (!sol) throw std::logic_error("realize: projection not surjective");
    for (std::uint32_t i = 0; i < D; ++i) rinv.at(i, c) = (*sol)[i];
  }
  Matrix surj = mat_mul(s0, rinv);
  if (!(mat_mul(surj, q.projection) == s0))
    throw std::logic_error("realize: surjection ill-defined");

  ShortExactSeq s{m, q.quot, z, std::move(inj), std::move(surj)};
  validate_sequence(s);
  return s;
}

const Module& HomCache::omega_of(const Module& m, int n) {
  auto key = std::make_pair(m.fingerprint(), n);
  auto it = omega_.find(key);
  if (it != omega_.end()) return it->second;
  Module result = m;
  if (n == 0) {
    result = projective_free_part(m).core;
  } else if (n > 0) {
    const Module& prev = omega_of(m, n - 1);
    result = n == 1 ? omega(m, 1) : omega(prev, 1);
  } else {
    const Module& prev = omega_of(m, n + 1);
    result = n == -1 ? omega(m, -1) : omega(prev, -1);
  }
  return omega_.emplace(std::move(key), std::move(result)).first->second;
}

std::uint32_t HomCache::hom_dim(const Module& x, const Module& m) {
  auto key = std::make_pair(x.fingerprint(), m.fingerprint());
  auto it = hom_.find(key);
  if (it != hom_.end()) return it->second;
  std::uint32_t d;
  const std::uint32_t a = x.group.algebra_dim();
  if (x.dim % a == 0 && x.dim > 0 && is_projective(x))
    d = (x.dim / a) * m.dim;  // Hom(kE^s, M) = M^s
  else
    d = piproj::hom_dim(x, m);
  hom_.emplace(std::move(key), d);
  return d;
}

std::uint32_t HomCache::stable_hom_dim(const Module& x, const Module& m) {
  auto key = std::make_pair(x.fingerprint(), m.fingerprint());
  auto it = stable_.find(key);
  if (it != stable_.end()) return it->second;
  std::uint32_t d = piproj::stable_hom_dim(x, m);
  stable_.emplace(std::move(key), d);
  return d;
}

std::uint32_t HomCache::tate_ext_dim(int n, const Module& x, const Module& m) {
  return stable_hom_dim(omega_of(x, n), m);
}

const Decomposition& HomCache::decomposition_of(const Module& m) {
  auto key = m.fingerprint();
  auto it = decomp_.find(key);
  if (it != decomp_.end()) return it->second;
  return decomp_.emplace(std::move(key), decompose(m, 0xC0FFEEULL))
      .first->second;
}

ChiModule chi_module(const Module& m) {
  ChiModule out{m, {}, {}};
  Decomposition d = decompose(m, 0xC0FFEEULL);
  for (auto& [part, mult] : d.summands) {
    out.simple_dims.push_back(end_simple_dim(part));
    out.distinct_summands.push_back(std::move(part));
  }
  return out;
}

std::uint64_t chi_module_eval(const ChiModule& chi, const Module& x,
                              HomCache* cache) {
  if (x.dim == 0) return 0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < chi.distinct_summands.size(); ++i) {
    std::uint32_t h = cache ? cache->hom_dim(x, chi.distinct_summands[i])
                            : hom_dim(x, chi.distinct_summands[i]);
    std::uint32_t e = chi.simple_dims[i];
    if (h % e != 0)
      throw std::domain_error("chi: endolength division not exact");
    total += h / e;
  }
  return total;
}

BcrReport bcr_gap_check(const Module& x, const Module& m, std::uint32_t r_gap,
                        int window_lo, int window_hi, HomCache* cache) {
  if (r_gap < 1) throw std::invalid_argument("bcr: r_gap must be >= 1");
  if (window_lo > window_hi)
    throw std::invalid_argument("bcr: empty window");
  BcrReport rep;
  HomCache local;
  HomCache& hc = cache ? *cache : local;
  for (int n = window_lo; n <= window_hi; ++n)
    rep.dims.emplace_back(n, hc.tate_ext_dim(n, x, m));
  std::uint32_t run = 0;
  for (const auto& [n, d] : rep.dims) {
    run = (d == 0) ? run + 1 : 0;
    if (run >= r_gap) {
      rep.triggered = true;
      break;
    }
  }
  if (rep.triggered)
    for (const auto& [n, d] : rep.dims)
      if (d != 0) rep.violations.push_back(n);
  return rep;
}

}  // namespace piproj
