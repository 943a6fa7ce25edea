#include "piproj/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace piproj {

namespace {

void append_u32(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(char((v >> (8 * i)) & 0xff));
}

std::vector<std::vector<std::uint32_t>> all_exponents(const GroupDesc& g) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> e(g.r, 0);
  const std::uint32_t total = g.algebra_dim();
  out.reserve(total);
  for (std::uint32_t v = 0; v < total; ++v) {
    std::uint32_t t = v;
    for (std::uint32_t i = 0; i < g.r; ++i) {
      e[i] = t % g.p;
      t /= g.p;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace

std::string Module::fingerprint() const {
  std::string s;
  append_u32(s, group.p);
  append_u32(s, group.r);
  append_u32(s, field.p());
  append_u32(s, field.n());
  for (auto c : field.modulus()) append_u32(s, c);
  append_u32(s, dim);
  for (const auto& a : actions)
    for (auto v : a.e) {
      s.push_back(char(v & 0xff));
      s.push_back(char((v >> 8) & 0xff));
    }
  return s;
}

Module module_make(GroupDesc group, Field field, std::uint32_t dim,
                   std::vector<Matrix> actions, std::string provenance) {
  if (field.p() != group.p)
    throw std::invalid_argument("module: field characteristic differs from p");
  if (actions.size() != group.r)
    throw std::invalid_argument("module: expected r action matrices");
  for (const auto& a : actions) {
    if (!a.field.same(field))
      throw std::invalid_argument("module: action over wrong field");
    if (a.rows != dim || a.cols != dim)
      throw std::invalid_argument("module: action has wrong shape");
    if (!is_zero(mat_pow(a, group.p)))
      throw std::invalid_argument("module: generator is not p-nilpotent");
  }
  for (std::size_t i = 0; i < actions.size(); ++i)
    for (std::size_t j = i + 1; j < actions.size(); ++j)
      if (!(mat_mul(actions[i], actions[j]) == mat_mul(actions[j], actions[i])))
        throw std::invalid_argument("module: generators do not commute");
  return Module{group, std::move(field), dim, std::move(actions),
                std::move(provenance)};
}

Module zero_module(GroupDesc group, const Field& field) {
  std::vector<Matrix> acts(group.r, Matrix(field, 0, 0));
  return Module{group, field, 0, std::move(acts), "zero"};
}

Module trivial_module(GroupDesc group, const Field& field) {
  std::vector<Matrix> acts(group.r, Matrix(field, 1, 1));
  return Module{group, field, 1, std::move(acts), "k"};
}

std::uint32_t monomial_index(const GroupDesc& g,
                             const std::vector<std::uint32_t>& exps) {
  std::uint32_t idx = 0, mult = 1;
  for (std::uint32_t i = 0; i < g.r; ++i) {
    idx += exps[i] * mult;
    mult *= g.p;
  }
  return idx;
}

Module free_module(GroupDesc group, const Field& field, std::uint32_t rank) {
  const std::uint32_t a = group.algebra_dim();
  const std::uint32_t dim = rank * a;
  std::vector<Matrix> acts;
  auto exps = all_exponents(group);
  for (std::uint32_t i = 0; i < group.r; ++i) {
    Matrix X(field, dim, dim);
    for (std::uint32_t j = 0; j < rank; ++j)
      for (std::uint32_t w = 0; w < a; ++w) {
        if (exps[w][i] + 1 >= group.p) continue;  // x_i^p = 0
        auto up = exps[w];
        up[i] += 1;
        X.at(j * a + monomial_index(group, up), j * a + w) = 1;
      }
    acts.push_back(std::move(X));
  }
  std::ostringstream prov;
  prov << "free(" << rank << ")";
  return Module{group, field, dim, std::move(acts), prov.str()};
}

Matrix monomial_action(const Module& m, const std::vector<std::uint32_t>& exps) {
  Matrix acc = Matrix::identity(m.field, m.dim);
  for (std::uint32_t i = 0; i < m.group.r; ++i)
    for (std::uint32_t e = 0; e < exps[i]; ++e) acc = mat_mul(m.actions[i], acc);
  return acc;
}

Module direct_sum_mod(const Module& a, const Module& b) {
  if (!(a.group == b.group) || !a.field.same(b.field))
    throw std::invalid_argument("module: direct sum mismatch");
  std::vector<Matrix> acts;
  for (std::uint32_t i = 0; i < a.group.r; ++i)
    acts.push_back(direct_sum(a.actions[i], b.actions[i]));
  return Module{a.group, a.field, a.dim + b.dim, std::move(acts),
                "(" + a.provenance + ")+(" + b.provenance + ")"};
}

Module tensor(const Module& a, const Module& b) {
  if (!(a.group == b.group) || !a.field.same(b.field))
    throw std::invalid_argument("module: tensor mismatch");
  Matrix ia = Matrix::identity(a.field, a.dim);
  Matrix ib = Matrix::identity(b.field, b.dim);
  std::vector<Matrix> acts;
  for (std::uint32_t i = 0; i < a.group.r; ++i) {
    Matrix t = mat_add(mat_add(kron(a.actions[i], ib), kron(ia, b.actions[i])),
                       kron(a.actions[i], b.actions[i]));
    acts.push_back(std::move(t));
  }
  return Module{a.group, a.field, a.dim * b.dim, std::move(acts),
                "(" + a.provenance + ")x(" + b.provenance + ")"};
}

Module dual(const Module& m) {
  // (I+X)^{-1} - I = sum_{j=1}^{p-1} (-X)^j, then transpose.
  std::vector<Matrix> acts;
  for (const auto& x : m.actions) {
    Matrix nx = mat_scale(x, m.field.neg(1));
    Matrix acc = nx;
    Matrix pw = nx;
    for (std::uint32_t j = 2; j < m.group.p; ++j) {
      pw = mat_mul(pw, nx);
      acc = mat_add(acc, pw);
    }
    acts.push_back(transpose(acc));
  }
  return Module{m.group, m.field, m.dim, std::move(acts),
                "D(" + m.provenance + ")"};
}

Module base_change(const Module& m, const Field& K) {
  if (m.field.same(K)) return m;
  auto table = m.field.embedding_into(K);
  std::vector<Matrix> acts;
  for (const auto& x : m.actions) {
    Matrix y(K, x.rows, x.cols);
    for (std::size_t k = 0; k < x.e.size(); ++k) y.e[k] = table[x.e[k]];
    acts.push_back(std::move(y));
  }
  return Module{m.group, K, m.dim, std::move(acts),
                "(" + m.provenance + ")@" + K.describe()};
}

Module restrict_scalars(const Module& m) {
  const std::uint32_t n = m.field.n();
  if (n == 1) return m;
  Field prime = Field::make(m.field.p(), 1);
  // Multiplication-by-a matrices in the polynomial basis of GF(p^n).
  const felem gen = m.field.from_digits([&] {
    std::vector<std::uint16_t> d(n, 0);
    d[1] = 1;
    return d;
  }());
  auto mult_matrix = [&](felem a) {
    Matrix out(prime, n, n);
    felem tc = 1;
    for (std::uint32_t c = 0; c < n; ++c) {
      auto digits = m.field.to_digits(m.field.mul(a, tc));
      for (std::uint32_t rrow = 0; rrow < n; ++rrow)
        out.at(rrow, c) = digits[rrow];
      tc = m.field.mul(tc, gen);
    }
    return out;
  };
  std::vector<Matrix> acts;
  for (const auto& x : m.actions) {
    Matrix y(prime, m.dim * n, m.dim * n);
    for (std::uint32_t i = 0; i < m.dim; ++i)
      for (std::uint32_t j = 0; j < m.dim; ++j) {
        if (x.at(i, j) == 0) continue;
        Matrix blk = mult_matrix(x.at(i, j));
        for (std::uint32_t a = 0; a < n; ++a)
          for (std::uint32_t b = 0; b < n; ++b)
            y.at(i * n + a, j * n + b) = blk.at(a, b);
      }
    acts.push_back(std::move(y));
  }
  return Module{m.group, prime, m.dim * n, std::move(acts),
                "res(" + m.provenance + ")"};
}

SubmoduleResult submodule(const Module& m, const Matrix& colbasis) {
  const std::uint32_t s = colbasis.cols;
  if (colbasis.rows != m.dim)
    throw std::invalid_argument("module: basis has wrong height");
  if (rank(colbasis) != s)
    throw std::invalid_argument("module: basis columns dependent");
  std::vector<Matrix> acts;
  for (const auto& x : m.actions) {
    Matrix img = mat_mul(x, colbasis);
    Matrix c(m.field, s, s);
    for (std::uint32_t col = 0; col < s; ++col) {
      std::vector<felem> b(m.dim);
      for (std::uint32_t i = 0; i < m.dim; ++i) b[i] = img.at(i, col);
      auto sol = solve(colbasis, b);
      if (!sol) throw std::invalid_argument("module: span not action-stable");
      for (std::uint32_t i = 0; i < s; ++i) c.at(i, col) = (*sol)[i];
    }
    acts.push_back(std::move(c));
  }
  Module sub{m.group, m.field, s, std::move(acts), "sub(" + m.provenance + ")"};
  return {std::move(sub), colbasis};
}

QuotientResult quotient(const Module& m, const Matrix& colbasis) {
  const std::uint32_t s = colbasis.cols;
  const std::uint32_t qd = m.dim - s;
  if (rank(colbasis) != s)
    throw std::invalid_argument("module: basis columns dependent");
  RrefResult rr = rref(transpose(colbasis));
  std::vector<bool> piv(m.dim, false);
  for (auto c : rr.pivots) piv[c] = true;
  Matrix t(m.field, m.dim, m.dim);
  for (std::uint32_t i = 0; i < m.dim; ++i)
    for (std::uint32_t j = 0; j < s; ++j) t.at(i, j) = colbasis.at(i, j);
  std::uint32_t col = s;
  for (std::uint32_t i = 0; i < m.dim; ++i)
    if (!piv[i]) t.at(i, col++) = 1;
  Matrix ti = inverse(t);
  std::vector<Matrix> acts;
  for (const auto& x : m.actions) {
    Matrix conj = mat_mul(ti, mat_mul(x, t));
    for (std::uint32_t i = s; i < m.dim; ++i)
      for (std::uint32_t j = 0; j < s; ++j)
        if (conj.at(i, j) != 0)
          throw std::invalid_argument("module: span not action-stable");
    Matrix blk(m.field, qd, qd);
    for (std::uint32_t i = 0; i < qd; ++i)
      for (std::uint32_t j = 0; j < qd; ++j)
        blk.at(i, j) = conj.at(s + i, s + j);
    acts.push_back(std::move(blk));
  }
  Matrix proj(m.field, qd, m.dim);
  for (std::uint32_t i = 0; i < qd; ++i)
    for (std::uint32_t j = 0; j < m.dim; ++j) proj.at(i, j) = ti.at(s + i, j);
  Module quo{m.group, m.field, qd, std::move(acts),
             "quot(" + m.provenance + ")"};
  return {std::move(quo), std::move(proj)};
}

Matrix spin(const Module& m, const Matrix& generators) {
  Matrix rows = transpose(generators);
  std::uint32_t rk = 0;
  while (true) {
    RrefResult rr = rref(rows);
    Matrix basis(m.field, rr.rank, m.dim);
    for (std::uint32_t i = 0; i < rr.rank; ++i)
      for (std::uint32_t j = 0; j < m.dim; ++j) basis.at(i, j) = rr.R.at(i, j);
    if (rr.rank == rk) return transpose(basis);
    rk = rr.rank;
    rows = basis;
    for (const auto& x : m.actions)
      rows = vstack(rows, transpose(mat_mul(x, transpose(basis))));
  }
}

Matrix radical_basis(const Module& m) {
  if (m.group.r == 0 || m.dim == 0) return Matrix(m.field, m.dim, 0);
  Matrix all = m.actions[0];
  for (std::uint32_t i = 1; i < m.group.r; ++i)
    all = hstack(all, m.actions[i]);
  return column_space_basis(all);
}

Matrix socle_basis(const Module& m) {
  if (m.dim == 0) return Matrix(m.field, 0, 0);
  Matrix stacked = m.actions[0];
  for (std::uint32_t i = 1; i < m.group.r; ++i)
    stacked = vstack(stacked, m.actions[i]);
  return transpose(kernel_basis(stacked));
}

std::uint32_t top_dim(const Module& m) {
  return m.dim - radical_basis(m).cols;
}

CoverResult projective_cover(const Module& m) {
  const std::uint32_t a = m.group.algebra_dim();
  Matrix rad = radical_basis(m);
  RrefResult rr = rref(transpose(rad));
  std::vector<bool> piv(m.dim, false);
  for (auto c : rr.pivots) piv[c] = true;
  std::vector<std::uint32_t> reps;  // coordinates giving a basis of top(M)
  for (std::uint32_t i = 0; i < m.dim; ++i)
    if (!piv[i]) reps.push_back(i);
  const std::uint32_t t = static_cast<std::uint32_t>(reps.size());

  auto exps = all_exponents(m.group);
  std::vector<Matrix> acts_w;
  acts_w.reserve(a);
  for (std::uint32_t w = 0; w < a; ++w)
    acts_w.push_back(monomial_action(m, exps[w]));

  Module p = free_module(m.group, m.field, t);
  Matrix cover(m.field, m.dim, t * a);
  for (std::uint32_t j = 0; j < t; ++j)
    for (std::uint32_t w = 0; w < a; ++w)
      for (std::uint32_t i = 0; i < m.dim; ++i)
        cover.at(i, j * a + w) = acts_w[w].at(i, reps[j]);

  if (rank(cover) != m.dim)
    throw std::logic_error("module: projective cover not surjective");
  // Minimality: the kernel must avoid the coordinates of the monomial 1.
  Matrix ker = kernel_basis(cover);
  for (std::uint32_t i = 0; i < ker.rows; ++i)
    for (std::uint32_t j = 0; j < t; ++j)
      if (ker.at(i, j * a) != 0)
        throw std::logic_error("module: cover kernel escapes rad P");
  return {std::move(p), std::move(cover)};
}

ProjectiveFreeResult projective_free_part(const Module& m) {
  const std::uint32_t a = m.group.algebra_dim();
  auto exps = all_exponents(m.group);
  Module cur = m;
  std::uint32_t free_rank = 0;
  while (cur.dim > 0) {
    std::vector<std::uint32_t> topexp(m.group.r, m.group.p - 1);
    Matrix w = monomial_action(cur, topexp);
    std::uint32_t trow = 0, scol = 0;
    bool found = false;
    for (std::uint32_t i = 0; i < cur.dim && !found; ++i)
      for (std::uint32_t j = 0; j < cur.dim && !found; ++j)
        if (w.at(i, j) != 0) {
          trow = i;
          scol = j;
          found = true;
        }
    if (!found) break;

    std::vector<Matrix> acts_w;
    acts_w.reserve(a);
    for (std::uint32_t mi = 0; mi < a; ++mi)
      acts_w.push_back(monomial_action(cur, exps[mi]));

    // f: kE -> M sending 1 to e_scol; g: M -> kE from the functional
    // e_trow through the symmetrizing form of kE.
    Matrix f(cur.field, cur.dim, a);
    for (std::uint32_t wi = 0; wi < a; ++wi)
      for (std::uint32_t i = 0; i < cur.dim; ++i)
        f.at(i, wi) = acts_w[wi].at(i, scol);
    Matrix g(cur.field, a, cur.dim);
    for (std::uint32_t u = 0; u < a; ++u) {
      std::vector<std::uint32_t> comp(m.group.r);
      for (std::uint32_t i = 0; i < m.group.r; ++i)
        comp[i] = (m.group.p - 1) - exps[u][i];
      const Matrix& act = acts_w[monomial_index(m.group, comp)];
      for (std::uint32_t j = 0; j < cur.dim; ++j) g.at(u, j) = act.at(trow, j);
    }
    Matrix gf = mat_mul(g, f);
    Matrix fprime = mat_mul(f, inverse(gf));
    Matrix idem = mat_mul(fprime, g);
    Matrix kerb = transpose(kernel_basis(idem));
    cur = submodule(cur, kerb).sub;
    ++free_rank;
  }
  cur.provenance = "projfree(" + m.provenance + ")";
  return {std::move(cur), free_rank};
}

Module omega(const Module& m, int n) {
  if (n == 0) return projective_free_part(m).core;
  if (n < 0) return dual(omega(dual(m), -n));
  Module cur = m;
  for (int step = 0; step < n; ++step) {
    CoverResult cv = projective_cover(cur);
    Matrix kerb = transpose(kernel_basis(cv.cover));
    cur = submodule(cv.cover_module, kerb).sub;
  }
  std::ostringstream prov;
  prov << "omega(" << m.provenance << "," << n << ")";
  cur.provenance = prov.str();
  return cur;
}

bool is_projective(const Module& m) {
  if (m.dim == 0) return true;
  const std::uint32_t t = top_dim(m);
  if (m.dim != t * m.group.algebra_dim()) return false;
  CoverResult cv = projective_cover(m);
  return kernel_basis(cv.cover).rows == 0;
}

std::string invariant_key(const Module& m) {
  std::ostringstream os;
  os << m.dim << ";";
  auto rank_powers = [&](const Matrix& x) {
    Matrix pw = x;
    for (std::uint32_t e = 1; e < m.group.p; ++e) {
      os << rank(pw) << ",";
      if (e + 1 < m.group.p) pw = mat_mul(pw, x);
    }
    os << "|";
  };
  for (const auto& x : m.actions) rank_powers(x);
  for (std::uint32_t i = 0; i < m.group.r; ++i)
    for (std::uint32_t j = i + 1; j < m.group.r; ++j)
      rank_powers(mat_add(m.actions[i], m.actions[j]));
  if (m.group.r >= 2) {
    Matrix sum = m.actions[0];
    for (std::uint32_t i = 1; i < m.group.r; ++i)
      sum = mat_add(sum, m.actions[i]);
    rank_powers(sum);
  }
  os << "r" << radical_basis(m).cols << "s" << socle_basis(m).cols << "t"
     << top_dim(m);
  return os.str();
}

}  // namespace piproj
