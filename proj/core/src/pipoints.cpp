#include "piproj/pipoints.hpp"

#include <sstream>
#include <stdexcept>

namespace piproj {

namespace {

std::string lambda_string(const Field& K, const std::vector<felem>& lambda) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ",";
    os << lambda[i];
  }
  os << ")@" << K.describe();
  return os.str();
}

}  // namespace

PiPoint pipoint_make(GroupDesc group, Field K, std::vector<felem> lambda) {
  if (K.p() != group.p)
    throw std::invalid_argument("pipoint: field characteristic differs from p");
  if (lambda.size() != group.r)
    throw std::invalid_argument("pipoint: lambda must have r entries");
  bool nonzero = false;
  for (auto c : lambda) {
    if (c >= K.q()) throw std::invalid_argument("pipoint: entry out of field");
    if (c != 0) nonzero = true;
  }
  if (!nonzero)
    throw std::invalid_argument("pipoint: lambda = 0 gives a non-flat map");
  return PiPoint{group, std::move(K), std::move(lambda)};
}

RestrictResult restrict_along(const PiPoint& a, const Module& m) {
  if (!(m.group == a.group))
    throw std::invalid_argument("pipoint: group mismatch");
  Module mk = base_change(m, a.K);
  Matrix u(a.K, mk.dim, mk.dim);
  for (std::uint32_t i = 0; i < a.group.r; ++i) {
    if (a.lambda[i] == 0) continue;
    u = mat_add(u, mat_scale(mk.actions[i], a.lambda[i]));
  }
  const std::uint32_t p = a.group.p;
  // Ranks of powers u^0..u^(p+1); a_i = r_{i-1} - 2 r_i + r_{i+1}.
  std::vector<std::uint32_t> rk(p + 2, 0);
  Matrix pw = Matrix::identity(a.K, mk.dim);
  for (std::uint32_t j = 0; j <= p + 1; ++j) {
    rk[j] = rank(pw);
    if (j <= p) pw = mat_mul(pw, u);
  }
  if (rk[p] != 0) throw std::logic_error("pipoint: u^p nonzero");
  JordanType jt;
  jt.blocks.resize(p, 0);
  for (std::uint32_t i = 1; i <= p; ++i)
    jt.blocks[i - 1] = rk[i - 1] - 2 * rk[i] + rk[i + 1];
  if (jt.total_dim() != mk.dim)
    throw std::logic_error("pipoint: jordan type does not fill dimension");
  return {std::move(u), std::move(jt)};
}

bool thick_member(const PiPoint& a, const Module& m) {
  return restrict_along(a, m).jordan.all_full();
}

std::uint64_t chi_pipoint_eval(const PiPoint& a, const Module& m) {
  RestrictResult r = restrict_along(a, m);
  std::uint64_t by_rank = r.op.rows - rank(r.op);
  std::uint64_t by_blocks = r.jordan.block_count();
  if (by_rank != by_blocks)
    throw std::logic_error("pipoint: chi computations disagree");
  return by_rank;
}

Module witness_module(const PiPoint& a) {
  Module reg = free_module(a.group, a.K, 1);
  Matrix u(a.K, reg.dim, reg.dim);
  for (std::uint32_t i = 0; i < a.group.r; ++i) {
    if (a.lambda[i] == 0) continue;
    u = mat_add(u, mat_scale(reg.actions[i], a.lambda[i]));
  }
  Matrix img = column_space_basis(u);
  QuotientResult q = quotient(reg, img);
  q.quot.provenance = "witness" + lambda_string(a.K, a.lambda);
  const std::uint32_t expected = reg.dim / a.group.p;
  if (q.quot.dim != expected)
    throw std::logic_error("pipoint: witness has wrong dimension");
  return std::move(q.quot);
}

ProjPoint normalize_point(const Field& K, const std::vector<felem>& lambda) {
  std::size_t lead = lambda.size();
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] != 0) {
      lead = i;
      break;
    }
  if (lead == lambda.size())
    throw std::invalid_argument("pipoint: cannot normalize zero");
  felem c = K.inv(lambda[lead]);
  ProjPoint out;
  out.coords.resize(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    out.coords[i] = K.mul(lambda[i], c);
  return out;
}

std::vector<ProjPoint> enumerate_proj_points(const Field& K, std::uint32_t r) {
  std::vector<ProjPoint> out;
  for (std::uint32_t lead = 0; lead < r; ++lead) {
    const std::uint32_t tail = r - lead - 1;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < tail; ++i) count *= K.q();
    for (std::uint64_t v = 0; v < count; ++v) {
      ProjPoint pt;
      pt.coords.assign(r, 0);
      pt.coords[lead] = 1;
      std::uint64_t t = v;
      for (std::uint32_t i = 0; i < tail; ++i) {
        pt.coords[lead + 1 + i] = static_cast<felem>(t % K.q());
        t /= K.q();
      }
      out.push_back(std::move(pt));
    }
  }
  return out;
}

std::vector<ProjPoint> supp_pi(const Module& m, const Field& K) {
  std::vector<ProjPoint> out;
  for (const auto& pt : enumerate_proj_points(K, m.group.r)) {
    PiPoint a = pipoint_make(m.group, K, pt.coords);
    if (!thick_member(a, m)) out.push_back(pt);
  }
  return out;
}

namespace {

// General restriction of scalars to a subfield (the spec-level op
// restrict_scalars is the prime-field case). Needs base.n() | m.field.n().
Module restrict_scalars_to(const Module& m, const Field& base) {
  if (m.field.same(base)) return m;
  if (base.n() == 1) return restrict_scalars(m);
  const Field& K = m.field;
  auto embed = base.embedding_into(K);
  const std::uint32_t d = K.n() / base.n();
  const std::uint32_t nk = base.n();

  Field prime = Field::make(K.p(), 1);
  const felem tgen = base.from_digits([&] {
    std::vector<std::uint16_t> dd(nk, 0);
    dd[1] = 1;  // nk >= 2 here
    return dd;
  }());
  auto fp_row = [&](felem kv) {
    Matrix row(prime, 1, K.n());
    auto digits = K.to_digits(kv);
    for (std::uint32_t j = 0; j < K.n(); ++j) row.at(0, j) = digits[j];
    return row;
  };

  // Greedy base-basis of K: scan packed values, keep elements outside
  // the base-span of what was kept so far. An element is independent
  // over base iff its nk multiples e(t^c)*v all extend the F_p-span.
  std::vector<felem> basis;
  Matrix span(prime, 0, K.n());
  for (std::uint32_t v = 0; v < K.q() && basis.size() < d; ++v) {
    Matrix trial = span;
    for (std::uint32_t c = 0; c < nk; ++c)
      trial = vstack(trial, fp_row(K.mul(embed[base.pow(tgen, c)],
                                         static_cast<felem>(v))));
    if (rank(trial) == span.rows + nk) {
      span = std::move(trial);
      basis.push_back(static_cast<felem>(v));
    }
  }
  if (basis.size() != d)
    throw std::logic_error("pipoint: base basis construction failed");
  Matrix coordmat(prime, K.n(), K.n());
  for (std::uint32_t j = 0; j < d; ++j)
    for (std::uint32_t c = 0; c < nk; ++c) {
      felem col = K.mul(embed[base.pow(tgen, c)], basis[j]);
      auto digits = K.to_digits(col);
      for (std::uint32_t i = 0; i < K.n(); ++i)
        coordmat.at(i, j * nk + c) = digits[i];
    }
  Matrix coordinv = inverse(coordmat);
  auto coords = [&](felem v) {
    auto digits = K.to_digits(v);
    std::vector<felem> out(d, 0);
    for (std::uint32_t j = 0; j < d; ++j) {
      std::vector<std::uint16_t> cd(nk, 0);
      for (std::uint32_t c = 0; c < nk; ++c) {
        felem acc = 0;
        for (std::uint32_t i = 0; i < K.n(); ++i)
          acc = prime.add(acc,
                          prime.mul(coordinv.at(j * nk + c, i), digits[i]));
        cd[c] = acc;
      }
      out[j] = base.from_digits(cd);
    }
    return out;
  };

  std::vector<Matrix> acts;
  for (const auto& x : m.actions) {
    Matrix y(base, m.dim * d, m.dim * d);
    for (std::uint32_t i = 0; i < m.dim; ++i)
      for (std::uint32_t j = 0; j < m.dim; ++j) {
        felem a = x.at(i, j);
        if (a == 0) continue;
        for (std::uint32_t bj = 0; bj < d; ++bj) {
          auto cc = coords(K.mul(a, basis[bj]));
          for (std::uint32_t bi = 0; bi < d; ++bi)
            y.at(i * d + bi, j * d + bj) = cc[bi];
        }
      }
    acts.push_back(std::move(y));
  }
  return Module{m.group, base, m.dim * d, std::move(acts),
                "res(" + m.provenance + ")"};
}

}  // namespace

Module point_module(const PiPoint& a, const Field& base) {
  if (base.p() != a.K.p() || a.K.n() % base.n() != 0)
    throw std::invalid_argument("pipoint: base is not a subfield of K");
  Module reg = free_module(a.group, a.K, 1);
  Matrix u(a.K, reg.dim, reg.dim);
  for (std::uint32_t i = 0; i < a.group.r; ++i) {
    if (a.lambda[i] == 0) continue;
    u = mat_add(u, mat_scale(reg.actions[i], a.lambda[i]));
  }
  // Functionals on KE vanishing on u.KE, with (x_i . f)(v) = f(x_i v):
  // as columns, the action is left multiplication by R_i^T.
  Matrix funcs = transpose(kernel_basis(transpose(u)));  // p^r x s columns
  std::vector<Matrix> tacts;
  for (const auto& ract : reg.actions) tacts.push_back(transpose(ract));
  Module mt{a.group, a.K, reg.dim, std::move(tacts), "coreg"};
  Module delta_k = submodule(mt, funcs).sub;
  Module out = restrict_scalars_to(delta_k, base);
  out.provenance = "Delta" + lambda_string(a.K, a.lambda);
  return out;
}

}  // namespace piproj
