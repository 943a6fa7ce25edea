#include "local_algebra.hpp"

#include <random>
#include <stdexcept>

namespace piproj {
namespace detail {

namespace {

// Row space with membership and reduction against a reduced echelon form.
class RowSpace {
 public:
  RowSpace(Field f, std::uint32_t width)
      : field_(std::move(f)), width_(width), rows_(field_, 0, width) {}

  std::uint32_t dim() const { return rows_.rows; }
  const Matrix& rows() const { return rows_; }

  // Reduce v against the echelon rows in place; returns true if v was in
  // the span (i.e. reduced to zero).
  bool reduce(std::vector<felem>& v) const {
    for (std::uint32_t i = 0; i < rows_.rows; ++i) {
      felem c = v[pivots_[i]];
      if (c == 0) continue;
      field_.row_axpy(v.data(), &rows_.e[std::size_t(i) * width_],
                      field_.neg(c), width_);
    }
    for (auto x : v)
      if (x != 0) return false;
    return true;
  }

  // Insert v (destructively); returns true if the dimension grew.
  bool insert(std::vector<felem> v) {
    for (std::uint32_t i = 0; i < rows_.rows; ++i) {
      felem c = v[pivots_[i]];
      if (c == 0) continue;
      field_.row_axpy(v.data(), &rows_.e[std::size_t(i) * width_],
                      field_.neg(c), width_);
    }
    std::uint32_t lead = width_;
    for (std::uint32_t j = 0; j < width_; ++j)
      if (v[j] != 0) {
        lead = j;
        break;
      }
    if (lead == width_) return false;
    field_.row_scale(v.data(), field_.inv(v[lead]), width_);
    // Back-substitute into existing rows to stay fully reduced.
    for (std::uint32_t i = 0; i < rows_.rows; ++i) {
      felem c = rows_.at(i, lead);
      if (c == 0) continue;
      field_.row_axpy(&rows_.e[std::size_t(i) * width_], v.data(),
                      field_.neg(c), width_);
    }
    Matrix grown(field_, rows_.rows + 1, width_);
    std::copy(rows_.e.begin(), rows_.e.end(), grown.e.begin());
    std::copy(v.begin(), v.end(), grown.e.begin() + rows_.e.size());
    rows_ = std::move(grown);
    pivots_.push_back(lead);
    return true;
  }

  std::vector<std::vector<felem>> row_vectors() const {
    std::vector<std::vector<felem>> out;
    for (std::uint32_t i = 0; i < rows_.rows; ++i)
      out.emplace_back(rows_.e.begin() + std::size_t(i) * width_,
                       rows_.e.begin() + std::size_t(i + 1) * width_);
    return out;
  }

 private:
  Field field_;
  std::uint32_t width_;
  Matrix rows_;
  std::vector<std::uint32_t> pivots_;
};

}  // namespace

AlgebraStructure algebra_structure(const Field& F,
                                   const std::vector<Matrix>& basis) {
  const std::uint32_t h = static_cast<std::uint32_t>(basis.size());
  if (h == 0) throw std::invalid_argument("algebra: empty basis");
  const std::uint32_t n = basis[0].rows;
  const std::uint32_t D = n * n;

  Matrix bt(F, D, h);
  for (std::uint32_t j = 0; j < h; ++j)
    for (std::uint32_t k = 0; k < D; ++k) bt.at(k, j) = basis[j].e[k];

  AlgebraStructure alg{F, h, {}, {}};
  alg.sc.assign(h, std::vector<std::vector<felem>>(h));

  // Express product columns as basis coordinates in chunks: one rref per
  // chunk of the augmented system [B | products | id].
  std::vector<std::pair<int, int>> jobs;  // (i, j) pairs; (-1,-1) = identity
  for (std::uint32_t i = 0; i < h; ++i)
    for (std::uint32_t j = 0; j < h; ++j) jobs.emplace_back(i, j);
  jobs.emplace_back(-1, -1);

  const std::size_t chunk = 1024;
  for (std::size_t start = 0; start < jobs.size(); start += chunk) {
    std::size_t count = std::min(chunk, jobs.size() - start);
    Matrix aug(F, D, h + static_cast<std::uint32_t>(count));
    for (std::uint32_t k = 0; k < D; ++k)
      for (std::uint32_t j = 0; j < h; ++j) aug.at(k, j) = bt.at(k, j);
    for (std::size_t c = 0; c < count; ++c) {
      auto [i, j] = jobs[start + c];
      Matrix prod = (i < 0) ? Matrix::identity(F, n)
                            : mat_mul(basis[i], basis[j]);
      for (std::uint32_t k = 0; k < D; ++k)
        aug.at(k, h + static_cast<std::uint32_t>(c)) = prod.e[k];
    }
    RrefResult r = rref(aug);
    if (r.rank != h)
      throw std::invalid_argument("algebra: basis not independent");
    for (std::uint32_t j = 0; j < h; ++j)
      if (r.pivots[j] != j)
        throw std::invalid_argument("algebra: not closed under composition");
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<felem> coords(h);
      for (std::uint32_t j = 0; j < h; ++j)
        coords[j] = r.R.at(j, h + static_cast<std::uint32_t>(c));
      auto [i, jj] = jobs[start + c];
      if (i < 0)
        alg.id_coords = std::move(coords);
      else
        alg.sc[i][jj] = std::move(coords);
    }
  }
  return alg;
}

std::vector<felem> sc_mul(const AlgebraStructure& alg,
                          const std::vector<felem>& u,
                          const std::vector<felem>& v) {
  const Field& F = alg.field;
  std::vector<felem> out(alg.h, 0);
  for (std::uint32_t i = 0; i < alg.h; ++i) {
    if (u[i] == 0) continue;
    for (std::uint32_t j = 0; j < alg.h; ++j) {
      if (v[j] == 0) continue;
      felem c = F.mul(u[i], v[j]);
      F.row_axpy(out.data(), alg.sc[i][j].data(), c, alg.h);
    }
  }
  return out;
}

namespace {

// Quotient of the coordinate space k^h by the span of `ideal_rows`,
// with multiplication induced from alg. Gives a basis of complement
// coordinates and reduced structure constants.
struct QuotientAlg {
  std::vector<std::uint32_t> comp;  // complement coordinate positions
  std::vector<std::vector<std::vector<felem>>> sc;
  std::vector<felem> id_coords;
  RowSpace* span = nullptr;  // span of the ideal (for reduction)
};

std::vector<felem> project(const RowSpace& span,
                           const std::vector<std::uint32_t>& comp,
                           std::vector<felem> v) {
  span.reduce(v);  // ignore return; the remainder is the coset rep
  std::vector<felem> out(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i) out[i] = v[comp[i]];
  return out;
}

std::vector<felem> unproject(std::uint32_t h,
                             const std::vector<std::uint32_t>& comp,
                             const std::vector<felem>& v) {
  std::vector<felem> out(h, 0);
  for (std::size_t i = 0; i < comp.size(); ++i) out[comp[i]] = v[i];
  return out;
}

// Reduction leaves exactly the non-pivot coordinates free, so the
// complement positions are the non-pivot columns of the span.
std::vector<std::uint32_t> complement_coords(const RowSpace& span,
                                             std::uint32_t h) {
  std::vector<bool> leading(h, false);
  const Matrix& rows = span.rows();
  for (std::uint32_t i = 0; i < rows.rows; ++i)
    for (std::uint32_t j = 0; j < h; ++j)
      if (rows.at(i, j) != 0) {
        leading[j] = true;
        break;
      }
  std::vector<std::uint32_t> comp;
  for (std::uint32_t j = 0; j < h; ++j)
    if (!leading[j]) comp.push_back(j);
  return comp;
}

Poly coords_minpoly(const Field& F, const AlgebraStructure& alg,
                    const RowSpace& ideal,
                    const std::vector<std::uint32_t>& comp,
                    const std::vector<felem>& g_full,
                    const std::vector<felem>& id_full) {
  // Minimal polynomial of g acting in the quotient algebra: find the
  // first linear dependence among the projections of 1, g, g^2, ...
  const std::uint32_t e = static_cast<std::uint32_t>(comp.size());
  std::vector<felem> cur = id_full;
  Matrix hist(F, 0, e);
  for (std::uint32_t d = 0;; ++d) {
    auto proj = project(ideal, comp, cur);
    auto sol = solve(transpose(hist), proj);
    if (sol) {
      Poly m(d + 1, 0);
      for (std::uint32_t i = 0; i < d; ++i) m[i] = F.neg((*sol)[i]);
      m[d] = 1;
      return m;
    }
    Matrix grown(F, hist.rows + 1, e);
    std::copy(hist.e.begin(), hist.e.end(), grown.e.begin());
    std::copy(proj.begin(), proj.end(), grown.e.begin() + hist.e.size());
    hist = std::move(grown);
    cur = sc_mul(alg, cur, g_full);
    if (d > e + 1) throw std::logic_error("algebra: minpoly runaway");
  }
}

}  // namespace

LocalCheck local_certificate(const AlgebraStructure& alg, std::uint64_t seed) {
  const Field& F = alg.field;
  const std::uint32_t h = alg.h;
  LocalCheck out;

  // Commutator ideal closure.
  RowSpace comm(F, h);
  for (std::uint32_t i = 0; i < h; ++i)
    for (std::uint32_t j = i + 1; j < h; ++j) {
      std::vector<felem> v(h);
      for (std::uint32_t k = 0; k < h; ++k)
        v[k] = F.sub(alg.sc[i][j][k], alg.sc[j][i][k]);
      comm.insert(std::move(v));
    }
  auto unit = [&](std::uint32_t i) {
    std::vector<felem> v(h, 0);
    v[i] = 1;
    return v;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    auto cur = comm.row_vectors();
    for (const auto& v : cur)
      for (std::uint32_t i = 0; i < h; ++i) {
        if (comm.insert(sc_mul(alg, unit(i), v))) grew = true;
        if (comm.insert(sc_mul(alg, v, unit(i)))) grew = true;
      }
  }

  // Quotient by the commutator ideal is commutative; its radical is the
  // kernel of a high p-power map, which is F_p-linear.
  auto comp = complement_coords(comm, h);
  const std::uint32_t hq = static_cast<std::uint32_t>(comp.size());
  if (hq == 0) return out;  // 1 in commutator ideal: not local

  const std::uint32_t p = F.p();
  const std::uint32_t nk = F.n();
  std::uint32_t s = 0;
  {
    std::uint64_t bound = std::uint64_t(hq) * nk + 1, pw = 1;
    while (pw < bound) {
      pw *= p;
      ++s;
    }
  }
  Field prime = Field::make(p, 1);
  // F_p-basis of the quotient: (comp coordinate i, digit c).
  const std::uint32_t Dfp = hq * nk;
  Matrix fp_map(prime, Dfp, Dfp);
  felem tgen = nk == 1 ? 1 : F.from_digits([&] {
    std::vector<std::uint16_t> d(nk, 0);
    d[1] = 1;
    return d;
  }());
  for (std::uint32_t bi = 0; bi < hq; ++bi)
    for (std::uint32_t c = 0; c < nk; ++c) {
      std::vector<felem> x(h, 0);
      x[comp[bi]] = nk == 1 ? 1 : F.pow(tgen, c);
      // x^(p^s) by s successive p-th powers.
      std::vector<felem> y = x;
      for (std::uint32_t step = 0; step < s; ++step) {
        std::vector<felem> acc = y;
        for (std::uint32_t m = 1; m < p; ++m) acc = sc_mul(alg, acc, y);
        y = std::move(acc);
      }
      auto proj = project(comm, comp, y);
      for (std::uint32_t bj = 0; bj < hq; ++bj) {
        auto digits = F.to_digits(proj[bj]);
        for (std::uint32_t d = 0; d < nk; ++d)
          fp_map.at(bj * nk + d, bi * nk + c) = digits[d];
      }
    }
  Matrix fp_kernel = kernel_basis(fp_map);

  // Lift the F_p kernel back to k-coordinates and take the k-span.
  RowSpace radq(F, h);
  for (std::uint32_t i = 0; i < fp_kernel.rows; ++i) {
    std::vector<felem> v(h, 0);
    for (std::uint32_t bi = 0; bi < hq; ++bi) {
      felem acc = 0;
      for (std::uint32_t c = 0; c < nk; ++c) {
        felem digit = fp_kernel.at(i, bi * nk + c);
        if (digit == 0) continue;
        felem scaled = nk == 1 ? digit : F.mul(digit, F.pow(tgen, c));
        acc = F.add(acc, scaled);
      }
      v[comp[bi]] = acc;
    }
    radq.insert(std::move(v));
  }
  if (radq.dim() * nk != fp_kernel.rows) return out;  // not a k-subspace

  // Radical candidate: commutator ideal + lifted quotient radical.
  RowSpace rad(F, h);
  for (auto& v : comm.row_vectors()) rad.insert(std::move(v));
  for (auto& v : radq.row_vectors()) rad.insert(std::move(v));

  // (a) two-sided ideal.
  for (const auto& v : rad.row_vectors())
    for (std::uint32_t i = 0; i < h; ++i) {
      auto lv = sc_mul(alg, unit(i), v);
      auto rv = sc_mul(alg, v, unit(i));
      if (!rad.reduce(lv) || !rad.reduce(rv)) return out;
    }

  // (b) nilpotent: power spans must hit zero.
  auto rad_basis = rad.row_vectors();
  std::vector<std::vector<felem>> cur = rad_basis;
  for (std::uint32_t step = 0; step <= h; ++step) {
    if (cur.empty()) break;
    RowSpace next(F, h);
    for (const auto& aa : cur)
      for (const auto& bb : rad_basis) next.insert(sc_mul(alg, aa, bb));
    cur = next.row_vectors();
    if (step == h && !cur.empty()) return out;  // chain failed to die
  }

  // (c) quotient must be a field: commutative with a generator whose
  // minimal polynomial is irreducible of full degree.
  auto fcomp = complement_coords(rad, h);
  const std::uint32_t e = static_cast<std::uint32_t>(fcomp.size());
  if (e == 0) return out;
  if (alg.id_coords.empty()) return out;
  {
    auto idr = alg.id_coords;
    if (rad.reduce(idr)) return out;  // identity in the candidate: junk
  }
  // Commutativity of the quotient.
  auto quot_unit = [&](std::uint32_t i) {
    std::vector<felem> u(e, 0);
    u[i] = 1;
    return unproject(h, fcomp, u);
  };
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = i + 1; j < e; ++j) {
      auto a = quot_unit(i);
      auto b = quot_unit(j);
      auto ab = sc_mul(alg, a, b);
      auto ba = sc_mul(alg, b, a);
      std::vector<felem> diff(h);
      for (std::uint32_t k = 0; k < h; ++k) diff[k] = F.sub(ab[k], ba[k]);
      if (!rad.reduce(diff)) return out;
    }
  out.quotient_commutative = true;

  // Generator hunt: basis elements, pairwise sums, then seeded draws.
  std::vector<std::vector<felem>> candidates;
  for (std::uint32_t i = 0; i < e; ++i) candidates.push_back(quot_unit(i));
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = i + 1; j < e && candidates.size() < 200; ++j) {
      std::vector<felem> u(h);
      for (std::uint32_t k = 0; k < h; ++k)
        u[k] = F.add(candidates[i][k], candidates[j][k]);
      candidates.push_back(std::move(u));
    }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 500; ++t) {
    std::vector<felem> u(h, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      felem c = static_cast<felem>(rng() % F.q());
      if (c == 0) continue;
      auto b = quot_unit(i);
      F.row_axpy(u.data(), b.data(), c, h);
    }
    candidates.push_back(std::move(u));
  }
  for (const auto& g : candidates) {
    Poly m = coords_minpoly(F, alg, rad, fcomp, g, alg.id_coords);
    if (poly::deg(m) != static_cast<int>(e)) continue;
    auto facs = poly::factor(F, m, seed ^ 0x9e3779b97f4a7c15ULL);
    if (facs.size() == 1 && facs[0].second == 1) {
      out.local = true;
      out.e = e;
      out.rad_rows = rad.row_vectors();
      return out;
    }
  }
  return out;  // no generator found: not a field quotient
}

Poly matrix_minpoly(const Matrix& a) {
  const Field& F = a.field;
  const std::uint32_t n = a.rows;
  if (n == 0) return poly::constant(1);
  Poly m = poly::constant(1);
  RowSpace seen(F, n);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<felem> e0(n, 0);
    e0[s] = 1;
    {
      auto probe = e0;
      if (seen.reduce(probe)) continue;  // annihilator already accounted
    }
    // Krylov chain from e_s.
    Matrix hist(F, 0, n);
    std::vector<felem> cur = e0;
    Poly mv;
    for (std::uint32_t d = 0;; ++d) {
      auto sol = solve(transpose(hist), cur);
      if (sol) {
        mv.assign(d + 1, 0);
        for (std::uint32_t i = 0; i < d; ++i) mv[i] = F.neg((*sol)[i]);
        mv[d] = 1;
        break;
      }
      Matrix grown(F, hist.rows + 1, n);
      std::copy(hist.e.begin(), hist.e.end(), grown.e.begin());
      std::copy(cur.begin(), cur.end(), grown.e.begin() + hist.e.size());
      hist = std::move(grown);
      // advance cur = A * cur
      std::vector<felem> next(n, 0);
      for (std::uint32_t i = 0; i < n; ++i) {
        if (cur[i] == 0) continue;
        for (std::uint32_t rrow = 0; rrow < n; ++rrow)
          next[rrow] = F.add(next[rrow], F.mul(a.at(rrow, i), cur[i]));
      }
      cur = std::move(next);
      if (d > n) throw std::logic_error("matrix: minpoly runaway");
    }
    for (std::uint32_t i = 0; i < hist.rows; ++i) {
      std::vector<felem> row(hist.e.begin() + std::size_t(i) * n,
                             hist.e.begin() + std::size_t(i + 1) * n);
      seen.insert(std::move(row));
    }
    // m = lcm(m, mv)
    Poly g = poly::gcd(F, m, mv);
    m = poly::divmod(F, poly::mul(F, m, mv), g).first;
    m = poly::monic(F, m);
    if (poly::deg(m) == static_cast<int>(n)) break;
  }
  return m;
}

}  // namespace detail
}  // namespace piproj
