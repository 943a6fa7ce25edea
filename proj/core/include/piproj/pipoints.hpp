#pragma once

#include <cstdint>
#include <vector>

#include "piproj/module.hpp"

namespace piproj {

/// A linear pi-point of E = (Z/p)^r over an extension K: the flat map
/// K[t]/(t^p) -> KE sending t to u = sum lambda_i x_i, lambda != 0.
struct PiPoint {
  GroupDesc group;
  Field K;
  std::vector<felem> lambda;  // length r, entries of K, not all zero
};

PiPoint pipoint_make(GroupDesc group, Field K, std::vector<felem> lambda);

/// Jordan type of a p-nilpotent operator: blocks[i-1] counts the blocks
/// of size i, for i = 1..p.
struct JordanType {
  std::vector<std::uint32_t> blocks;

  std::uint32_t total_dim() const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      d += blocks[i] * static_cast<std::uint32_t>(i + 1);
    return d;
  }
  std::uint32_t block_count() const {
    std::uint32_t c = 0;
    for (auto b : blocks) c += b;
    return c;
  }
  bool all_full() const {  // projective over K[t]/(t^p)
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
      if (blocks[i] != 0) return false;
    return true;
  }
};

struct RestrictResult {
  Matrix op;  // u acting on M ⊗ K
  JordanType jordan;
};

/// Restriction along the pi-point (base change to K applied internally;
/// the module may live over any subfield of K, including K itself).
RestrictResult restrict_along(const PiPoint& a, const Module& m);

bool thick_member(const PiPoint& a, const Module& m);

/// chi_alpha(M) = number of Jordan blocks of the restriction; computed
/// both as dim - rank(u) and as the block-count of the Jordan type and
/// cross-checked.
std::uint64_t chi_pipoint_eval(const PiPoint& a, const Module& m);

/// The K-module KE/(u.KE): dimension p^(r-1), with pi-point support
/// exactly { [lambda] }.
Module witness_module(const PiPoint& a);

/// Normalized point of P^(r-1)(K): first nonzero coordinate scaled to 1.
struct ProjPoint {
  std::vector<felem> coords;

  bool operator==(const ProjPoint& o) const { return coords == o.coords; }
  bool operator<(const ProjPoint& o) const { return coords < o.coords; }
};

ProjPoint normalize_point(const Field& K, const std::vector<felem>& lambda);

/// All (q^r - 1)/(q - 1) normalized points, in canonical order (by
/// position of the leading 1, then packed coordinate values).
std::vector<ProjPoint> enumerate_proj_points(const Field& K, std::uint32_t r);

/// Rank-variety support: the points [lambda] whose restriction of M ⊗ K
/// is not projective. Sorted canonically.
std::vector<ProjPoint> supp_pi(const Module& m, const Field& K);

/// Point module Delta(alpha) = res^K_k Hom_{K[t]/(t^p)}(KE, K), as a
/// module over the base field.
Module point_module(const PiPoint& a, const Field& base);

}  // namespace piproj
