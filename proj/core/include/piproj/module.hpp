#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "piproj/matrix.hpp"

namespace piproj {

/// Elementary abelian p-group E = (Z/p)^r; its group algebra kE is
/// k[x_1..x_r]/(x_i^p) with x_i = g_i - 1.
struct GroupDesc {
  std::uint32_t p = 2;
  std::uint32_t r = 1;

  bool operator==(const GroupDesc& o) const { return p == o.p && r == o.r; }
  std::uint32_t algebra_dim() const {
    std::uint32_t d = 1;
    for (std::uint32_t i = 0; i < r; ++i) d *= p;
    return d;
  }
};

/// A finite dimensional kE-module: the actions are the matrices of the
/// nilpotent generators x_i. Invariants: X_i^p = 0 and X_i X_j = X_j X_i.
/// Elements are column vectors; x_i sends v to X_i v.
struct Module {
  GroupDesc group;
  Field field;
  std::uint32_t dim = 0;
  std::vector<Matrix> actions;
  std::string provenance;

  /// Canonical structural key (provenance excluded): two modules with the
  /// same fingerprint have identical presentations.
  std::string fingerprint() const;
};

Module module_make(GroupDesc group, Field field, std::uint32_t dim,
                   std::vector<Matrix> actions, std::string provenance = "");

Module zero_module(GroupDesc group, const Field& field);
Module trivial_module(GroupDesc group, const Field& field);  // k
Module free_module(GroupDesc group, const Field& field, std::uint32_t rank);

/// Monomial basis bookkeeping for free modules: basis element
/// (copy j, exponent vector e) sits at index j*p^r + sum e_i p^(i-1).
std::uint32_t monomial_index(const GroupDesc& g,
                             const std::vector<std::uint32_t>& exps);

/// Matrix of the monomial x^e acting on M.
Matrix monomial_action(const Module& m, const std::vector<std::uint32_t>& exps);

Module direct_sum_mod(const Module& a, const Module& b);

/// Diagonal tensor product: x_i acts as X⊗I + I⊗Y + X⊗Y.
Module tensor(const Module& a, const Module& b);

/// k-linear dual; x_i acts as ((I+X_i)^{-1} - I)^T. dual(dual(M)) == M
/// on the nose with this convention.
Module dual(const Module& m);

/// Same matrices with entries embedded into the extension field K.
Module base_change(const Module& m, const Field& K);

/// View a GF(p^n)-module as a GF(p)-module of dimension n*dim.
Module restrict_scalars(const Module& m);

struct SubmoduleResult {
  Module sub;
  Matrix inclusion;  // dim(M) x dim(sub), columns are the basis
};
struct QuotientResult {
  Module quot;
  Matrix projection;  // dim(quot) x dim(M)
};

/// Substructure on the column span of `colbasis` (must be action-stable
/// and have independent columns).
SubmoduleResult submodule(const Module& m, const Matrix& colbasis);
QuotientResult quotient(const Module& m, const Matrix& colbasis);

/// Close the span of the given columns under the generator actions.
Matrix spin(const Module& m, const Matrix& generators);

Matrix radical_basis(const Module& m);  // columns span rad M = sum im X_i
Matrix socle_basis(const Module& m);    // columns span soc M = cap ker X_i
std::uint32_t top_dim(const Module& m);

struct CoverResult {
  Module cover_module;  // free of rank top(M)
  Matrix cover;         // dim(M) x dim(P), surjective, kernel in rad P
};
CoverResult projective_cover(const Module& m);

/// n-fold syzygy. n > 0 iterates kernels of minimal projective covers,
/// n < 0 uses duality (Omega^{-1} = D Omega D), n = 0 returns the
/// projective-free part. The result never has free summands.
Module omega(const Module& m, int n);

struct ProjectiveFreeResult {
  Module core;
  std::uint32_t free_rank;
};
ProjectiveFreeResult projective_free_part(const Module& m);

bool is_projective(const Module& m);

/// Cheap isomorphism invariants (dims of radical/socle chains, Jordan
/// data of the generators and a few fixed combinations). Equal strings
/// are necessary for isomorphism, not sufficient.
std::string invariant_key(const Module& m);

}  // namespace piproj
