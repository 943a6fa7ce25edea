#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "piproj/decompose.hpp"
#include "piproj/module.hpp"

namespace piproj {

/// Basis of Hom_kE(source, target): matrices f with f X_i = Y_i f.
struct HomSpace {
  Module source;
  Module target;
  std::vector<Matrix> basis;  // each dim(target) x dim(source)
};

HomSpace hom_basis(const Module& x, const Module& m);
std::uint32_t hom_dim(const Module& x, const Module& m);

/// Endomorphism ring with structure constants of composition in the
/// chosen basis: coords(basis[i] * basis[j]) = structure[i][j].
struct EndRing {
  Module module;
  std::vector<Matrix> basis;
  std::vector<std::vector<std::vector<felem>>> structure;
  std::vector<felem> identity_coords;
};
EndRing end_ring(const Module& m);

/// Dimension of the maps factoring through a projective, computed from
/// the explicit basis of Hom(X, P(M)) that the symmetric form of kE
/// provides (Hom(X, kE) is canonically the k-dual of X).
std::uint32_t phom_dim(const Module& x, const Module& m);
/// Same value obtained literally by solving for Hom(X, P(M)) and
/// composing with the cover; kept as the independent route for tests.
std::uint32_t phom_dim_literal(const Module& x, const Module& m);
std::uint32_t stable_hom_dim(const Module& x, const Module& m);

std::uint32_t ext_dim(std::uint32_t n, const Module& x, const Module& m);
std::uint32_t tate_ext_dim(int n, const Module& x, const Module& m);

/// dim_k of End(M)/rad End(M) for indecomposable M (the denominator of
/// the endolength formula). Throws std::domain_error when End(M) is not
/// local, which signals a decomposition bug upstream.
std::uint32_t end_simple_dim(const Module& m);

/// A short exact sequence 0 -> X -> Y -> Z -> 0 of kE-modules.
struct ShortExactSeq {
  Module X, Y, Z;
  Matrix inj;   // dim(Y) x dim(X)
  Matrix surj;  // dim(Z) x dim(Y)
};

/// Checks inj injective, surj surjective, im(inj) = ker(surj), both
/// intertwiners; throws std::invalid_argument when violated.
void validate_sequence(const ShortExactSeq& s);

ShortExactSeq split_sequence(const Module& x, const Module& z);

/// Pushout of 0 -> Omega Z -> P(Z) -> Z -> 0 along cls: Omega Z -> M.
/// The middle term has dim(M) + dim(Z); the zero class gives the split
/// sequence up to isomorphism.
ShortExactSeq realize_extension(const Matrix& cls, const Module& omega_z,
                                const Module& z, const Module& m);

/// Memo for syzygy chains and hom dimensions, keyed by fingerprints.
/// Pure data cache: results never depend on what was cached before.
class HomCache {
 public:
  const Module& omega_of(const Module& m, int n);
  std::uint32_t hom_dim(const Module& x, const Module& m);
  std::uint32_t stable_hom_dim(const Module& x, const Module& m);
  std::uint32_t tate_ext_dim(int n, const Module& x, const Module& m);
  const Decomposition& decomposition_of(const Module& m);

 private:
  std::map<std::pair<std::string, int>, Module> omega_;
  std::map<std::pair<std::string, std::string>, std::uint32_t> hom_;
  std::map<std::pair<std::string, std::string>, std::uint32_t> stable_;
  std::map<std::string, Decomposition> decomp_;
};

/// Endolength function chi_M. Evaluation decomposes M once (cached) and
/// sums dim Hom(X, M_i) / e_i over the distinct indecomposable summands;
/// every division must be exact.
struct ChiModule {
  Module m;
  std::vector<Module> distinct_summands;
  std::vector<std::uint32_t> simple_dims;  // e_i per summand
};
ChiModule chi_module(const Module& m);
std::uint64_t chi_module_eval(const ChiModule& chi, const Module& x,
                              HomCache* cache = nullptr);

struct BcrReport {
  bool triggered = false;                        // some r_gap-run of zeros
  std::vector<int> violations;                   // nonzero degrees if triggered
  std::vector<std::pair<int, std::uint32_t>> dims;  // (n, tExt dim) over window
};

/// Empirical falsifier for the gap theorem: if tExt vanishes on r_gap
/// consecutive degrees inside the window, it must vanish on the whole
/// window.
BcrReport bcr_gap_check(const Module& x, const Module& m, std::uint32_t r_gap,
                        int window_lo, int window_hi,
                        HomCache* cache = nullptr);

}  // namespace piproj
