#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "piproj/module.hpp"

namespace piproj {

/// Krull-Schmidt decomposition: pairwise non-isomorphic indecomposable
/// summands with multiplicities, canonically ordered by (dim, invariant
/// key, serialized entries).
struct Decomposition {
  std::vector<std::pair<Module, std::uint32_t>> summands;

  std::uint32_t total_dim() const {
    std::uint32_t d = 0;
    for (const auto& [m, mult] : summands) d += m.dim * mult;
    return d;
  }
};

/// Splits M into indecomposables. Indecomposability is certified through
/// the endomorphism ring (End local <=> no splitting), so the result does
/// not depend on the luck of the seeded search; the seed only drives the
/// hunt for splitting endomorphisms and equal-degree polynomial splitting.
Decomposition decompose(const Module& m, std::uint64_t seed);

bool is_isomorphic(const Module& a, const Module& b);

/// Isomorphism test for modules known to be indecomposable (complete:
/// uses the unit-pairing criterion in the local endomorphism ring).
bool indecomposable_isomorphic(const Module& a, const Module& b);

/// Deterministic pseudo-random module: syzygy shifts, tensor products,
/// duals and random quotients of small free modules, with the recipe
/// recorded in the provenance string. dim lands in [dim_min, dim_max].
Module random_module(std::uint64_t seed, GroupDesc group, const Field& field,
                     std::uint32_t dim_min, std::uint32_t dim_max);

}  // namespace piproj
