#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "octacover/ifs.hpp"

namespace octacover {

// Coefficients of outer ∘ inner, exact in coefficient space:
//   a = a1*a2                 b = a1*b2 + b1
//   c = c1*c2                 d = c1*d2 + d1
//   e = e1*a2 + g1*e2 + alpha1*a2*d2
//   f = f1*c2 + g1*f2 + alpha1*b2*c2
//   g = g1*g2
//   alpha = alpha1*a2*c2 + g1*alpha2
//   beta  = e1*b2 + f1*d2 + alpha1*b2*d2 + g1*beta2 + beta1
MapCoefficients compose_pair(const MapCoefficients& outer,
                             const MapCoefficients& inner);

struct ComposeOptions {
  std::size_t cap = 1'000'000;  // max composed maps; SystemTooLarge beyond
  // When true, each composed contraction constant is min(product of factor
  // constants, constant recomputed from the composed coefficients).
  // Default uses the factor product, which is what the radius system needs.
  bool tighten = false;
};

// All (n*m)^order compositions, lexicographic in factor indices with the
// outermost factor most significant.
struct ComposedSystem {
  std::size_t order = 1;       // p
  std::size_t base_count = 0;  // n*m
  std::vector<IfsMap> maps;    // length base_count^order
  ScaledTaxicabMetric metric;  // inherited from the base system
  double scale = 0.0;
  std::size_t n = 0, m = 0;
};

// order = 1 returns the base system unchanged (as a ComposedSystem).
// Throws SystemTooLarge when (n*m)^order exceeds opts.cap.
ComposedSystem compose_system(const IfsSystem& base, std::size_t order,
                              const ComposeOptions& opts = {});

// Factor cells of composed map flat_index, outermost first: the base-N
// digits of flat_index (N = base_count), each rendered as the (k,l) cell
// of that base map.
std::vector<std::pair<std::size_t, std::size_t>> factor_labels(
    const ComposedSystem& sys, std::size_t flat_index);

// Read-only view over either system flavour, for the cover and sampling
// layers.
struct SystemRef {
  std::span<const IfsMap> maps;
  const ScaledTaxicabMetric* metric = nullptr;
  double scale = 0.0;
  std::size_t order = 1;

  SystemRef(const IfsSystem& s)
      : maps(s.maps), metric(&s.metric), scale(s.scale), order(1) {}
  SystemRef(const ComposedSystem& s)
      : maps(s.maps), metric(&s.metric), scale(s.scale), order(s.order) {}
};

}  // namespace octacover
