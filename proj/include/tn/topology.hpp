#pragma once

#include "tn/cad.hpp"

namespace tn {

struct ComponentReport {
  int count = 0;
  std::vector<SamplePoint> representatives;  // one per component
};

/// Cells of a CAD adapted to s that lie in s, in index order.
std::vector<Cell> cells_of(const SemiAlgebraicSet& s, const Config& cfg = {});

/// Components in the usual topology; ambient dimension 1 or 2 only.
ComponentReport connected_components(const SemiAlgebraicSet& s, const Config& cfg = {});

/// Euler characteristic with compact supports: sum of (-1)^dim over the cells of s.
long euler_characteristic_c(const SemiAlgebraicSet& s, const Config& cfg = {});

/// Largest cell dimension in s; -1 for the empty set.
int dimension(const SemiAlgebraicSet& s, const Config& cfg = {});

}  // namespace tn
