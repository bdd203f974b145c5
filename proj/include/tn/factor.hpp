#pragma once

#include "tn/upoly.hpp"

#include <vector>

namespace tn {

/// Distinct irreducible factors over Q of a nonzero polynomial, each with
/// coprime integer coefficients and positive leading coefficient, sorted by
/// degree then coefficients. Constants yield no factors.
std::vector<UPoly> irreducible_factors(const UPoly& p);

}  // namespace tn
