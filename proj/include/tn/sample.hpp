#pragma once

#include "tn/algebraic.hpp"

#include <span>
#include <vector>

namespace tn {

using SamplePoint = std::vector<AlgebraicNumber>;

struct Interval {
  Rational lo, hi;
};

/// Encloses p over the box; coordinate i ranges over boxes[i].
Interval eval_interval(const Polynomial& p, std::span<const Interval> boxes);

/// Substitutes the rational coordinates of pt into p.
Polynomial substitute_rationals(const Polynomial& p, std::span<const AlgebraicNumber> pt);

/// Exact sign of p at pt; p may only involve variables below pt.size().
int sign_at_point(const Polynomial& p, std::span<const AlgebraicNumber> pt);

/// Sign of p at pt when p(pt) is known to be nonzero; skips the zero test.
int sign_nonzero_at_point(const Polynomial& p, std::span<const AlgebraicNumber> pt);

/// Real roots of y -> p(pt, y) where y = pt.size() is the main variable of
/// p, increasing. Sets nullified when p(pt, y) vanishes identically.
std::vector<AlgebraicNumber> roots_over(const Polynomial& p, std::span<const AlgebraicNumber> pt, bool& nullified);

}  // namespace tn
