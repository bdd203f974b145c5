#pragma once

#include "tn/polynomial.hpp"

#include <utility>
#include <vector>

namespace tn {

/// Exact quotient a / b. Throws InternalError when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);

/// Pseudo-remainder of a by b with respect to var: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial prem(const Polynomial& a, const Polynomial& b, int var);

/// Scales p to integer coefficients with gcd 1 and a positive grlex-leading
/// coefficient. Returns {c, q} with p = c * q; the zero polynomial gives {0, 0}.
std::pair<Rational, Polynomial> integer_primitive(const Polynomial& p);
Polynomial normalized(const Polynomial& p);

/// Content with respect to var: the gcd of the coefficients of p in var.
Polynomial content(const Polynomial& p, int var);
Polynomial primitive_part(const Polynomial& p, int var);

/// Normalized greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct Factorization {
  Rational constant;
  std::vector<std::pair<Polynomial, unsigned>> factors;  // normalized, pairwise distinct
};

/// Squarefree decomposition: p = constant * prod f^m, each f normalized,
/// squarefree and non-constant. Factors are not necessarily irreducible.
Factorization squarefree_factors(const Polynomial& p);

/// Product of the distinct squarefree factors, normalized.
Polynomial squarefree_part(const Polynomial& p);

/// Determinant by fraction-free (Bareiss) elimination.
Polynomial determinant(std::vector<std::vector<Polynomial>> m);

/// Sylvester matrix of p, q in var: deg(q) rows of p above deg(p) rows of q.
std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q, int var);

/// Resultant in var. Throws DomainError when both p and q are constant in var.
Polynomial resultant(const Polynomial& p, const Polynomial& q, int var);

/// j-th principal subresultant coefficient in var, 0 <= j <= min(deg p, deg q).
/// psc_0 is the resultant.
Polynomial psc(const Polynomial& p, const Polynomial& q, int var, unsigned j);

/// Discriminant-like resultant res(p, dp/dvar) without the lc normalization.
Polynomial discriminant(const Polynomial& p, int var);

}  // namespace tn
