#pragma once

#include "tn/rational.hpp"

#include <string>
#include <vector>

namespace tn {

/// Dense rational matrix, row-major.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static QMatrix identity(int n);

  Rational& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool is_zero() const;
  bool operator==(const QMatrix&) const = default;
};

QMatrix operator*(const QMatrix& x, const QMatrix& y);
QMatrix operator+(const QMatrix& x, const QMatrix& y);
QMatrix operator-(const QMatrix& x, const QMatrix& y);
QMatrix scaled(const QMatrix& x, const Rational& s);

/// Exact rank by fraction-free elimination.
int rank(const QMatrix& m);
/// Basis of the right null space, one column vector per entry.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

/// [x_i, x_j] = sum_k c(i, j, k) x_k.
struct LieAlgebra {
  int dim = 0;
  std::vector<Rational> c;

  explicit LieAlgebra(int n = 0) : dim(n), c(static_cast<std::size_t>(n) * n * n) {}
  Rational& operator()(int i, int j, int k) { return c[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
  const Rational& operator()(int i, int j, int k) const { return c[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
  /// Sets [x_i, x_j] and [x_j, x_i] together.
  void set_bracket(int i, int j, const std::vector<Rational>& v);

  static LieAlgebra abelian(int n);
  static LieAlgebra sl2();          // basis e, f, h
  static LieAlgebra heisenberg();   // basis x, y, z with [x, y] = z
  static LieAlgebra affine_line();  // basis x, y with [x, y] = y
};

/// rho(x_i) for each basis vector.
struct Representation {
  int dim = 0;
  std::vector<QMatrix> action;

  static Representation trivial(const LieAlgebra& g, int m = 1);
  static Representation adjoint(const LieAlgebra& g);
  /// Irreducible sl2 module of dimension m in the e, f, h basis.
  static Representation sl2_irrep(int m);
};

bool validate_lie_algebra(const LieAlgebra& g);
bool validate_representation(const LieAlgebra& g, const Representation& rho);
bool is_unimodular(const LieAlgebra& g);

struct CochainComplex {
  std::vector<int> spaces;     // dim C^0 .. C^N
  std::vector<QMatrix> diffs;  // diffs[k] : C^k -> C^(k+1), spaces[k+1] x spaces[k]
};

/// Checks D_(k+1) D_k = 0 for every k.
bool is_complex(const CochainComplex& c);

/// Sign of the action term. Standard uses (-1)^(i+1) for the i-th argument
/// (1-based); Verbatim uses (-1)^i, which breaks D^2 = 0 for non-abelian
/// actions and is kept only to demonstrate that.
enum class ActionSign { Standard, Verbatim };

/// C^k = (g*)^k tensor rho; basis: k-subsets of {0..n-1} in lexicographic
/// order, each tensor the standard basis of rho.
CochainComplex ce_complex(const LieAlgebra& g, const Representation& rho, ActionSign sign = ActionSign::Standard);

struct CohomologyReport {
  std::vector<int> spaces;
  std::vector<int> dims;
  int euler_cochains() const;
  int euler_cohomology() const;
};

/// Throws DomainError when D^2 != 0.
CohomologyReport cohomology(const CochainComplex& c);

/// Polynomial forms on R^n of total weight w (degree plus form degree).
CochainComplex polynomial_derham_weight(int n, int w);

struct ShapiroReport {
  std::vector<int> direct, relative;
};

/// H(g, rho) directly and through the stabilizer g itself with the identity
/// identification of the coinduced module. Throws InternalError on mismatch.
ShapiroReport shapiro_degenerate_check(const LieAlgebra& g, const Representation& rho);

struct DualityReport {
  bool unimodular = false;
  bool symmetric = false;  // meaningful only when unimodular
  std::vector<int> dims;
};

/// dim H^k = dim H^(n-k) for trivial coefficients; refuses non-unimodular algebras.
DualityReport poincare_duality_dims(const LieAlgebra& g);

/// Restriction of (g, rho) to the subalgebra spanned by the columns of basis.
/// Throws DomainError when the span is not closed under the bracket.
LieAlgebra subalgebra(const LieAlgebra& g, const QMatrix& basis);
Representation restrict(const Representation& rho, const QMatrix& basis);

/// Semidirect product s + V where s acts on the abelian ideal V through rho.
LieAlgebra semidirect(const LieAlgebra& s, const Representation& rho);

/// {"dim": n, "brackets": [[i, j, [c...]]...], "rep": {"dim": m, "matrices": [...]}};
/// indices are 0-based, entries are numbers or "p/q" strings.
LieAlgebra parse_lie_algebra(const std::string& json_text);
/// Reads "rep" from an algebra document, or a bare {"dim", "matrices"} document.
Representation parse_representation(const std::string& json_text, const LieAlgebra& g);
bool has_representation(const std::string& json_text);

}  // namespace tn
