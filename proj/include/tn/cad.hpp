#pragma once

#include "tn/config.hpp"
#include "tn/formula.hpp"
#include "tn/sample.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace tn {

/// Projection factors by level: levels[k] holds the normalized squarefree
/// polynomials whose main variable is k, in insertion order.
struct ProjectionSet {
  int n = 0;
  std::vector<std::vector<Polynomial>> levels;

  /// Adds the squarefree factors of p (constants are dropped). Returns true if anything was new.
  bool add(const Polynomial& p);
  std::size_t size() const;
};

/// Closes `base` under the chosen projection operator.
ProjectionSet compute_projection(ProjectionSet base, Projection kind);
/// As above; levels in closed_levels are first closed under differentiation in their main variable.
ProjectionSet compute_projection(ProjectionSet base, Projection kind, const std::set<int>& closed_levels);
ProjectionSet compute_projection(const std::vector<Polynomial>& polys, int n, Projection kind);

/// p = constant * prod factor^mult, factors referenced by (level, index) in a ProjectionSet.
struct FactoredPoly {
  Rational constant;
  struct Ref {
    int level, index;
    unsigned mult;
  };
  std::vector<Ref> factors;
  int level = 0;  // number of leading coordinates the sign depends on
};

/// Lazily lifted CAD. Node 0 is the root (R^0); a node at level k is a cell
/// of R^k with 0-based cylindrical index (even = sector, odd = section).
class CadTree {
 public:
  struct Node {
    int parent = -1;
    int level = 0;
    std::vector<int> index;
    SamplePoint sample;
    std::vector<std::int8_t> signs;    // signs of levels[level-1] factors
    std::vector<std::uint8_t> nullified;  // per factor of the next level, once lifted
    std::vector<int> children;
    bool lifted = false;
    int dim() const;
  };

  CadTree(ProjectionSet proj, Projection kind);

  int n() const { return proj_.n; }
  const ProjectionSet& projection() const { return proj_; }
  const Node& node(int id) const { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<int>& children(int id);  // lifts on demand

  int factor_sign(int id, int level, int index) const;
  /// Throws InternalError when a factor of p is missing from the projection set.
  FactoredPoly factor(const Polynomial& p) const;
  /// Requires node level >= f.level.
  int sign(int id, const FactoredPoly& f) const;
  /// Leaves of the fully lifted tree at the given level, in index order.
  std::vector<int> cells_at_level(int level);

 private:
  void lift(int id);
  ProjectionSet proj_;
  Projection kind_;
  std::vector<Node> nodes_;
};

struct Cell {
  std::vector<int> index;
  int dim = 0;
  SamplePoint sample;
  std::vector<int> signs;  // one per input polynomial
};

struct Decomposition {
  int n = 0;
  std::vector<Polynomial> inputs;
  std::vector<Cell> cells;
};

/// Sign-invariant CAD of R^n for the given polynomials.
Decomposition decompose(const std::vector<Polynomial>& polys, int n, const Config& cfg = {});

/// Quantifier-free formula with the same free variables (same indices) and the same truth set.
Formula eliminate_quantifiers(const Formula& f, const Config& cfg = {});
/// Truth value of a formula without free variables.
bool decide(const Formula& sentence, const Config& cfg = {});

SemiAlgebraicSet set_from_formula(const Formula& f, int n, const Config& cfg = {});

bool is_empty(const SemiAlgebraicSet& s, const Config& cfg = {});
/// A point of s, or nullopt when s is empty.
std::optional<SamplePoint> find_point(const SemiAlgebraicSet& s, const Config& cfg = {});
bool contains(const SemiAlgebraicSet& s, std::span<const Rational> point);

SemiAlgebraicSet set_union(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg = {});
SemiAlgebraicSet set_intersect(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg = {});
SemiAlgebraicSet set_complement(const SemiAlgebraicSet& a, const Config& cfg = {});
SemiAlgebraicSet set_difference(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg = {});

bool is_subset(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg = {});
/// Extensional equality: both differences are empty.
bool equivalent(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg = {});

/// Image under the projection onto the first k coordinates.
SemiAlgebraicSet project(const SemiAlgebraicSet& s, int k, const Config& cfg = {});
/// Closure via  A e. e > 0 -> E y. y in S & |x - y|^2 < e.
SemiAlgebraicSet closure(const SemiAlgebraicSet& s, const Config& cfg = {});
Formula closure_formula(const SemiAlgebraicSet& s);

/// graph lives in R^(m+k): domain coordinates 0..m-1, codomain m..m+k-1.
SemiAlgebraicSet image(const SemiAlgebraicSet& s, const Formula& graph, int m, int k, const Config& cfg = {});
SemiAlgebraicSet preimage(const SemiAlgebraicSet& t, const Formula& graph, int m, int k, const Config& cfg = {});

/// Cap checks shared by every entry point.
void check_caps(const Formula& f, int nvars, const Config& cfg);

}  // namespace tn
