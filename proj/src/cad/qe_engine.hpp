#pragma once

#include "tn/cad.hpp"

#include <memory>
#include <optional>
#include <set>

namespace tn {

/// Partial-CAD evaluation of a prenex formula whose variables are renumbered
/// free first (0..f-1), then quantified in prefix order.
class QeEngine {
 public:
  QeEngine(Formula matrix, int free_count, std::vector<bool> exists, const Config& cfg);

  /// Truth of the quantified formula over a free cell (level f); witness gets a full-dimensional true leaf.
  bool truth(int id, int* witness);
  /// For a purely existential sentence: a satisfying point.
  std::optional<SamplePoint> witness();
  /// Quantifier-free formula in variables 0..f-1.
  Formula solution_formula();

 private:
  struct CNode {
    enum Kind { True, False, Atom, And, Or } kind = True;
    int atom = -1;
    std::vector<int> kids;
  };
  struct CompiledAtom {
    FactoredPoly fp;
    Rel rel;
  };

  void build(const std::set<int>& closed);
  int compile(const Formula& f, bool neg);
  int kleene(int cn, int id) const;  // 0 false, 1 true, 2 undetermined

  Formula matrix_;
  int f_, n_ = 0;
  std::vector<bool> exists_;
  Config cfg_;
  std::unique_ptr<CadTree> tree_;
  std::vector<CompiledAtom> atoms_;
  std::vector<CNode> nodes_;
  int root_ = -1;
};

}  // namespace tn
