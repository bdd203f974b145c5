#pragma once

#include "tn/cad.hpp"
#include "tn/errors.hpp"

#include <string>

namespace tn {

/// Graph of f: R^domain_dim -> R^codomain_dim, domain coordinates first.
struct MapSpec {
  int domain_dim = 0;
  int codomain_dim = 0;
  SemiAlgebraicSet graph;  // in R^(domain_dim + codomain_dim)
};

/// Section s: codomain -> domain, given by its graph in the MapSpec coordinate order.
struct SectionResult {
  SemiAlgebraicSet graph;
  std::vector<std::string> trace;
};

/// Raised when some base point has an empty fibre.
class NotSurjective : public DomainError {
 public:
  NotSurjective(const std::string& what, SamplePoint witness) : DomainError(what), witness_(std::move(witness)) {}
  const SamplePoint& witness() const { return witness_; }

 private:
  SamplePoint witness_;
};

/// The relation (2u-1)^2 (1+t^2) = t^2, (2u-1) t >= 0, 0 < u < 1 between t in R and u in (0,1).
Formula stereographic_relation(int u, int t);
/// Replaces coordinate var (ranging over R) by its image in (0,1).
SemiAlgebraicSet stereographic_embed(const SemiAlgebraicSet& s, int var, const Config& cfg = {});
/// Inverse of stereographic_embed.
SemiAlgebraicSet stereographic_pullback(const SemiAlgebraicSet& s, int var, const Config& cfg = {});

/// Min-of-closure / interval-centre section of the projection forgetting
/// coordinate 0, for a set whose coordinate 0 lies in [0,1].
SectionResult section_case1(const SemiAlgebraicSet& g, const Config& cfg = {});

/// Section of f over base_region (a subset of the codomain).
SectionResult synthesize_section(const MapSpec& m, const SemiAlgebraicSet& base_region, const Config& cfg = {});

struct SectionCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// At each codomain point y: exactly one domain point x with (x, y) in s, and (x, y) in the graph of m.
SectionCheck verify_section(const MapSpec& m, const SemiAlgebraicSet& section_graph,
                            const std::vector<std::vector<Rational>>& samples, const Config& cfg = {});

/// No base point has two distinct fibre points (decided by QE).
bool is_functional(const SemiAlgebraicSet& graph, int domain_dim, int codomain_dim, const Config& cfg = {});

/// Projection of a set onto its last k coordinates.
SemiAlgebraicSet project_last(const SemiAlgebraicSet& s, int k, const Config& cfg = {});

struct Stratum {
  SemiAlgebraicSet set;  // in R^domain_dim
  int dim = 0;
  SamplePoint sample;
  std::vector<std::vector<int>> branches;  // cylindrical indices of the graph cells over the stratum
};

/// Domain cells of a CAD adapted to the graph, each described by the signs of
/// derivative-closed projection factors.
std::vector<Stratum> stratify_map(const MapSpec& m, const Config& cfg = {});

/// True when each branch over the stratum is a section cell in every codomain coordinate.
bool single_branch(const Stratum& s, int domain_dim);

}  // namespace tn
