#include "tn/config.hpp"
#include "tn/errors.hpp"

namespace tn {

Projection parse_projection(const std::string& name) {
  if (name == "collins") return Projection::Collins;
  if (name == "mccallum") return Projection::McCallum;
  throw DomainError("unknown projection '" + name + "' (expected collins or mccallum)");
}

std::string to_string(Projection p) { return p == Projection::Collins ? "collins" : "mccallum"; }

}  // namespace tn
