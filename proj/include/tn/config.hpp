#pragma once

#include <cstddef>
#include <string>

namespace tn {

enum class Projection { Collins, McCallum };

struct Config {
  int max_vars = 3;
  int max_degree = 6;
  std::size_t max_dnf = 4096;
  Projection projection = Projection::Collins;
};

Projection parse_projection(const std::string& name);  // "collins" | "mccallum"
std::string to_string(Projection p);

}  // namespace tn
