#include "tn/errors.hpp"
#include "tn/liecoh.hpp"

#include <json.hpp>

namespace tn {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

Rational entry(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw DomainError("matrix and bracket entries must be integers or \"p/q\" strings, got " + v.dump());
}

int index_field(const json& v, int n, const char* what) {
  if (!v.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
  int i = v.get<int>();
  if (i < 0 || i >= n) throw DomainError(std::string(what) + " " + std::to_string(i) + " out of range 0.." + std::to_string(n - 1));
  return i;
}

Representation rep_from(const json& r, const LieAlgebra& g) {
  if (!r.is_object() || !r.contains("dim") || !r.contains("matrices"))
    throw DomainError("representation needs \"dim\" and \"matrices\"");
  if (!r["dim"].is_number_integer()) throw DomainError("representation \"dim\" must be an integer");
  Representation rho;
  rho.dim = r["dim"].get<int>();
  if (rho.dim < 1) throw DomainError("representation dimension must be positive");
  const json& ms = r["matrices"];
  if (!ms.is_array() || static_cast<int>(ms.size()) != g.dim)
    throw DomainError("representation needs one matrix per basis vector (" + std::to_string(g.dim) + ")");
  for (const auto& m : ms) {
    if (!m.is_array() || static_cast<int>(m.size()) != rho.dim) throw DomainError("matrix has the wrong number of rows");
    QMatrix a(rho.dim, rho.dim);
    for (int i = 0; i < rho.dim; ++i) {
      if (!m[i].is_array() || static_cast<int>(m[i].size()) != rho.dim)
        throw DomainError("matrix row has the wrong length");
      for (int j = 0; j < rho.dim; ++j) a(i, j) = entry(m[i][j]);
    }
    rho.action.push_back(std::move(a));
  }
  return rho;
}

}  // namespace

LieAlgebra parse_lie_algebra(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("dim")) throw DomainError("algebra document needs \"dim\"");
  if (!doc["dim"].is_number_integer()) throw DomainError("\"dim\" must be an integer");
  int n = doc["dim"].get<int>();
  if (n < 1 || n > 16) throw DomainError("algebra dimension must be in 1..16");
  LieAlgebra g(n);
  if (doc.contains("brackets")) {
    for (const auto& b : doc["brackets"]) {
      if (!b.is_array() || b.size() != 3 || !b[2].is_array())
        throw DomainError("each bracket must be [i, j, [c_1, ..., c_n]]");
      int i = index_field(b[0], n, "bracket index");
      int j = index_field(b[1], n, "bracket index");
      if (static_cast<int>(b[2].size()) != n) throw DomainError("bracket coefficient vector must have length " + std::to_string(n));
      std::vector<Rational> v;
      for (const auto& x : b[2]) v.push_back(entry(x));
      if (i == j) {
        for (const auto& x : v)
          if (x != 0) throw DomainError("[x_i, x_i] must vanish");
        continue;
      }
      g.set_bracket(i, j, v);
    }
  }
  return g;
}

bool has_representation(const std::string& text) {
  json doc = parse(text);
  return doc.is_object() && (doc.contains("rep") || doc.contains("matrices"));
}

Representation parse_representation(const std::string& text, const LieAlgebra& g) {
  json doc = parse(text);
  if (doc.is_object() && doc.contains("rep")) return rep_from(doc["rep"], g);
  return rep_from(doc, g);
}

}  // namespace tn
