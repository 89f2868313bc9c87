#pragma once

#include "qeala/gram.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qeala {

using nlohmann::json;

/// Invalid configuration or malformed JSON input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [{"q": int, "mu": int, "re": "p/q", "im": "p/q"}, ...]
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// [{"m": int, "n": int, "coeff": Scalar}, ...]
json to_json(const TorusElement& a);
TorusElement torus_from_json(const json& j);

/// [{"monomial": [[m, n, e], ...], "coeff": Scalar}, ...]
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// {"kind": "identity"} | {"kind": "constant", "a", "c", "d"} |
/// {"kind": "table", "entries": [{"m", "n", "a", "c", "d"}, ...]}.
/// Entries are Gaussian-rational strings ("2", "1/2", "1+i") or integers.
json to_json(const XFamily& X);
XFamily xfamily_from_json(const json& j);

/// [[m, n], ...]
json to_json(const LevelBasisElement& h);
LevelBasisElement basis_element_from_json(const json& j);

/// {"basis": [...], "entries": [[Scalar, ...], ...]}
json to_json(const GramMatrix& G);
GramMatrix gram_from_json(const json& j);

json to_json(const QValue& q);
QValue qvalue_from_json(const json& j);

json to_json(const BasisBox& box);
BasisBox basis_box_from_json(const json& j);

struct RunConfig {
  XFamily x_family;
  NumericSpec numeric;
  BasisBox box;
  int samples = 20;
  std::uint64_t seed = 0;
  std::string output_path;

  /// Throws ConfigError when samples < 1 or the box is invalid.
  void validate() const;
};

/// Missing keys keep their defaults. Throws ConfigError on bad values.
RunConfig run_config_from_json(const json& j);
json to_json(const RunConfig& c);

}  // namespace qeala
