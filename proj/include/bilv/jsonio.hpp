#pragma once

#include <map>
#include <string>
#include <utility>

#include "json.hpp"

#include "bilv/poly.hpp"

namespace bilv {

// Poly wire format: array of {"coeff": "p/q", "exps": {name: exp}} in
// canonical (leading-first) order.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

struct BFile {
  int k = 0;
  // Canonical admissible pairs (i < j) to values; omitted pairs are zero.
  std::map<std::pair<int, int>, Rational> params;
};

// {"k": K, "params": {"b_1_3": "1/2", ...}}; keys must be admissible for k.
BFile bfile_from_json(const nlohmann::json& j);
BFile bfile_load(const std::string& path);

}  // namespace bilv
