#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dsym/dsym.hpp"
#include "dsym/fqsym.hpp"
#include "dsym/kcode.hpp"
#include "dsym/perm.hpp"
#include "dsym/series.hpp"
#include "dsym/stats.hpp"

namespace dsym {

using json = nlohmann::json;

/// Accepts the compact digit form ("85736124") or the comma form
/// ("10,3,2,..."); "e" and "" denote the empty permutation.
Permutation parse_permutation(const std::string& text);
KCode parse_code(const std::string& text, int k);

/// "F[42531] + 2*F[54321]"; the empty index renders as the bare coefficient.
std::string to_string(const HopfElement& a);
std::string to_string(const TensorElement& a);
std::string to_string(const CodeElement& a);
std::string to_string(const CodeTensorElement& a);

/// Exact coefficients: a JSON number when it fits 64 bits, else a string.
json coeff_to_json(const Int& c);

json to_json(const Permutation& p);
json to_json(const KCode& c);
json to_json(const KPattern& p);
json to_json(const EquivClass& c);
json to_json(const MultiPoly& p);
json to_json(const PowerSeries& s);
json to_json(const HopfElement& a);
json to_json(const TensorElement& a);
json to_json(const CodeElement& a);
json to_json(const CodeTensorElement& a);

}  // namespace dsym
