#pragma once

#include "algforge/algebra.hpp"
#include "algforge/incidence.hpp"
#include "algforge/matrix.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace algforge {

using Json = nlohmann::ordered_json;

using CertValue = std::variant<Mat, std::vector<Mat>, Algebra, IncidencePattern>;

/// A checkable predicate. `args` holds references into the certificate:
///   matrices   out[i], in.NAME, C, conj(M), dsum(M, M), zero(k)
///   lists      out, in.NAME
///   algebras   alg(in.NAME), gen(M or list), units(in.NAME), centralizer(M),
///              conj(A), sum(A, A)
/// Kinds and their arguments:
///   nonneg / positive / upper_triangular     {of: M}
///   simple_real_eigenvalue                   {of: M}
///   member / covering / central              {of: M, in: A}
///   equals                                   {lhs: M, rhs: M}
///   commutes                                 {a: M, b: M}
///   semi_commuting                           {a: M, b: M, sign: "nonneg"|"nonpos"}
///   dimension                                {of: A, equals: k}
///   generation_equal                         {lhs: A, rhs: A}
///   cardinality                              {of: list, equals: k}
///   incidence_pattern                        {of: in.NAME, size: k}
struct Property {
  std::string kind;
  Json args;
};

struct Certificate {
  std::string claim;
  std::vector<std::pair<std::string, CertValue>> inputs;
  std::optional<Mat> c;
  std::vector<Mat> outputs;
  std::vector<Property> properties;

  const CertValue* input(std::string_view name) const;
  void add_input(std::string name, CertValue v) { inputs.emplace_back(std::move(name), std::move(v)); }
  void add(std::string kind, Json args) { properties.push_back({std::move(kind), std::move(args)}); }
};

struct VerifyResult {
  bool ok = true;
  std::size_t index = 0;  // first failing property
  std::string kind;
  std::string message;
};

/// Re-checks every property from the stored data alone. Shares no algorithm
/// with the constructions beyond Rat arithmetic.
VerifyResult verify(const Certificate& cert);

/// Throws std::logic_error when the certificate does not verify.
void require_verified(const Certificate& cert);

}  // namespace algforge
