#pragma once

#include "algforge/algebra.hpp"
#include "algforge/certificate.hpp"
#include "algforge/spectral.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace algforge {

// Wire format: rationals are strings ("p/q" or "p"); integers are accepted on
// input. Positions are 1-based and sorted.

/// Malformed or ill-typed document. The message names the offending field or,
/// for syntax errors, the byte position.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json parse_document(std::string_view text);

Json to_json(const Rat& r);
Json to_json(const Mat& m);
Json to_json(const Support& s);
Json to_json(const IncidencePattern& p);
Json to_json(const Algebra& a);
Json to_json(const GenSet& g);
Json to_json(const Poly& p);
Json to_json(const CharData& d);
Json to_json(const Certificate& c);

Rat rat_from_json(const Json& j);
Mat mat_from_json(const Json& j);
IncidencePattern pattern_from_json(const Json& j);
/// Re-verifies independence, unitality and closure.
Algebra algebra_from_json(const Json& j);
GenSet genset_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

/// Largest matrix size mentioned in a document (the "n"/"rows" fields), used
/// to enforce the size cap before any heavy work.
Index max_size_in(const Json& j);

}  // namespace algforge
