#include "algforge/io.hpp"

namespace algforge {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

Index size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return static_cast<Index>(v.get<long long>());
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
  return v;
}

std::vector<Mat> mats_from_json(const Json& arr) {
  std::vector<Mat> out;
  for (const auto& m : arr) out.push_back(mat_from_json(m));
  return out;
}

Json mats_to_json(std::span<const Mat> mats) {
  Json arr = Json::array();
  for (const auto& m : mats) arr.push_back(to_json(m));
  return arr;
}

Json positions_to_json(const std::set<std::pair<Index, Index>>& pos) {
  Json arr = Json::array();
  for (const auto& [i, j] : pos) arr.push_back(Json::array({i + 1, j + 1}));
  return arr;
}

CertValue value_from_json(const Json& j) {
  if (j.is_array()) return mats_from_json(j);
  if (j.is_object() && j.contains("basis")) return algebra_from_json(j);
  if (j.is_object() && j.contains("positions")) return pattern_from_json(j);
  if (j.is_object() && j.contains("rows")) return mat_from_json(j);
  throw FormatError("unrecognized certificate input");
}

Json value_to_json(const CertValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::vector<Mat>>) return mats_to_json(x);
        else return to_json(x);
      },
      v);
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw FormatError("rational must be a string or an integer");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception&) {
    throw FormatError("bad rational '" + j.get<std::string>() + "'");
  }
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Mat mat_from_json(const Json& j) {
  const Index rows = size_field(j, "rows"), cols = size_field(j, "cols");
  const Json& e = array_field(j, "entries");
  if (static_cast<Index>(e.size()) != rows) throw FormatError("matrix: wrong number of rows");
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = e[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw FormatError("matrix: ragged row");
    for (Index c = 0; c < cols; ++c) m(i, c) = rat_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json to_json(const Support& s) { return Json{{"n", s.n}, {"positions", positions_to_json(s.positions)}}; }

Json to_json(const IncidencePattern& p) {
  return Json{{"n", p.n()}, {"positions", positions_to_json(p.positions())}};
}

IncidencePattern pattern_from_json(const Json& j) {
  const Index n = size_field(j, "n");
  std::set<IncidencePattern::Position> pos;
  for (const auto& p : array_field(j, "positions")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw FormatError("position must be a pair of integers");
    }
    const Index i = p[0].get<Index>() - 1, k = p[1].get<Index>() - 1;
    if (i < 0 || k < 0 || i >= n || k >= n) throw FormatError("position out of range");
    pos.insert({i, k});
  }
  return IncidencePattern(n, std::move(pos));
}

Json to_json(const Algebra& a) { return Json{{"n", a.n()}, {"basis", mats_to_json(a.basis())}}; }

Algebra algebra_from_json(const Json& j) {
  const Index n = size_field(j, "n");
  return Algebra::from_basis(n, mats_from_json(array_field(j, "basis")));
}

Json to_json(const GenSet& g) { return Json{{"n", g.n}, {"gens", mats_to_json(g.gens)}}; }

GenSet genset_from_json(const Json& j) {
  GenSet g{size_field(j, "n"), mats_from_json(array_field(j, "gens"))};
  for (const auto& m : g.gens)
    if (m.rows() != g.n || m.cols() != g.n) throw FormatError("generator size differs from n");
  return g;
}

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Json to_json(const CharData& d) {
  Json roots = Json::array();
  for (const auto& [r, m] : d.rational_roots) roots.push_back(Json::array({r.str(), m}));
  return Json{{"char_poly", to_json(d.char_poly)},
              {"min_poly", to_json(d.min_poly)},
              {"rational_roots", std::move(roots)},
              {"simple_real_count", d.simple_real_count}};
}

Json to_json(const Certificate& c) {
  Json inputs = Json::object();
  for (const auto& [name, v] : c.inputs) inputs[name] = value_to_json(v);
  Json props = Json::array();
  for (const auto& p : c.properties) props.push_back(Json{{"kind", p.kind}, {"args", p.args}});
  return Json{{"claim", c.claim},
              {"inputs", std::move(inputs)},
              {"C", c.c ? to_json(*c.c) : Json(nullptr)},
              {"outputs", mats_to_json(c.outputs)},
              {"properties", std::move(props)}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  const Json& claim = field(j, "claim");
  if (!claim.is_string()) throw FormatError("claim must be a string");
  c.claim = claim.get<std::string>();
  const Json& inputs = field(j, "inputs");
  if (!inputs.is_object()) throw FormatError("inputs must be an object");
  for (const auto& [name, v] : inputs.items()) c.add_input(name, value_from_json(v));
  const Json& cj = field(j, "C");
  if (!cj.is_null()) c.c = mat_from_json(cj);
  c.outputs = mats_from_json(array_field(j, "outputs"));
  for (const auto& p : array_field(j, "properties")) {
    const Json& kind = field(p, "kind");
    if (!kind.is_string()) throw FormatError("property kind must be a string");
    c.add(kind.get<std::string>(), field(p, "args"));
  }
  return c;
}

Index max_size_in(const Json& j) {
  Index best = 0;
  if (j.is_object()) {
    for (const char* key : {"n", "rows", "cols"}) {
      const auto it = j.find(key);
      if (it != j.end() && it->is_number_integer()) best = std::max(best, it->get<Index>());
    }
    for (const auto& [k, v] : j.items()) best = std::max(best, max_size_in(v));
  } else if (j.is_array()) {
    for (const auto& v : j) best = std::max(best, max_size_in(v));
  }
  return best;
}

}  // namespace algforge
