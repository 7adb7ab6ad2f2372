#include "algforge/cli.hpp"

#include "algforge/constructions.hpp"
#include "algforge/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace algforge {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Index max_dim() {
  const char* env = std::getenv("ALGFORGE_MAX_DIM");
  if (!env || !*env) return 16;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError(std::string("ALGFORGE_MAX_DIM must be a positive integer, got '") + env + "'");
  return v;
}

void check_size(Index n) {
  const Index cap = max_dim();
  if (n > cap) throw UsageError("size " + std::to_string(n) + " exceeds ALGFORGE_MAX_DIM = " + std::to_string(cap));
}

struct Row {
  std::string k;
  Index dim = 0;
  bool verified = false;
};

Row report_row(const Certificate& c) {
  Row r;
  for (const auto& p : c.properties)
    if (p.kind == "dimension" && p.args.contains("equals")) r.k = p.args["equals"].dump();
  if (r.k.empty()) r.k = "-";
  if (!c.outputs.empty()) r.dim = generate(c.outputs.front().rows(), c.outputs).dimension();
  r.verified = verify(c).ok;
  return r;
}

}  // namespace

std::string report_table(const std::vector<Certificate>& certs) {
  std::ostringstream s;
  s << std::left << std::setw(6) << "k" << std::setw(6) << "dim" << "verified\n";
  std::size_t ok = 0;
  for (const auto& c : certs) {
    const Row r = report_row(c);
    ok += r.verified ? 1 : 0;
    s << std::left << std::setw(6) << r.k << std::setw(6) << r.dim << (r.verified ? "✓" : "✗") << '\n';
  }
  s << "total " << certs.size() << ", verified " << ok << '\n';
  return s.str();
}

Json report_json(const std::vector<Certificate>& certs) {
  Json rows = Json::array();
  std::size_t ok = 0;
  for (const auto& c : certs) {
    const Row r = report_row(c);
    ok += r.verified ? 1 : 0;
    rows.push_back(Json{{"k", r.k == "-" ? Json(nullptr) : Json::parse(r.k)}, {"dim", r.dim}, {"verified", r.verified}});
  }
  return Json{{"rows", std::move(rows)}, {"total", certs.size()}, {"verified", ok}};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions for nonnegatively generated matrix algebras", "algforge"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path, format = "json";
  std::uint64_t seed = 0;
  std::size_t budget = 64;
  app.add_option("--out", out_path, "Write the output document to this file");
  app.add_option("--seed", seed, "Seed for randomized searches")->capture_default_str();
  app.add_option("--budget", budget, "Random combinations tried by algebra-classify")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  std::string input;
  long n = 0, k = 0;
  auto with_input = [&](CLI::App* sub) { sub->add_option("file", input, "Input JSON (default: stdin)"); };

  auto* gen = app.add_subcommand("algebra-generate", "Unital closure of a generator set");
  with_input(gen);
  auto* dim = app.add_subcommand("algebra-dim", "Dimension of an algebra or of a generated algebra");
  with_input(dim);
  auto* cov = app.add_subcommand("algebra-covering", "Covering and nonnegative covering matrices");
  with_input(cov);
  auto* cls = app.add_subcommand("algebra-classify", "Search for a positive-generation certificate");
  with_input(cls);
  auto* build = app.add_subcommand("incidence-build", "Incidence pattern of a given dimension");
  build->add_option("-n", n, "Matrix size")->required();
  build->add_option("-k", k, "Dimension")->required();
  auto* pair = app.add_subcommand("incidence-pair", "Semi-commuting nonnegative generators of a pattern");
  with_input(pair);
  auto* solve = app.add_subcommand("problem-solve", "Semi-commuting pairs for every dimension n..n(n+1)/2");
  solve->add_option("-n", n, "Matrix size")->required();
  auto* ver = app.add_subcommand("verify", "Re-check a certificate or a problem-solve document");
  with_input(ver);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  auto read_doc = [&]() {
    std::string text;
    if (input.empty() || input == "-") {
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream f(input, std::ios::binary);
      if (!f) throw UsageError("cannot open '" + input + "'");
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    Json doc = parse_document(text);
    check_size(max_size_in(doc));
    return doc;
  };
  auto load_algebra = [&](const Json& doc) {
    if (doc.is_object() && doc.contains("gens")) return generate(genset_from_json(doc));
    return algebra_from_json(doc);
  };
  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    f << text;
  };
  auto emit_json = [&](const Json& j) { emit(j.dump(2) + "\n"); };

  try {
    if (gen->parsed()) {
      emit_json(to_json(generate(genset_from_json(read_doc()))));
    } else if (dim->parsed()) {
      const Algebra a = load_algebra(read_doc());
      emit_json(Json{{"n", a.n()}, {"dimension", a.dimension()}});
    } else if (cov->parsed()) {
      const Algebra a = load_algebra(read_doc());
      const auto nn = nonneg_covering_exists(a);
      emit_json(Json{{"covering", to_json(covering_matrix(a))}, {"nonneg_covering", nn ? to_json(*nn) : Json(nullptr)}});
    } else if (cls->parsed()) {
      const auto cert = classify_pg(load_algebra(read_doc()), budget, seed);
      emit_json(Json{{"result", cert ? "yes" : "unknown"}, {"certificate", cert ? to_json(*cert) : Json(nullptr)}});
    } else if (build->parsed()) {
      check_size(n);
      emit_json(to_json(incidence_of_dimension(n, k)));
    } else if (pair->parsed()) {
      emit_json(to_json(semicommuting_pair(pattern_from_json(read_doc())).cert));
    } else if (solve->parsed()) {
      check_size(n);
      const auto certs = solve_problem(n);
      if (format == "table") {
        emit(report_table(certs));
      } else {
        Json arr = Json::array();
        for (const auto& c : certs) arr.push_back(to_json(c));
        emit_json(Json{{"n", n}, {"certificates", std::move(arr)}, {"summary", report_json(certs)}});
      }
    } else if (ver->parsed()) {
      const Json doc = read_doc();
      std::vector<Certificate> certs;
      if (doc.is_object() && doc.contains("certificates")) {
        if (!doc["certificates"].is_array()) throw FormatError("'certificates' must be an array");
        for (const auto& c : doc["certificates"]) certs.push_back(certificate_from_json(c));
      } else if (doc.is_object() && doc.contains("certificate")) {
        if (doc["certificate"].is_null()) throw UsageError("document carries no certificate");
        certs.push_back(certificate_from_json(doc["certificate"]));
      } else {
        certs.push_back(certificate_from_json(doc));
      }
      for (std::size_t i = 0; i < certs.size(); ++i) {
        const auto r = verify(certs[i]);
        if (!r.ok) {
          std::ostringstream msg;
          msg << "certificate " << i << " (" << certs[i].claim << "): property " << r.index << " (" << r.kind
              << ") failed: " << r.message;
          throw VerifyFailure(msg.str());
        }
      }
      if (format == "table") emit(report_table(certs));
      else emit_json(Json{{"verified", true}, {"count", certs.size()}});
    }
  } catch (const VerifyFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    // Precondition, size and format problems with the input. A failed
    // construction postcondition is also a logic_error; report it as such.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    err << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace algforge
