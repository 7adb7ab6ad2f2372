#pragma once

#include "algforge/certificate.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace algforge {

/// Runs one command. `args` excludes the program name. Exit codes: 0 success,
/// 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// One row per certificate: k (the asserted dimension, if any), the recomputed
/// dimension of the generated algebra, and whether the certificate verifies.
std::string report_table(const std::vector<Certificate>& certs);
Json report_json(const std::vector<Certificate>& certs);

}  // namespace algforge
