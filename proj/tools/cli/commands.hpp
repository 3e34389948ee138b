#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "oeis.hpp"

namespace svt::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kInsufficientData = 3,
  kNetwork = 4,
};

/// Entry point of the svt tool. args excludes the program name. `get` is
/// the HTTPS transport used by `verify --fetch`; null selects the real one.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const HttpsGet* get = nullptr);

/// Recomputes every table in `tables` (lattice DP, plus the stored
/// recurrence for d = 3) and prints "C3: 24/24 OK; ..." to out. Returns
/// kMismatch naming the first mismatching index on err otherwise.
int verify_golden(const GoldenTables& tables, std::ostream& out, std::ostream& err);

}  // namespace svt::cli
