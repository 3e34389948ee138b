#pragma once

#include <cstddef>
#include <map>

#include "svt/sequence.hpp"

namespace svt::cli {

/// Printed term lists of the hyper-cubical diagonals, keyed by d.
using GoldenTables = std::map<std::size_t, BigSequence>;

/// C_3(1..24), C_4(1..19), C_5(1..8), C_6(1..6).
const GoldenTables& golden_tables();

const BigSequence& golden(std::size_t d);

}  // namespace svt::cli
