#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "svt/asymptotics.hpp"
#include "svt/count.hpp"
#include "svt/holonomic.hpp"
#include "svt/sequence.hpp"

namespace svt {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// OEIS b-file: "n a(n)" per line, n ascending and consecutive. Lines
/// starting with '#' and blank lines are skipped.
BigSequence read_bfile(std::istream& in);
void write_bfile(std::ostream& out, const BigSequence& seq);

/// {"d", "cap", "values": [{"idx", "c"}]} over the sorted indices of the box.
nlohmann::json to_json(const CountTable& table);

/// {"order", "degree", "coeffs": [[decimal strings]]}.
nlohmann::json to_json(const PolyRecurrence& rec);
PolyRecurrence recurrence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConjectureReport& report);
nlohmann::json to_json(const SubdominanceReport& report);

}  // namespace svt
