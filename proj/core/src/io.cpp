#include "svt/io.hpp"

#include <cctype>
#include <sstream>

namespace svt {
namespace {

bool is_integer_token(const std::string& s) {
  std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigSequence read_bfile(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::int64_t first = 0;
  std::int64_t expected = 0;
  std::vector<BigInt> terms;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra) || !is_integer_token(index_text) ||
        !is_integer_token(value_text)) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": expected \"n a(n)\"");
    }
    std::int64_t index = 0;
    try {
      index = std::stoll(index_text);
    } catch (const std::exception&) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": index out of range");
    }
    if (terms.empty()) {
      first = index;
    } else if (index != expected) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": expected index " +
                       std::to_string(expected) + ", got " + index_text);
    }
    expected = index + 1;
    terms.emplace_back(value_text[0] == '+' ? value_text.substr(1) : value_text, 10);
  }
  if (terms.empty()) throw ParseError("b-file has no terms");
  return BigSequence(first, std::move(terms));
}

void write_bfile(std::ostream& out, const BigSequence& seq) {
  std::int64_t n = seq.offset();
  for (const auto& v : seq.terms()) out << n++ << ' ' << v.get_str() << '\n';
}

nlohmann::json to_json(const CountTable& table) {
  nlohmann::json values = nlohmann::json::array();
  const BoxTable& box = table.box();
  for (std::size_t i = 0; i < box.volume(); ++i) {
    const MultiIndex v = box.index_of(i);
    if (!v.is_sorted()) continue;
    values.push_back({{"idx", std::vector<int>(v.begin(), v.end())},
                      {"c", box.values()[i].get_str()}});
  }
  return {{"d", table.dim()},
          {"cap", std::vector<int>(table.cap().begin(), table.cap().end())},
          {"values", std::move(values)}};
}

nlohmann::json to_json(const PolyRecurrence& rec) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& row : rec.coeffs()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : row) out.push_back(v.get_str());
    coeffs.push_back(std::move(out));
  }
  return {{"order", rec.order()}, {"degree", rec.degree()}, {"coeffs", std::move(coeffs)}};
}

PolyRecurrence recurrence_from_json(const nlohmann::json& j) {
  try {
    const auto order = j.at("order").get<std::size_t>();
    const auto degree = j.at("degree").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != order + 1) throw ParseError("coeffs row count does not match order");
    std::vector<std::vector<BigInt>> rows;
    for (const auto& row : coeffs) {
      if (row.size() != degree + 1) throw ParseError("coeffs row length does not match degree");
      std::vector<BigInt> out;
      for (const auto& v : row) {
        const auto text = v.get<std::string>();
        if (!is_integer_token(text)) throw ParseError("coefficient is not an integer: " + text);
        out.emplace_back(text[0] == '+' ? text.substr(1) : text, 10);
      }
      rows.push_back(std::move(out));
    }
    return PolyRecurrence(std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("recurrence JSON: ") + e.what());
  }
}

nlohmann::json to_json(const ConjectureReport& report) {
  nlohmann::json out = {
      {"d", report.d},
      {"mu_conjectured", format_real(report.mu_conjectured)},
      {"mu_estimated", nullptr},
      {"theta", format_real(report.theta_conjectured)},
      {"corrected_ratio", format_real(report.corrected_ratio)},
      {"alpha_estimate", format_real(report.alpha_estimate)},
      {"alpha_drift", format_real(report.alpha_drift)},
      {"deviation", format_real(report.deviation)},
      {"n_used", report.n_used},
  };
  if (report.mu_estimated) out["mu_estimated"] = format_real(*report.mu_estimated);
  return out;
}

nlohmann::json to_json(const SubdominanceReport& report) {
  return {
      {"perturbation", report.perturbation.get_str()},
      {"n", report.n},
      {"ratio_unperturbed", format_real(report.ratio_unperturbed)},
      {"ratio_perturbed", format_real(report.ratio_perturbed)},
      {"raw_ratio_unperturbed", format_real(report.raw_ratio_unperturbed)},
      {"raw_ratio_perturbed", format_real(report.raw_ratio_perturbed)},
  };
}

}  // namespace svt
