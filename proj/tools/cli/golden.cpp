#include "golden.hpp"

#include <string_view>
#include <vector>

#include "svt/numeric.hpp"

namespace svt::cli {
namespace {

BigSequence parse(std::initializer_list<std::string_view> terms) {
  std::vector<BigInt> out;
  for (auto t : terms) out.emplace_back(std::string(t), 10);
  return BigSequence(1, std::move(out));
}

GoldenTables build() {
  GoldenTables tables;
  tables[3] = parse({"1", "6", "37", "240", "1621", "11256", "79717", "572928", "4164841",
                     "30553116", "225817021", "1679454816", "12556853401", "94313192616",
                     "711189994357", "5381592930816", "40848410792017", "310909645663332",
                     "2372280474687277", "18141232682656320", "139010366280363601",
                     "1067160872528170536", "8206301850166625797",
                     "63203453697218605440"});
  tables[4] = parse({"1", "24", "997", "51264", "2940841", "180296088", "11559133741",
                     "765337680384", "51921457661905", "3590122671128664",
                     "252070718210663749", "17922684123178825536",
                     "1287832671004683373753", "93368940577497932331288",
                     "6821632357294515590873917", "501741975445243527381995520",
                     "37121266623211130111114816929", "2760712710223967190110979892824",
                     "206267049696409355312012281872181"});
  tables[5] = parse({"1", "120", "44121", "23096640", "14346274601", "9859397817600",
                     "7244702262723241", "5582882474985676800"});
  tables[6] = parse({"1", "720", "2882071", "18754813440", "153480509680141",
                     "1435747717722810960"});
  return tables;
}

}  // namespace

const GoldenTables& golden_tables() {
  static const GoldenTables tables = build();
  return tables;
}

const BigSequence& golden(std::size_t d) { return golden_tables().at(d); }

}  // namespace svt::cli
