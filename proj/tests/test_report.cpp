#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "report.hpp"

using namespace farey;
namespace rep = farey::report;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

TEST_CASE("combo serialization round trip") {
  const ClassSumCombo combo = fq_product(12, 18);
  const std::string json = rep::combo_json(combo);
  CHECK(json == R"({"classsum":{"36":2}})");

  const auto parsed = nlohmann::json::parse(json);
  ClassSumCombo back;
  for (const auto& [key, value] : parsed.at("classsum").items()) {
    back[std::stoull(key)] = value.get<int64_t>();
  }
  CHECK(back == combo);

  const auto lines = split(rep::combo_csv(combo), '\n');
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "order,coeff");
  CHECK(lines[1] == "36,2");
}

TEST_CASE("json keys ascend numerically") {
  const std::string json = rep::combo_json(fq_product(6, 6));
  CHECK(json == R"({"classsum":{"1":2,"3":1}})");

  const std::string dense = rep::dense_json(dense_multiply(class_sum(3), class_sum(3)));
  CHECK(dense == R"({"dense":{"0/1":2,"1/3":1,"2/3":1}})");
}

TEST_CASE("sumset report round trip") {
  const SumsetReport report = sumset_cardinality(6, 2);
  const auto parsed = nlohmann::json::parse(rep::sumset_report_json(report));
  CHECK(parsed.at("Q") == 6);
  CHECK(parsed.at("k") == 2);
  CHECK(BigNat(parsed.at("cardinality").get<std::string>()) == report.cardinality);
  CHECK(BigNat(parsed.at("representable_count").get<std::string>()) ==
        report.representable_count);

  const auto lines = split(rep::sumset_report_csv(report), '\n');
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "Q,k,cardinality,representable_count,elapsed_seconds");
  const auto fields = split(lines[1], ',');
  REQUIRE(fields.size() == 5);
  CHECK(BigNat(fields[2]) == report.cardinality);
  CHECK(BigNat(fields[3]) == report.representable_count);
}

TEST_CASE("ratio table round trip at 12 significant digits") {
  SpfTable table(64);
  const auto rows = theorem1_table({16, 64}, 1, table);
  const auto lines = split(rep::ratio_table_csv(rows), '\n');
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "Q,I_Q,ratio,ford_sum,ford_ratio");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto fields = split(lines[i + 1], ',');
    REQUIRE(fields.size() == 5);
    CHECK(BigNat(fields[1]) == rows[i].i_q);
    CHECK(std::abs(std::stod(fields[2]) - rows[i].ratio) <= 1e-11 * rows[i].ratio);
    CHECK(std::abs(std::stod(fields[3]) - rows[i].ford) <= 1e-11 * rows[i].ford);
  }

  const auto parsed = nlohmann::json::parse(rep::ratio_table_json(rows));
  REQUIRE(parsed.at("rows").size() == 2);
  CHECK(std::abs(parsed.at("rows")[0].at("ratio").get<double>() - rows[0].ratio) <=
        1e-11 * rows[0].ratio);
}

TEST_CASE("emitters are deterministic for a fixed input") {
  const SumsetReport report = sumset_cardinality(10, 2);
  CHECK(rep::sumset_report_csv(report) == rep::sumset_report_csv(report));
  const auto rows_a = rep::combo_json(fq_product(100, 90));
  const auto rows_b = rep::combo_json(fq_product(100, 90));
  CHECK(rows_a == rows_b);
}

TEST_CASE("ford and kscan emitters parse back") {
  SpfTable table(100);
  const double sum = ford_sum(100, table);
  const double ratio = ford_ratio(100, table);
  const auto parsed = nlohmann::json::parse(rep::ford_json(100, sum, ratio));
  CHECK(std::abs(parsed.at("ford_sum").get<double>() - sum) <= 1e-11 * sum);

  const KScanResult scan = min_k_scan(6, 1.0);
  const auto lines = split(rep::kscan_csv(scan), '\n');
  CHECK(lines[0] == "k,cardinality,log_cardinality,selected");
  REQUIRE(lines.size() == scan.trace.size() + 1);
  const auto sparsed = nlohmann::json::parse(rep::kscan_json(6, 1.0, scan));
  CHECK(sparsed.at("trace").size() == scan.trace.size());
}
