#pragma once

#include <string>
#include <vector>

#include "farey/clustering.hpp"
#include "farey/group_ring.hpp"
#include "farey/sumsets.hpp"

namespace farey::report {

enum class Format { kCsv, kJson };

/// Floats are rendered with 12 significant digits; big integers as decimal
/// strings. JSON object keys follow ascending numeric order.

std::string format_double(double value);

std::string combo_json(const ClassSumCombo& combo);
std::string combo_csv(const ClassSumCombo& combo);

std::string dense_json(const DenseElement& element);

std::string sumset_report_json(const SumsetReport& report);
std::string sumset_report_csv(const SumsetReport& report);

std::string farey_set_json(const FareySet& set, uint64_t k);
std::string farey_set_csv(const FareySet& set, uint64_t k);

std::string kscan_json(uint64_t q_max, double c, const KScanResult& result);
std::string kscan_csv(const KScanResult& result);

std::string measure_json(uint64_t a, const IntervalSet& set);
std::string measure_csv(uint64_t a, const IntervalSet& set);

std::string ford_json(uint64_t q_max, double sum, double ratio);
std::string ford_csv(uint64_t q_max, double sum, double ratio);

std::string ratio_table_json(const std::vector<RatioRow>& rows);
std::string ratio_table_csv(const std::vector<RatioRow>& rows);

std::string aq_scan_json(uint64_t q_bound,
                         const std::vector<std::pair<uint64_t, AqWitness>>& members);
std::string aq_scan_csv(const std::vector<std::pair<uint64_t, AqWitness>>& members);

}  // namespace farey::report
