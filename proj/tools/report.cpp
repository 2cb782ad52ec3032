#include "report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace farey::report {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

namespace {

std::string big_str(const BigNat& v) { return v.str(); }

// raw number token so JSON output carries doubles at 12 significant digits
ordered_json double_token(double value) {
  return ordered_json::parse(format_double(value));
}

}  // namespace

std::string combo_json(const ClassSumCombo& combo) {
  ordered_json inner = ordered_json::object();
  for (const auto& [q, coeff] : combo) inner[std::to_string(q)] = coeff;
  ordered_json out;
  out["classsum"] = std::move(inner);
  return out.dump();
}

std::string combo_csv(const ClassSumCombo& combo) {
  std::ostringstream out;
  out << "order,coeff\n";
  for (const auto& [q, coeff] : combo) out << q << ',' << coeff << '\n';
  return out.str();
}

std::string dense_json(const DenseElement& element) {
  ordered_json inner = ordered_json::object();
  for (const auto& [key, coeff] : element.terms()) {
    inner[std::to_string(key.num) + "/" + std::to_string(key.den)] = coeff;
  }
  ordered_json out;
  out["dense"] = std::move(inner);
  return out.dump();
}

std::string sumset_report_json(const SumsetReport& report) {
  ordered_json out;
  out["Q"] = report.q_max;
  out["k"] = report.k;
  out["cardinality"] = big_str(report.cardinality);
  out["representable_count"] = big_str(report.representable_count);
  out["elapsed_seconds"] = double_token(report.elapsed_seconds);
  return out.dump();
}

std::string sumset_report_csv(const SumsetReport& report) {
  std::ostringstream out;
  out << "Q,k,cardinality,representable_count,elapsed_seconds\n";
  out << report.q_max << ',' << report.k << ',' << big_str(report.cardinality) << ','
      << big_str(report.representable_count) << ',' << format_double(report.elapsed_seconds)
      << '\n';
  return out.str();
}

std::string farey_set_json(const FareySet& set, uint64_t k) {
  ordered_json elements = ordered_json::array();
  for (const auto& f : set.elements) {
    elements.push_back(std::to_string(f.num) + "/" + std::to_string(f.den));
  }
  ordered_json out;
  out["Q"] = set.q_max;
  out["k"] = k;
  out["cardinality"] = set.elements.size();
  out["elements"] = std::move(elements);
  return out.dump();
}

std::string farey_set_csv(const FareySet& set, uint64_t k) {
  std::ostringstream out;
  out << "Q,k,fraction\n";
  for (const auto& f : set.elements) {
    out << set.q_max << ',' << k << ',' << f.num << '/' << f.den << '\n';
  }
  return out.str();
}

std::string kscan_json(uint64_t q_max, double c, const KScanResult& result) {
  ordered_json trace = ordered_json::array();
  for (const auto& row : result.trace) {
    ordered_json r;
    r["k"] = row.k;
    r["cardinality"] = big_str(row.cardinality);
    r["log_cardinality"] = double_token(row.log_cardinality);
    trace.push_back(std::move(r));
  }
  ordered_json out;
  out["Q"] = q_max;
  out["c"] = double_token(c);
  if (result.min_k) {
    out["k"] = *result.min_k;
  } else {
    out["k"] = nullptr;
  }
  out["trace"] = std::move(trace);
  return out.dump();
}

std::string kscan_csv(const KScanResult& result) {
  std::ostringstream out;
  out << "k,cardinality,log_cardinality,selected\n";
  for (const auto& row : result.trace) {
    const bool selected = result.min_k && *result.min_k == row.k;
    out << row.k << ',' << big_str(row.cardinality) << ','
        << format_double(row.log_cardinality) << ',' << (selected ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string measure_json(uint64_t a, const IntervalSet& set) {
  ordered_json intervals = ordered_json::array();
  for (const auto& iv : set.intervals()) {
    intervals.push_back({double_token(iv.lo), double_token(iv.hi)});
  }
  ordered_json out;
  out["a"] = a;
  out["measure"] = double_token(set.measure());
  out["components"] = set.intervals().size();
  out["intervals"] = std::move(intervals);
  return out.dump();
}

std::string measure_csv(uint64_t a, const IntervalSet& set) {
  std::ostringstream out;
  out << "a,measure,components\n";
  out << a << ',' << format_double(set.measure()) << ',' << set.intervals().size() << '\n';
  return out.str();
}

std::string ford_json(uint64_t q_max, double sum, double ratio) {
  ordered_json out;
  out["Q"] = q_max;
  out["ford_sum"] = double_token(sum);
  out["ford_ratio"] = double_token(ratio);
  return out.dump();
}

std::string ford_csv(uint64_t q_max, double sum, double ratio) {
  std::ostringstream out;
  out << "Q,ford_sum,ford_ratio\n";
  out << q_max << ',' << format_double(sum) << ',' << format_double(ratio) << '\n';
  return out.str();
}

std::string ratio_table_json(const std::vector<RatioRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json r;
    r["Q"] = row.q_max;
    r["I_Q"] = big_str(row.i_q);
    r["ratio"] = double_token(row.ratio);
    r["ford_sum"] = double_token(row.ford);
    r["ford_ratio"] = double_token(row.ford_ratio);
    arr.push_back(std::move(r));
  }
  ordered_json out;
  out["rows"] = std::move(arr);
  return out.dump();
}

std::string ratio_table_csv(const std::vector<RatioRow>& rows) {
  std::ostringstream out;
  out << "Q,I_Q,ratio,ford_sum,ford_ratio\n";
  for (const auto& row : rows) {
    out << row.q_max << ',' << big_str(row.i_q) << ',' << format_double(row.ratio) << ','
        << format_double(row.ford) << ',' << format_double(row.ford_ratio) << '\n';
  }
  return out.str();
}

std::string aq_scan_json(uint64_t q_bound,
                         const std::vector<std::pair<uint64_t, AqWitness>>& members) {
  ordered_json arr = ordered_json::array();
  for (const auto& [n, w] : members) {
    ordered_json r;
    r["n"] = n;
    r["a"] = w.a;
    r["p"] = w.p;
    r["q"] = w.q;
    arr.push_back(std::move(r));
  }
  ordered_json out;
  out["Q"] = q_bound;
  out["count"] = members.size();
  out["members"] = std::move(arr);
  return out.dump();
}

std::string aq_scan_csv(const std::vector<std::pair<uint64_t, AqWitness>>& members) {
  std::ostringstream out;
  out << "n,a,p,q\n";
  for (const auto& [n, w] : members) {
    out << n << ',' << w.a << ',' << w.p << ',' << w.q << '\n';
  }
  return out.str();
}

}  // namespace farey::report
