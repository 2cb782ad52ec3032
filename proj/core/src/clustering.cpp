#include "farey/clustering.hpp"

#include <algorithm>
#include <cmath>

#include "farey/sumsets.hpp"

namespace farey {

namespace {

// a^8 with saturation, for the y^{1/8} cutoffs.
unsigned __int128 pow8(uint64_t a) {
  unsigned __int128 v = 1;
  for (int i = 0; i < 8; ++i) {
    v *= a;
    if (v > (static_cast<unsigned __int128>(1) << 100)) return v;
  }
  return v;
}

// a <= (Q/2)^{1/8}  <=>  2 a^8 <= Q, in exact integer arithmetic.
bool le_y_eighth(uint64_t a, uint64_t q_bound) { return 2 * pow8(a) <= q_bound; }

}  // namespace

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  std::erase_if(intervals, [](const Interval& iv) { return !(iv.lo < iv.hi); });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet out;
  for (const Interval& iv : intervals) {
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi + kEndpointTol) {
      out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

double IntervalSet::measure() const {
  double total = 0.0;
  for (const Interval& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

bool IntervalSet::contains(double x) const {
  for (const Interval& iv : intervals_) {
    if (x >= iv.lo && x < iv.hi) return true;
  }
  return false;
}

IntervalSet l_set(const Factorization& a) {
  const double log2 = std::log(2.0);
  std::vector<Interval> intervals;
  for (uint64_t d : divisors(a)) {
    const double logd = std::log(static_cast<double>(d));
    intervals.push_back({logd - log2, logd});
  }
  return IntervalSet::from_intervals(std::move(intervals));
}

double l_measure(const Factorization& a) {
  // single pass over the sorted divisors; same merge tolerance as l_set
  const double log2 = std::log(2.0);
  double total = 0.0;
  double cur_lo = 0.0;
  double cur_hi = 0.0;
  bool open = false;
  for (uint64_t d : divisors(a)) {
    const double lo = std::log(static_cast<double>(d)) - log2;
    const double hi = lo + log2;
    if (open && lo <= cur_hi + IntervalSet::kEndpointTol) {
      cur_hi = std::max(cur_hi, hi);
    } else {
      if (open) total += cur_hi - cur_lo;
      cur_lo = lo;
      cur_hi = hi;
      open = true;
    }
  }
  if (open) total += cur_hi - cur_lo;
  return total;
}

double ford_sum(uint64_t q_max, const SpfTable& table) {
  if (q_max == 0) throw std::invalid_argument("ford_sum: Q must be positive");
  if (q_max > table.limit()) throw std::out_of_range("ford_sum: Q exceeds sieve limit");
  double total = 0.0;
  for (uint64_t a = 1; a <= q_max; ++a) {
    const Factorization f = table.factorize(a);
    if (moebius(f) == 0) continue;
    const double term = static_cast<double>(euler_phi(f)) * l_measure(f) /
                        (static_cast<double>(a) * static_cast<double>(a));
    total += term;
  }
  return total;
}

double ford_ratio(uint64_t q_max, const SpfTable& table) {
  if (q_max < 3) throw std::invalid_argument("ford_ratio: Q must exceed e");
  const double logq = std::log(static_cast<double>(q_max));
  const double denom = std::pow(logq, 2.0 - erdos_ford_delta()) /
                       std::pow(std::log(logq), 1.5);
  return ford_sum(q_max, table) / denom;
}

uint64_t tau_interval(const Factorization& n, double y, double z) {
  if (!(y < z)) throw std::invalid_argument("tau_interval: need y < z");
  uint64_t count = 0;
  for (uint64_t d : divisors(n)) {
    const double dd = static_cast<double>(d);
    if (dd > y && dd <= z) ++count;
  }
  return count;
}

std::vector<AqWitness> aq_witnesses(uint64_t n, uint64_t q_bound, const SpfTable& table) {
  if (q_bound < 4) throw std::invalid_argument("aq_witnesses: Q must be at least 4");
  if (n == 0) throw std::invalid_argument("aq_witnesses: n must be positive");
  if (2 * n > q_bound * q_bound) throw std::out_of_range("aq_witnesses: n exceeds Q^2/2");
  if (n > table.limit()) throw std::out_of_range("aq_witnesses: n exceeds sieve limit");

  std::vector<AqWitness> witnesses;
  const Factorization fn = table.factorize(n);
  if (moebius(fn) == 0) return witnesses;

  // p in some window (y/d, 2y/d], d | a, with y = Q/2:
  // exactly Q < 2dp and dp <= Q in integers.
  auto p_in_l_window = [&](uint64_t a, uint64_t p) {
    for (uint64_t d : divisors(table.factorize(a))) {
      if (q_bound < 2 * d * p && d * p <= q_bound) return true;
    }
    return false;
  };

  for (uint64_t a : divisors(fn)) {
    if (!le_y_eighth(a, q_bound)) continue;
    const Factorization fm = table.factorize(n / a);
    if (fm.omega() != 2) continue;  // need n/a = pq, distinct primes (n squarefree)
    const uint64_t u = fm.factors[0].prime;
    const uint64_t v = fm.factors[1].prime;
    for (const auto& [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
      if (le_y_eighth(q, q_bound)) continue;  // need q > y^{1/8}
      if (p_in_l_window(a, p)) witnesses.push_back({a, p, q});
    }
  }
  return witnesses;
}

std::optional<AqWitness> aq_member(uint64_t n, uint64_t q_bound, const SpfTable& table) {
  const auto witnesses = aq_witnesses(n, q_bound, table);
  if (witnesses.empty()) return std::nullopt;
  return witnesses.front();
}

std::vector<RatioRow> theorem1_table(const std::vector<uint64_t>& q_values, unsigned shards,
                                     const SpfTable& table) {
  std::vector<RatioRow> rows;
  rows.reserve(q_values.size());
  for (uint64_t q : q_values) {
    if (q < 3) throw std::invalid_argument("theorem1_table: Q must exceed e");
    RatioRow row;
    row.q_max = q;
    row.i_q = sumset_cardinality(q, 2, shards).cardinality;
    const double logq = std::log(static_cast<double>(q));
    const double q4 = std::pow(static_cast<double>(q), 4.0);
    row.ratio = row.i_q.convert_to<double>() * std::pow(logq, erdos_ford_delta()) *
                std::pow(std::log(logq), 1.5) / q4;
    row.ford = ford_sum(q, table);
    row.ford_ratio = ford_ratio(q, table);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace farey
