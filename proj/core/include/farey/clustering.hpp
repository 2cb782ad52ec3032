#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "farey/numtheory.hpp"

namespace farey {

/// The Erdos-Ford multiplication-table constant 1 - (1 + log log 2)/log 2,
/// derived from the closed form rather than a decimal literal.
inline double erdos_ford_delta() {
  static const double delta = 1.0 - (1.0 + std::log(std::log(2.0))) / std::log(2.0);
  return delta;
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted disjoint half-open intervals [lo, hi). Touching intervals are
/// merged at construction; endpoint comparisons use a 1e-9 tolerance.
class IntervalSet {
 public:
  static constexpr double kEndpointTol = 1e-9;

  IntervalSet() = default;
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  double measure() const;
  bool contains(double x) const;

 private:
  std::vector<Interval> intervals_;
};

/// L(a) = union over d | a of [log d - log 2, log d), normalized.
IntervalSet l_set(const Factorization& a);

/// Lebesgue measure of L(a); always in [log 2, tau(a) log 2].
double l_measure(const Factorization& a);

/// sum over squarefree a <= Q of phi(a) |L(a)| / a^2, terms in increasing a.
double ford_sum(uint64_t q_max, const SpfTable& table);

/// ford_sum(Q) divided by (log Q)^{2-delta} / (log log Q)^{3/2}.
/// Requires Q >= 3 so that log log Q is positive.
double ford_ratio(uint64_t q_max, const SpfTable& table);

/// tau(n; y, z): number of divisors of n in the half-open interval (y, z].
uint64_t tau_interval(const Factorization& n, double y, double z);

/// A factorization n = a p q certifying membership in A_Q.
struct AqWitness {
  uint64_t a = 0;
  uint64_t p = 0;
  uint64_t q = 0;
  friend bool operator==(const AqWitness&, const AqWitness&) = default;
};

/// All qualifying factorizations n = a p q with y = Q/2: a <= y^{1/8}
/// squarefree-compatible, p prime with log(y/p) in L(a), q prime > y^{1/8}.
/// Empty when n is not squarefree or no factorization qualifies.
/// Interval membership is decided by the exact integer equivalent
/// y/d < p <= 2y/d for some d | a.
std::vector<AqWitness> aq_witnesses(uint64_t n, uint64_t q_bound, const SpfTable& table);

/// Membership test with one witness; searches a in ascending order.
std::optional<AqWitness> aq_member(uint64_t n, uint64_t q_bound, const SpfTable& table);

/// One row of the normalized I_Q ratio table.
struct RatioRow {
  uint64_t q_max = 0;
  BigNat i_q;           // exact |F_Q + F_Q|
  double ratio = 0.0;   // I_Q (log Q)^delta (log log Q)^{3/2} / Q^4
  double ford = 0.0;    // ford_sum(Q)
  double ford_ratio = 0.0;
};

/// Exact I_Q with the normalization I_Q (log Q)^delta (log log Q)^{3/2} / Q^4
/// for each requested Q.
/// Rows follow the input order. Requires every Q > e.
std::vector<RatioRow> theorem1_table(const std::vector<uint64_t>& q_values, unsigned shards,
                                     const SpfTable& table);

}  // namespace farey
