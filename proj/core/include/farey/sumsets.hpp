#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "farey/group_ring.hpp"
#include "farey/numtheory.hpp"

namespace farey {

/// Result of an exact k-fold sumset count.
struct SumsetReport {
  uint64_t q_max = 0;
  uint64_t k = 0;
  BigNat cardinality;          // I_Q(k) = sum of phi(n) over representable n
  BigNat representable_count;  // number of n <= Q^k with a valid factorization
  double elapsed_seconds = 0.0;
};

/// The k-fold sumset F_Q + ... + F_Q as explicit reduced fractions.
struct FareySet {
  uint64_t q_max = 0;
  std::vector<FareyFraction> elements;  // sorted ascending
};

/// tau*_Q(n): ordered unitary splits (d, n/d) with both parts <= Q.
uint64_t tau_star(const Factorization& n, uint64_t q_max);

/// True iff n = n_1 ... n_k with every n_i <= Q and pairwise coprime
/// (n_i = 1 allowed). Depth-first search over groupings of the prime-power
/// components, memoized on the multiset of component sizes.
bool representable(const Factorization& n, uint64_t q_max, uint64_t k);

/// Exact I_Q(k) by streaming n over [1, Q^k] in fixed-width segments with
/// per-segment factorization. `shards` worker threads pull segments from a
/// shared queue; the reduction is exact integer addition, so the result is
/// identical for any shard count.
SumsetReport sumset_cardinality(uint64_t q_max, uint64_t k, unsigned shards = 1);

/// Direct enumeration of the k-fold sumset by repeated pairwise addition.
FareySet brute_force_sumset(uint64_t q_max, uint64_t k);

/// log |G_Q| = psi(Q).
double gq_log_order(uint64_t q_max);

struct KScanRow {
  uint64_t k = 0;
  BigNat cardinality;
  double log_cardinality = 0.0;
};

struct KScanResult {
  std::vector<KScanRow> trace;       // k = 1, 2, ... in order
  std::optional<uint64_t> min_k;     // smallest k with log I_Q(k) >= c * log|G_Q|
};

/// Scans k = 1..pi(Q) (at least k = 1) for the smallest k whose exact
/// cardinality satisfies log I_Q(k) >= c * log|G_Q|.
KScanResult min_k_scan(uint64_t q_max, double c, unsigned shards = 1);

}  // namespace farey
