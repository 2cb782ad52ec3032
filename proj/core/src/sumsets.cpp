#include "farey/sumsets.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace farey {

namespace {

constexpr uint64_t kMaxStreamN = 300'000'000;  // budget for Q^k (Q=2^14, k=2 fits)
constexpr uint64_t kSegmentWidth = uint64_t{1} << 17;
constexpr int kMaxComponents = 16;
constexpr uint64_t kBruteForceOpBudget = 600'000'000;

BigNat u128_to_big(unsigned __int128 v) {
  BigNat out = static_cast<uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<uint64_t>(v);
  return out;
}

// Subset of components with product d satisfying n/Q <= d <= Q, i.e. a
// witness for tau*_Q(n) >= 1. Components are prime powers <= Q.
bool split_witness(const uint32_t* vals, int m, int i, uint64_t prod, uint64_t n, uint64_t q_max) {
  if (prod * q_max >= n) return true;  // prod <= Q throughout, so this closes the window
  if (i == m) return false;
  if (prod * vals[i] <= q_max && split_witness(vals, m, i + 1, prod * vals[i], n, q_max))
    return true;
  return split_witness(vals, m, i + 1, prod, n, q_max);
}

// Multiplicative bin packing: group the components into at most k bins with
// every bin product <= Q. Values must be sorted descending.
bool pack_bins(const uint32_t* vals, int m, int i, std::vector<uint64_t>& bins, uint64_t q_max,
               uint64_t k) {
  if (i == m) return true;
  uint64_t prev_load = 0;
  for (std::size_t b = 0; b < bins.size(); ++b) {
    if (bins[b] == prev_load) continue;
    prev_load = bins[b];
    if (bins[b] * vals[i] <= q_max) {
      bins[b] *= vals[i];
      if (pack_bins(vals, m, i + 1, bins, q_max, k)) {
        bins[b] /= vals[i];
        return true;
      }
      bins[b] /= vals[i];
    }
  }
  if (bins.size() < k) {
    bins.push_back(vals[i]);
    if (pack_bins(vals, m, i + 1, bins, q_max, k)) {
      bins.pop_back();
      return true;
    }
    bins.pop_back();
  }
  return false;
}

struct MemoKey {
  uint64_t lo = 0;
  uint64_t hi = 0;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL;
    h ^= k.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Representability of n given its prime-power components. `memo`, when
// non-null, caches the k >= 3 packing decision keyed on the sorted multiset
// of component sizes (12 bits each; sizes are < 2^12 whenever k >= 3 fits
// the stream budget).
bool representable_components(const uint32_t* comps, int m, uint64_t n, uint64_t q_max, uint64_t k,
                              std::unordered_map<MemoKey, bool, MemoKeyHash>* memo) {
  for (int i = 0; i < m; ++i) {
    if (comps[i] > q_max) return false;
  }
  if (k == 1) return n <= q_max;
  if (static_cast<uint64_t>(m) <= k) return true;  // one component per part
  if (k == 2) return split_witness(comps, m, 0, 1, n, q_max);

  uint32_t sorted[kMaxComponents];
  std::copy(comps, comps + m, sorted);
  std::sort(sorted, sorted + m, std::greater<>());

  MemoKey key;
  const bool keyed = memo != nullptr && m <= 9 && sorted[0] < (uint32_t{1} << 12);
  if (keyed) {
    for (int i = 0; i < m; ++i) {
      if (i < 5) {
        key.lo = (key.lo << 12) | sorted[i];
      } else {
        key.hi = (key.hi << 12) | sorted[i];
      }
    }
    key.hi = (key.hi << 4) | static_cast<uint64_t>(m);
    if (auto it = memo->find(key); it != memo->end()) return it->second;
  }
  std::vector<uint64_t> bins;
  bins.reserve(k);
  const bool ok = pack_bins(sorted, m, 0, bins, q_max, k);
  if (keyed) memo->emplace(key, ok);
  return ok;
}

uint64_t checked_pow(uint64_t base, uint64_t exp) {
  unsigned __int128 v = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > kMaxStreamN) throw ResourceLimitError("sumset_cardinality: Q^k exceeds stream budget");
  }
  return static_cast<uint64_t>(v);
}

struct StreamTotals {
  unsigned __int128 phi_sum = 0;
  uint64_t count = 0;
};

// One worker: pulls segments [lo, lo+W) off the shared counter, factors every
// n in the segment against the shared prime list, and tests representability.
void stream_worker(uint64_t n_max, uint64_t q_max, uint64_t k, const std::vector<uint32_t>& primes,
                   std::atomic<uint64_t>& next_segment, StreamTotals& totals) {
  std::vector<uint64_t> rem(kSegmentWidth);
  std::vector<uint64_t> phi(kSegmentWidth);
  std::vector<uint32_t> comps(kSegmentWidth * kMaxComponents);
  std::vector<uint8_t> ncomp(kSegmentWidth);
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo;

  const uint64_t n_segments = (n_max + kSegmentWidth - 1) / kSegmentWidth;
  for (;;) {
    const uint64_t seg = next_segment.fetch_add(1, std::memory_order_relaxed);
    if (seg >= n_segments) break;
    const uint64_t lo = seg * kSegmentWidth + 1;
    const uint64_t hi = std::min(lo + kSegmentWidth, n_max + 1);  // half-open
    const uint64_t len = hi - lo;
    for (uint64_t i = 0; i < len; ++i) {
      rem[i] = lo + i;
      phi[i] = 1;
      ncomp[i] = 0;
    }
    for (uint32_t p : primes) {
      const uint64_t p64 = p;
      for (uint64_t m = ((lo + p64 - 1) / p64) * p64; m < hi; m += p64) {
        const uint64_t i = m - lo;
        uint64_t pe = 1;
        uint64_t pe_prev = 1;
        while (rem[i] % p64 == 0) {
          rem[i] /= p64;
          pe_prev = pe;
          pe *= p64;
        }
        phi[i] *= pe - pe_prev;
        comps[i * kMaxComponents + ncomp[i]++] = static_cast<uint32_t>(pe);
      }
    }
    for (uint64_t i = 0; i < len; ++i) {
      if (rem[i] > 1) {
        // leftover prime above the sieving bound
        phi[i] *= rem[i] - 1;
        comps[i * kMaxComponents + ncomp[i]++] = static_cast<uint32_t>(rem[i]);
      }
      const uint64_t n = lo + i;
      if (representable_components(&comps[i * kMaxComponents], ncomp[i], n, q_max, k, &memo)) {
        totals.phi_sum += phi[i];
        ++totals.count;
      }
    }
  }
}

}  // namespace

uint64_t tau_star(const Factorization& n, uint64_t q_max) {
  if (q_max == 0) throw std::invalid_argument("tau_star: Q must be positive");
  uint64_t count = 0;
  for (const auto& [d, cod] : unitary_splits(n)) {
    if (d <= q_max && cod <= q_max) ++count;
  }
  return count;
}

bool representable(const Factorization& n, uint64_t q_max, uint64_t k) {
  if (q_max == 0 || k == 0)
    throw std::invalid_argument("representable: Q and k must be positive");
  if (n.omega() > static_cast<std::size_t>(kMaxComponents))
    throw ResourceLimitError("representable: too many prime factors");
  uint32_t comps[kMaxComponents];
  int m = 0;
  for (const auto& [p, e] : n.factors) {
    uint64_t pe = 1;
    for (uint32_t i = 0; i < e; ++i) pe *= p;
    if (pe > q_max) return false;
    comps[m++] = static_cast<uint32_t>(pe);
  }
  return representable_components(comps, m, n.n, q_max, k, nullptr);
}

SumsetReport sumset_cardinality(uint64_t q_max, uint64_t k, unsigned shards) {
  if (q_max == 0 || k == 0)
    throw std::invalid_argument("sumset_cardinality: Q and k must be positive");
  if (shards == 0) shards = 1;
  const auto t0 = std::chrono::steady_clock::now();
  const uint64_t n_max = checked_pow(q_max, k);
  const auto primes = primes_up_to(static_cast<uint32_t>(std::sqrt(static_cast<double>(n_max))) + 2);

  std::atomic<uint64_t> next_segment{0};
  std::vector<StreamTotals> totals(shards);
  if (shards == 1) {
    stream_worker(n_max, q_max, k, primes, next_segment, totals[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) {
      workers.emplace_back(stream_worker, n_max, q_max, k, std::cref(primes),
                           std::ref(next_segment), std::ref(totals[s]));
    }
    for (auto& w : workers) w.join();
  }

  SumsetReport report;
  report.q_max = q_max;
  report.k = k;
  report.cardinality = 0;
  report.representable_count = 0;
  for (const auto& t : totals) {
    report.cardinality += u128_to_big(t.phi_sum);
    report.representable_count += t.count;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

FareySet brute_force_sumset(uint64_t q_max, uint64_t k) {
  if (q_max == 0 || k == 0)
    throw std::invalid_argument("brute_force_sumset: Q and k must be positive");

  std::vector<FareyFraction> base;
  for (uint64_t q = 1; q <= q_max; ++q) {
    const DenseElement cs = class_sum(q);
    for (const auto& [f, c] : cs.terms()) base.push_back(f);
  }

  auto key_of = [](const FareyFraction& f) { return (f.num << 32) | f.den; };

  std::vector<FareyFraction> current = base;
  for (uint64_t round = 1; round < k; ++round) {
    if (current.size() * base.size() > kBruteForceOpBudget)
      throw ResourceLimitError("brute_force_sumset: enumeration too large");
    std::unordered_set<uint64_t> seen;
    seen.reserve(current.size() * 2);
    std::vector<FareyFraction> next;
    for (const auto& s : current) {
      for (const auto& f : base) {
        const FareyFraction sum = add_mod1(s, f);
        if (seen.insert(key_of(sum)).second) next.push_back(sum);
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return {q_max, std::move(current)};
}

double gq_log_order(uint64_t q_max) { return chebyshev_psi(q_max); }

KScanResult min_k_scan(uint64_t q_max, double c, unsigned shards) {
  if (q_max == 0) throw std::invalid_argument("min_k_scan: Q must be positive");
  if (!(c > 0.0) || c > 1.0) throw std::invalid_argument("min_k_scan: c must be in (0,1]");
  const double target = c * gq_log_order(q_max);
  const uint64_t k_max = std::max<uint64_t>(prime_pi(q_max), 1);

  KScanResult result;
  for (uint64_t k = 1; k <= k_max; ++k) {
    const SumsetReport report = sumset_cardinality(q_max, k, shards);
    KScanRow row;
    row.k = k;
    row.cardinality = report.cardinality;
    row.log_cardinality = std::log(report.cardinality.convert_to<double>());
    result.trace.push_back(row);
    if (row.log_cardinality >= target - 1e-9) {
      result.min_k = k;
      break;
    }
  }
  return result;
}

}  // namespace farey
