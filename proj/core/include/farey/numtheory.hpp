#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace farey {

/// Arbitrary-precision nonnegative integer.
using BigNat = boost::multiprecision::cpp_int;

/// Thrown when a computation would exceed a configured resource cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  uint64_t prime = 0;
  uint32_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime decomposition of n with strictly increasing primes.
/// The factor list is empty iff n == 1.
struct Factorization {
  uint64_t n = 1;
  std::vector<PrimePower> factors;

  std::size_t omega() const { return factors.size(); }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Smallest-prime-factor table for 2..limit.
/// Stored as one 32-bit entry per integer (4 bytes per entry), so a table
/// up to 10^8 costs ~400 MB; ranges beyond that go through the segmented
/// machinery in sumsets.cpp instead of a flat table.
class SpfTable {
 public:
  explicit SpfTable(uint64_t limit);

  uint64_t limit() const { return limit_; }
  uint32_t spf(uint64_t n) const;
  bool is_prime(uint64_t n) const;
  Factorization factorize(uint64_t n) const;

  /// Binary cache: magic "FRSPF1", little-endian 64-bit limit, packed
  /// 32-bit entries for 0..limit.
  void save(const std::filesystem::path& path) const;
  static SpfTable load(const std::filesystem::path& path);

 private:
  SpfTable() = default;
  uint64_t limit_ = 0;
  std::vector<uint32_t> spf_;
};

/// Factorization by trial division, independent of any table.
Factorization trial_factorize(uint64_t n);

uint64_t euler_phi(const Factorization& f);

/// 0 if any exponent >= 2, else (-1)^omega(n).
int moebius(const Factorization& f);

/// All divisors in increasing order; refuses omega(n) > 25.
std::vector<uint64_t> divisors(const Factorization& f);

/// All ordered pairs (d, n/d) with gcd(d, n/d) = 1, exactly 2^omega(n)
/// of them, ordered by increasing d.
std::vector<std::pair<uint64_t, uint64_t>> unitary_splits(const Factorization& f);

std::vector<uint32_t> primes_up_to(uint32_t limit);

uint64_t prime_pi(uint64_t limit);

/// psi(Q) = sum of log p over prime powers p^k <= Q, accumulated in
/// increasing prime order. Equals log lcm{1,...,Q}.
double chebyshev_psi(uint64_t q_max);

/// Exact lcm{1,...,Q} = prod_{p<=Q} p^floor(log_p Q).
/// The result has ~Q/ln 2 bits; Q is capped at 10^8.
BigNat lcm_big(uint64_t q_max);

}  // namespace farey
