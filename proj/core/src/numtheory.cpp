#include "farey/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>

namespace farey {

namespace {
constexpr uint64_t kSpfMaxLimit = uint64_t{1} << 32;
constexpr uint64_t kLcmBigMaxQ = 100'000'000;
constexpr std::size_t kMaxOmegaForDivisors = 25;
constexpr std::array<char, 6> kSieveMagic = {'F', 'R', 'S', 'P', 'F', '1'};
}  // namespace

SpfTable::SpfTable(uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("SpfTable: limit must be >= 2");
  if (limit >= kSpfMaxLimit) throw ResourceLimitError("SpfTable: limit exceeds 32-bit entries");
  spf_.assign(limit + 1, 0);
  for (uint64_t i = 2; i <= limit; i += 2) spf_[i] = 2;
  for (uint64_t p = 3; p * p <= limit; p += 2) {
    if (spf_[p] != 0) continue;
    for (uint64_t m = p * p; m <= limit; m += 2 * p) {
      if (spf_[m] == 0) spf_[m] = static_cast<uint32_t>(p);
    }
  }
  // remaining zeros are primes
  for (uint64_t n = 3; n <= limit; n += 2) {
    if (spf_[n] == 0) spf_[n] = static_cast<uint32_t>(n);
  }
}

uint32_t SpfTable::spf(uint64_t n) const {
  if (n < 2 || n > limit_) throw std::out_of_range("SpfTable::spf: n out of range");
  return spf_[n];
}

bool SpfTable::is_prime(uint64_t n) const {
  if (n < 2) return false;
  if (n > limit_) throw std::out_of_range("SpfTable::is_prime: n out of range");
  return spf_[n] == n;
}

Factorization SpfTable::factorize(uint64_t n) const {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  if (n > limit_) throw std::out_of_range("factorize: n exceeds table limit");
  Factorization f;
  f.n = n;
  while (n > 1) {
    const uint64_t p = spf_[n];
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

void SpfTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("SpfTable::save: cannot open " + path.string());
  out.write(kSieveMagic.data(), kSieveMagic.size());
  uint64_t lim_le = limit_;  // this toolkit targets little-endian hosts
  out.write(reinterpret_cast<const char*>(&lim_le), sizeof(lim_le));
  out.write(reinterpret_cast<const char*>(spf_.data()),
            static_cast<std::streamsize>(spf_.size() * sizeof(uint32_t)));
  if (!out) throw std::runtime_error("SpfTable::save: write failed");
}

SpfTable SpfTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("SpfTable::load: cannot open " + path.string());
  std::array<char, 6> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kSieveMagic) throw std::runtime_error("SpfTable::load: bad magic");
  uint64_t limit = 0;
  in.read(reinterpret_cast<char*>(&limit), sizeof(limit));
  if (!in || limit < 2 || limit >= kSpfMaxLimit)
    throw std::runtime_error("SpfTable::load: bad limit");
  SpfTable t;
  t.limit_ = limit;
  t.spf_.assign(limit + 1, 0);
  in.read(reinterpret_cast<char*>(t.spf_.data()),
          static_cast<std::streamsize>(t.spf_.size() * sizeof(uint32_t)));
  if (!in || in.gcount() != static_cast<std::streamsize>(t.spf_.size() * sizeof(uint32_t)))
    throw std::runtime_error("SpfTable::load: truncated table");
  return t;
}

Factorization trial_factorize(uint64_t n) {
  if (n == 0) throw std::invalid_argument("trial_factorize: n must be positive");
  Factorization f;
  f.n = n;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

uint64_t euler_phi(const Factorization& f) {
  uint64_t phi = 1;
  for (const auto& [p, e] : f.factors) {
    uint64_t pe1 = 1;
    for (uint32_t i = 1; i < e; ++i) pe1 *= p;
    phi *= pe1 * (p - 1);
  }
  return phi;
}

int moebius(const Factorization& f) {
  for (const auto& pp : f.factors) {
    if (pp.exponent >= 2) return 0;
  }
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

std::vector<uint64_t> divisors(const Factorization& f) {
  if (f.omega() > kMaxOmegaForDivisors)
    throw ResourceLimitError("divisors: omega(n) > 25");
  std::vector<uint64_t> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = divs.size();
    uint64_t pe = 1;
    for (uint32_t i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<std::pair<uint64_t, uint64_t>> unitary_splits(const Factorization& f) {
  if (f.omega() > kMaxOmegaForDivisors)
    throw ResourceLimitError("unitary_splits: omega(n) > 25");
  std::vector<uint64_t> parts{1};
  for (const auto& [p, e] : f.factors) {
    uint64_t pe = 1;
    for (uint32_t i = 0; i < e; ++i) pe *= p;
    const std::size_t base = parts.size();
    for (std::size_t j = 0; j < base; ++j) parts.push_back(parts[j] * pe);
  }
  std::sort(parts.begin(), parts.end());
  std::vector<std::pair<uint64_t, uint64_t>> splits;
  splits.reserve(parts.size());
  for (uint64_t d : parts) splits.emplace_back(d, f.n / d);
  return splits;
}

std::vector<uint32_t> primes_up_to(uint32_t limit) {
  std::vector<uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<uint32_t>(p));
    for (uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return primes;
}

uint64_t prime_pi(uint64_t limit) {
  if (limit > kSpfMaxLimit) throw ResourceLimitError("prime_pi: limit too large");
  return primes_up_to(static_cast<uint32_t>(limit)).size();
}

double chebyshev_psi(uint64_t q_max) {
  if (q_max == 0) throw std::invalid_argument("chebyshev_psi: Q must be positive");
  if (q_max > kSpfMaxLimit) throw ResourceLimitError("chebyshev_psi: Q too large");
  double psi = 0.0;
  for (uint32_t p : primes_up_to(static_cast<uint32_t>(q_max))) {
    uint32_t k = 0;
    uint64_t pe = 1;
    while (pe <= q_max / p) {
      pe *= p;
      ++k;
    }
    psi += static_cast<double>(k) * std::log(static_cast<double>(p));
  }
  return psi;
}

BigNat lcm_big(uint64_t q_max) {
  if (q_max == 0) throw std::invalid_argument("lcm_big: Q must be positive");
  if (q_max > kLcmBigMaxQ) throw ResourceLimitError("lcm_big: Q exceeds cap");
  BigNat result = 1;
  for (uint32_t p : primes_up_to(static_cast<uint32_t>(q_max))) {
    uint64_t pe = p;
    while (pe <= q_max / p) pe *= p;
    result *= pe;
  }
  return result;
}

}  // namespace farey
