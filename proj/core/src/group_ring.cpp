#include "farey/group_ring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace farey {

namespace {

constexpr uint64_t kOrderCap = 1'000'000'000;      // per-argument cap for d_prime/fq_product
constexpr uint64_t kLcmCap = 1'000'000'000'000'000ULL;  // common-denominator cap
constexpr uint64_t kVectorPathMax = uint64_t{1} << 22;

uint64_t checked_lcm(uint64_t a, uint64_t b) {
  const uint64_t g = std::gcd(a, b);
  const unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
  if (l > kLcmCap) throw ResourceLimitError("dense_multiply: common denominator too large");
  return static_cast<uint64_t>(l);
}

}  // namespace

FareyFraction make_fraction(uint64_t a, uint64_t q) {
  if (q == 0) throw std::invalid_argument("make_fraction: zero denominator");
  a %= q;
  if (a == 0) return {0, 1};
  const uint64_t g = std::gcd(a, q);
  return {a / g, q / g};
}

FareyFraction add_mod1(const FareyFraction& x, const FareyFraction& y) {
  const uint64_t l = checked_lcm(x.den, y.den);
  return make_fraction(x.num * (l / x.den) + y.num * (l / y.den), l);
}

DenseElement DenseElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  DenseElement out;
  for (const auto& [key, coeff] : terms) {
    if (key.den == 0 || key.num >= key.den || std::gcd(key.num, key.den) != 1)
      throw std::invalid_argument("DenseElement: non-canonical key");
    if (!out.terms_.empty() && out.terms_.back().first == key) {
      out.terms_.back().second += coeff;
    } else {
      out.terms_.emplace_back(key, coeff);
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.second == 0; });
  return out;
}

int64_t DenseElement::coeff(const FareyFraction& key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const FareyFraction& k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return 0;
}

Rational Rational::of(int64_t num, int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational Rational::operator*(const Rational& other) const {
  // cross-reduce before multiplying to keep intermediates small
  const int64_t g1 = std::gcd(num < 0 ? -num : num, other.den);
  const int64_t g2 = std::gcd(other.num < 0 ? -other.num : other.num, den);
  return Rational::of((num / g1) * (other.num / g2), (den / g2) * (other.den / g1));
}

DenseElement class_sum(uint64_t q) {
  if (q == 0) throw std::invalid_argument("class_sum: q must be positive");
  std::vector<DenseElement::Term> terms;
  if (q == 1) {
    terms.push_back({{0, 1}, 1});
  } else {
    for (uint64_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) == 1) terms.push_back({{a, q}, 1});
    }
  }
  return DenseElement::from_terms(std::move(terms));
}

DenseElement dense_multiply(const DenseElement& x, const DenseElement& y) {
  if (x.empty() || y.empty()) return {};
  uint64_t l = 1;
  for (const auto& [key, coeff] : x.terms()) l = checked_lcm(l, key.den);
  for (const auto& [key, coeff] : y.terms()) l = checked_lcm(l, key.den);

  // residue of a/q scaled to the common denominator l
  auto residue = [l](const FareyFraction& f) { return f.num * (l / f.den); };

  std::vector<DenseElement::Term> terms;
  if (l <= kVectorPathMax) {
    std::vector<int64_t> acc(l, 0);
    for (const auto& [kx, cx] : x.terms()) {
      const uint64_t rx = residue(kx);
      for (const auto& [ky, cy] : y.terms()) {
        uint64_t r = rx + residue(ky);
        if (r >= l) r -= l;
        acc[r] += cx * cy;
      }
    }
    for (uint64_t r = 0; r < l; ++r) {
      if (acc[r] != 0) terms.push_back({make_fraction(r, l), acc[r]});
    }
  } else {
    std::unordered_map<uint64_t, int64_t> acc;
    acc.reserve(x.terms().size() * y.terms().size());
    for (const auto& [kx, cx] : x.terms()) {
      const uint64_t rx = residue(kx);
      for (const auto& [ky, cy] : y.terms()) {
        uint64_t r = rx + residue(ky);
        if (r >= l) r -= l;
        acc[r] += cx * cy;
      }
    }
    for (const auto& [r, c] : acc) {
      if (c != 0) terms.push_back({make_fraction(r, l), c});
    }
  }
  return DenseElement::from_terms(std::move(terms));
}

ClassSumCombo collapse(const DenseElement& x) {
  struct Bucket {
    int64_t coeff = 0;
    uint64_t count = 0;
    bool uniform = true;
  };
  std::unordered_map<uint64_t, Bucket> buckets;
  for (const auto& [key, coeff] : x.terms()) {
    auto& b = buckets[key.den];
    if (b.count == 0) {
      b.coeff = coeff;
    } else if (b.coeff != coeff) {
      b.uniform = false;
    }
    ++b.count;
  }
  ClassSumCombo combo;
  for (const auto& [q, b] : buckets) {
    if (!b.uniform || b.count != euler_phi(trial_factorize(q)))
      throw NotClassConstantError("collapse: element not constant on order class q=" +
                                  std::to_string(q));
    combo[q] = b.coeff;
  }
  return combo;
}

DPrimeResult d_prime(uint64_t q, uint64_t r) {
  if (q == 0 || r == 0) throw std::invalid_argument("d_prime: arguments must be positive");
  if (q > kOrderCap || r > kOrderCap) throw std::out_of_range("d_prime: argument exceeds cap");
  DPrimeResult res;
  res.d = std::gcd(q, r);
  res.d_prime = 1;
  const uint64_t cq = q / res.d;
  const uint64_t cr = r / res.d;
  for (const auto& [p, e] : trial_factorize(res.d).factors) {
    if (cq % p == 0 || cr % p == 0) continue;
    uint64_t pe = 1;
    for (uint32_t i = 0; i < e; ++i) pe *= p;
    res.d_prime *= pe;
  }
  return res;
}

Rational c_coeff(uint64_t dp, uint64_t e) {
  if (dp == 0 || e == 0 || dp % e != 0)
    throw std::invalid_argument("c_coeff: e must divide d'");
  Rational c{1, 1};
  for (const auto& pp : trial_factorize(dp).factors) {
    if (e % pp.prime == 0) continue;
    c = c * Rational::of(static_cast<int64_t>(pp.prime) - 2,
                         static_cast<int64_t>(pp.prime) - 1);
  }
  return c;
}

ClassSumCombo fq_product(uint64_t q, uint64_t r) {
  const auto [d, dp] = d_prime(q, r);
  const uint64_t qr_over_d = (q / d) * r;
  const int64_t phi_d = static_cast<int64_t>(euler_phi(trial_factorize(d)));
  ClassSumCombo combo;
  for (uint64_t e : divisors(trial_factorize(dp))) {
    const Rational coeff = Rational{phi_d, 1} * c_coeff(dp, e);
    if (!coeff.is_integer() || coeff.num < 0)
      throw std::logic_error("fq_product: non-integral or negative coefficient");
    if (coeff.num != 0) combo[qr_over_d / e] = coeff.num;
  }
  return combo;
}

ClassSumCombo fq_power_prime(uint64_t p, uint32_t alpha, uint32_t beta) {
  if (trial_factorize(p).omega() != 1 || trial_factorize(p).factors[0].exponent != 1)
    throw std::invalid_argument("fq_power_prime: p must be prime");
  if (alpha < 1 || alpha > beta)
    throw std::invalid_argument("fq_power_prime: need 1 <= alpha <= beta");
  auto power = [p](uint32_t e) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < e; ++i) v *= p;
    return v;
  };
  const int64_t phi_pa = static_cast<int64_t>(power(alpha) - power(alpha - 1));
  ClassSumCombo combo;
  if (alpha < beta) {
    combo[power(beta)] = phi_pa;
    return combo;
  }
  for (uint32_t i = 0; i + 1 <= alpha; ++i) combo[power(i)] = phi_pa;
  const int64_t top = phi_pa - static_cast<int64_t>(power(alpha - 1));
  if (top != 0) combo[power(alpha)] = top;
  return combo;
}

ClassSumCombo fq_product_squarefree(uint64_t q, uint64_t r) {
  if (q > kOrderCap || r > kOrderCap)
    throw std::out_of_range("fq_product_squarefree: argument exceeds cap");
  const Factorization fq = trial_factorize(q);
  const Factorization fr = trial_factorize(r);
  if (moebius(fq) == 0 || moebius(fr) == 0)
    throw std::invalid_argument("fq_product_squarefree: arguments must be squarefree");
  const uint64_t d = std::gcd(q, r);
  const int64_t phi_d = static_cast<int64_t>(euler_phi(trial_factorize(d)));
  ClassSumCombo combo;
  for (uint64_t e : divisors(trial_factorize(d))) {
    Rational coeff{phi_d, 1};
    for (const auto& pp : trial_factorize(e).factors) {
      coeff = coeff * Rational::of(static_cast<int64_t>(pp.prime) - 2,
                                   static_cast<int64_t>(pp.prime) - 1);
    }
    if (!coeff.is_integer() || coeff.num < 0)
      throw std::logic_error("fq_product_squarefree: non-integral coefficient");
    if (coeff.num != 0) combo[(q / d) * (r / d) * e] += coeff.num;
  }
  return combo;
}

}  // namespace farey
