#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "farey/numtheory.hpp"

namespace farey {

/// Thrown by collapse() when an element is not constant on order classes.
class NotClassConstantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A reduced residue a/q representing beta in Q/Z; the additive order of
/// beta is q. Zero is 0/1. Ordered by numeric value.
struct FareyFraction {
  uint64_t num = 0;
  uint64_t den = 1;

  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
  friend bool operator<(const FareyFraction& x, const FareyFraction& y) {
    return static_cast<unsigned __int128>(x.num) * y.den <
           static_cast<unsigned __int128>(y.num) * x.den;
  }
};

/// Canonical fraction (a mod q)/q reduced by gcd.
FareyFraction make_fraction(uint64_t a, uint64_t q);

/// Addition in Q/Z with canonical reduction.
FareyFraction add_mod1(const FareyFraction& x, const FareyFraction& y);

/// Finitely supported integer-coefficient function on Q/Z, i.e. an element
/// of Z(G). Terms are kept sorted by fraction value with no zero coefficients.
class DenseElement {
 public:
  using Term = std::pair<FareyFraction, int64_t>;

  DenseElement() = default;
  static DenseElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int64_t coeff(const FareyFraction& key) const;

  friend bool operator==(const DenseElement&, const DenseElement&) = default;

 private:
  std::vector<Term> terms_;
};

/// Integer combination of class sums F_q keyed by order q; zero
/// coefficients are never stored.
using ClassSumCombo = std::map<uint64_t, int64_t>;

/// Exact rational, reduced, with positive denominator.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  static Rational of(int64_t num, int64_t den);
  Rational operator*(const Rational& other) const;
  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// F_q = sum of z^{a/q} over reduced residues a mod q; phi(q) terms.
DenseElement class_sum(uint64_t q);

/// Convolution product: coeff of gamma is sum over alpha+beta=gamma (mod 1).
DenseElement dense_multiply(const DenseElement& x, const DenseElement& y);

/// Writes x as sum of coeff(q) * F_q; throws NotClassConstantError when x is
/// not constant on some order class.
ClassSumCombo collapse(const DenseElement& x);

/// d = gcd(q,r) and d' = the largest divisor of d coprime to both q/d and
/// r/d (d with every prime dividing (q/d)(r/d) removed entirely).
struct DPrimeResult {
  uint64_t d = 1;
  uint64_t d_prime = 1;
};
DPrimeResult d_prime(uint64_t q, uint64_t r);

/// c(d',e) = prod over p | d', p not dividing e of (1 - 1/(p-1)), exact.
/// Requires e | d'.
Rational c_coeff(uint64_t dp, uint64_t e);

/// Closed-form product F_q x F_r = phi(d) sum_{e|d'} c(d',e) F_{qr/de}.
/// Every coefficient is asserted to be a nonnegative integer.
ClassSumCombo fq_product(uint64_t q, uint64_t r);

/// Prime-power product: phi(p^a) F_{p^b} when a < b, else
/// phi(p^a) sum_{i<=a} F_{p^i} - p^{a-1} F_{p^a}. Requires 1 <= a <= b.
ClassSumCombo fq_power_prime(uint64_t p, uint32_t alpha, uint32_t beta);

/// Squarefree specialization:
/// phi(d) sum_{e|d} (prod_{p|e} (p-2)/(p-1)) F_{qre/d^2}.
ClassSumCombo fq_product_squarefree(uint64_t q, uint64_t r);

}  // namespace farey
