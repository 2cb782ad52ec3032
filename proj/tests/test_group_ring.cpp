#include <doctest.h>

#include <numeric>
#include <random>

#include "farey/group_ring.hpp"

using namespace farey;

namespace {

DenseElement element_of(std::vector<DenseElement::Term> terms) {
  return DenseElement::from_terms(std::move(terms));
}

ClassSumCombo combo_of(std::initializer_list<std::pair<uint64_t, int64_t>> init) {
  ClassSumCombo c;
  for (const auto& [q, v] : init) c[q] = v;
  return c;
}

}  // namespace

TEST_CASE("class_sum") {
  CHECK(class_sum(1) == element_of({{{0, 1}, 1}}));
  CHECK(class_sum(4) == element_of({{{1, 4}, 1}, {{3, 4}, 1}}));
  CHECK(class_sum(6) == element_of({{{1, 6}, 1}, {{5, 6}, 1}}));
  CHECK(class_sum(12).terms().size() == 4);  // phi(12)
}

TEST_CASE("dense_multiply") {
  const DenseElement half = element_of({{{1, 2}, 1}});
  CHECK(dense_multiply(half, half) == element_of({{{0, 1}, 1}}));

  // (z^{1/3} + z^{2/3})^2 = 2 z^0 + z^{1/3} + z^{2/3}
  const DenseElement f3sq = dense_multiply(class_sum(3), class_sum(3));
  CHECK(f3sq == element_of({{{0, 1}, 2}, {{1, 3}, 1}, {{2, 3}, 1}}));

  CHECK(dense_multiply(class_sum(5), DenseElement{}).empty());
}

TEST_CASE("collapse") {
  const DenseElement f3sq = dense_multiply(class_sum(3), class_sum(3));
  CHECK(collapse(f3sq) == combo_of({{1, 2}, {3, 1}}));
  CHECK(collapse(element_of({{{0, 1}, 5}})) == combo_of({{1, 5}}));
  CHECK_THROWS_AS(collapse(element_of({{{1, 3}, 1}})), NotClassConstantError);
  CHECK_THROWS_AS(collapse(element_of({{{1, 3}, 1}, {{2, 3}, 2}})), NotClassConstantError);
  CHECK(collapse(DenseElement{}).empty());
}

TEST_CASE("d_prime") {
  auto r = d_prime(4, 2);
  CHECK(r.d == 2);
  CHECK(r.d_prime == 1);
  r = d_prime(6, 6);
  CHECK(r.d == 6);
  CHECK(r.d_prime == 6);
  r = d_prime(12, 18);
  CHECK(r.d == 6);
  CHECK(r.d_prime == 1);

  // defining properties on a sweep
  for (uint64_t q = 1; q <= 40; ++q) {
    for (uint64_t rr = 1; rr <= 40; ++rr) {
      const auto [d, dp] = d_prime(q, rr);
      CHECK(d == std::gcd(q, rr));
      CHECK(d % dp == 0);
      CHECK(std::gcd(dp, q / d) == 1);
      CHECK(std::gcd(dp, rr / d) == 1);
      // maximality: no prime factor of d/dp could be appended
      for (const auto& pp : trial_factorize(d / dp).factors) {
        CHECK((((q / d) % pp.prime == 0) || ((rr / d) % pp.prime == 0)));
      }
    }
  }
}

TEST_CASE("c_coeff") {
  CHECK(c_coeff(1, 1) == Rational{1, 1});
  CHECK(c_coeff(2, 1) == Rational{0, 1});
  CHECK(c_coeff(6, 2) == Rational{1, 2});
  CHECK_THROWS_AS(c_coeff(6, 4), std::invalid_argument);
}

TEST_CASE("fq_product closed form") {
  CHECK(fq_product(2, 3) == combo_of({{6, 1}}));
  CHECK(fq_product(2, 2) == combo_of({{1, 1}}));
  CHECK(fq_product(3, 3) == combo_of({{1, 2}, {3, 1}}));
  CHECK(fq_product(12, 18) == combo_of({{36, 2}}));
}

TEST_CASE("fq_power_prime") {
  CHECK(fq_power_prime(2, 1, 2) == combo_of({{4, 1}}));
  CHECK(fq_power_prime(3, 1, 1) == combo_of({{1, 2}, {3, 1}}));
  CHECK(fq_power_prime(2, 2, 2) == combo_of({{1, 2}, {2, 2}}));  // 4-term vanishes
  CHECK_THROWS_AS(fq_power_prime(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(fq_power_prime(4, 1, 1), std::invalid_argument);
}

TEST_CASE("fq_power_prime matches the convolution oracle") {
  for (uint64_t p : {2, 3, 5, 7}) {
    for (uint32_t alpha = 1; alpha <= 4; ++alpha) {
      for (uint32_t beta = alpha; beta <= 4; ++beta) {
        uint64_t pa = 1, pb = 1;
        for (uint32_t i = 0; i < alpha; ++i) pa *= p;
        for (uint32_t i = 0; i < beta; ++i) pb *= p;
        const auto oracle = collapse(dense_multiply(class_sum(pa), class_sum(pb)));
        CHECK(fq_power_prime(p, alpha, beta) == oracle);
        CHECK(fq_product(pa, pb) == oracle);
      }
    }
  }
}

TEST_CASE("fq_product_squarefree") {
  CHECK(fq_product_squarefree(6, 6) == combo_of({{1, 2}, {3, 1}}));
  CHECK(fq_product_squarefree(2, 3) == combo_of({{6, 1}}));
  CHECK(fq_product_squarefree(15, 15) == fq_product(15, 15));
  CHECK_THROWS_AS(fq_product_squarefree(4, 3), std::invalid_argument);
}

TEST_CASE("oracle equivalence and structural invariants up to 60") {
  for (uint64_t q = 1; q <= 60; ++q) {
    const DenseElement fq = class_sum(q);
    for (uint64_t r = 1; r <= 60; ++r) {
      const ClassSumCombo closed = fq_product(q, r);
      REQUIRE(collapse(dense_multiply(fq, class_sum(r))) == closed);

      // every order divides qr
      for (const auto& [order, coeff] : closed) {
        CHECK((q * r) % order == 0);
        CHECK(coeff > 0);
      }

      // d' = 1 forces the single term phi(d) F_{qr/d}
      const auto [d, dp] = d_prime(q, r);
      if (dp == 1) {
        REQUIRE(closed.size() == 1);
        CHECK(closed.begin()->first == q * r / d);
        CHECK(closed.begin()->second ==
              static_cast<int64_t>(euler_phi(trial_factorize(d))));
      }
    }
  }
}

TEST_CASE("mass conservation up to 200") {
  for (uint64_t q = 1; q <= 200; ++q) {
    const uint64_t phi_q = euler_phi(trial_factorize(q));
    for (uint64_t r = 1; r <= 200; ++r) {
      uint64_t mass = 0;
      for (const auto& [order, coeff] : fq_product(q, r)) {
        mass += static_cast<uint64_t>(coeff) * euler_phi(trial_factorize(order));
      }
      REQUIRE(mass == phi_q * euler_phi(trial_factorize(r)));
    }
  }
}

TEST_CASE("dense_multiply is commutative and associative") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<uint64_t> den_dist(1, 30);
  std::uniform_int_distribution<int64_t> coeff_dist(-5, 5);
  std::uniform_int_distribution<int> size_dist(0, 6);

  auto random_element = [&]() {
    std::vector<DenseElement::Term> terms;
    const int size = size_dist(rng);
    for (int i = 0; i < size; ++i) {
      const uint64_t q = den_dist(rng);
      std::uniform_int_distribution<uint64_t> num_dist(0, q - 1);
      terms.push_back({make_fraction(num_dist(rng), q), coeff_dist(rng)});
    }
    return DenseElement::from_terms(std::move(terms));
  };

  for (int trial = 0; trial < 200; ++trial) {
    const DenseElement x = random_element();
    const DenseElement y = random_element();
    const DenseElement z = random_element();
    CHECK(dense_multiply(x, y) == dense_multiply(y, x));
    CHECK(dense_multiply(dense_multiply(x, y), z) == dense_multiply(x, dense_multiply(y, z)));
  }
}

TEST_CASE("make_fraction canonicalizes") {
  CHECK(make_fraction(4, 6) == FareyFraction{2, 3});
  CHECK(make_fraction(6, 6) == FareyFraction{0, 1});
  CHECK(make_fraction(7, 6) == FareyFraction{1, 6});
  CHECK_THROWS_AS(make_fraction(1, 0), std::invalid_argument);
}
