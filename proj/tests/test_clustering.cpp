#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "farey/clustering.hpp"
#include "farey/sumsets.hpp"

using namespace farey;

namespace {

// Independent sweep-line measure: sort (+1 at lo, -1 at hi) events and
// integrate where the coverage count is positive.
double sweep_line_measure(const Factorization& a) {
  const double log2 = std::log(2.0);
  std::vector<std::pair<double, int>> events;
  for (uint64_t d : divisors(a)) {
    const double logd = std::log(static_cast<double>(d));
    events.push_back({logd - log2, +1});
    events.push_back({logd, -1});
  }
  std::sort(events.begin(), events.end());
  double total = 0.0;
  double last = 0.0;
  int depth = 0;
  for (const auto& [x, delta] : events) {
    if (depth > 0) total += x - last;
    depth += delta;
    last = x;
  }
  return total;
}

double grid_measure(const Factorization& a, std::size_t samples) {
  const double lo = -std::log(2.0);
  const double hi = std::log(static_cast<double>(a.n)) + 1e-12;
  const IntervalSet set = l_set(a);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * (static_cast<double>(i) + 0.5) / samples;
    if (set.contains(x)) ++hits;
  }
  return (hi - lo) * static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace

TEST_CASE("delta constant") {
  CHECK(erdos_ford_delta() > 0.086);
  CHECK(erdos_ford_delta() < 0.0861);
}

TEST_CASE("l_set examples") {
  const double log2 = std::log(2.0);

  const IntervalSet l1 = l_set(trial_factorize(1));
  REQUIRE(l1.intervals().size() == 1);
  CHECK(l1.intervals()[0].lo == doctest::Approx(-log2).epsilon(1e-12));
  CHECK(l1.intervals()[0].hi == doctest::Approx(0.0).epsilon(1e-12));

  const IntervalSet l2 = l_set(trial_factorize(2));
  REQUIRE(l2.intervals().size() == 1);  // touching intervals merged
  CHECK(l2.intervals()[0].lo == doctest::Approx(-log2));
  CHECK(l2.intervals()[0].hi == doctest::Approx(log2));

  const IntervalSet l6 = l_set(trial_factorize(6));
  REQUIRE(l6.intervals().size() == 1);
  CHECK(l6.intervals()[0].hi == doctest::Approx(std::log(6.0)));
}

TEST_CASE("l_measure examples") {
  const double log2 = std::log(2.0);
  CHECK(l_measure(trial_factorize(1)) == doctest::Approx(log2).epsilon(1e-12));
  CHECK(l_measure(trial_factorize(3)) == doctest::Approx(2 * log2).epsilon(1e-12));
  CHECK(l_measure(trial_factorize(6)) == doctest::Approx(std::log(12.0)).epsilon(1e-12));
}

TEST_CASE("interval normalization is idempotent and measure is additive") {
  for (uint64_t a : {1, 12, 120, 7560, 9973}) {
    const IntervalSet set = l_set(trial_factorize(a));
    std::vector<Interval> again(set.intervals());
    CHECK(IntervalSet::from_intervals(again).intervals() == set.intervals());
    double sum = 0.0;
    for (std::size_t i = 0; i < set.intervals().size(); ++i) {
      const auto& iv = set.intervals()[i];
      CHECK(iv.lo < iv.hi);
      if (i > 0) CHECK(set.intervals()[i - 1].hi < iv.lo);
      sum += iv.hi - iv.lo;
    }
    CHECK(set.measure() == doctest::Approx(sum).epsilon(1e-15));
  }
}

TEST_CASE("sweep-line oracle and bounds, a <= 2000") {
  const double log2 = std::log(2.0);
  SpfTable table(2000);
  for (uint64_t a = 1; a <= 2000; ++a) {
    const Factorization f = table.factorize(a);
    const double m = l_measure(f);
    REQUIRE(std::abs(m - sweep_line_measure(f)) <= 1e-12);
    REQUIRE(std::abs(m - l_set(f).measure()) <= 1e-12);
    const double tau = static_cast<double>(divisors(f).size());
    REQUIRE(m >= log2 - 1e-12);
    REQUIRE(m <= tau * log2 + 1e-12);
    if (a > 1) REQUIRE(m > log2 + 1e-12);  // left equality only at a = 1
  }
}

TEST_CASE("grid sanity for the measure") {
  for (uint64_t a : {1, 6, 36, 720, 5040}) {
    const Factorization f = trial_factorize(a);
    CHECK(std::abs(l_measure(f) - grid_measure(f, 1'000'000)) <= 1e-2);
  }
}

TEST_CASE("ford_sum small values") {
  const double log2 = std::log(2.0);
  SpfTable table(100);
  CHECK(ford_sum(1, table) == doctest::Approx(log2).epsilon(1e-15));
  CHECK(ford_sum(2, table) == doctest::Approx(1.5 * log2).epsilon(1e-13));
  CHECK(ford_sum(3, table) ==
        doctest::Approx(1.5 * log2 + (2.0 / 9.0) * 2 * log2).epsilon(1e-13));
}

TEST_CASE("ford_ratio") {
  SpfTable table(20000);
  CHECK(ford_ratio(3, table) > 0.0);
  CHECK(std::isfinite(ford_ratio(3, table)));
  CHECK(ford_ratio(16, table) > 0.0);
  CHECK_THROWS_AS(ford_ratio(2, table), std::invalid_argument);
}

TEST_CASE("tau_interval") {
  const Factorization f12 = trial_factorize(12);
  CHECK(tau_interval(f12, 2, 6) == 3);
  CHECK(tau_interval(f12, 12, 13) == 0);
  CHECK(tau_interval(f12, 0, 12) == 6);
  CHECK_THROWS_AS(tau_interval(f12, 5, 5), std::invalid_argument);
}

TEST_CASE("aq membership") {
  SpfTable table(20000);
  const auto w = aq_member(4717, 100, table);
  REQUIRE(w.has_value());
  CHECK(*w == AqWitness{1, 53, 89});

  CHECK(!aq_member(4 * 9 * 53, 100, table).has_value());  // not squarefree
  CHECK(!aq_member(30, 100, table).has_value());
  CHECK_THROWS_AS(aq_member(6000, 100, table), std::out_of_range);
  CHECK_THROWS_AS(aq_member(5, 3, table), std::invalid_argument);
}

TEST_CASE("A_Q structural invariants at Q=100") {
  const uint64_t q_bound = 100;
  const double y = q_bound / 2.0;
  SpfTable table(q_bound * q_bound / 2);
  std::size_t members = 0;
  for (uint64_t n = 1; n <= q_bound * q_bound / 2; ++n) {
    const auto witnesses = aq_witnesses(n, q_bound, table);
    if (witnesses.empty()) continue;
    ++members;
    const Factorization f = table.factorize(n);
    REQUIRE(moebius(f) != 0);
    REQUIRE(tau_interval(f, y, 2 * y) >= 1);
    REQUIRE(witnesses.size() <= 2);
    for (const auto& w : witnesses) {
      REQUIRE(w.a * w.p * w.q == n);
      REQUIRE(static_cast<double>(w.p) >= std::pow(y, 7.0 / 8.0) - 1e-9);
      REQUIRE(static_cast<double>(w.p) <= 2 * y + 1e-9);
    }
  }
  CHECK(members > 0);
}

TEST_CASE("theorem1_table") {
  SpfTable table(1000);
  const auto rows = theorem1_table({3, 16}, 1, table);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].i_q == 6);
  CHECK(rows[1].q_max == 16);
  CHECK(rows[1].ratio > 0.0);
  CHECK(std::isfinite(rows[1].ratio));
  CHECK_THROWS_AS(theorem1_table({2}, 1, table), std::invalid_argument);
}
