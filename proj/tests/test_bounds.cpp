#include <cmath>

#include "doctest.h"
#include "mimocs/bounds.hpp"

using namespace mimocs;

TEST_CASE("c_delta closed form") {
  // independent arithmetic of the closed form, natural log
  CHECK(c_delta(0.5) == doctest::Approx(0.18 / std::log(std::sqrt(3.0) + 1.0)).epsilon(1e-12));
  CHECK(c_delta(0.5) == doctest::Approx(0.17910).epsilon(1e-4));
  CHECK(c_delta(0.9) == doctest::Approx(0.18 / std::log(std::sqrt(19.0) + 1.0)).epsilon(1e-12));
  CHECK(c_delta(0.9) == doctest::Approx(0.10722).epsilon(1e-3));
  // delta -> 0+ limit is 0.18 / log 2
  CHECK(c_delta(1e-12) == doctest::Approx(0.18 / std::log(2.0)).epsilon(1e-9));
  CHECK(c_delta(0.5, LogBase::base2) ==
        doctest::Approx(0.18 / std::log2(std::sqrt(3.0) + 1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(c_delta(0.0), Error);
  CHECK_THROWS_AS(c_delta(1.0), Error);
}

TEST_CASE("single-matrix RIP lower bound") {
  CHECK(rip_lower_single(64, 64, 0.5) == 0.0);
  CHECK(rip_lower_single(64, 4, 0.5) == doctest::Approx(1.9862).epsilon(1e-3));
  // monotone nondecreasing in n
  double prev = 0.0;
  for (int n = 4; n <= 64; ++n) {
    const double v = rip_lower_single(n, 4, 0.5);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(rip_lower_single(4, 5, 0.5), Error);
}

TEST_CASE("loose MIMO bound") {
  BoundInputs in{100, 100, 5, 0.5};
  CHECK(loose_mimo_lower(in) == doctest::Approx(12.3714).epsilon(1e-4));
  // algebraic identity with the single-matrix bound at order 2k
  CHECK(loose_mimo_lower(in) ==
        doctest::Approx(rip_lower_single(100 * 100, 10, 0.5)).epsilon(1e-12));
  // vanishes when n_t n_r = 2k
  BoundInputs tiny{4, 2, 4, 0.5};
  CHECK(loose_mimo_lower(tiny) == doctest::Approx(0.0));
}

TEST_CASE("tight MIMO bound") {
  BoundInputs in{100, 100, 5, 0.5};
  const auto b = tight_mimo_lower(in);
  CHECK(b.value == doctest::Approx(17.0058).epsilon(1e-4));
  // product of the two single-sided order-2k bounds
  CHECK(b.value == doctest::Approx(rip_lower_single(100, 10, 0.5) *
                                   rip_lower_single(100, 10, 0.5)).epsilon(1e-12));
  CHECK(b.unscaled_shape ==
        doctest::Approx(25.0 * std::pow(std::log(20.0), 2)).epsilon(1e-12));
  // n_t = n_r = 2k endpoint
  BoundInputs edge{10, 10, 5, 0.5};
  CHECK(tight_mimo_lower(edge).value == doctest::Approx(0.0));
}

TEST_CASE("m_underbar exact arithmetic") {
  CHECK(m_underbar(15, 15, 0) == 0);
  CHECK(m_underbar(15, 15, 2) == 49);   // ceil(log2 121) = 7
  CHECK(m_underbar(7, 15, 1) == 12);    // 4 * 3
  CHECK(m_underbar(31, 31, 2) == 81);   // ceil(log2 497) = 9
  CHECK(m_underbar(63, 63, 2) == 121);  // ceil(log2 2017) = 11
  CHECK_THROWS_AS(m_underbar(4, 4, 5), Error);
}

TEST_CASE("binomial sandwich bounds") {
  auto r = binomial_bounds_check(4, 1);
  CHECK(r.lower == doctest::Approx(4.0));
  CHECK(r.value == doctest::Approx(4.0));
  CHECK(r.holds);

  r = binomial_bounds_check(15, 2);
  CHECK(r.lower == doctest::Approx(56.25));
  CHECK(r.value == doctest::Approx(105.0));
  CHECK(r.upper == doctest::Approx(415.7).epsilon(1e-3));
  CHECK(r.holds);

  r = binomial_bounds_check(30, 5);
  CHECK(r.lower == doctest::Approx(7776.0));
  CHECK(r.value == doctest::Approx(142506.0));
  CHECK(r.holds);

  CHECK_THROWS_AS(binomial_bounds_check(3, 2), Error);  // needs k < (n+1)/2
}

TEST_CASE("asymptotic ratio audit") {
  const auto rows = asymptotic_ratio_audit({15, 31, 63}, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].m_under == 49);
  CHECK(rows[1].m_under == 81);
  CHECK(rows[2].m_under == 121);
  CHECK(rows[0].m_bch == 64);    // parity_rows(4, 2)^2
  CHECK(rows[1].m_bch == 100);   // parity_rows(5, 2) = 10
  CHECK(rows[2].m_bch == 144);   // parity_rows(6, 2) = 12

  // Theta-consistency: ratios vary by less than a factor of 3 over the grid
  for (auto pick : {&AuditRow::ratio_underbar, &AuditRow::ratio_bch}) {
    double lo = rows[0].*pick, hi = rows[0].*pick;
    for (const auto& r : rows) {
      lo = std::min(lo, r.*pick);
      hi = std::max(hi, r.*pick);
    }
    CHECK(hi / lo < 3.0);
  }

  // determinism: a duplicated grid point gives identical rows
  const auto dup = asymptotic_ratio_audit({15, 15}, 2);
  CHECK(dup[0].m_under == dup[1].m_under);
  CHECK(dup[0].ratio_bch == dup[1].ratio_bch);

  CHECK_THROWS_AS(asymptotic_ratio_audit({16}, 2), Error);
}

TEST_CASE("fig1 curve generators") {
  const auto fixed_k = fig1_fixed_k(5, 5, 100);
  CHECK(fixed_k.front().x == 5);
  CHECK(fixed_k.front().f_loose == doctest::Approx(5.0 * std::log(5.0)));
  CHECK(fixed_k.front().f_tight == doctest::Approx(0.0));
  CHECK(fixed_k.back().x == 100);
  CHECK(fixed_k.back().f_loose == doctest::Approx(38.005).epsilon(1e-4));
  CHECK(fixed_k.back().f_tight == doctest::Approx(224.36).epsilon(1e-4));

  const auto fixed_n = fig1_fixed_n(100, 1, 100);
  CHECK(fixed_n.back().x == 100);
  CHECK(fixed_n.back().f_tight == doctest::Approx(0.0));

  CHECK_THROWS_AS(fig1_fixed_k(5, 4, 3), Error);
}

TEST_CASE("log base plumbing") {
  CHECK(log_base_name(LogBase::natural) == "natural");
  CHECK(log_base_from_name("base2") == LogBase::base2);
  CHECK_THROWS_AS(log_base_from_name("decimal"), Error);
  CHECK(log_b(8.0, LogBase::base2) == doctest::Approx(3.0));
}
