#include <cmath>
#include <random>

#include "cheblab/smoothing.hpp"
#include "doctest.h"

using namespace cheblab;

namespace {

// Irwin-Hall CDF of n uniforms on [0,1].
double irwin_hall_cdf(int n, double y) {
  if (y <= 0) return 0;
  if (y >= n) return 1;
  double s = 0, fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  double binom = 1;
  for (int k = 0; k <= n && k <= y; ++k) {
    s += (k % 2 ? -1 : 1) * binom * std::pow(y - k, n);
    binom = binom * (n - k) / (k + 1);
  }
  return s / fact;
}

// f(t) = P(1/2 <= t + S <= 1 + 2 ell A), S a sum of ell uniforms on [0, 2A].
double f_oracle(const WeightParams& p, double t) {
  double A = p.A();
  double u = 2 * A;
  return irwin_hall_cdf(p.ell, (1 + 2 * p.ell * A - t) / u) - irwin_hall_cdf(p.ell, (0.5 - t) / u);
}

}  // namespace

TEST_CASE("weight shape") {
  WeightParams p{10, 2, 0.1};
  auto f = build_weight(p);
  CHECK(f(0.75) == 1);
  CHECK(f(2) == 0);
  CHECK(f(0.5) == doctest::Approx(1));
  CHECK(f(1.0) == doctest::Approx(1));
  CHECK(f.max_discontinuity() < 1e-14);
  double F0 = F_closed(0.0, p).real();
  CHECK(F0 == doctest::Approx(0.5 + 2 * 2 * p.A()));
  CHECK(F0 > 0.5);
  CHECK(F0 < 0.75);
  CHECK(std::abs(f.integral() - F0) < 1e-12);

  for (int ell : {2, 3, 4, 7}) {
    for (double x : {3.0, 10.0, 1e6}) {
      for (double eps : {0.01, 0.1, 0.24}) {
        WeightParams q{x, ell, eps};
        auto g = build_weight(q);
        CHECK(g.breaks.front() >= 0.5 - eps / std::log(x));
        CHECK(g.breaks.back() <= 1 + eps / std::log(x));
        CHECK(std::abs(g.integral() - F_closed(0.0, q).real()) < 1e-12);
        double lo = g.breaks.front() - 0.01, hi = g.breaks.back() + 0.01;
        for (int i = 0; i <= 400; ++i) {
          double t = lo + (hi - lo) * i / 400.0;
          double v = g(t);
          CHECK(v >= -1e-12);
          CHECK(v <= 1 + 1e-12);
          CHECK(v == doctest::Approx(f_oracle(q, t)).epsilon(1e-9).scale(1));
        }
      }
    }
  }
}

TEST_CASE("weight parameter validation") {
  CHECK_THROWS(build_weight({2.9, 2, 0.1}));
  CHECK_THROWS(build_weight({10, 1, 0.1}));
  CHECK_THROWS(build_weight({10, 2, 0.25}));
  CHECK_THROWS(build_weight({10, 2, 0}));
}

TEST_CASE("closed form against quadrature") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-1, 1);
  for (int ell : {2, 3, 4}) {
    WeightParams p{1e6, ell, 0.01};
    auto f = build_weight(p);
    for (int i = 0; i < 20; ++i) {
      std::complex<double> z(5 * U(rng), 50 * U(rng));
      CHECK(std::abs(F_quadrature(z, f) - F_closed(z, p)) < 1e-8);
    }
    // Series branch near the removable singularity.
    for (double r : {1e-5, 3e-5, 9e-5, 2e-4}) {
      std::complex<double> z(r, -r / 2);
      CHECK(std::abs(F_quadrature(z, f) - F_closed(z, p)) < 1e-12);
    }
  }
}

TEST_CASE("weight bounds") {
  for (int ell : {2, 3, 4}) {
    for (double x : {3.0, 1e3, 1e6}) {
      WeightParams p{x, ell, ell == 2 ? 0.2 : 0.01};
      auto r = verify_weight_bounds(p, 200, 11);
      INFO(r.first_failure);
      CHECK(r.pass);
      CHECK(r.F0_in_range);
      bool any_v = false;
      for (const auto& s : r.samples) {
        if (s.property[0] == 'v' && s.property != "vi") {
          any_v = true;
          CHECK_FALSE(s.asserted);
        }
      }
      CHECK(any_v == (x >= 10));
    }
  }
  // alpha = 0 form of (iv) on a direct evaluation.
  WeightParams p{100, 3, 0.1};
  std::complex<double> s(0.7, 3);
  double L = std::log(100.0);
  double lhs = std::abs(F_closed(-s * L, p));
  CHECK(lhs <= std::exp(0.7 * 0.1) * std::pow(100.0, 0.7) / (std::abs(s) * L) * (1 + std::pow(100.0, -0.35)));
}

TEST_CASE("bump functions") {
  CHECK(Phi1(0.5) == doctest::Approx(4 * std::exp(-1.0)));
  CHECK(Phi2(-1) == 0);
  CHECK(Phi2(0.5) == doctest::Approx(std::exp(-1.0)));
  CHECK(Phi1(-0.5) == 0);
  CHECK(Phi1(1.5) == 0);
  for (double t : {-0.4, 0.0, 0.3, 1.0, 1.4}) CHECK(Phi1(t) <= 2);
  auto r = phi_pair(6);
  CHECK(r.pass);
  CHECK(r.sandwich_violations == 0);
  CHECK(r.grid_points == 10000);
  CHECK(r.phi2_hat_1_refined_diff < 1e-9);
  // Midpoint oracle for hat Phi_2(1) = int Phi_2(u) e^u du.
  const int N = 200000;
  double mid = 0;
  for (int i = 0; i < N; ++i) {
    double u = (i + 0.5) / N;
    mid += Phi2(u) * std::exp(u);
  }
  mid /= N;
  CHECK(r.phi2_hat_1 == doctest::Approx(mid).epsilon(1e-9));
  REQUIRE(r.decay_max_phi1.size() == 6);
  for (int m = 0; m < 6; ++m) {
    CHECK(std::isfinite(r.decay_max_phi1[m]));
    CHECK(std::isfinite(r.decay_max_phi2[m]));
  }
  CHECK_THROWS(phi_pair(7));
}
