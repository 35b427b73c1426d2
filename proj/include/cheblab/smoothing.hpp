#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace cheblab {

struct WeightParams {
  double x = 3;
  int ell = 2;
  double eps = 0.1;
  double A() const;  // eps / (2 ell log x)
  void validate() const;
};

/// Piecewise polynomial; piece i lives on [breaks[i], breaks[i+1]] and is a
/// polynomial in the local variable u = (t - breaks[i]) / width in [0, 1].
/// Zero outside [breaks.front(), breaks.back()].
struct PiecewisePoly {
  std::vector<double> breaks;
  std::vector<std::vector<double>> coeffs;  // constant term first
  double operator()(double t) const;
  double integral() const;
  /// Largest jump between adjacent pieces (and against zero at the ends).
  double max_discontinuity() const;
};

/// f = indicator of [1/2, 1 + 2 ell A] convolved with ell uniform densities
/// on [-2A, 0]. Throws if (i) or (ii) fails on the breakpoint structure.
PiecewisePoly build_weight(const WeightParams& params);

/// Closed-form Laplace transform, with series near the removable singularities.
std::complex<double> F_closed(std::complex<double> z, const WeightParams& params);
/// Adaptive quadrature of int f(t) e^{-zt} dt, piece by piece.
std::complex<double> F_quadrature(std::complex<double> z, const PiecewisePoly& f);

struct BoundSample {
  std::string property;  // "iv", "iv-crude", "v+", "v-", "vi"
  double sigma = 0, t = 0, alpha = 0;
  double lhs = 0, rhs = 0;
  bool asserted = true;
  bool pass = true;
};
struct WeightReport {
  WeightParams params;
  double F0 = 0;
  bool F0_in_range = false;
  double integral_error = 0;      // |int f - F(0)|
  double max_quadrature_error = 0;
  bool shape_ok = false;          // (i) and (ii)
  std::vector<BoundSample> samples;
  bool pass = false;              // all asserted checks
  std::string first_failure;
};
/// Seeded random grid of (sigma, t, alpha); (v) is reported, not asserted.
WeightReport verify_weight_bounds(const WeightParams& params, int grid, std::uint64_t seed = 0);

double Phi1(double t);
double Phi2(double t);
/// hat Phi_j(s) = integral of Phi_j(u) e^{s u} du.
std::complex<double> Phi_hat(int j, std::complex<double> s, double tol = 1e-12);

struct PhiReport {
  std::size_t grid_points = 0;
  std::size_t sandwich_violations = 0;
  double phi1_half = 0;
  double phi2_hat_1 = 0;
  double phi2_hat_1_refined_diff = 0;
  /// Per m: max over t in [1, 100] of |hat Phi_j(it)| |t|^m, j = 1, 2.
  std::vector<double> decay_max_phi1, decay_max_phi2;
  bool pass = false;
};
PhiReport phi_pair(int m_max, std::size_t grid_points = 10000);

}  // namespace cheblab
