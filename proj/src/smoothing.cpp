#include "cheblab/smoothing.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cheblab/rational.hpp"

namespace cheblab {

namespace {

using RPoly = std::vector<Rational>;  // constant term first, local variable u in [0, 1]

constexpr int kMaxEll = 12;

RPoly antiderivative(const RPoly& p) {
  RPoly r(p.size() + 1, Rational(0));
  for (std::size_t j = 0; j < p.size(); ++j) r[j + 1] = p[j] / Rational(static_cast<std::int64_t>(j + 1));
  return r;
}

Rational eval_at_one(const RPoly& p) {
  Rational s(0);
  for (const auto& c : p) s += c;
  return s;
}

RPoly sub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  return a;
}

// p(1 - u)
RPoly reflect(const RPoly& p) {
  RPoly r(p.size(), Rational(0));
  for (std::size_t j = 0; j < p.size(); ++j) {
    // (1 - u)^j = sum_k C(j,k) (-1)^k u^k
    Rational binom(1);
    for (std::size_t k = 0; k <= j; ++k) {
      Rational term = p[j] * binom;
      if (k % 2) term = -term;
      r[k] += term;
      binom = binom * Rational(static_cast<std::int64_t>(j - k)) / Rational(static_cast<std::int64_t>(k + 1));
    }
  }
  return r;
}

// Bernstein coefficients on [0, 1]; all nonnegative implies p >= 0 there.
bool bernstein_nonnegative(const RPoly& p) {
  std::size_t n = p.empty() ? 0 : p.size() - 1;
  auto C = [](std::size_t a, std::size_t b) {
    Rational r(1);
    for (std::size_t i = 0; i < b; ++i)
      r = r * Rational(static_cast<std::int64_t>(a - i)) / Rational(static_cast<std::int64_t>(i + 1));
    return r;
  };
  for (std::size_t k = 0; k <= n; ++k) {
    Rational b(0);
    for (std::size_t j = 0; j <= k && j < p.size(); ++j) b += C(k, j) / C(n, j) * p[j];
    if (b.sign() < 0) return false;
  }
  return true;
}

struct SplineData {
  std::vector<RPoly> density;  // pieces of the density of a sum of ell uniforms on [0,1]
  std::vector<RPoly> cdf;      // matching CDF pieces
};

SplineData uniform_sum(int ell) {
  std::vector<RPoly> g{RPoly{Rational(1)}};
  std::vector<RPoly> G;
  auto cumulate = [&] {
    G.clear();
    Rational c(0);
    for (const auto& p : g) {
      RPoly a = antiderivative(p);
      a[0] += c;
      c = eval_at_one(a);
      G.push_back(std::move(a));
    }
  };
  cumulate();
  for (int n = 1; n < ell; ++n) {
    std::vector<RPoly> next;
    for (std::size_t j = 0; j <= g.size(); ++j) {
      RPoly hi = j < G.size() ? G[j] : RPoly{Rational(1)};
      RPoly lo = j > 0 ? G[j - 1] : RPoly{};
      next.push_back(sub(hi, lo));
    }
    g = std::move(next);
    cumulate();
  }
  return {g, G};
}

std::vector<double> to_double(const RPoly& p) {
  std::vector<double> r;
  for (const auto& c : p) r.push_back(c.to_double());
  return r;
}

// (e^w - 1) / w
std::complex<double> phi_exp(std::complex<double> w) {
  if (std::abs(w) < 1e-4) return 1.0 + w / 2.0 + w * w / 6.0 + w * w * w / 24.0;
  return (std::exp(w) - 1.0) / w;
}

double horner(const std::vector<double>& c, double u) {
  double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * u + *it;
  return v;
}

template <class F>
double gk(F f, double a, double b, double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 10, tol);
}

}  // namespace

double WeightParams::A() const { return eps / (2.0 * ell * std::log(x)); }

void WeightParams::validate() const {
  if (!(x >= 3)) throw std::invalid_argument("smoothing: x must be >= 3");
  if (ell < 2) throw std::invalid_argument("smoothing: ell must be >= 2");
  if (ell > kMaxEll) throw std::invalid_argument("smoothing: ell above supported maximum 12");
  if (!(eps > 0 && eps < 0.25)) throw std::invalid_argument("smoothing: eps must lie in (0, 1/4)");
}

double PiecewisePoly::operator()(double t) const {
  if (breaks.empty() || t < breaks.front() || t > breaks.back()) return 0;
  auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
  std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - breaks.begin()) - 1, coeffs.size() - 1);
  double w = breaks[i + 1] - breaks[i];
  return horner(coeffs[i], (t - breaks[i]) / w);
}

double PiecewisePoly::integral() const {
  double s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    double piece = 0;
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) piece += coeffs[i][j] / double(j + 1);
    s += (breaks[i + 1] - breaks[i]) * piece;
  }
  return s;
}

double PiecewisePoly::max_discontinuity() const {
  if (coeffs.empty()) return 0;
  double m = std::abs(horner(coeffs.front(), 0));
  m = std::max(m, std::abs(horner(coeffs.back(), 1)));
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
    m = std::max(m, std::abs(horner(coeffs[i], 1) - horner(coeffs[i + 1], 0)));
  return m;
}

PiecewisePoly build_weight(const WeightParams& params) {
  params.validate();
  const int ell = params.ell;
  const double w = params.eps / std::log(params.x);  // 2 ell A
  const double step = w / ell;                        // 2A
  auto S = uniform_sum(ell);

  // Exact shape checks: density pieces nonnegative, CDF continuous from 0 to 1.
  for (const auto& d : S.density)
    if (!bernstein_nonnegative(d)) throw std::logic_error("build_weight: negative kernel piece");
  if (S.cdf.front()[0].sign() != 0 || eval_at_one(S.cdf.back()) != Rational(1))
    throw std::logic_error("build_weight: kernel CDF does not run from 0 to 1");
  for (std::size_t j = 0; j + 1 < S.cdf.size(); ++j)
    if (eval_at_one(S.cdf[j]) != S.cdf[j + 1][0]) throw std::logic_error("build_weight: discontinuous kernel");

  PiecewisePoly f;
  // Rising edge on [1/2 - w, 1/2], flat on [1/2, 1], falling edge on [1, 1 + w].
  for (int k = 0; k < ell; ++k) {
    f.breaks.push_back(0.5 - w + k * step);
    f.coeffs.push_back(to_double(S.cdf[k]));
  }
  f.breaks.push_back(0.5);
  f.coeffs.push_back({1.0});
  for (int k = 0; k < ell; ++k) {
    f.breaks.push_back(1.0 + k * step);
    f.coeffs.push_back(to_double(reflect(S.cdf[ell - 1 - k])));
  }
  f.breaks.push_back(1.0 + w);

  const double lo = 0.5 - params.eps / std::log(params.x);
  const double hi = 1.0 + params.eps / std::log(params.x);
  if (f.breaks.front() < lo || f.breaks.back() > hi) throw std::logic_error("build_weight: support too large");
  if (!std::is_sorted(f.breaks.begin(), f.breaks.end())) throw std::logic_error("build_weight: unsorted breaks");
  return f;
}

std::complex<double> F_closed(std::complex<double> z, const WeightParams& params) {
  const double A = params.A();
  const double B = 0.5 + 2.0 * params.ell * A;
  std::complex<double> v = std::exp(-(1.0 + 2.0 * params.ell * A) * z) * B * phi_exp(B * z);
  return v * std::pow(phi_exp(2.0 * A * z), params.ell);
}

std::complex<double> F_quadrature(std::complex<double> z, const PiecewisePoly& f) {
  // Cells short enough that the phase and decay change by at most ~1 per
  // cell; a 61-point rule is then exact to rounding on each.
  std::complex<double> total = 0;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    double a = f.breaks[i], b = f.breaks[i + 1];
    if (b <= a) continue;
    const auto& c = f.coeffs[i];
    auto g = [&](double t) { return horner(c, (t - a) / (b - a)) * std::exp(-z * t); };
    int cells = std::max(1, static_cast<int>(std::ceil(std::abs(z) * (b - a))));
    double h = (b - a) / cells;
    for (int k = 0; k < cells; ++k)
      total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, a + k * h, a + (k + 1) * h, 0);
  }
  return total;
}

WeightReport verify_weight_bounds(const WeightParams& params, int grid, std::uint64_t seed) {
  params.validate();
  WeightReport rep;
  rep.params = params;
  PiecewisePoly f;
  try {
    f = build_weight(params);
    rep.shape_ok = true;
  } catch (const std::logic_error& e) {
    rep.first_failure = std::string("shape: ") + e.what();
    return rep;
  }
  const double x = params.x, L = std::log(x), eps = params.eps;
  const int ell = params.ell;
  rep.F0 = F_closed(0.0, params).real();
  rep.F0_in_range = rep.F0 > 0.5 && rep.F0 < 0.75;
  rep.integral_error = std::abs(f.integral() - rep.F0);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);

  // Transform agreement at 20 points.
  for (int i = 0; i < 20; ++i) {
    std::complex<double> z(-5.0 + 10.0 * U(rng), -50.0 + 100.0 * U(rng));
    rep.max_quadrature_error = std::max(rep.max_quadrature_error, std::abs(F_quadrature(z, f) - F_closed(z, params)));
  }

  auto add = [&](BoundSample s) {
    s.pass = s.lhs <= s.rhs * (1 + 1e-12);
    if (s.asserted && !s.pass && rep.first_failure.empty()) {
      std::ostringstream os;
      os << "(" << s.property << ") sigma=" << s.sigma << " t=" << s.t << " alpha=" << s.alpha << ": " << s.lhs
         << " > " << s.rhs;
      rep.first_failure = os.str();
    }
    rep.samples.push_back(s);
  };
  auto Fs = [&](std::complex<double> s) { return F_closed(-s * L, params); };

  for (int i = 0; i < grid; ++i) {
    double sigma = 0.01 + 1.99 * U(rng);
    double t = (i == 0) ? 0.0 : -60.0 + 120.0 * U(rng);
    double alpha = (i % 3 == 0) ? 0.0 : (i % 3 == 1 ? double(ell) : ell * U(rng));
    std::complex<double> s(sigma, t);
    double mod = std::abs(s);
    double lhs = std::abs(Fs(s));
    BoundSample iv{"iv", sigma, t, alpha, lhs, 0, true, true};
    iv.rhs = std::exp(sigma * eps) * std::pow(x, sigma) / (mod * L) * (1 + std::pow(x, -sigma / 2)) *
             std::pow(2.0 * ell / (eps * mod), alpha);
    add(iv);
    add({"iv-crude", sigma, t, 0, lhs, std::exp(sigma * eps) * std::pow(x, sigma), true, true});

    double tv = (i == 0) ? 0.0 : -60.0 + 120.0 * U(rng);
    double vi_lhs = std::abs(Fs({-0.5, tv}));
    double vi_rhs = 5 * std::pow(x, -0.25) / L * std::pow(2.0 * ell / eps, ell) * std::pow(0.25 + tv * tv, -ell / 2.0);
    add({"vi", -0.5, tv, 0, vi_lhs, vi_rhs, true, true});

    if (x >= 10) {
      double sv = 0.75 + 0.25 * (1 - U(rng));
      double a = Fs(1.0).real(), b = Fs(sv).real();
      double m1 = x / L, m2 = std::pow(x, sv) / (sv * L);
      double scale_err = eps + std::sqrt(x) / L / std::max(m1, 1.0);
      for (int sign : {1, -1}) {
        double lhs_v = a + sign * b, main = m1 + sign * m2;
        // Slack: deviation in units of eps * (x/log x) + x^{1/2}/log x.
        BoundSample v{sign > 0 ? "v+" : "v-", sv, 0, 0, std::abs(lhs_v - main),
                      m1 * scale_err, false, true};
        v.pass = v.lhs <= v.rhs;
        rep.samples.push_back(v);
      }
    }
  }
  rep.pass = rep.shape_ok && rep.F0_in_range && rep.integral_error <= 1e-12 && rep.max_quadrature_error <= 1e-8 &&
             rep.first_failure.empty();
  if (rep.first_failure.empty() && !rep.pass) {
    if (!rep.F0_in_range) rep.first_failure = "F(0) outside (1/2, 3/4)";
    else if (rep.integral_error > 1e-12) rep.first_failure = "integral of f differs from F(0)";
    else rep.first_failure = "quadrature disagrees with closed form";
  }
  return rep;
}

double Phi1(double t) {
  if (!(t > -0.5 && t < 1.5)) return 0;
  double d = (t - 0.5) * (t - 0.5) - 1;
  return d < 0 ? 4 * std::exp(1 / d) : 0;
}

double Phi2(double t) {
  if (!(t > 0 && t < 1)) return 0;
  double d = 4 * (t - 0.5) * (t - 0.5) - 1;
  return d < 0 ? std::exp(1 / d) : 0;
}

std::complex<double> Phi_hat(int j, std::complex<double> s, double tol) {
  if (j != 1 && j != 2) throw std::invalid_argument("Phi_hat: j must be 1 or 2");
  double a = j == 1 ? -0.5 : 0.0, b = j == 1 ? 1.5 : 1.0;
  auto P = [j](double u) { return j == 1 ? Phi1(u) : Phi2(u); };
  double re = gk([&](double u) { return P(u) * std::exp(s.real() * u) * std::cos(s.imag() * u); }, a, b, tol);
  double im = gk([&](double u) { return P(u) * std::exp(s.real() * u) * std::sin(s.imag() * u); }, a, b, tol);
  return {re, im};
}

PhiReport phi_pair(int m_max, std::size_t grid_points) {
  if (m_max < 1 || m_max > 6) throw std::invalid_argument("phi_pair: m_max must lie in [1, 6]");
  PhiReport r;
  r.grid_points = grid_points;
  for (std::size_t i = 0; i < grid_points; ++i) {
    double t = -1.0 + 3.0 * double(i) / double(grid_points - 1);
    double ind = (t >= 0 && t <= 1) ? 1.0 : 0.0;
    if (Phi2(t) > ind || ind > Phi1(t)) ++r.sandwich_violations;
  }
  r.phi1_half = Phi1(0.5);
  r.phi2_hat_1 = Phi_hat(2, 1.0, 1e-13).real();
  // Refinement: a fixed 15-point Gauss-Kronrod sweep over 2^k equal cells.
  double coarse = 0;
  const int cells = 256;
  for (int c = 0; c < cells; ++c) {
    double a = double(c) / cells, b = double(c + 1) / cells;
    coarse += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [](double u) { return Phi2(u) * std::exp(u); }, a, b, 0, 0);
  }
  r.phi2_hat_1_refined_diff = std::abs(coarse - r.phi2_hat_1);

  std::vector<double> ts, h1, h2;
  for (int i = 0; i <= 198; ++i) {
    double t = 1.0 + 99.0 * i / 198.0;
    ts.push_back(t);
    h1.push_back(std::abs(Phi_hat(1, {0, t})));
    h2.push_back(std::abs(Phi_hat(2, {0, t})));
  }
  bool finite = true;
  for (int m = 1; m <= m_max; ++m) {
    double m1 = 0, m2 = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      m1 = std::max(m1, h1[i] * std::pow(ts[i], m));
      m2 = std::max(m2, h2[i] * std::pow(ts[i], m));
    }
    finite = finite && std::isfinite(m1) && std::isfinite(m2);
    r.decay_max_phi1.push_back(m1);
    r.decay_max_phi2.push_back(m2);
  }
  r.pass = r.sandwich_violations == 0 && std::abs(r.phi1_half - 4 * std::exp(-1.0)) < 1e-15 &&
           r.phi2_hat_1_refined_diff <= 1e-9 && finite;
  return r;
}

}  // namespace cheblab
