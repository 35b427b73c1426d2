#include "cheblab/cyclotomic.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cheblab {

namespace {

struct FieldData {
  int m = 1;
  int phi = 1;
  std::vector<std::int64_t> poly;                 // Phi_m, constant term first
  std::vector<std::vector<std::int64_t>> powers;  // x^e mod Phi_m, e in [0, m)
};

std::vector<std::int64_t> compute_cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<std::int64_t> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      std::int64_t coef = num[i];  // den is monic
      q[i - dd] = coef;
      if (coef == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= coef * den[j];
    }
    num = std::move(q);
  }
  return num;
}

const FieldData& field_data(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;
  auto fd = std::make_unique<FieldData>();
  fd->m = m;
  fd->phi = euler_phi(m);
  std::vector<std::int64_t> poly;
  {
    // cyclotomic_polynomial takes its own lock; compute outside recursion here.
    poly = compute_cyclotomic_polynomial(m);
  }
  fd->poly = poly;
  const int phi = fd->phi;
  fd->powers.assign(m, std::vector<std::int64_t>(phi, 0));
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (int e = 0; e < m; ++e) {
    fd->powers[e] = cur;
    // multiply by x and reduce by the monic Phi_m
    std::int64_t top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= top * poly[i];
  }
  auto& ref = *fd;
  cache.emplace(m, std::move(fd));
  return ref;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

std::int64_t to_i64(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Cyclotomic: overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t common_denominator(const std::vector<Rational>& v) {
  std::int64_t d = 1;
  for (const auto& r : v) {
    if (r.den() != 1) {
      std::int64_t nd = lcm64(d, r.den());
      if (nd / r.den() != d / std::gcd(d, r.den())) throw std::overflow_error("Cyclotomic: overflow");
      d = nd;
    }
  }
  return d;
}

// Integer numerators of v scaled by the common denominator d.
std::vector<std::int64_t> scaled(const std::vector<Rational>& v, std::int64_t d) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    __int128 x = static_cast<__int128>(v[i].num()) * (d / v[i].den());
    out[i] = to_i64(x);
  }
  return out;
}

// Reduce integer exponent buckets (length m, exponents mod m) into the
// power basis, then divide by den.
std::vector<Rational> reduce_buckets(const FieldData& fd, const std::vector<__int128>& buckets,
                                     std::int64_t den) {
  std::vector<__int128> acc(fd.phi, 0);
  for (int e = 0; e < fd.m; ++e) {
    __int128 b = buckets[e];
    if (b == 0) continue;
    const auto& row = fd.powers[e];
    for (int i = 0; i < fd.phi; ++i)
      if (row[i] != 0) acc[i] += b * row[i];
  }
  std::vector<Rational> out(fd.phi);
  for (int i = 0; i < fd.phi; ++i) out[i] = Rational(to_i64(acc[i]), den);
  return out;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto p = compute_cyclotomic_polynomial(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {
  if (m < 1) throw std::invalid_argument("Cyclotomic: conductor must be positive");
  const auto& fd = field_data(m);
  if (static_cast<int>(c_.size()) == fd.phi) return;
  if (static_cast<int>(c_.size()) > m) throw std::invalid_argument("Cyclotomic: too many coefficients");
  // Accept any exponent vector of length <= m and reduce it.
  std::vector<Rational> b(m);
  for (std::size_t i = 0; i < c_.size(); ++i) b[i] = c_[i];
  reduce_exponents(b);
}

void Cyclotomic::reduce_exponents(const std::vector<Rational>& by_exponent) {
  const auto& fd = field_data(m_);
  std::int64_t d = common_denominator(by_exponent);
  auto ints = scaled(by_exponent, d);
  std::vector<__int128> buckets(ints.begin(), ints.end());
  buckets.resize(fd.m, 0);
  c_ = reduce_buckets(fd, buckets, d);
}

Cyclotomic Cyclotomic::root_of_unity(int n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
  std::int64_t e = ((k % n) + n) % n;
  const auto& fd = field_data(n);
  std::vector<Rational> c(fd.phi);
  for (int i = 0; i < fd.phi; ++i) c[i] = Rational(fd.powers[e][i]);
  Cyclotomic z;
  z.m_ = n;
  z.c_ = std::move(c);
  return z;
}

Cyclotomic Cyclotomic::lifted(int M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw std::invalid_argument("Cyclotomic::lifted: field does not divide target");
  const auto& fd = field_data(M);
  const int step = M / m_;
  std::int64_t d = common_denominator(c_);
  auto ints = scaled(c_, d);
  std::vector<__int128> buckets(M, 0);
  for (std::size_t i = 0; i < ints.size(); ++i) buckets[(i * step) % M] += ints[i];
  Cyclotomic out;
  out.m_ = M;
  out.c_ = reduce_buckets(fd, buckets, d);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& r : c_)
    if (!r.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("Cyclotomic::to_rational: value is irrational");
  return c_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> s = 0;
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    double ang = two_pi * static_cast<double>(i) / m_;
    s += c_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
  std::int64_t am = ((a % m_) + m_) % m_;
  if (std::gcd(am, static_cast<std::int64_t>(m_)) != 1 && m_ > 1)
    throw std::invalid_argument("Cyclotomic::galois: exponent not a unit");
  if (m_ <= 2) return *this;
  std::vector<Rational> b(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) b[(i * am) % m_] += c_[i];
  Cyclotomic out;
  out.m_ = m_;
  out.reduce_exponents(b);
  return out;
}

Cyclotomic Cyclotomic::minimized() const {
  if (is_rational()) return Cyclotomic(c_[0]);
  // Candidate subfields Q(zeta_d), d | m, smallest first; d = 2 mod 4 is never canonical.
  for (int d = 3; d <= m_; ++d) {
    if (m_ % d != 0 || d % 4 == 2) continue;
    bool fixed = true;
    for (int a = 1; a < m_ && fixed; ++a) {
      if (a % d != 1 % d || std::gcd(a, m_) != 1 || a == 1) continue;
      if (galois(a) != *this) fixed = false;
    }
    if (!fixed) continue;
    if (d == m_) return *this;
    // Solve for coordinates in the basis zeta_d^j, j < phi(d).
    const int pd = euler_phi(d);
    const int pm = static_cast<int>(c_.size());
    std::vector<std::vector<Rational>> a(pm, std::vector<Rational>(pd + 1));
    for (int j = 0; j < pd; ++j) {
      auto col = root_of_unity(d, j).lifted(m_);
      for (int i = 0; i < pm; ++i) a[i][j] = col.c_[i];
    }
    for (int i = 0; i < pm; ++i) a[i][pd] = c_[i];
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < pd && row < pm; ++col) {
      int piv = -1;
      for (int r = row; r < pm; ++r)
        if (!a[r][col].is_zero()) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(a[piv], a[row]);
      Rational inv = Rational(1) / a[row][col];
      for (int k = col; k <= pd; ++k) a[row][k] *= inv;
      for (int r = 0; r < pm; ++r) {
        if (r == row || a[r][col].is_zero()) continue;
        Rational f = a[r][col];
        for (int k = col; k <= pd; ++k) a[r][k] -= f * a[row][k];
      }
      pivot_col.push_back(col);
      ++row;
    }
    std::vector<Rational> y(pd);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) y[pivot_col[r]] = a[r][pd];
    Cyclotomic out;
    out.m_ = d;
    out.c_ = std::move(y);
    return out;
  }
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& r : out.c_) r = -r;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ == m_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  int M = static_cast<int>(lcm64(m_, o.m_));
  if (M != m_) *this = lifted(M);
  if (o.m_ == M) return *this += o;
  return *this += o.lifted(M);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    int M = static_cast<int>(lcm64(m_, o.m_));
    Cyclotomic a = m_ == M ? *this : lifted(M);
    Cyclotomic b = o.m_ == M ? o : o.lifted(M);
    a *= b;
    *this = std::move(a);
    return *this;
  }
  if (m_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  const auto& fd = field_data(m_);
  std::int64_t da = common_denominator(c_);
  std::int64_t db = common_denominator(o.c_);
  auto ia = scaled(c_, da);
  auto ib = scaled(o.c_, db);
  std::vector<__int128> buckets(m_, 0);
  for (int i = 0; i < fd.phi; ++i) {
    if (ia[i] == 0) continue;
    for (int j = 0; j < fd.phi; ++j) {
      if (ib[j] == 0) continue;
      int e = i + j;
      if (e >= m_) e -= m_;
      buckets[e] += static_cast<__int128>(ia[i]) * ib[j];
    }
  }
  __int128 den = static_cast<__int128>(da) * db;
  c_ = reduce_buckets(fd, buckets, to_i64(den));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  for (auto& x : c_) x /= r;
  return *this;
}

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) { *this += a * b; }

void Cyclotomic::add_scaled(const Rational& r, const Cyclotomic& a) {
  if (r.is_zero()) return;
  if (a.m_ == m_) {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!a.c_[i].is_zero()) c_[i] += r * a.c_[i];
    return;
  }
  *this += a * r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  int M = static_cast<int>(lcm64(a.m_, b.m_));
  return a.lifted(M).c_ == b.lifted(M).c_;
}

std::string Cyclotomic::str() const {
  Cyclotomic v = minimized();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.c_.size(); ++i) {
    const Rational& r = v.c_[i];
    if (r.is_zero()) continue;
    if (!first) os << (r.sign() < 0 ? " - " : " + ");
    else if (r.sign() < 0) os << "-";
    Rational ab = r.sign() < 0 ? -r : r;
    if (i == 0) {
      os << ab;
    } else {
      if (ab != Rational(1)) os << ab << "*";
      os << "E(" << v.m_ << ")";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int real_sign(const Cyclotomic& x) {
  if (x != x.conj()) throw std::domain_error("real_sign: value is not real");
  if (x.is_zero()) return 0;
  const auto& c = x.coeffs();
  const int m = x.field();
  double v = 0, mag = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    double ci = c[i].to_double();
    v += ci * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / m);
    mag += std::abs(ci);
  }
  if (std::abs(v) > 1e-9 * (mag + 1.0)) return v > 0 ? 1 : -1;
  using big = boost::multiprecision::cpp_dec_float_50;
  big s = 0, bmag = 0;
  const big two_pi = 2 * boost::math::constants::pi<big>();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    big ci = big(c[i].num()) / big(c[i].den());
    s += ci * boost::multiprecision::cos(two_pi * big(static_cast<long long>(i)) / big(m));
    bmag += boost::multiprecision::abs(ci);
  }
  if (boost::multiprecision::abs(s) > big("1e-40") * (bmag + 1)) return s > 0 ? 1 : -1;
  throw std::runtime_error("real_sign: could not resolve sign of a nonzero value");
}

}  // namespace cheblab
