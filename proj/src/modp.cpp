#include "cheblab/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace cheblab::modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("modp::inv of zero");
  return pow(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 prime_congruent_one(u64 m, u64 lower_bound) {
  u64 k = lower_bound / m + 1;
  while (!is_prime(k * m + 1)) ++k;
  return k * m + 1;
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  std::vector<u64> factors;
  u64 n = p - 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors)
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

u64 sqrt(u64 a, u64 p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  if (pow(a, (p - 1) / 2, p) != 1) throw std::domain_error("modp::sqrt of a non-residue");
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (pow(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 c = pow(z, q, p), r = pow(a, (q + 1) / 2, p), t = pow(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mul(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul(b, b, p);
    r = mul(r, b, p);
    c = mul(b, b, p);
    t = mul(t, c, p);
    m = i;
  }
  return r;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

namespace {

void divmod(const Poly& a, const Poly& b, u64 p, Poly* q, Poly* r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  trim(rem);
  int db = degree(b);
  u64 lead_inv = inv(b.back(), p);
  Poly quo(rem.size() > b.size() - 1 ? rem.size() - b.size() + 1 : 0, 0);
  while (degree(rem) >= db) {
    int shift = degree(rem) - db;
    u64 c = mul(rem.back(), lead_inv, p);
    quo[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] = sub(rem[shift + i], mul(c, b[i], p), p);
    trim(rem);
  }
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

}  // namespace

Poly poly_mod(const Poly& a, const Poly& b, u64 p) {
  Poly r;
  divmod(a, b, p, nullptr, &r);
  return r;
}

Poly poly_div(const Poly& a, const Poly& b, u64 p) {
  Poly q;
  divmod(a, b, p, &q, nullptr);
  return q;
}

Poly poly_monic(const Poly& f, u64 p) {
  if (f.empty()) return f;
  u64 li = inv(f.back(), p);
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul(f[i], li, p);
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a, p);
}

Poly poly_powmod(const Poly& base, u64 e, const Poly& f, u64 p) {
  Poly result{1};
  result = poly_mod(result, f, p);
  Poly b = poly_mod(base, f, p);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, b, p), f, p);
    e >>= 1;
    if (e) b = poly_mod(poly_mul(b, b, p), f, p);
  }
  return result;
}

u64 poly_eval(const Poly& f, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = add(mul(r, x, p), f[i], p);
  return r;
}

namespace {

void split_linear(const Poly& f, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
  int d = degree(f);
  if (d <= 0) return;
  if (d == 1) {
    Poly m = poly_monic(f, p);
    out.push_back(sub(0, m[0], p));
    return;
  }
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x)
      if (poly_eval(f, x, p) == 0) out.push_back(x);
    return;
  }
  std::uniform_int_distribution<u64> pick(0, p - 1);
  while (true) {
    Poly t{pick(rng), 1};
    Poly h = poly_powmod(t, (p - 1) / 2, f, p);
    h = poly_sub(h, Poly{1}, p);
    Poly g = poly_gcd(f, h, p);
    int dg = degree(g);
    if (dg > 0 && dg < d) {
      split_linear(g, p, rng, out);
      split_linear(poly_div(f, g, p), p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots(const Poly& f_in, u64 p, std::mt19937_64& rng) {
  Poly f = f_in;
  trim(f);
  std::vector<u64> out;
  if (degree(f) <= 0) return out;
  f = poly_monic(f, p);
  Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
  Poly g = poly_gcd(f, poly_sub(xp, Poly{0, 1}, p), p);
  split_linear(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> distinct_degree_pattern(const Poly& f_in, u64 p) {
  Poly f = poly_monic(f_in, p);
  std::vector<int> parts;
  Poly h{0, 1};
  int d = 0;
  while (degree(f) > 0) {
    ++d;
    if (2 * d > degree(f)) {
      parts.push_back(degree(f));
      break;
    }
    h = poly_powmod(h, p, f, p);
    Poly g = poly_gcd(f, poly_sub(h, Poly{0, 1}, p), p);
    int dg = degree(g);
    if (dg > 0) {
      for (int k = 0; k < dg / d; ++k) parts.push_back(d);
      f = poly_div(f, g, p);
      h = poly_mod(h, f, p);
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

Poly charpoly(Matrix A, u64 p) {
  const std::size_t n = A.size();
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && A[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(A[piv], A[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(A[r][piv], A[r][m]);
    }
    u64 ip = inv(A[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      u64 u = mul(A[i][m - 1], ip, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) A[i][j] = sub(A[i][j], mul(u, A[m][j], p), p);
      for (std::size_t r = 0; r < n; ++r) A[r][m] = add(A[r][m], mul(u, A[r][i], p), p);
    }
  }
  // Recurrence on leading principal submatrices.
  std::vector<Poly> P(n + 1);
  P[0] = Poly{1};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly xk{sub(0, A[k - 1][k - 1], p), 1};
    P[k] = poly_mul(xk, P[k - 1], p);
    u64 prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = mul(prod, A[k - i][k - i - 1], p);
      u64 c = mul(prod, A[k - i - 1][k - 1], p);
      if (c == 0) continue;
      Poly term = P[k - i - 1];
      for (auto& t : term) t = mul(t, c, p);
      P[k] = poly_sub(P[k], term, p);
    }
    if (P[k].size() < k + 1) P[k].resize(k + 1, 0);
    trim(P[k]);
  }
  return P[n];
}

std::vector<std::vector<u64>> nullspace(Matrix A, u64 p) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    u64 ip = inv(A[r][c], p);
    for (auto& v : A[r]) v = mul(v, ip, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      u64 f = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = sub(A[i][j], mul(f, A[r][j], p), p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = sub(0, A[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cheblab::modp
