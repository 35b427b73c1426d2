#include "cheblab/character.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "cheblab/modp.hpp"

namespace cheblab {

double Log(double x) { return x <= std::exp(1.0) ? 1.0 : std::log(x); }

bool Character::is_trivial() const {
  for (const auto& v : values)
    if (v != Cyclotomic(1)) return false;
  return true;
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<Character> rows, std::uint64_t prime)
    : group_(std::move(group)), rows_(std::move(rows)), prime_(prime) {
  d_ = 1;
  for (const auto& r : rows_) d_ = std::max(d_, r.degree());
  conj_index_.resize(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto j = find(conj(rows_[i]));
    if (j < 0) throw std::logic_error("character table not closed under conjugation");
    conj_index_[i] = static_cast<std::size_t>(j);
  }
}

std::vector<std::int64_t> CharacterTable::degrees() const {
  std::vector<std::int64_t> d;
  for (const auto& r : rows_) d.push_back(r.degree());
  return d;
}

std::int64_t CharacterTable::find(const Character& chi) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].values.size() != chi.values.size()) continue;
    bool eq = true;
    for (std::size_t c = 0; c < chi.values.size() && eq; ++c) eq = rows_[i].values[c] == chi.values[c];
    if (eq) return static_cast<std::int64_t>(i);
  }
  return -1;
}

namespace {

using modp::u64;
using Vec = std::vector<u64>;

// Reduced row echelon basis of a subspace of F_p^r: basis[t][pivots[s]] = [s == t].
struct Space {
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
};

Space echelon(std::vector<Vec> vs, u64 p) {
  Space S;
  if (vs.empty()) return S;
  const std::size_t r = vs[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < vs.size(); ++c) {
    std::size_t piv = row;
    while (piv < vs.size() && vs[piv][c] == 0) ++piv;
    if (piv == vs.size()) continue;
    std::swap(vs[piv], vs[row]);
    u64 iv = modp::inv(vs[row][c], p);
    for (auto& x : vs[row]) x = modp::mul(x, iv, p);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == row || vs[i][c] == 0) continue;
      u64 f = vs[i][c];
      for (std::size_t j = 0; j < r; ++j) vs[i][j] = modp::sub(vs[i][j], modp::mul(f, vs[row][j], p), p);
    }
    S.pivots.push_back(c);
    ++row;
  }
  vs.resize(row);
  S.basis = std::move(vs);
  return S;
}

// Splits S into eigenspaces of the (commuting) operator A; returns {S} when
// A acts as a scalar on S.
std::vector<Space> split(const Space& S, const modp::Matrix& A, u64 p, std::mt19937_64& rng) {
  const std::size_t s = S.basis.size();
  const std::size_t r = A.size();
  modp::Matrix R(s, Vec(s, 0));
  for (std::size_t t = 0; t < s; ++t) {
    Vec v(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      u64 acc = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (A[i][k] && S.basis[t][k]) acc = modp::add(acc, modp::mul(A[i][k], S.basis[t][k], p), p);
      v[i] = acc;
    }
    // Coordinates with respect to the echelon basis are the pivot entries.
    for (std::size_t t2 = 0; t2 < s; ++t2) R[t2][t] = v[S.pivots[t2]];
  }
  auto cp = modp::charpoly(R, p);
  auto ev = modp::roots(cp, p, rng);
  if (ev.size() <= 1) return {S};
  std::vector<Space> out;
  for (u64 lam : ev) {
    modp::Matrix M = R;
    for (std::size_t i = 0; i < s; ++i) M[i][i] = modp::sub(M[i][i], lam, p);
    auto ker = modp::nullspace(M, p);
    std::vector<Vec> vecs;
    for (const auto& u : ker) {
      Vec w(r, 0);
      for (std::size_t t = 0; t < s; ++t)
        if (u[t])
          for (std::size_t k = 0; k < r; ++k) w[k] = modp::add(w[k], modp::mul(u[t], S.basis[t][k], p), p);
      vecs.push_back(std::move(w));
    }
    out.push_back(echelon(std::move(vecs), p));
  }
  return out;
}

bool coeff_greater(const Cyclotomic& a, const Cyclotomic& b) {
  int M = std::lcm(a.field(), b.field());
  const auto& ca = a.lifted(M).coeffs();
  const auto& cb = b.lifted(M).coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return ca[i] > cb[i];
  return false;
}

}  // namespace

CharacterTable character_table(const GroupPtr& Gp, std::size_t order_cap) {
  const Group& G = *Gp;
  if (G.order() > order_cap)
    throw std::length_error("character_table: group order " + std::to_string(G.order()) + " exceeds cap");
  const std::size_t r = G.num_classes();
  const std::uint64_t order = G.order();
  const int e = static_cast<int>(G.exponent());
  const u64 p = modp::prime_congruent_one(static_cast<u64>(e), std::max<u64>(1'000'000, order));
  std::mt19937_64 rng(0x5eed);

  std::vector<Space> spaces;
  {
    std::vector<Vec> id(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(echelon(std::move(id), p));
  }

  // (A_j)[i][k] = #{ y in C_j : z_k y^-1 in C_i } for a fixed z_k in C_k.
  auto class_matrix = [&](std::size_t j) {
    modp::Matrix A(r, Vec(r, 0));
    for (std::size_t k = 0; k < r; ++k) {
      ElementId z = G.classes()[k].representative;
      for (ElementId y : G.classes()[j].members) A[G.class_of(G.multiply(z, G.inverse(y)))][k] += 1;
    }
    return A;
  };

  auto all_done = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Space& S) { return S.basis.size() == 1; });
  };
  std::vector<modp::Matrix> used;
  for (std::size_t j = 1; j < r && !all_done(); ++j) {
    auto A = class_matrix(j);
    std::vector<Space> next;
    for (const auto& S : spaces) {
      if (S.basis.size() == 1) {
        next.push_back(S);
        continue;
      }
      for (auto& T : split(S, A, p, rng)) next.push_back(std::move(T));
    }
    spaces = std::move(next);
    used.push_back(std::move(A));
  }
  // Random combinations only matter if single class matrices failed to
  // separate, which cannot happen when p does not divide |G|.
  for (int attempt = 0; attempt < 20 && !all_done() && !used.empty(); ++attempt) {
    modp::Matrix C(r, Vec(r, 0));
    std::uniform_int_distribution<u64> pick(0, p - 1);
    for (const auto& A : used) {
      u64 c = pick(rng);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) C[i][k] = modp::add(C[i][k], modp::mul(c, A[i][k], p), p);
    }
    std::vector<Space> next;
    for (const auto& S : spaces)
      for (auto& T : split(S, C, p, rng)) next.push_back(std::move(T));
    spaces = std::move(next);
  }
  if (!all_done() || spaces.size() != r) throw std::logic_error("character_table: eigenspace splitting failed");

  // Power maps for the lifting step.
  std::vector<std::vector<std::size_t>> power_map(r);
  for (std::size_t i = 0; i < r; ++i) {
    int k = G.classes()[i].element_order;
    ElementId g = G.classes()[i].representative, x = 0;
    for (int t = 0; t < k; ++t) {
      power_map[i].push_back(G.class_of(x));
      x = G.multiply(x, g);
    }
  }
  const u64 z = modp::pow(modp::primitive_root(p), (p - 1) / static_cast<u64>(e), p);

  std::vector<Character> rows;
  for (const auto& S : spaces) {
    Vec w = S.basis[0];
    if (w[0] == 0) throw std::logic_error("character_table: eigenvector vanishes at identity");
    u64 n0 = modp::inv(w[0], p);
    for (auto& x : w) x = modp::mul(x, n0, p);
    u64 sum = 0;
    for (std::size_t i = 0; i < r; ++i) {
      u64 h = G.classes()[i].size % p;
      sum = modp::add(sum, modp::mul(modp::mul(w[i], w[G.inverse_class(i)], p), modp::inv(h, p), p), p);
    }
    u64 d2 = modp::mul(order % p, modp::inv(sum, p), p);
    u64 d = modp::sqrt(d2, p);
    d = std::min(d, p - d);
    if (d == 0 || d * d > order || order % d != 0) throw std::logic_error("character_table: bad degree");
    Vec x(r);
    for (std::size_t i = 0; i < r; ++i)
      x[i] = modp::mul(modp::mul(w[i], d, p), modp::inv(G.classes()[i].size % p, p), p);

    Character chi;
    chi.irreducible = true;
    for (std::size_t i = 0; i < r; ++i) {
      int k = G.classes()[i].element_order;
      u64 zk = modp::pow(z, static_cast<u64>(e / k), p);
      u64 zk_inv = modp::inv(zk, p);
      u64 kinv = modp::inv(static_cast<u64>(k), p);
      std::vector<Rational> expo(static_cast<std::size_t>(e), Rational(0));
      std::int64_t total = 0;
      for (int j = 0; j < k; ++j) {
        u64 step = modp::pow(zk_inv, static_cast<u64>(j), p), f = 1, acc = 0;
        for (int t = 0; t < k; ++t) {
          acc = modp::add(acc, modp::mul(x[power_map[i][t]], f, p), p);
          f = modp::mul(f, step, p);
        }
        u64 m = modp::mul(acc, kinv, p);
        if (m > d) throw std::logic_error("character_table: eigenvalue multiplicity out of range");
        expo[static_cast<std::size_t>(j) * (e / k)] = Rational(static_cast<std::int64_t>(m));
        total += static_cast<std::int64_t>(m);
      }
      if (total != static_cast<std::int64_t>(d)) throw std::logic_error("character_table: multiplicities do not sum to degree");
      chi.values.emplace_back(e, std::move(expo));
    }
    rows.push_back(std::move(chi));
  }

  std::sort(rows.begin(), rows.end(), [](const Character& a, const Character& b) {
    bool ta = a.is_trivial(), tb = b.is_trivial();
    if (ta != tb) return ta;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t c = 0; c < a.values.size(); ++c)
      if (a.values[c] != b.values[c]) return coeff_greater(a.values[c], b.values[c]);
    return false;
  });
  return CharacterTable(Gp, std::move(rows), p);
}

Character trivial_character(const Group& G) {
  Character c;
  c.values.assign(G.num_classes(), Cyclotomic(1));
  c.irreducible = true;
  return c;
}

Character regular_character(const Group& G) {
  Character c;
  c.values.assign(G.num_classes(), Cyclotomic(0));
  c.values[0] = Cyclotomic(static_cast<std::int64_t>(G.order()));
  c.irreducible = G.order() == 1;
  return c;
}

Character conj(const Character& chi) {
  Character c;
  c.irreducible = chi.irreducible;
  for (const auto& v : chi.values) c.values.push_back(v.conj());
  return c;
}

Character tensor(const Character& a, const Character& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("tensor: group mismatch");
  Character c;
  for (std::size_t i = 0; i < a.values.size(); ++i) c.values.push_back(a.values[i] * b.values[i]);
  c.irreducible = a.irreducible && b.irreducible && (a.is_linear() || b.is_linear());
  return c;
}

Character operator+(const Character& a, const Character& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("sum: group mismatch");
  Character c;
  for (std::size_t i = 0; i < a.values.size(); ++i) c.values.push_back(a.values[i] + b.values[i]);
  return c;
}

Character scaled(const Character& a, std::int64_t k) {
  Character c;
  for (const auto& v : a.values) c.values.push_back(v * Rational(k));
  c.irreducible = a.irreducible && k == 1;
  return c;
}

Rational inner_product(const Group& G, const Character& chi, const Character& psi) {
  if (chi.values.size() != G.num_classes() || psi.values.size() != G.num_classes())
    throw std::invalid_argument("inner_product: group mismatch");
  Cyclotomic acc(0);
  for (std::size_t i = 0; i < G.num_classes(); ++i) {
    Cyclotomic term = chi.values[i] * psi.values[i].conj();
    acc.add_scaled(Rational(static_cast<std::int64_t>(G.classes()[i].size)), term);
  }
  acc /= Rational(static_cast<std::int64_t>(G.order()));
  return acc.to_rational();
}

std::vector<std::int64_t> decompose(const CharacterTable& T, const Character& chi) {
  std::vector<std::int64_t> mult;
  for (const auto& row : T.rows()) {
    Rational m = inner_product(T.group(), chi, row);
    if (!m.is_integer()) throw std::logic_error("decompose: non-integral multiplicity " + m.str());
    mult.push_back(m.num());
  }
  return mult;
}

std::vector<std::pair<std::size_t, std::int64_t>> tensor_decompose(const CharacterTable& T, const Character& chi,
                                                                   const Character& psi) {
  auto m = decompose(T, tensor(chi, psi));
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw std::logic_error("tensor_decompose: negative multiplicity");
    if (m[i] > 0) out.emplace_back(i, m[i]);
  }
  return out;
}

SubgroupEmbedding embed_subgroup(const Group& G, const Subgroup& H) {
  SubgroupEmbedding e;
  e.sub = subgroup_as_group(G, H, &e.embedding);
  for (const auto& c : e.sub->classes()) e.fusion.push_back(G.class_of(e.embedding[c.representative]));
  return e;
}

Character induce(const Group& G, const SubgroupEmbedding& H, const Character& chi_H) {
  const Group& K = *H.sub;
  if (chi_H.values.size() != K.num_classes()) throw std::invalid_argument("induce: character not on subgroup");
  std::vector<Cyclotomic> acc(G.num_classes(), Cyclotomic(0));
  for (std::size_t d = 0; d < K.num_classes(); ++d)
    acc[H.fusion[d]].add_scaled(Rational(static_cast<std::int64_t>(K.classes()[d].size)), chi_H.values[d]);
  Character out;
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    Rational scale(static_cast<std::int64_t>(G.order()),
                   static_cast<std::int64_t>(K.order() * G.classes()[c].size));
    out.values.push_back(acc[c] * scale);
  }
  return out;
}

Character restrict(const SubgroupEmbedding& H, const Character& chi) {
  Character out;
  for (std::size_t d = 0; d < H.sub->num_classes(); ++d) out.values.push_back(chi.values[H.fusion[d]]);
  return out;
}

namespace {

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      f(parts);
      return;
    }
    for (int k = std::min(rem, maxp); k >= 1; --k) {
      parts.push_back(k);
      rec(rem - k, k);
      parts.pop_back();
    }
  };
  rec(n, n);
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class hook_degree_mpz(const std::vector<int>& mu) {
  int n = 0;
  for (int x : mu) n += x;
  std::vector<int> conj_len(mu.empty() ? 0 : mu[0], 0);
  for (int x : mu)
    for (int j = 0; j < x; ++j) ++conj_len[j];
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int j = 0; j < mu[i]; ++j) hooks *= (mu[i] - j - 1) + (conj_len[j] - static_cast<int>(i) - 1) + 1;
  return factorial(n) / hooks;
}

void check_partition(const std::vector<int>& mu) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i && mu[i] > mu[i - 1]) throw std::invalid_argument("partition parts must be nonincreasing");
  }
}

}  // namespace

std::string hook_length_degree(const std::vector<int>& mu) {
  check_partition(mu);
  return hook_degree_mpz(mu).get_str();
}

std::string sn_w(const std::vector<int>& mu) {
  check_partition(mu);
  mpz_class w = 1;
  std::size_t i = 0;
  while (i < mu.size()) {
    std::size_t j = i;
    while (j < mu.size() && mu[j] == mu[i]) ++j;
    int r = static_cast<int>(j - i);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(mu[i]), static_cast<unsigned long>(r));
    w *= pw * factorial(r);
    i = j;
  }
  return w.get_str();
}

std::string sn_class_size(const std::vector<int>& mu) {
  int n = 0;
  for (int x : mu) n += x;
  mpz_class w(sn_w(mu));
  return mpz_class(factorial(n) / w).get_str();
}

SnDegreeStats sn_degree_stats(int n) {
  if (n < 1 || n > 40) throw std::invalid_argument("sn_degree_stats: n must be in [1, 40]");
  SnDegreeStats s;
  s.n = n;
  mpz_class best = 0;
  for_each_partition(n, [&](const std::vector<int>& mu) {
    mpz_class d = hook_degree_mpz(mu);
    s.degrees.push_back(d.get_str());
    if (d > best) best = d;
  });
  s.d = best.get_str();
  double dd = best.get_d();
  s.d2_log_d = dd * dd * Log(dd);
  return s;
}

}  // namespace cheblab
