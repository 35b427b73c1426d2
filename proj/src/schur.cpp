#include "cheblab/schur.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cheblab/census.hpp"
#include "cheblab/modp.hpp"

namespace cheblab {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

template <class T>
std::vector<T> cauchy_lhs(const std::vector<T>& a, const std::vector<T>& b, int cap) {
  std::vector<T> series(cap + 1, T(0));
  series[0] = T(1);
  for (const T& x : a)
    for (const T& y : b) {
      // Multiply by the geometric series of xy: s_k += xy * s_{k-1}, ascending.
      T xy = x * y;
      for (int k = 1; k <= cap; ++k) series[k] = series[k] + xy * series[k - 1];
    }
  return series;
}

template <class T>
std::vector<T> cauchy_rhs(const std::vector<T>& a, const std::vector<T>& b, int cap) {
  std::vector<T> out(cap + 1, T(0));
  for (int k = 0; k <= cap; ++k)
    for (const auto& mu : partitions_of(k)) out[k] = out[k] + schur(mu, a) * schur(mu, b);
  return out;
}

void check_cap(int degree_cap) {
  if (degree_cap < 0 || degree_cap > 8) throw std::invalid_argument("cauchy_check: degree cap must be in [0, 8]");
}

}  // namespace

CauchyReport cauchy_check(const std::vector<Cyclotomic>& alphas, const std::vector<Cyclotomic>& betas,
                          int degree_cap) {
  check_cap(degree_cap);
  auto L = cauchy_lhs(alphas, betas, degree_cap);
  auto R = cauchy_rhs(alphas, betas, degree_cap);
  CauchyReport r;
  r.degree = degree_cap;
  r.holds = true;
  for (int k = 0; k <= degree_cap; ++k) {
    r.max_deviation = std::max(r.max_deviation, std::abs((L[k] - R[k]).to_complex()));
    if (L[k] != R[k]) r.holds = false;
  }
  return r;
}

CauchyReport cauchy_check(const std::vector<std::complex<double>>& alphas,
                          const std::vector<std::complex<double>>& betas, int degree_cap, double tol) {
  check_cap(degree_cap);
  for (const auto& v : alphas)
    if (std::abs(v) > 1 + 1e-12) throw std::invalid_argument("cauchy_check: inputs must have modulus <= 1");
  for (const auto& v : betas)
    if (std::abs(v) > 1 + 1e-12) throw std::invalid_argument("cauchy_check: inputs must have modulus <= 1");
  auto L = cauchy_lhs(alphas, betas, degree_cap);
  auto R = cauchy_rhs(alphas, betas, degree_cap);
  CauchyReport r;
  r.degree = degree_cap;
  for (int k = 0; k <= degree_cap; ++k) r.max_deviation = std::max(r.max_deviation, std::abs(L[k] - R[k]));
  r.holds = r.max_deviation <= tol;
  return r;
}

namespace {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  auto ps = prime_divisors(n);
  return ps.size() == 1;
}

}  // namespace

void validate_scenario(const Group& G, const InertiaScenario& sc) {
  if (!is_subgroup(G, sc.D.members)) throw std::invalid_argument("scenario: D is not a subgroup");
  if (!is_subgroup(G, sc.I.members)) throw std::invalid_argument("scenario: I is not a subgroup");
  for (ElementId a : sc.I.members)
    if (!sc.D.contains(a)) throw std::invalid_argument("scenario: I is not contained in D");
  if (!is_normal_in(G, sc.I, sc.D)) throw std::invalid_argument("scenario: I is not normal in D");
  if (sc.phi >= G.order() || !sc.D.contains(sc.phi)) throw std::invalid_argument("scenario: phi is not in D");
  std::vector<ElementId> gens = sc.I.generators;
  gens.push_back(sc.phi);
  if (closure(G, gens).order() != sc.D.order()) throw std::invalid_argument("scenario: phi I does not generate D/I");
  if (!is_prime_power(sc.Np)) throw std::invalid_argument("scenario: Np must be a prime power");
}

InertiaScenario unramified_scenario(const Group& G, ElementId phi, std::uint64_t Np) {
  InertiaScenario sc;
  sc.D = closure(G, {phi});
  sc.I = trivial_subgroup(G);
  sc.phi = phi;
  sc.Np = Np;
  return sc;
}

int frobenius_order(const Group& G, const InertiaScenario& sc) {
  int o = 1;
  ElementId x = sc.phi;
  while (!sc.I.contains(x)) {
    x = G.multiply(x, sc.phi);
    ++o;
  }
  return o;
}

std::vector<std::int64_t> coset_class_counts(const Group& G, const InertiaScenario& sc, std::int64_t l) {
  std::vector<std::int64_t> n(G.num_classes(), 0);
  ElementId base = G.power(sc.phi, l);
  for (ElementId a : sc.I.members) ++n[G.class_of(G.multiply(base, a))];
  return n;
}

Cyclotomic a_coeff(const Group& G, const Character& chi, const InertiaScenario& sc, std::int64_t l) {
  auto n = coset_class_counts(G, sc, l);
  Cyclotomic s(std::int64_t{0});
  for (std::size_t c = 0; c < n.size(); ++c)
    if (n[c]) s.add_scaled(Rational(n[c]), chi[c]);
  return s / Rational(static_cast<std::int64_t>(sc.I.order()));
}

std::int64_t invariant_dimension(const Group& G, const Character& chi, const Subgroup& I) {
  Cyclotomic s(std::int64_t{0});
  for (ElementId a : I.members) s += chi[G.class_of(a)];
  Rational r = (s / Rational(static_cast<std::int64_t>(I.order()))).to_rational();
  if (!r.is_integer() || r.num() < 0) throw std::logic_error("invariant_dimension: not a nonnegative integer");
  return r.num();
}

std::vector<Cyclotomic> LocalRoots::all() const {
  std::vector<Cyclotomic> v = roots;
  for (std::int64_t i = 0; i < zeros; ++i) v.emplace_back(std::int64_t{0});
  return v;
}

LocalRoots local_roots(const Group& G, const Character& chi, const InertiaScenario& sc) {
  validate_scenario(G, sc);
  std::int64_t r = invariant_dimension(G, chi, sc.I);
  std::vector<Cyclotomic> p(r + 1);
  for (std::int64_t k = 1; k <= r; ++k) p[k] = a_coeff(G, chi, sc, k);
  // Elementary symmetric functions, then the monic polynomial with these roots.
  std::vector<Cyclotomic> e(r + 1, Cyclotomic(std::int64_t{0}));
  e[0] = Cyclotomic(std::int64_t{1});
  for (std::int64_t k = 1; k <= r; ++k) {
    Cyclotomic s(std::int64_t{0});
    for (std::int64_t i = 1; i <= k; ++i) {
      if (i % 2)
        s.add_product(e[k - i], p[i]);
      else
        s -= e[k - i] * p[i];
    }
    e[k] = s / Rational(k);
  }
  // poly[j] = coefficient of X^j.
  std::vector<Cyclotomic> poly(r + 1);
  for (std::int64_t k = 0; k <= r; ++k) poly[r - k] = k % 2 ? -e[k] : e[k];

  LocalRoots out;
  out.zeros = chi.degree() - r;
  int o = frobenius_order(G, sc);
  for (int j = 0; j < o && static_cast<std::int64_t>(out.roots.size()) < r; ++j) {
    Cyclotomic z = Cyclotomic::root_of_unity(o, j);
    for (;;) {
      if (poly.size() <= 1) break;
      // Synthetic division by (X - z).
      std::vector<Cyclotomic> q(poly.size() - 1);
      Cyclotomic acc = poly.back();
      for (std::size_t i = poly.size() - 1; i-- > 0;) {
        q[i] = acc;
        acc = poly[i] + acc * z;
      }
      if (!acc.is_zero()) break;
      poly = std::move(q);
      out.roots.push_back(z);
      out.exponents.emplace_back(o, j);
    }
  }
  if (static_cast<std::int64_t>(out.roots.size()) != r)
    throw std::logic_error("local_roots: power sums are not those of roots of unity");
  for (std::int64_t l = 1; l <= chi.degree() + 2; ++l) {
    Cyclotomic s(std::int64_t{0});
    for (const auto& z : out.roots) {
      Cyclotomic t(std::int64_t{1});
      for (std::int64_t i = 0; i < l; ++i) t *= z;
      s += t;
    }
    if (s != a_coeff(G, chi, sc, l)) throw std::logic_error("local_roots: Newton consistency failed");
  }
  return out;
}

std::vector<Cyclotomic> euler_factor_series(const Group& G, const Character& chi, const InertiaScenario& sc,
                                            int k_max) {
  if (k_max < 0 || k_max > 30) throw std::invalid_argument("euler_factor_series: k_max must be in [0, 30]");
  return complete_homogeneous(local_roots(G, chi, sc).roots, k_max);
}

std::vector<Cyclotomic> tensor_lambda(const Group& G, const Character& chi, const Character& chi2,
                                      const InertiaScenario& sc, int k_max) {
  if (sc.I.order() != 1) throw std::invalid_argument("tensor_lambda: scenario must be unramified");
  if (k_max < 0 || k_max > 30) throw std::invalid_argument("tensor_lambda: k_max must be in [0, 30]");
  auto A = local_roots(G, chi, sc).roots;
  auto B = local_roots(G, chi2, sc).roots;
  std::vector<Cyclotomic> out(k_max + 1, Cyclotomic(std::int64_t{0}));
  int lmax = static_cast<int>(std::min(A.size(), B.size()));
  for (int k = 0; k <= k_max; ++k)
    for (const auto& mu : partitions_of(k)) {
      if (mu.length() > lmax) continue;
      out[k].add_product(schur(mu, A), schur(mu, B));
    }
  return out;
}

void validate_filtration(const Group& G, const RamificationFiltration& filt) {
  if (filt.empty()) throw std::invalid_argument("filtration: empty");
  for (const auto& Gi : filt)
    if (!is_subgroup(G, Gi.members)) throw std::invalid_argument("filtration: entry is not a subgroup");
  for (std::size_t i = 1; i < filt.size(); ++i)
    for (ElementId a : filt[i].members)
      if (!filt[i - 1].contains(a)) throw std::invalid_argument("filtration: not descending");
  if (filt.back().order() != 1) throw std::invalid_argument("filtration: must end in the trivial group");
}

std::int64_t conductor_exponent(const Group& G, const Character& chi, const RamificationFiltration& filt) {
  validate_filtration(G, filt);
  Rational total(0);
  auto g0 = static_cast<std::int64_t>(filt[0].order());
  for (const auto& Gi : filt) {
    std::int64_t codim = chi.degree() - invariant_dimension(G, chi, Gi);
    total += Rational(static_cast<std::int64_t>(Gi.order()) * codim, g0);
  }
  if (!total.is_integer()) throw std::domain_error("conductor_exponent: non-integral value " + total.str());
  return total.num();
}

namespace {

// Ramification at p | q in Q(zeta_q) with Galois group realized on residues.
CyclotomicPrimeData prime_data(const Group& G, int q, const std::vector<int>& residue, int p) {
  if (p < 2 || q % p) throw std::invalid_argument("cyclotomic prime data: p must divide q");
  int m = q, a = 0;
  while (m % p == 0) {
    m /= p;
    ++a;
  }
  auto elements_where = [&](auto pred) {
    std::vector<ElementId> ids;
    for (ElementId g = 0; g < G.order(); ++g)
      if (pred(residue[g])) ids.push_back(g);
    return closure(G, ids);
  };
  std::vector<char> in_pow(m, 0);
  for (std::int64_t t = 1 % m;; t = t * p % m) {
    if (in_pow[t]) break;
    in_pow[t] = 1;
  }
  CyclotomicPrimeData d;
  d.p = static_cast<std::uint64_t>(p);
  d.scenario.D = elements_where([&](int u) { return in_pow[u % m] != 0; });
  d.scenario.I = elements_where([&](int u) { return (u - 1) % m == 0; });
  std::int64_t pa = 1;
  for (int i = 0; i < a; ++i) pa *= p;
  d.scenario.phi = 0;
  for (ElementId g = 0; g < G.order(); ++g)
    if (residue[g] % m == p % m && (residue[g] - 1) % pa == 0) d.scenario.phi = g;
  d.scenario.Np = static_cast<std::uint64_t>(p);
  // Lower numbering: G_u = {u = 1 mod p^k} on the inertia part for p^{k-1} <= u < p^k.
  std::int64_t top = 1;
  for (int i = 0; i < a - 1; ++i) top *= p;
  d.filtration.push_back(d.scenario.I);
  for (std::int64_t u = 1; u <= top; ++u) {
    std::int64_t pk = 1;
    while (pk <= u) pk *= p;  // smallest p^k > u
    d.filtration.push_back(
        elements_where([&](int r) { return (r - 1) % m == 0 && (r - 1) % pk == 0; }));
  }
  return d;
}

}  // namespace

CyclotomicPrimeData cyclotomic_prime_data(const CyclotomicField& F, int p) {
  return prime_data(*F.group, F.q, F.residue, p);
}

ConductorDiscriminantReport conductor_discriminant_check(const CharacterTable& table,
                                                         const std::vector<RamifiedPrime>& ramified,
                                                         const mpz_class& D_L, const mpz_class& D_K) {
  const Group& G = table.group();
  ConductorDiscriminantReport r;
  for (const auto& chi : table.rows()) {
    mpz_class Nf = 1, t;
    for (const auto& rp : ramified) {
      std::int64_t e = conductor_exponent(G, chi, rp.filtration);
      mpz_ui_pow_ui(t.get_mpz_t(), rp.Np, static_cast<unsigned long>(e));
      Nf *= t;
    }
    r.conductor_norms.push_back(Nf);
    mpz_pow_ui(t.get_mpz_t(), Nf.get_mpz_t(), static_cast<unsigned long>(chi.degree()));
    r.product *= t;
  }
  mpz_class DKG;
  mpz_pow_ui(DKG.get_mpz_t(), D_K.get_mpz_t(), G.order());
  if (DKG == 0 || D_L % DKG != 0) {
    r.expected = 0;
    r.holds = false;
    return r;
  }
  r.expected = D_L / DKG;
  r.holds = r.product == r.expected;
  return r;
}

ConductorDiscriminantReport cyclotomic_conductor_discriminant(int q) {
  auto F = cyclotomic_field(q);
  std::vector<RamifiedPrime> ram;
  for (int p : prime_divisors(q)) {
    auto d = cyclotomic_prime_data(F, p);
    ram.push_back({d.p, d.filtration});
  }
  return conductor_discriminant_check(F.table, ram, cyclotomic_discriminant(q));
}

Rational tau(const CharacterTable& table, std::size_t cls, const InertiaScenario& sc, std::int64_t l) {
  const Group& G = table.group();
  if (cls >= G.num_classes()) throw std::invalid_argument("tau: class out of range");
  auto n = coset_class_counts(G, sc, l);
  Cyclotomic s(std::int64_t{0});
  for (const auto& chi : table.rows()) {
    Cyclotomic inner(std::int64_t{0});
    for (std::size_t c = 0; c < n.size(); ++c)
      if (n[c]) inner.add_scaled(Rational(n[c]), chi[c]);
    s.add_product(chi[cls].conj(), inner);
  }
  Rational scale(static_cast<std::int64_t>(G.classes()[cls].size),
                 static_cast<std::int64_t>(G.order()) * static_cast<std::int64_t>(sc.I.order()));
  return (s * scale).to_rational();
}

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string cyc_str(const Cyclotomic& c) { return c.str(); }

}  // namespace

std::map<std::uint64_t, InertiaScenario> cyclotomic_ramified_scenarios(const NumberField& field) {
  if (field.spec().kind != NumberFieldSpec::Kind::Cyclotomic)
    throw std::invalid_argument("cyclotomic_ramified_scenarios: not a cyclotomic field");
  const Group& G = *field.group();
  int q = field.spec().q;
  std::vector<int> residue(G.order());
  for (ElementId g = 0; g < G.order(); ++g) residue[g] = field.residue_of_class(G.class_of(g));
  std::map<std::uint64_t, InertiaScenario> out;
  for (int p : prime_divisors(q)) {
    if (q % 4 == 2 && p == 2) continue;  // 2 is unramified in Q(zeta_q) = Q(zeta_{q/2})
    out[p] = prime_data(G, q, residue, p).scenario;
  }
  return out;
}

ZetaCheckReport zeta_factorization_check(const NumberField& field, std::uint64_t N,
                                         const std::map<std::uint64_t, InertiaScenario>& ramified) {
  const Group& G = *field.group();
  auto table = character_table(field.group());
  ZetaCheckReport rep;
  for (std::uint32_t p : primes_up_to(N)) {
    auto rec = field.frobenius(p);
    InertiaScenario sc;
    if (rec.status == FrobeniusStatus::Resolved) {
      sc = unramified_scenario(G, G.classes()[rec.cls].representative, p);
    } else if (rec.status == FrobeniusStatus::Ramified && ramified.count(p)) {
      sc = ramified.at(p);
      validate_scenario(G, sc);
    } else {
      rep.skipped.push_back(p);
      continue;
    }
    int kmax = 0;
    for (std::uint64_t pk = p; pk <= N; pk *= p) ++kmax;
    // Left side: g primes of norm p^f, read off the splitting of p without
    // reference to characters.
    std::size_t f = 0, g = 0;
    if (field.spec().kind == NumberFieldSpec::Kind::Cyclotomic) {
      int q = field.spec().q;
      if (q % 4 == 2) q /= 2;
      int m = q;
      while (m % static_cast<int>(p) == 0) m /= static_cast<int>(p);
      f = 1;
      for (std::uint64_t t = p % m; t != 1 % static_cast<std::uint64_t>(m); t = t * p % m) ++f;
      g = static_cast<std::size_t>(euler_phi(m)) / f;
    } else if (rec.status == FrobeniusStatus::Resolved) {
      f = 1;
      for (int part : rec.cycle_type) f = std::lcm(f, static_cast<std::size_t>(part));
      g = G.order() / f;
    } else {
      // Ramified prime of a splitting field: only the supplied scenario knows e, f, g.
      f = sc.D.order() / sc.I.order();
      g = G.order() / sc.D.order();
    }
    // Right side: product of the local series raised to chi(1).
    std::vector<Cyclotomic> prod(kmax + 1, Cyclotomic(std::int64_t{0}));
    prod[0] = Cyclotomic(std::int64_t{1});
    for (const auto& chi : table.rows()) {
      auto lam = euler_factor_series(G, chi, sc, kmax);
      for (std::int64_t rep_i = 0; rep_i < chi.degree(); ++rep_i) {
        std::vector<Cyclotomic> next(kmax + 1, Cyclotomic(std::int64_t{0}));
        for (int i = 0; i <= kmax; ++i)
          for (int j = 0; i + j <= kmax; ++j) next[i + j].add_product(prod[i], lam[j]);
        prod = std::move(next);
      }
    }
    for (int k = 1; k <= kmax; ++k) {
      mpz_class lhs = k % f ? mpz_class(0) : binomial(g + k / f - 1, g - 1);
      ++rep.prime_powers_checked;
      bool ok = prod[k].is_rational() && prod[k].to_rational().is_integer() &&
                mpz_class(static_cast<long>(prod[k].to_rational().num())) == lhs;
      if (!ok) {
        rep.holds = false;
        if (!rep.first_mismatch) rep.first_mismatch = ZetaMismatch{p, k, lhs.get_str(), cyc_str(prod[k])};
      }
    }
  }
  return rep;
}

}  // namespace cheblab
