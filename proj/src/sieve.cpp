#include "cheblab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cheblab/census.hpp"
#include "cheblab/parallel.hpp"

namespace cheblab {

double selberg_g(const std::vector<Cyclotomic>& roots, double Np) {
  std::vector<std::complex<double>> a;
  for (const auto& r : roots) a.push_back(r.to_complex());
  std::complex<double> prod = 1;
  for (const auto& x : a)
    for (const auto& y : a) prod *= 1.0 - x * std::conj(y) / Np;
  return 1.0 - prod.real();
}

SelbergObjects selberg_from_densities(const std::map<std::uint64_t, double>& g, double z) {
  if (z > 1e4) throw std::invalid_argument("selberg: z must be <= 10^4");
  SelbergObjects s;
  s.z = z;
  s.g = g;
  for (const auto& [p, gp] : g)
    if (static_cast<double>(p) < z && gp != 0) s.P.push_back(p);
  // Divisors of P(z) up to z, built by extending with increasing primes.
  std::vector<std::uint64_t> D = {1};
  for (std::uint64_t p : s.P) {
    std::size_t n = D.size();
    for (std::size_t i = 0; i < n; ++i)
      if (static_cast<double>(D[i] * p) <= z) D.push_back(D[i] * p);
  }
  std::sort(D.begin(), D.end());
  s.D = D;

  auto primes_of = [&](std::uint64_t d) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p : s.P)
      if (d % p == 0) ps.push_back(p);
    return ps;
  };
  auto admissible = [&](std::uint64_t p) { return g.at(p) > 0 && g.at(p) < 1; };
  // Support: divisors all of whose primes have 0 < g < 1.
  std::vector<std::uint64_t> S;
  std::map<std::uint64_t, double> h, gd;
  std::map<std::uint64_t, int> mu;
  for (std::uint64_t d : D) {
    auto ps = primes_of(d);
    if (!std::all_of(ps.begin(), ps.end(), admissible)) continue;
    double hv = 1, gv = 1;
    for (std::uint64_t p : ps) {
      hv *= g.at(p) / (1 - g.at(p));
      gv *= g.at(p);
    }
    S.push_back(d);
    h[d] = hv;
    gd[d] = gv;
    mu[d] = ps.size() % 2 ? -1 : 1;
  }
  for (std::uint64_t d : S) s.G_sum += h[d];
  for (std::uint64_t d : D) s.rho[d] = 0;
  for (std::uint64_t d : S) {
    double acc = 0;
    for (std::uint64_t k : S)
      if (k % d == 0) acc += h[k];
    s.rho[d] = mu[d] * acc / (gd[d] * s.G_sum);
  }
  s.constraints_hold = std::abs(s.rho[1] - 1) < 1e-12;
  for (const auto& [d, r] : s.rho)
    if (std::abs(r) > 1 + 1e-12) s.constraints_hold = false;
  if (D.size() <= 4096) {
    auto gl = [&](std::uint64_t d) {
      double v = 1;
      for (std::uint64_t p : primes_of(d)) v *= g.at(p);
      return v;
    };
    double Q = 0;
    for (std::uint64_t d : S)
      for (std::uint64_t e : S) Q += s.rho[d] * s.rho[e] * gl(d / std::gcd(d, e) * e);
    s.quadratic_form = Q;
  }
  return s;
}

SelbergObjects selberg_objects(const Group& G, const Character& chi, const ScenarioProvider& scenarios, double z) {
  if (z > 1e4) throw std::invalid_argument("selberg: z must be <= 10^4");
  std::map<std::uint64_t, double> g;
  if (z > 2) {
    for (std::uint32_t p : primes_up_to(static_cast<std::uint64_t>(std::ceil(z)) - 1)) {
      if (static_cast<double>(p) >= z) break;
      auto sc = scenarios(p);
      if (!sc) throw std::invalid_argument("selberg: missing scenario for p = " + std::to_string(p));
      g[p] = selberg_g(local_roots(G, chi, *sc).roots, static_cast<double>(sc->Np));
    }
  }
  return selberg_from_densities(g, z);
}

OmegaReport omega_bound_check(std::uint64_t N, double delta) {
  if (!(delta > 0 && delta <= 1)) throw std::invalid_argument("omega_bound_check: delta must lie in (0,1]");
  OmegaReport r;
  r.N = N;
  r.delta = delta;
  r.min_slack = INFINITY;
  std::vector<std::uint8_t> omega(N + 1, 0);
  for (std::uint64_t p = 2; p <= N; ++p) {
    if (omega[p]) continue;
    for (std::uint64_t m = p; m <= N; m += p) ++omega[m];
  }
  double base = std::exp(1 + 1 / delta);
  for (std::uint64_t n = 2; n <= N; ++n) {
    double slack = base + delta * std::log(static_cast<double>(n)) - omega[n];
    if (slack < r.min_slack) {
      r.min_slack = slack;
      r.tightest_n = n;
    }
    if (slack < 0) r.holds = false;
  }
  if (N < 2) r.min_slack = 0;
  return r;
}

TailReport dirichlet_tail_check(const Group& G, const Character& chi, const Character& psi,
                                const ScenarioProvider& scenarios, double eta, std::uint64_t truncation,
                                double log_q) {
  if (!(eta > 0 && eta < 1)) throw std::invalid_argument("dirichlet_tail_check: eta must lie in (0,1)");
  if (truncation > 100000) throw std::invalid_argument("dirichlet_tail_check: truncation must be <= 10^5");
  TailReport r;
  r.rhs = 1 / eta + log_q / 2;
  auto prod = tensor(chi, psi);
  for (std::uint32_t p : primes_up_to(truncation)) {
    auto sc = scenarios(p);
    if (!sc) continue;
    double lp = std::log(static_cast<double>(p));
    std::int64_t k = 1;
    for (std::uint64_t pk = p; pk <= truncation; pk *= p, ++k) {
      double a = std::abs(a_coeff(G, prod, *sc, k).to_complex());
      r.lhs += a * lp / std::pow(static_cast<double>(pk), 1 + eta);
      ++r.prime_powers;
    }
  }
  r.holds = r.lhs <= r.rhs;
  return r;
}

std::vector<InertiaScenario> all_scenarios(const Group& G, std::uint64_t Np) {
  std::vector<InertiaScenario> out;
  auto Ds = subgroups(G, G.order()).subgroups;
  for (const auto& D : Ds) {
    std::vector<ElementId> emb;
    auto Dg = subgroup_as_group(G, D, &emb);
    // Subgroups of D up to D-conjugacy; the normal ones are their own class.
    for (const auto& Iloc : subgroups(*Dg, Dg->order()).subgroups) {
      std::vector<ElementId> ids;
      for (ElementId a : Iloc.members) ids.push_back(emb[a]);
      Subgroup I = closure(G, ids);
      if (!is_normal_in(G, I, D)) continue;
      std::set<std::vector<ElementId>> seen_cosets;
      for (ElementId phi : D.members) {
        std::vector<ElementId> coset;
        for (ElementId a : I.members) coset.push_back(G.multiply(phi, a));
        std::sort(coset.begin(), coset.end());
        if (!seen_cosets.insert(coset).second) continue;
        std::vector<ElementId> gens = I.generators;
        gens.push_back(phi);
        if (closure(G, gens).order() != D.order()) continue;
        out.push_back({D, I, phi, Np});
      }
    }
  }
  return out;
}

namespace {

SweepReport sweep_scenarios(const GroupPtr& Gp, const std::vector<InertiaScenario>& scen, int l_max) {
  const Group& G = *Gp;
  auto T = character_table(Gp);
  SweepReport rep;
  rep.group = G.name();
  rep.scenarios = scen.size();
  // The coefficients depend only on the class profile of phi^l I.
  std::set<std::vector<std::int64_t>> profiles;
  for (const auto& sc : scen)
    for (int l = 1; l <= l_max; ++l) profiles.insert(coset_class_counts(G, sc, l));
  rep.distinct_profiles = profiles.size();
  std::vector<std::vector<std::int64_t>> list(profiles.begin(), profiles.end());
  std::size_t k = T.size();

  struct Partial {
    std::uint64_t nonneg = 0, cs = 0, bad = 0;
    std::string first;
  };
  std::vector<Partial> parts(list.size());
  parallel_for(list.size(), [&](std::size_t idx) {
    const auto& n = list[idx];
    auto a_of = [&](std::size_t i, std::size_t j) {
      Cyclotomic s(std::int64_t{0});
      for (std::size_t c = 0; c < n.size(); ++c)
        if (n[c]) s.add_scaled(Rational(n[c]), T[i][c] * T[j][c]);
      return s;
    };
    Partial& P = parts[idx];
    std::vector<Cyclotomic> diag(k);
    for (std::size_t i = 0; i < k; ++i) {
      diag[i] = a_of(i, T.conjugate_index(i));
      ++P.nonneg;
      if (real_sign(diag[i]) < 0) {
        ++P.bad;
        if (P.first.empty()) P.first = "a_{chi x conj chi} < 0 for row " + std::to_string(i);
      }
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        Cyclotomic a = a_of(i, j);
        ++P.cs;
        if (real_sign(diag[i] * diag[j] - norm_squared(a)) < 0) {
          ++P.bad;
          if (P.first.empty()) P.first = "Cauchy-Schwarz fails for rows " + std::to_string(i) + "," + std::to_string(j);
        }
      }
  });
  // The common 1/|I| factor is positive and does not affect either sign.
  for (const auto& P : parts) {
    rep.nonnegativity_checks += P.nonneg;
    rep.cauchy_schwarz_checks += P.cs;
    rep.violations += P.bad;
    if (rep.first_violation.empty()) rep.first_violation = P.first;
  }
  return rep;
}

}  // namespace

SweepReport coefficient_sweep(const GroupPtr& G, int l_max) { return sweep_scenarios(G, all_scenarios(*G), l_max); }

SweepReport scenario_sweep(const GroupPtr& G, const InertiaScenario& sc, int l_max) {
  validate_scenario(*G, sc);
  return sweep_scenarios(G, {sc}, l_max);
}

}  // namespace cheblab
