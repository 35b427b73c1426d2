#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cheblab/schur.hpp"

namespace cheblab {

/// Supplies the scenario at a rational prime p (base Q), or nullopt to skip p.
using ScenarioProvider = std::function<std::optional<InertiaScenario>(std::uint64_t p)>;

/// g(p) = 1 - prod_{j,j'} (1 - alpha_j conj(alpha_j') / p).
double selberg_g(const std::vector<Cyclotomic>& roots, double Np);

struct SelbergObjects {
  double z = 0;
  std::map<std::uint64_t, double> g;     // per prime p < z
  std::vector<std::uint64_t> P;          // primes with g(p) != 0
  std::vector<std::uint64_t> D;          // divisors of P(z) with d <= z, ascending
  std::map<std::uint64_t, double> rho;   // Selberg weights on D
  double G_sum = 0;                      // sum over the weight support of prod g/(1-g)
  std::optional<double> quadratic_form;  // sum rho_d rho_e g([d,e]), when |D| is moderate
  bool constraints_hold = false;         // rho(1) = 1, support in D, |rho| <= 1
};
/// Throws for z > 10^4. Divisors containing a prime with g outside (0,1)
/// carry weight zero.
SelbergObjects selberg_objects(const Group& G, const Character& chi, const ScenarioProvider& scenarios, double z);
/// Same objects from explicit local densities g(p) (used by oracles).
SelbergObjects selberg_from_densities(const std::map<std::uint64_t, double>& g, double z);

struct OmegaReport {
  bool holds = true;
  std::uint64_t N = 0;
  double delta = 1;
  double min_slack = 0;        // min over n of bound - omega(n)
  std::uint64_t tightest_n = 2;
};
OmegaReport omega_bound_check(std::uint64_t N, double delta);

struct TailReport {
  bool holds = true;
  double lhs = 0;
  double rhs = 0;
  std::uint64_t prime_powers = 0;
};
/// Truncated sum over p^k <= truncation of |a_{chi (x) psi}(p^k)| log p / p^{k(1+eta)}
/// against 1/eta + log(q)/2.
TailReport dirichlet_tail_check(const Group& G, const Character& chi, const Character& psi,
                                const ScenarioProvider& scenarios, double eta, std::uint64_t truncation,
                                double log_q);

struct SweepReport {
  std::string group;
  std::uint64_t scenarios = 0;        // (D, I, phi I) triples, D and I up to conjugacy
  std::uint64_t distinct_profiles = 0;
  std::uint64_t nonnegativity_checks = 0;
  std::uint64_t cauchy_schwarz_checks = 0;
  std::uint64_t violations = 0;
  std::string first_violation;
};
/// Checks a_{chi x conj chi} >= 0 and |a_{chi1 x chi2}|^2 <=
/// a_{chi1 x conj chi1} a_{chi2 x conj chi2} over every scenario and l <= l_max.
SweepReport coefficient_sweep(const GroupPtr& G, int l_max = 6);
/// Same checks for one scenario; throws if the scenario is invalid.
SweepReport scenario_sweep(const GroupPtr& G, const InertiaScenario& sc, int l_max = 6);

/// Every (D, I normal in D, phi) with D/I cyclic; D up to conjugacy in G,
/// I among the normal subgroups of D, one phi per generating coset.
std::vector<InertiaScenario> all_scenarios(const Group& G, std::uint64_t Np = 2);

}  // namespace cheblab
