#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cheblab/character.hpp"
#include "cheblab/cyclofield.hpp"

namespace cheblab {

struct Partition {
  std::vector<int> parts;  // nonincreasing, positive
  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// h_0..h_kmax of the given values.
template <class T>
std::vector<T> complete_homogeneous(const std::vector<T>& xs, int kmax) {
  std::vector<T> h(kmax + 1, T(0));
  h[0] = T(1);
  for (const T& x : xs)
    for (int k = 1; k <= kmax; ++k) h[k] = h[k] + x * h[k - 1];
  return h;
}

/// Division-free determinant by expansion over column subsets.
template <class T>
T subset_determinant(const std::vector<std::vector<T>>& M) {
  std::size_t n = M.size();
  if (n == 0) return T(1);
  std::vector<T> dp(std::size_t(1) << n, T(0));
  dp[0] = T(1);
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    int row = __builtin_popcountll(mask);
    if (row >= static_cast<int>(n)) continue;
    // Sign of placing column j after the columns already used.
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) continue;
      int above = __builtin_popcountll(mask >> (j + 1));
      T term = dp[mask] * M[row][j];
      dp[mask | (std::size_t(1) << j)] = above % 2 ? dp[mask | (std::size_t(1) << j)] - term
                                                   : dp[mask | (std::size_t(1) << j)] + term;
    }
  }
  return dp.back();
}

/// s_mu(xs) via Jacobi-Trudi in the h_k; 0 when l(mu) exceeds #xs.
template <class T>
T schur(const Partition& mu, const std::vector<T>& xs) {
  if (mu.length() == 0) return T(1);
  if (mu.length() > static_cast<int>(xs.size())) return T(0);
  int l = mu.length();
  int kmax = mu.parts[0] + l;
  auto h = complete_homogeneous(xs, kmax);
  std::vector<std::vector<T>> M(l, std::vector<T>(l, T(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int k = mu.parts[i] - i + j;
      if (k >= 0) M[i][j] = h[k];
    }
  return subset_determinant(M);
}

struct CauchyReport {
  bool holds = false;
  int degree = 0;
  double max_deviation = 0;
};
/// Compares coefficients of prod 1/(1 - a_i b_j t) with sum s_mu(a) s_mu(b) t^|mu|
/// through t^degree_cap (<= 8). Exact for cyclotomic inputs.
CauchyReport cauchy_check(const std::vector<Cyclotomic>& alphas, const std::vector<Cyclotomic>& betas,
                          int degree_cap);
CauchyReport cauchy_check(const std::vector<std::complex<double>>& alphas,
                          const std::vector<std::complex<double>>& betas, int degree_cap, double tol = 1e-9);

/// Decomposition group D, inertia I normal in D, phi in D with phi I
/// generating D/I, and the norm of the prime.
struct InertiaScenario {
  Subgroup D;
  Subgroup I;
  ElementId phi = 0;
  std::uint64_t Np = 2;
};

/// Throws std::invalid_argument unless the scenario is valid in G.
void validate_scenario(const Group& G, const InertiaScenario& sc);
/// D = <phi>, I = 1.
InertiaScenario unramified_scenario(const Group& G, ElementId phi, std::uint64_t Np);
/// Order of phi I in D/I.
int frobenius_order(const Group& G, const InertiaScenario& sc);

/// For each class c, the number of alpha in I with phi^l alpha in c.
std::vector<std::int64_t> coset_class_counts(const Group& G, const InertiaScenario& sc, std::int64_t l);

/// (1/|I|) sum_{alpha in I} chi(phi^l alpha).
Cyclotomic a_coeff(const Group& G, const Character& chi, const InertiaScenario& sc, std::int64_t l);
/// dim V^I.
std::int64_t invariant_dimension(const Group& G, const Character& chi, const Subgroup& I);

struct LocalRoots {
  std::vector<Cyclotomic> roots;               // nonzero roots, with multiplicity
  std::vector<std::pair<int, int>> exponents;  // root = zeta_order^exponent
  std::int64_t zeros = 0;
  /// All chi(1) entries, zeros last.
  std::vector<Cyclotomic> all() const;
};
/// Eigenvalues of phi on V^I from the power sums by Newton's identities,
/// padded with chi(1) - dim V^I zeros. Throws std::logic_error if the
/// recovered roots do not reproduce the power sums.
LocalRoots local_roots(const Group& G, const Character& chi, const InertiaScenario& sc);

/// lambda_chi(p^k) = h_k(A_chi(p)) for k = 0..k_max (<= 30).
std::vector<Cyclotomic> euler_factor_series(const Group& G, const Character& chi, const InertiaScenario& sc,
                                            int k_max);
/// sum_{|mu| = k} s_mu(A_chi) s_mu(A_chi'), unramified scenarios only.
std::vector<Cyclotomic> tensor_lambda(const Group& G, const Character& chi, const Character& chi2,
                                      const InertiaScenario& sc, int k_max);

/// G_0 = I, G_1, ... descending, ending in the trivial group.
using RamificationFiltration = std::vector<Subgroup>;
void validate_filtration(const Group& G, const RamificationFiltration& filt);
/// sum_i (|G_i|/|G_0|)(chi(1) - dim V^{G_i}); throws std::domain_error when not an integer.
std::int64_t conductor_exponent(const Group& G, const Character& chi, const RamificationFiltration& filt);

/// Ramification data at p | q for Q(zeta_q), realized in units:q.
struct CyclotomicPrimeData {
  std::uint64_t p = 0;
  InertiaScenario scenario;
  RamificationFiltration filtration;
};
CyclotomicPrimeData cyclotomic_prime_data(const CyclotomicField& F, int p);

struct RamifiedPrime {
  std::uint64_t Np = 0;
  RamificationFiltration filtration;
};
struct ConductorDiscriminantReport {
  bool holds = false;
  mpz_class product = 1;   // prod_chi Nf_chi^{chi(1)}
  mpz_class expected = 1;  // D_L / D_K^{|G|}
  std::vector<mpz_class> conductor_norms;
};
ConductorDiscriminantReport conductor_discriminant_check(const CharacterTable& table,
                                                         const std::vector<RamifiedPrime>& ramified,
                                                         const mpz_class& D_L, const mpz_class& D_K = 1);
ConductorDiscriminantReport cyclotomic_conductor_discriminant(int q);

/// (1/|I|) sum_alpha (|C|/|G|) sum_chi conj(chi(C)) chi(phi^l alpha).
Rational tau(const CharacterTable& table, std::size_t cls, const InertiaScenario& sc, std::int64_t l);

class NumberField;
struct ZetaMismatch {
  std::uint64_t p = 0;
  int k = 0;
  std::string lhs, rhs;
};
struct ZetaCheckReport {
  bool holds = true;
  std::uint64_t prime_powers_checked = 0;
  std::vector<std::uint64_t> skipped;  // ramified primes without a scenario, ambiguous primes
  std::optional<ZetaMismatch> first_mismatch;
};
/// Dirichlet coefficients of zeta_L (ideal counts from the splitting type)
/// against prod_chi L(s, chi)^{chi(1)}, for all p^k <= N.
ZetaCheckReport zeta_factorization_check(const NumberField& field, std::uint64_t N,
                                         const std::map<std::uint64_t, InertiaScenario>& ramified = {});
/// Built-in tame/wild scenarios at every p | q for cyclotomic fields.
std::map<std::uint64_t, InertiaScenario> cyclotomic_ramified_scenarios(const NumberField& field);

}  // namespace cheblab
