#include "cheblab/cyclofield.hpp"

#include <numeric>
#include <stdexcept>

#include "cheblab/subgroup.hpp"

namespace cheblab {

CyclotomicField cyclotomic_field(int q) {
  if (q < 1) throw std::invalid_argument("cyclotomic_field: q must be positive");
  auto G = build_group(GroupSpec::units(q));
  CyclotomicField F{q, G, character_table(G), {}, {}, {}};
  F.residue.resize(G->order());
  F.element.assign(q + 1, 0);
  for (ElementId g = 0; g < G->order(); ++g) {
    int a = q <= 2 ? 1 : G->permutation(g)[1];
    F.residue[g] = a;
    F.element[a] = g;
  }
  for (std::size_t r = 0; r < F.table.size(); ++r) F.conductor.push_back(dirichlet_conductor(F, r));
  return F;
}

mpz_class cyclotomic_discriminant(int q) {
  if (q < 1) throw std::invalid_argument("cyclotomic_discriminant: q must be positive");
  if (q % 4 == 2) q /= 2;
  long phi = euler_phi(q);
  mpz_class num, den = 1, t;
  mpz_ui_pow_ui(num.get_mpz_t(), q, phi);
  for (int p : prime_divisors(q)) {
    mpz_ui_pow_ui(t.get_mpz_t(), p, phi / (p - 1));
    den *= t;
  }
  return num / den;
}

int dirichlet_conductor(const CyclotomicField& F, std::size_t row) {
  const Character& chi = F.table[row];
  const Group& G = *F.group;
  for (int d = 1; d <= F.q; ++d) {
    if (F.q % d) continue;
    bool trivial = true;
    for (ElementId g = 0; g < G.order() && trivial; ++g)
      if ((F.residue[g] - 1) % d == 0 && !(chi[G.class_of(g)] == Cyclotomic(std::int64_t{1}))) trivial = false;
    if (trivial) return d;
  }
  return F.q;
}

ConductorData cyclotomic_conductors(const CyclotomicField& F) {
  ConductorData c;
  for (int f : F.conductor) c.conductor_norms.emplace_back(f);
  return c;
}

}  // namespace cheblab
