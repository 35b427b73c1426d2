#include "cheblab/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cheblab {

bool ElementSet::is_subset_of(const ElementSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<int> prime_divisors(std::uint64_t n) {
  std::vector<int> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    ps.push_back(static_cast<int>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

namespace {

Subgroup from_members(const Group& G, std::vector<ElementId> members, std::vector<ElementId> gens) {
  Subgroup H;
  std::sort(members.begin(), members.end());
  H.set = ElementSet(G.order());
  for (ElementId x : members) H.set.insert(x);
  H.members = std::move(members);
  H.generators = std::move(gens);
  return H;
}

// Small generating set for an explicit member list: add elements until the
// closure is everything.
std::vector<ElementId> find_generators(const Group& G, const std::vector<ElementId>& members) {
  std::vector<ElementId> gens;
  Subgroup cur = closure(G, {});
  std::vector<ElementId> by_order(members);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](ElementId a, ElementId b) { return G.element_order(a) > G.element_order(b); });
  for (ElementId x : by_order) {
    if (cur.order() == members.size()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = closure(G, gens);
  }
  return gens;
}

}  // namespace

Subgroup closure(const Group& G, const std::vector<ElementId>& gens) {
  ElementSet set(G.order());
  std::vector<ElementId> members{0};
  set.insert(0);
  std::vector<ElementId> g;
  for (ElementId x : gens)
    if (x != 0 && std::find(g.begin(), g.end(), x) == g.end()) g.push_back(x);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElementId s : g) {
      ElementId y = G.multiply(members[i], s);
      if (!set.contains(y)) {
        set.insert(y);
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  Subgroup H;
  H.members = std::move(members);
  H.generators = std::move(g);
  H.set = std::move(set);
  return H;
}

bool is_subgroup(const Group& G, const std::vector<ElementId>& members) {
  ElementSet set(G.order());
  for (ElementId x : members) {
    if (x >= G.order()) return false;
    set.insert(x);
  }
  if (!set.contains(0)) return false;
  for (ElementId a : members) {
    if (!set.contains(G.inverse(a))) return false;
    for (ElementId b : members)
      if (!set.contains(G.multiply(a, b))) return false;
  }
  return true;
}

Subgroup whole_group(const Group& G) {
  std::vector<ElementId> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return from_members(G, std::move(all), G.generators());
}

Subgroup trivial_subgroup(const Group& G) { return closure(G, {}); }

Subgroup center(const Group& G, const Subgroup& H) {
  std::vector<ElementId> z;
  for (ElementId x : H.members) {
    bool central = true;
    for (ElementId g : H.generators)
      if (G.multiply(x, g) != G.multiply(g, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  auto gens = find_generators(G, z);
  return from_members(G, std::move(z), std::move(gens));
}

Subgroup derived_subgroup(const Group& G, const Subgroup& H) {
  std::vector<ElementId> comms;
  for (ElementId a : H.generators)
    for (ElementId b : H.generators) {
      ElementId c = G.multiply(G.multiply(a, b), G.multiply(G.inverse(a), G.inverse(b)));
      if (c != 0) comms.push_back(c);
    }
  // Normal closure in H of the generator commutators.
  Subgroup K = closure(G, comms);
  bool grown = true;
  while (grown) {
    grown = false;
    for (ElementId k : std::vector<ElementId>(K.generators)) {
      for (ElementId h : H.generators) {
        ElementId c = G.conjugate(k, h);
        if (!K.contains(c)) {
          auto gens = K.generators;
          gens.push_back(c);
          K = closure(G, gens);
          grown = true;
        }
      }
    }
  }
  return K;
}

bool is_normal_in(const Group& G, const Subgroup& N, const Subgroup& H) {
  for (ElementId h : H.generators)
    for (ElementId n : N.generators)
      if (!N.contains(G.conjugate(n, h))) return false;
  return true;
}

Subgroup normalizer(const Group& G, const Subgroup& H) {
  std::vector<ElementId> norm;
  for (ElementId g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (ElementId h : H.generators)
      if (!H.contains(G.conjugate(h, g))) {
        ok = false;
        break;
      }
    if (ok) norm.push_back(g);
  }
  auto gens = find_generators(G, norm);
  return from_members(G, std::move(norm), std::move(gens));
}

Subgroup centralizer(const Group& G, ElementId x) {
  std::vector<ElementId> c;
  for (ElementId g = 0; g < G.order(); ++g)
    if (G.multiply(g, x) == G.multiply(x, g)) c.push_back(g);
  auto gens = find_generators(G, c);
  return from_members(G, std::move(c), std::move(gens));
}

Subgroup conjugate_subgroup(const Group& G, const Subgroup& H, ElementId g) {
  std::vector<ElementId> m, gens;
  m.reserve(H.order());
  for (ElementId x : H.members) m.push_back(G.conjugate(x, g));
  for (ElementId x : H.generators) gens.push_back(G.conjugate(x, g));
  return from_members(G, std::move(m), std::move(gens));
}

bool are_conjugate(const Group& G, const Subgroup& A, const Subgroup& B) {
  if (A.order() != B.order()) return false;
  for (ElementId g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (ElementId a : A.generators)
      if (!B.contains(G.conjugate(a, g))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

Subgroup sylow(const Group& G, int p) {
  std::size_t n = G.order();
  if (p < 2 || n % p != 0) throw std::invalid_argument("sylow: p must divide the group order");
  std::size_t target = 1;
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  Subgroup P = trivial_subgroup(G);
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    bool grown = false;
    for (ElementId x : N.members) {
      if (P.contains(x)) continue;
      std::int64_t o = G.element_order(x), m = o;
      while (m % p == 0) m /= p;
      ElementId y = G.power(x, m);
      if (P.contains(y)) continue;
      while (!P.contains(G.power(y, p))) y = G.power(y, p);
      auto gens = P.generators;
      gens.push_back(y);
      P = closure(G, gens);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow: failed to extend p-subgroup");
  }
  return with_flags(G, std::move(P));
}

StructureFlags structure_flags(const Group& G, const Subgroup& H) {
  StructureFlags f;
  bool abelian = true;
  for (std::size_t i = 0; i < H.generators.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < H.generators.size(); ++j)
      if (G.multiply(H.generators[i], H.generators[j]) != G.multiply(H.generators[j], H.generators[i])) {
        abelian = false;
        break;
      }

  // Upper central series: Z_{i+1} = { h : [h, g] in Z_i for all generators g }.
  bool nilpotent = abelian;
  if (!abelian) {
    ElementSet z(G.order());
    z.insert(0);
    std::size_t zsize = 1;
    while (true) {
      ElementSet next(G.order());
      std::size_t count = 0;
      for (ElementId h : H.members) {
        bool ok = true;
        for (ElementId g : H.generators) {
          ElementId c = G.multiply(G.multiply(h, g), G.multiply(G.inverse(h), G.inverse(g)));
          if (!z.contains(c)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          next.insert(h);
          ++count;
        }
      }
      if (count == zsize) break;
      z = std::move(next);
      zsize = count;
      if (zsize == H.order()) break;
    }
    nilpotent = zsize == H.order();
  }

  // Greedy series of H-normal subgroups with prime-order factors; complete
  // by Jordan-Holder for chief series.
  bool supersolvable = nilpotent;
  if (!nilpotent) {
    Subgroup N = trivial_subgroup(G);
    bool stuck = false;
    while (N.order() < H.order() && !stuck) {
      stuck = true;
      for (ElementId x : H.members) {
        if (N.contains(x)) continue;
        int k = 1;
        ElementId y = x;
        while (!N.contains(y)) {
          y = G.multiply(y, x);
          ++k;
        }
        auto ps = prime_divisors(static_cast<std::uint64_t>(k));
        if (ps.size() != 1 || ps[0] != k) continue;
        auto gens = N.generators;
        gens.push_back(x);
        Subgroup M = closure(G, gens);
        if (M.order() != N.order() * static_cast<std::size_t>(k)) continue;
        if (!is_normal_in(G, M, H)) continue;
        N = std::move(M);
        stuck = false;
        break;
      }
    }
    supersolvable = N.order() == H.order();
  }
  f.abelian = abelian;
  f.nilpotent = nilpotent;
  f.supersolvable = supersolvable;
  return f;
}

Subgroup with_flags(const Group& G, Subgroup H) {
  H.flags = structure_flags(G, H);
  return H;
}

namespace {

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members < b.members;
}

// Class-distribution signature: conjugation invariant used to skip most
// explicit conjugacy tests.
std::vector<std::size_t> signature(const Group& G, const Subgroup& H) {
  std::vector<std::size_t> sig(G.num_classes(), 0);
  for (ElementId x : H.members) ++sig[G.class_of(x)];
  return sig;
}

struct ClassRegistry {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_sig;
  std::vector<Subgroup> reps;

  bool add(const Group& G, Subgroup H) {
    auto sig = signature(G, H);
    auto& bucket = by_sig[sig];
    for (std::size_t i : bucket)
      if (reps[i].set == H.set || are_conjugate(G, reps[i], H)) return false;
    bucket.push_back(reps.size());
    reps.push_back(std::move(H));
    return true;
  }
};

}  // namespace

SubgroupList subgroups(const Group& G, std::size_t order_cap) {
  SubgroupList out;
  ClassRegistry reg;
  if (G.order() <= order_cap) {
    out.exhaustive = true;
    // One generator per cyclic subgroup of prime-power order; every subgroup
    // is generated by such elements, so joining one at a time reaches every
    // class of subgroups.
    std::vector<ElementId> cyc_gens;
    {
      ElementSet covered(G.order());
      for (ElementId x = 1; x < G.order(); ++x) {
        if (prime_divisors(G.element_order(x)).size() != 1 || covered.contains(x)) continue;
        cyc_gens.push_back(x);
        int o = G.element_order(x);
        for (int k = 1; k < o; ++k)
          if (std::gcd(k, o) == 1) covered.insert(G.power(x, k));
      }
    }
    reg.add(G, trivial_subgroup(G));
    for (std::size_t i = 0; i < reg.reps.size(); ++i) {
      std::vector<ElementId> base = reg.reps[i].generators;
      for (ElementId g : cyc_gens) {
        if (reg.reps[i].contains(g)) continue;
        auto gens = base;
        gens.push_back(g);
        Subgroup K = closure(G, gens);
        reg.add(G, std::move(K));
      }
    }
  } else {
    for (const auto& c : G.classes()) reg.add(G, closure(G, {c.representative}));
    for (int p : prime_divisors(G.order())) reg.add(G, sylow(G, p));
    Subgroup W = whole_group(G);
    reg.add(G, center(G, W));
    reg.add(G, derived_subgroup(G, W));
    reg.add(G, W);
  }
  for (auto& H : reg.reps) {
    if (H.generators.size() > 3) H.generators = find_generators(G, H.members);
    H.flags = structure_flags(G, H);
  }
  out.subgroups = std::move(reg.reps);
  std::sort(out.subgroups.begin(), out.subgroups.end(), subgroup_less);
  return out;
}

GroupPtr subgroup_as_group(const Group& G, const Subgroup& H, std::vector<ElementId>* embedding) {
  std::vector<std::vector<int>> gens;
  for (ElementId g : H.generators) {
    auto p = G.permutation(g);
    gens.emplace_back(p.begin(), p.end());
  }
  auto K = Group::from_permutations(gens, G.degree(), G.name() + "|sub" + std::to_string(H.order()),
                                    H.order() + 1);
  if (embedding) {
    embedding->resize(K->order());
    for (ElementId k = 0; k < K->order(); ++k) (*embedding)[k] = static_cast<ElementId>(G.find(K->permutation(k)));
  }
  return K;
}

}  // namespace cheblab
