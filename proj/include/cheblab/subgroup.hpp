#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheblab/group.hpp"

namespace cheblab {

/// Membership bitset over the element ids of a fixed group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  bool contains(ElementId x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(ElementId x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  std::size_t universe() const { return n_; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.words_ == b.words_; }
  bool is_subset_of(const ElementSet& o) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StructureFlags {
  std::optional<bool> abelian, nilpotent, supersolvable;
};

/// A subgroup of a fixed ambient group, stored as a sorted member list with
/// a membership bitset and a generating set.
struct Subgroup {
  std::vector<ElementId> members;
  std::vector<ElementId> generators;
  ElementSet set;
  StructureFlags flags;

  std::size_t order() const { return members.size(); }
  bool contains(ElementId x) const { return set.contains(x); }
};

/// Smallest subgroup containing the given elements.
Subgroup closure(const Group& G, const std::vector<ElementId>& gens);
/// Checks identity, closure under products and inverses.
bool is_subgroup(const Group& G, const std::vector<ElementId>& members);
Subgroup whole_group(const Group& G);
Subgroup trivial_subgroup(const Group& G);
Subgroup center(const Group& G, const Subgroup& H);
Subgroup derived_subgroup(const Group& G, const Subgroup& H);
Subgroup normalizer(const Group& G, const Subgroup& H);
Subgroup centralizer(const Group& G, ElementId x);
bool is_normal_in(const Group& G, const Subgroup& N, const Subgroup& H);
/// g H g^-1.
Subgroup conjugate_subgroup(const Group& G, const Subgroup& H, ElementId g);
bool are_conjugate(const Group& G, const Subgroup& A, const Subgroup& B);

/// Sylow p-subgroup; throws std::invalid_argument when p does not divide |G|.
Subgroup sylow(const Group& G, int p);

/// Abelian, nilpotent (upper central series reaches H) and supersolvable
/// (a series of H-normal subgroups with prime-order factors exists).
StructureFlags structure_flags(const Group& G, const Subgroup& H);
/// Returns H with its flags filled in.
Subgroup with_flags(const Group& G, Subgroup H);

struct SubgroupList {
  bool exhaustive = false;
  std::vector<Subgroup> subgroups;  // sorted by (order, members)
  std::string mode() const { return exhaustive ? "exhaustive" : "distinguished"; }
};

/// One subgroup per conjugacy class when |G| <= order_cap; otherwise the
/// distinguished family (cyclic subgroups of class representatives, Sylow
/// subgroups, center, derived subgroup), deduplicated up to conjugacy.
SubgroupList subgroups(const Group& G, std::size_t order_cap = 512);

/// H realized as a group of its own; `embedding[h]` is the ambient id of
/// element h of the returned group.
GroupPtr subgroup_as_group(const Group& G, const Subgroup& H, std::vector<ElementId>* embedding);

std::vector<int> prime_divisors(std::uint64_t n);

}  // namespace cheblab
