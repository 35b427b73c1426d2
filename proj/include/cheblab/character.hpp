#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cheblab/cyclotomic.hpp"
#include "cheblab/group.hpp"
#include "cheblab/subgroup.hpp"

namespace cheblab {

/// Class function on a group: one cyclotomic value per conjugacy class,
/// in the group's canonical class order.
struct Character {
  std::vector<Cyclotomic> values;
  bool irreducible = false;

  std::int64_t degree() const { return values.empty() ? 0 : values[0].to_rational().num(); }
  const Cyclotomic& operator[](std::size_t cls) const { return values[cls]; }
  bool is_trivial() const;
  bool is_linear() const { return degree() == 1; }
};

class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<Character> rows, std::uint64_t prime);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<Character>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  const Character& operator[](std::size_t i) const { return rows_[i]; }
  std::int64_t max_degree() const { return d_; }
  std::vector<std::int64_t> degrees() const;
  /// Index of the row equal to chi, or -1.
  std::int64_t find(const Character& chi) const;
  /// Index of the complex conjugate of row i.
  std::size_t conjugate_index(std::size_t i) const { return conj_index_[i]; }
  /// Modulus used by the modular eigenvector stage.
  std::uint64_t prime() const { return prime_; }

 private:
  GroupPtr group_;
  std::vector<Character> rows_;
  std::vector<std::size_t> conj_index_;
  std::int64_t d_ = 1;
  std::uint64_t prime_ = 0;
};

/// Exact table via the Dixon-Schneider method. Rows are sorted by degree;
/// the trivial character comes first and ties among the rest are broken by
/// descending lexicographic order of the value coefficients.
CharacterTable character_table(const GroupPtr& G, std::size_t order_cap = 20000);

Character trivial_character(const Group& G);
Character regular_character(const Group& G);
Character conj(const Character& chi);
Character tensor(const Character& a, const Character& b);
Character operator+(const Character& a, const Character& b);
Character scaled(const Character& a, std::int64_t k);

/// (1/|G|) sum_g chi(g) conj(psi(g)); throws if the class counts differ.
Rational inner_product(const Group& G, const Character& chi, const Character& psi);
/// Multiplicity of each irreducible in chi (nonnegative integers for characters).
std::vector<std::int64_t> decompose(const CharacterTable& T, const Character& chi);
/// Constituents of chi (x) psi as (row index, multiplicity) pairs.
std::vector<std::pair<std::size_t, std::int64_t>> tensor_decompose(const CharacterTable& T, const Character& chi,
                                                                   const Character& psi);

/// Class map of a subgroup realized as its own group: `embedding[h]` is the
/// ambient id of element h of `sub`.
struct SubgroupEmbedding {
  GroupPtr sub;
  std::vector<ElementId> embedding;
  std::vector<std::size_t> fusion;  // sub class -> ambient class
};
SubgroupEmbedding embed_subgroup(const Group& G, const Subgroup& H);

Character induce(const Group& G, const SubgroupEmbedding& H, const Character& chi_H);
Character restrict(const SubgroupEmbedding& H, const Character& chi);

/// Value of chi at an element (looked up through its class).
inline const Cyclotomic& value_at(const Group& G, const Character& chi, ElementId g) {
  return chi.values[G.class_of(g)];
}

struct SnDegreeStats {
  int n = 0;
  std::vector<std::string> degrees;  // one per partition, decimal strings (big integers)
  std::string d;                     // max degree
  double d2_log_d = 0;               // d^2 * Log d
};
/// Degrees of S_n via the hook length formula, 1 <= n <= 40.
SnDegreeStats sn_degree_stats(int n);
/// w(mu) = prod_j j^{r_j} r_j! where r_j parts of mu equal j; |class| = n!/w.
std::string sn_w(const std::vector<int>& mu);
std::string sn_class_size(const std::vector<int>& mu);
/// Hook length degree of the irreducible of S_n labelled by mu.
std::string hook_length_degree(const std::vector<int>& mu);

/// Log x = max{1, log x}.
double Log(double x);

}  // namespace cheblab
