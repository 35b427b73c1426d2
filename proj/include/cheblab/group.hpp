#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cheblab {

using ElementId = std::uint32_t;

/// Compact description of a finite group, parsed from the spec mini-language:
///   cyclic:n  dihedral:n  symmetric:n  frobenius:p:q  units:q
///   product:<spec>x<spec>[x...]   perm:(1,2)(3,4);(1,2,3)   cayley:@file.json
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Frobenius, Units, Product, Permutation, Cayley };

  Kind kind = Kind::Cyclic;
  int n = 1;  // cyclic/dihedral/symmetric/units parameter
  int p = 0;  // frobenius(p, q)
  int q = 0;
  std::vector<GroupSpec> factors;                // product
  std::vector<std::vector<int>> generators;      // permutation images, 0-based
  std::vector<std::vector<int>> cayley;          // cayley table
  std::string text;                              // original spec string

  static GroupSpec cyclic(int n);
  static GroupSpec dihedral(int n);
  static GroupSpec symmetric(int n);
  static GroupSpec frobenius(int p, int q);
  static GroupSpec units(int q);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec permutation(std::vector<std::vector<int>> generators);
  static GroupSpec cayley_table(std::vector<std::vector<int>> table);

  std::string to_string() const;
};

/// Parses a spec string; throws std::invalid_argument on malformed input.
/// `cayley:@path` reads {"order":n,"table":[[...]]} from disk.
GroupSpec parse_group_spec(const std::string& text);
/// Parses one generator list "(1,2)(3,4);(1,2,3)" into 0-based images of
/// a common degree (the largest point mentioned).
std::vector<std::vector<int>> parse_cycle_generators(const std::string& text);
/// Cycle notation of a 0-based permutation, points printed 1-based.
std::string cycle_string(std::span<const std::uint16_t> perm);

struct ConjugacyClass {
  ElementId representative = 0;
  std::size_t size = 0;
  int element_order = 1;
  std::vector<ElementId> members;  // sorted ascending
};

struct BuildOptions {
  std::size_t order_cap = 20000;
};

/// Finite group realized as a permutation group with canonical element
/// numbering: elements are sorted by their image lists, so the identity is
/// element 0. Immutable once built and safe to share across threads.
class Group {
 public:
  std::size_t order() const { return order_; }
  int degree() const { return degree_; }
  std::int64_t exponent() const { return exponent_; }
  const std::string& name() const { return name_; }

  ElementId identity() const { return 0; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId power(ElementId a, std::int64_t k) const;
  ElementId conjugate(ElementId x, ElementId g) const {  // g x g^-1
    return multiply(multiply(g, x), inverse_[g]);
  }
  int element_order(ElementId a) const { return orders_[a]; }
  std::span<const std::uint16_t> permutation(ElementId a) const {
    return {perms_.data() + static_cast<std::size_t>(a) * degree_, static_cast<std::size_t>(degree_)};
  }
  /// Cycle type of the permutation, parts sorted descending (fixed points included).
  std::vector<int> cycle_type(ElementId a) const;
  /// Element id of a permutation (0-based images), or -1 when absent.
  std::int64_t find(std::span<const std::uint16_t> images) const;

  const std::vector<ElementId>& generators() const { return generators_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t class_of(ElementId a) const { return class_of_[a]; }
  std::size_t centralizer_order(std::size_t cls) const { return order_ / classes_[cls].size; }
  /// Class of the k-th power of the class representative.
  std::size_t power_class(std::size_t cls, std::int64_t k) const;
  /// Class containing the inverses of the given class.
  std::size_t inverse_class(std::size_t cls) const { return class_of_[inverse_[classes_[cls].representative]]; }
  bool is_abelian() const;

  /// Builds the group generated by the given permutations (0-based images).
  static std::shared_ptr<const Group> from_permutations(const std::vector<std::vector<int>>& gens,
                                                        int degree, const std::string& name,
                                                        std::size_t order_cap = 20000);

 private:
  Group() = default;
  void finish(const std::vector<std::vector<int>>& gens);
  std::size_t order_ = 0;
  int degree_ = 0;
  std::int64_t exponent_ = 1;
  std::string name_;
  std::vector<std::uint16_t> perms_;   // order_ x degree_, lexicographically sorted
  std::vector<ElementId> table_;       // optional full multiplication table
  std::vector<ElementId> inverse_;
  std::vector<int> orders_;
  std::vector<ElementId> generators_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Builds a group from its spec. Throws std::invalid_argument for malformed
/// specs and std::length_error when the order exceeds options.order_cap.
GroupPtr build_group(const GroupSpec& spec, const BuildOptions& options = {});
inline GroupPtr build_group(const std::string& spec, const BuildOptions& options = {}) {
  return build_group(parse_group_spec(spec), options);
}

/// Validates a Cayley table: Latin square with an identity and inverses;
/// associativity is checked exhaustively up to order 256 and on 10^4 seeded
/// random triples above that. Throws std::invalid_argument on failure.
void validate_cayley_table(const std::vector<std::vector<int>>& table);

}  // namespace cheblab
