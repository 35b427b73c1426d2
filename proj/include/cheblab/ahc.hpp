#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cheblab/character.hpp"
#include "cheblab/subgroup.hpp"

namespace cheblab {

enum class AhcTier { Abelian, Nilpotent, Supersolvable, MonomialExplicit, Unknown };
std::string tier_name(AhcTier t);

/// One entry per irreducible of H: psi = Ind_K^H lambda with lambda linear.
struct MonomialWitness {
  std::size_t target_row = 0;        // row of Irr(H)
  Subgroup K;                        // in ambient ids
  std::vector<ElementId> K_generators;
  std::vector<Cyclotomic> lambda_on_generators;
  Character lambda;                  // on K realized as its own group
};

struct AhcCertificate {
  Subgroup subgroup;
  AhcTier tier = AhcTier::Unknown;
  std::optional<std::vector<MonomialWitness>> witness;
  bool certified() const { return tier != AhcTier::Unknown; }
};

struct AhcOptions {
  std::size_t monomial_cap = 384;
  /// Also search for a monomial witness when a structural tier already applies.
  bool always_witness = false;
};

/// Strongest applicable tier: Abelian > Nilpotent > Supersolvable >
/// MonomialExplicit > Unknown. The explicit search runs only for |H| <= cap.
AhcCertificate certify_ahc(const Group& G, const Subgroup& H, const AhcOptions& options = {});

/// Exhaustive search for (K, lambda) with Ind_K^H lambda = psi for each psi in
/// Irr(H); nullopt if some irreducible is not monomial.
std::optional<std::vector<MonomialWitness>> find_monomial_witness(const Group& G, const Subgroup& H);
/// Re-verifies a witness: each induced character is irreducible (norm one) and
/// the induced characters are exactly Irr(H).
bool verify_monomial_witness(const Group& G, const Subgroup& H, const std::vector<MonomialWitness>& w);

enum class AhcMode { Unconditional, Conditional };

struct ObjectiveReport {
  std::size_t subgroup_index = 0;  // position in the subgroup list
  Subgroup subgroup;
  std::size_t order = 0;
  std::int64_t d_H = 1;
  AhcTier tier = AhcTier::Unknown;
  double objective = 0;           // d_H^2 Log d_H / |H|
  double abelian_objective = 0;   // 1/|H|
  double class_density = 0;       // |C|/|G|
};

struct BestSubgroupResult {
  std::vector<ObjectiveReport> ranked;
  std::optional<ObjectiveReport> best_abelian;
  bool exhaustive = false;
  AhcMode mode = AhcMode::Unconditional;
};

/// d^2 Log d / |H|.
double ahc_objective(std::int64_t d, std::size_t order);

/// Ranks candidate subgroups meeting class `cls` by the objective, ascending;
/// ties go to larger |H|, then to the earlier subgroup index.
BestSubgroupResult best_subgroup(const Group& G, std::size_t cls, AhcMode mode, const AhcOptions& options = {},
                                 std::size_t subgroup_cap = 512);
/// Same ranking over an explicit list of subgroups.
BestSubgroupResult rank_subgroups(const Group& G, const std::vector<Subgroup>& list, std::size_t cls, AhcMode mode,
                                  const AhcOptions& options = {});

struct OrbitStabilizerReport {
  std::size_t bound = 0;            // |C|
  bool checked = false;             // exhaustive subgroup list available
  bool holds = true;                // every abelian H meeting C has [G:H] >= |C|
  std::size_t min_abelian_index = 0;
};
OrbitStabilizerReport orbit_stabilizer_bound(const Group& G, std::size_t cls, std::size_t subgroup_cap = 512);

}  // namespace cheblab
