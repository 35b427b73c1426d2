#include <cmath>

#include "cheblab/ahc.hpp"
#include "doctest.h"

using namespace cheblab;

namespace {

std::size_t class_with(const Group& G, std::size_t size, int order) {
  for (std::size_t i = 0; i < G.num_classes(); ++i)
    if (G.classes()[i].size == size && G.classes()[i].element_order == order) return i;
  FAIL("class not found");
  return 0;
}

}  // namespace

TEST_CASE("certificate tiers") {
  auto C6 = build_group("cyclic:6");
  CHECK(certify_ahc(*C6, whole_group(*C6)).tier == AhcTier::Abelian);

  auto S4 = build_group("symmetric:4");
  auto P = sylow(*S4, 2);
  CHECK(certify_ahc(*S4, P).tier == AhcTier::Nilpotent);

  // S_3 inside S_4: supersolvable, and a monomial witness also exists.
  Subgroup S3 = closure(*S4, {S4->classes()[class_with(*S4, 6, 2)].representative});
  for (ElementId x : S4->classes()[class_with(*S4, 8, 3)].members) {
    auto cand = closure(*S4, {S3.generators[0], x});
    if (cand.order() == 6) {
      S3 = cand;
      break;
    }
  }
  REQUIRE(S3.order() == 6);
  AhcOptions opt;
  opt.always_witness = true;
  auto cert = certify_ahc(*S4, S3, opt);
  CHECK(cert.tier == AhcTier::Supersolvable);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->size() == 3);
  CHECK(verify_monomial_witness(*S4, S3, *cert.witness));

  // S_4 itself is monomial but not supersolvable.
  auto whole = certify_ahc(*S4, whole_group(*S4));
  CHECK(whole.tier == AhcTier::MonomialExplicit);
  CHECK(verify_monomial_witness(*S4, whole_group(*S4), *whole.witness));

  // SL(2,3) is not monomial: the honest tier is Unknown.
  auto SL23 = build_group("perm:(1,4,7)(2,8,5);(3,4,5)(6,8,7)");
  REQUIRE(SL23->order() == 24);
  auto c = certify_ahc(*SL23, whole_group(*SL23));
  CHECK(c.tier == AhcTier::Unknown);
  CHECK_FALSE(c.witness.has_value());
}

TEST_CASE("nilpotent subgroups within the cap admit monomial witnesses") {
  for (const char* spec : {"symmetric:4", "dihedral:8", "frobenius:7:3"}) {
    auto G = build_group(spec);
    for (const auto& H : subgroups(*G).subgroups) {
      if (!*H.flags.nilpotent) continue;
      auto w = find_monomial_witness(*G, H);
      REQUIRE(w.has_value());
      CHECK(verify_monomial_witness(*G, H, *w));
    }
  }
}

TEST_CASE("best subgroup rankings") {
  auto C8 = build_group("cyclic:8");
  auto r = best_subgroup(*C8, 3, AhcMode::Unconditional);
  CHECK(r.ranked.front().order == 8);
  CHECK(r.ranked.front().objective == doctest::Approx(1.0 / 8));

  auto S4 = build_group("symmetric:4");
  std::size_t four = class_with(*S4, 6, 4);
  auto res = best_subgroup(*S4, four, AhcMode::Unconditional);
  CHECK(res.ranked.front().order == 4);
  CHECK(res.ranked.front().objective == doctest::Approx(0.25));
  bool saw_sylow = false;
  for (const auto& rep : res.ranked)
    if (rep.order == 8) {
      saw_sylow = true;
      CHECK(rep.d_H == 2);
      CHECK(rep.objective == doctest::Approx(0.5));
    }
  CHECK(saw_sylow);

  auto F = build_group("frobenius:7:3");
  std::size_t c7 = 0;
  for (std::size_t i = 0; i < F->num_classes(); ++i)
    if (F->classes()[i].size == 7) c7 = i;
  auto rf = best_subgroup(*F, c7, AhcMode::Unconditional);
  bool whole_seen = false;
  for (const auto& rep : rf.ranked)
    if (rep.order == 21) {
      whole_seen = true;
      CHECK(rep.tier == AhcTier::Supersolvable);
      CHECK(rep.objective == doctest::Approx(9 * std::log(3.0) / 21));
    }
  CHECK(whole_seen);
}

TEST_CASE("orbit stabilizer bound") {
  auto S4 = build_group("symmetric:4");
  auto r = orbit_stabilizer_bound(*S4, class_with(*S4, 6, 2));
  CHECK(r.bound == 6);
  CHECK(r.checked);
  CHECK(r.holds);
  auto D5 = build_group("dihedral:5");
  auto r5 = orbit_stabilizer_bound(*D5, D5->num_classes() - 1);
  CHECK(r5.bound == 5);
  CHECK(r5.holds);
  CHECK(orbit_stabilizer_bound(*D5, 0).bound == 1);
}
