#include "cheblab/ahc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "cheblab/parallel.hpp"

namespace cheblab {

std::string tier_name(AhcTier t) {
  switch (t) {
    case AhcTier::Abelian: return "Abelian";
    case AhcTier::Nilpotent: return "Nilpotent";
    case AhcTier::Supersolvable: return "Supersolvable";
    case AhcTier::MonomialExplicit: return "MonomialExplicit";
    case AhcTier::Unknown: return "Unknown";
  }
  return "Unknown";
}

double ahc_objective(std::int64_t d, std::size_t order) {
  double dd = static_cast<double>(d);
  return dd * dd * Log(dd) / static_cast<double>(order);
}

std::optional<std::vector<MonomialWitness>> find_monomial_witness(const Group& G, const Subgroup& H) {
  auto E = embed_subgroup(G, H);
  const Group& Hg = *E.sub;
  auto TH = character_table(E.sub);
  auto subs = subgroups(Hg, Hg.order());
  // Larger subgroups first: smaller index means cheaper induction.
  std::stable_sort(subs.subgroups.begin(), subs.subgroups.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() > b.order(); });

  struct KData {
    SubgroupEmbedding emb;
    std::optional<CharacterTable> table;
  };
  std::map<std::size_t, KData> cache;
  std::vector<MonomialWitness> out;
  for (std::size_t row = 0; row < TH.size(); ++row) {
    const Character& psi = TH[row];
    std::size_t index = static_cast<std::size_t>(psi.degree());
    bool found = false;
    for (std::size_t ki = 0; ki < subs.subgroups.size() && !found; ++ki) {
      const Subgroup& K = subs.subgroups[ki];
      if (K.order() * index != Hg.order()) continue;
      auto it = cache.find(ki);
      if (it == cache.end()) {
        KData kd{embed_subgroup(Hg, K), std::nullopt};
        kd.table.emplace(character_table(kd.emb.sub));
        it = cache.emplace(ki, std::move(kd)).first;
      }
      const auto& kd = it->second;
      for (const auto& lam : kd.table->rows()) {
        if (!lam.is_linear()) continue;
        auto ind = induce(Hg, kd.emb, lam);
        if (TH.find(ind) != static_cast<std::int64_t>(row)) continue;
        MonomialWitness w;
        w.target_row = row;
        std::vector<ElementId> gens_ambient;
        for (ElementId g : K.generators) gens_ambient.push_back(E.embedding[g]);
        w.K = closure(G, gens_ambient);
        w.K_generators = gens_ambient;
        // lambda values at K's generators, read through K's own class map.
        const Group& Kg = *kd.emb.sub;
        for (ElementId g : K.generators) {
          auto pos = std::find(kd.emb.embedding.begin(), kd.emb.embedding.end(), g) - kd.emb.embedding.begin();
          w.lambda_on_generators.push_back(lam.values[Kg.class_of(static_cast<ElementId>(pos))]);
        }
        w.lambda = lam;
        out.push_back(std::move(w));
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

bool verify_monomial_witness(const Group& G, const Subgroup& H, const std::vector<MonomialWitness>& w) {
  auto E = embed_subgroup(G, H);
  const Group& Hg = *E.sub;
  auto TH = character_table(E.sub);
  if (w.size() != TH.size()) return false;
  std::vector<char> hit(TH.size(), 0);
  for (const auto& mw : w) {
    if (!mw.lambda.is_linear()) return false;
    // Rebuild K inside H's own numbering.
    std::vector<ElementId> gens;
    for (ElementId g : mw.K_generators) {
      auto pos = std::find(E.embedding.begin(), E.embedding.end(), g);
      if (pos == E.embedding.end()) return false;
      gens.push_back(static_cast<ElementId>(pos - E.embedding.begin()));
    }
    auto K = closure(Hg, gens);
    auto KE = embed_subgroup(Hg, K);
    if (mw.lambda.values.size() != KE.sub->num_classes()) return false;
    auto ind = induce(Hg, KE, mw.lambda);
    if (inner_product(Hg, ind, ind) != Rational(1)) return false;
    auto row = TH.find(ind);
    if (row < 0 || hit[row]) return false;
    hit[row] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

AhcCertificate certify_ahc(const Group& G, const Subgroup& H, const AhcOptions& options) {
  AhcCertificate cert;
  cert.subgroup = H;
  StructureFlags f = H.flags.abelian ? H.flags : structure_flags(G, H);
  cert.subgroup.flags = f;
  if (*f.abelian)
    cert.tier = AhcTier::Abelian;
  else if (*f.nilpotent)
    cert.tier = AhcTier::Nilpotent;
  else if (*f.supersolvable)
    cert.tier = AhcTier::Supersolvable;
  bool search = H.order() <= options.monomial_cap && (cert.tier == AhcTier::Unknown || options.always_witness);
  if (search) {
    cert.witness = find_monomial_witness(G, H);
    if (cert.witness && cert.tier == AhcTier::Unknown) cert.tier = AhcTier::MonomialExplicit;
  }
  return cert;
}

BestSubgroupResult rank_subgroups(const Group& G, const std::vector<Subgroup>& list, std::size_t cls, AhcMode mode,
                                  const AhcOptions& options) {
  if (cls >= G.num_classes()) throw std::invalid_argument("best_subgroup: class index out of range");
  const auto& C = G.classes()[cls];
  BestSubgroupResult res;
  res.mode = mode;
  std::vector<std::optional<ObjectiveReport>> slots(list.size());
  parallel_for(list.size(), [&](std::size_t i) {
    const Subgroup& H = list[i];
    bool meets = std::any_of(C.members.begin(), C.members.end(), [&](ElementId x) { return H.contains(x); });
    if (!meets) return;
    AhcOptions opt = options;
    opt.always_witness = false;
    auto cert = certify_ahc(G, H, opt);
    ObjectiveReport r;
    r.subgroup_index = i;
    r.subgroup = cert.subgroup;
    r.order = H.order();
    r.tier = cert.tier;
    if (cert.tier != AhcTier::Abelian) r.d_H = character_table(embed_subgroup(G, H).sub).max_degree();
    r.objective = ahc_objective(r.d_H, r.order);
    r.abelian_objective = 1.0 / static_cast<double>(r.order);
    r.class_density = static_cast<double>(C.size) / static_cast<double>(G.order());
    slots[i] = std::move(r);
  });
  auto better = [](const ObjectiveReport& a, const ObjectiveReport& b) {
    if (a.objective != b.objective) return a.objective < b.objective;
    if (a.order != b.order) return a.order > b.order;
    return a.subgroup_index < b.subgroup_index;
  };
  for (auto& s : slots) {
    if (!s) continue;
    if (s->tier == AhcTier::Abelian && (!res.best_abelian || better(*s, *res.best_abelian))) res.best_abelian = *s;
    if (mode == AhcMode::Unconditional && s->tier == AhcTier::Unknown) continue;
    res.ranked.push_back(std::move(*s));
  }
  std::sort(res.ranked.begin(), res.ranked.end(), better);
  if (res.ranked.empty() || !res.best_abelian)
    throw std::logic_error("best_subgroup: no certified subgroup meets the class");
  if (res.ranked.front().objective > res.best_abelian->objective)
    throw std::logic_error("best_subgroup: ranking worse than the abelian minimum");
  return res;
}

BestSubgroupResult best_subgroup(const Group& G, std::size_t cls, AhcMode mode, const AhcOptions& options,
                                 std::size_t subgroup_cap) {
  auto L = subgroups(G, subgroup_cap);
  if (!L.exhaustive) {
    // Distinguished families may miss the cyclic subgroup of this class.
    bool has = false;
    Subgroup cyc = closure(G, {G.classes()[cls].representative});
    for (const auto& H : L.subgroups) has = has || H.set == cyc.set;
    if (!has) L.subgroups.push_back(with_flags(G, std::move(cyc)));
  }
  auto res = rank_subgroups(G, L.subgroups, cls, mode, options);
  res.exhaustive = L.exhaustive;
  return res;
}

OrbitStabilizerReport orbit_stabilizer_bound(const Group& G, std::size_t cls, std::size_t subgroup_cap) {
  OrbitStabilizerReport r;
  const auto& C = G.classes()[cls];
  r.bound = C.size;
  auto L = subgroups(G, subgroup_cap);
  r.checked = L.exhaustive;
  r.min_abelian_index = G.order();
  for (const auto& H : L.subgroups) {
    if (!*H.flags.abelian) continue;
    bool meets = std::any_of(C.members.begin(), C.members.end(), [&](ElementId x) { return H.contains(x); });
    if (!meets) continue;
    std::size_t index = G.order() / H.order();
    r.min_abelian_index = std::min(r.min_abelian_index, index);
    if (index < r.bound) r.holds = false;
  }
  return r;
}

}  // namespace cheblab
