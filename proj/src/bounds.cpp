#include "cheblab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cheblab {

const char* const kStructuralBanner =
    "structural comparison only: absolute constants default to 1 and are placeholders, not proven values";

double log_big(const mpz_class& x) {
  if (x <= 0) throw std::domain_error("log_big: nonpositive argument");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

QReport q_and_Q(const ConductorData& cond, const CharacterTable& table) {
  if (cond.conductor_norms.size() != table.size())
    throw std::invalid_argument("q_and_Q: conductor map does not cover every irreducible");
  if (cond.D_F < 1 || cond.n_F < 1) throw std::invalid_argument("q_and_Q: D_F and n_F must be positive");
  mpz_class max_norm = 1;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& N = cond.conductor_norms[i];
    if (N < 1) throw std::invalid_argument("q_and_Q: conductor norms must be >= 1");
    if (table[i].is_trivial() && N != 1) throw std::invalid_argument("q_and_Q: trivial character must have norm 1");
    if (N > max_norm) max_norm = N;
  }
  QReport r;
  r.d = table.max_degree();
  r.irr_count = table.size();
  double d = static_cast<double>(r.d);
  r.log_q = d * d * log_big(cond.D_F) + 2.0 * d * log_big(max_norm);
  double dn = d * d * cond.n_F;
  r.log_Q = dn * Log(Log(d)) * std::log(dn) + std::log(static_cast<double>(r.irr_count)) + r.log_q;
  return r;
}

BoundReport linnik_exponent(const GroupPtr& Gp, std::size_t cls, const std::vector<LinnikCandidate>& candidates,
                            double constant, std::optional<ExceptionalData> exceptional) {
  if (candidates.empty()) throw std::invalid_argument("linnik_exponent: empty candidate list");
  if (!(constant > 0)) throw std::invalid_argument("linnik_exponent: constant must be positive");
  if (exceptional) {
    if (!(exceptional->beta1 > 0 && exceptional->beta1 < 1)) throw std::invalid_argument("beta1 must lie in (0,1)");
    if (exceptional->chi1_C != 1 && exceptional->chi1_C != -1) throw std::invalid_argument("chi1(C) must be +-1");
  }
  const Group& G = *Gp;
  const auto& C = G.classes().at(cls);
  BoundReport rep;
  rep.constant = constant;
  rep.exceptional = exceptional;
  rep.banner = kStructuralBanner;
  double best = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (!c.certificate.certified()) throw std::invalid_argument("linnik_exponent: candidate is not AHC-certified");
    bool meets = std::any_of(C.members.begin(), C.members.end(),
                             [&](ElementId x) { return c.certificate.subgroup.contains(x); });
    if (!meets) throw std::invalid_argument("linnik_exponent: candidate does not meet the class");
    if (!c.table_H) throw std::invalid_argument("linnik_exponent: missing character table");
    auto qr = q_and_Q(c.conductors, *c.table_H);
    double val = constant * Log(static_cast<double>(qr.d)) * (std::log(2.0) + qr.log_Q);
    rep.per_candidate.push_back(val);
    if (i == 0 || val < best) {
      best = val;
      rep.argmin = i;
      rep.log_q = qr.log_q;
      rep.log_Q = qr.log_Q;
    }
  }
  rep.linnik_log_bound = best;
  rep.d_G = character_table(Gp).max_degree();
  return rep;
}

DlEstimate dl_estimate(const mpz_class& D_L, std::size_t H_order, const CharacterTable& table_H) {
  if (D_L < 1) throw std::invalid_argument("dl_estimate: D_L must be >= 1");
  DlEstimate e;
  double d = static_cast<double>(table_H.max_degree());
  e.log_variable_part =
      4.0 * d * d / static_cast<double>(H_order) * log_big(D_L) + std::log(static_cast<double>(table_H.size()));
  return e;
}

double nu(double U, std::optional<double> beta1) {
  if (!(U > 1)) throw std::invalid_argument("nu: U must exceed 1");
  if (!beta1) return 1.0;
  return std::min(1.0, (1.0 - *beta1) * std::log(U));
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("section2: bad integer '" + s + "'");
  }
}

struct FamilySummary {
  std::string name;
  double d = 1;         // d_G (or d_H for the Sylow family)
  double class_size = 1;
};

FamilySummary summarize(const std::string& fam, std::vector<Section2Row>& rows) {
  auto parts = split(fam, ':');
  if (parts.empty()) throw std::invalid_argument("section2: empty family");
  const std::string& kind = parts[0];
  auto add = [&](const std::string& q, const std::string& v, const std::string& prov) {
    rows.push_back({fam, q, v, prov});
  };
  FamilySummary s;
  s.name = fam;
  if (kind == "dihedral") {
    if (parts.size() != 2) throw std::invalid_argument("section2: dihedral:n");
    int n = to_int(parts[1]);
    if (n < 3) throw std::invalid_argument("section2: dihedral needs n >= 3");
    std::size_t refl = n % 2 ? n : n / 2;
    if (2 * n <= 20000) {
      auto G = build_group(GroupSpec::dihedral(n));
      auto T = character_table(G);
      s.d = static_cast<double>(T.max_degree());
      std::size_t largest = 0;
      for (const auto& c : G->classes())
        if (c.element_order == 2) largest = std::max(largest, c.size);
      refl = largest;
      add("order", std::to_string(G->order()), "group construction");
      add("d_G", std::to_string(T.max_degree()), "character table");
      add("reflection_class_size", std::to_string(refl), "conjugacy classes");
    } else {
      s.d = 2;
      add("order", std::to_string(2LL * n), "closed form");
      add("d_G", "2", "closed form");
      add("reflection_class_size", std::to_string(refl), "closed form");
    }
    s.class_size = static_cast<double>(refl);
  } else if (kind == "pq") {
    if (parts.size() != 3) throw std::invalid_argument("section2: pq:p:q");
    int p = to_int(parts[1]), q = to_int(parts[2]);
    auto spec = GroupSpec::frobenius(p, q);
    if (static_cast<long long>(p) * q <= 20000) {
      auto G = build_group(spec);
      auto T = character_table(G);
      s.d = static_cast<double>(T.max_degree());
      std::size_t csize = 0;
      for (const auto& c : G->classes())
        if (c.size == static_cast<std::size_t>(p)) csize = c.size;
      add("order", std::to_string(G->order()), "group construction");
      add("d_G", std::to_string(T.max_degree()), "character table");
      add("class_size", std::to_string(csize), "conjugacy classes");
      s.class_size = static_cast<double>(csize);
    } else {
      s.d = q;
      s.class_size = p;
      add("order", std::to_string(static_cast<long long>(p) * q), "closed form");
      add("d_G", std::to_string(q), "closed form");
      add("class_size", std::to_string(p), "closed form");
    }
  } else if (kind == "sn") {
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("section2: sn:n[:mu]");
    int n = to_int(parts[1]);
    std::vector<int> mu;
    if (parts.size() == 3)
      for (const auto& x : split(parts[2], '-')) mu.push_back(to_int(x));
    else
      mu = {n};
    int total = 0;
    for (int x : mu) total += x;
    if (total != n) throw std::invalid_argument("section2: partition does not sum to n");
    auto st = sn_degree_stats(n);
    s.d = mpz_class(st.d).get_d();
    std::string w = sn_w(mu), cs = sn_class_size(mu);
    s.class_size = mpz_class(cs).get_d();
    add("d_G", st.d, "hook lengths");
    add("w_mu", w, "closed form");
    add("class_size", cs, "closed form");
  } else if (kind == "sylow_s_p2") {
    if (parts.size() != 2) throw std::invalid_argument("section2: sylow_s_p2:p");
    int p = to_int(parts[1]);
    if (p < 2 || prime_divisors(p).size() != 1 || prime_divisors(p)[0] != p)
      throw std::invalid_argument("section2: p must be prime");
    double Horder = std::pow(static_cast<double>(p), p + 1);
    if (p <= 3) {
      // Z/p wr Z/p on p^2 points: p-cycles on blocks plus the block rotation.
      int n = p * p;
      std::vector<std::vector<int>> gens;
      std::vector<int> c(n), b(n);
      for (int i = 0; i < n; ++i) {
        c[i] = i < p ? (i + 1) % p : i;
        b[i] = (i + p) % n;
      }
      gens = {c, b};
      auto H = Group::from_permutations(gens, n, "sylow_s_p2:" + std::to_string(p));
      auto T = character_table(H);
      bool has_long_cycle = false;
      for (ElementId g = 0; g < H->order() && !has_long_cycle; ++g) has_long_cycle = H->element_order(g) == n;
      s.d = static_cast<double>(T.max_degree());
      add("H_order", std::to_string(H->order()), "group construction");
      add("d_H", std::to_string(T.max_degree()), "character table");
      add("meets_p2_cycles", has_long_cycle ? "true" : "false", "element orders");
    } else {
      s.d = p;
      add("H_order", fmt(Horder), "closed form");
      add("d_H", std::to_string(p), "closed form");
      add("meets_p2_cycles", "true", "closed form");
    }
    double obj = s.d * s.d * Log(s.d) / Horder;
    add("objective_dH2LogdH_over_H", fmt(obj), "formula");
    add("class_density_C_over_G", fmt(1.0 / (p * p)), "closed form");
    add("objective_below_density", obj < 1.0 / (p * p) ? "true" : "false", "comparison");
    s.class_size = 0;
  } else if (kind == "cyclic") {
    if (parts.size() != 2) throw std::invalid_argument("section2: cyclic:n");
    to_int(parts[1]);
    add("d_G", "1", "closed form");
    add("class_size", "1", "closed form");
  } else {
    throw std::invalid_argument("section2: unsupported family '" + fam + "'");
  }
  return s;
}

}  // namespace

std::vector<Section2Row> section2_table(const std::string& family) {
  std::vector<Section2Row> rows;
  if (family.rfind("product:", 0) == 0) {
    std::string body = family.substr(8);
    std::vector<std::string> facs;
    // Factors are separated by 'x' preceding a family keyword.
    std::size_t start = 0;
    for (std::size_t i = 1; i < body.size(); ++i) {
      if (body[i] != 'x') continue;
      for (const char* k : {"dihedral:", "pq:", "sn:", "cyclic:"})
        if (body.compare(i + 1, std::char_traits<char>::length(k), k) == 0) {
          facs.push_back(body.substr(start, i - start));
          start = i + 1;
          break;
        }
    }
    facs.push_back(body.substr(start));
    double d = 1, cs = 1;
    for (const auto& f : facs) {
      auto s = summarize(f, rows);
      d *= s.d;
      cs *= s.class_size;
    }
    double lhs = d * d * Log(d);
    rows.push_back({family, "d_product", fmt(d), "d_{GxG'} = d_G d_G'"});
    rows.push_back({family, "class_size_product", fmt(cs), "|C x C'| = |C||C'|"});
    rows.push_back({family, "d2_Log_d", fmt(lhs), "formula"});
    rows.push_back({family, "ratio_d2Logd_over_C", fmt(lhs / cs), "formula"});
    return rows;
  }
  auto s = summarize(family, rows);
  if (family.rfind("sylow_s_p2", 0) != 0) {
    double lhs = s.d * s.d * Log(s.d);
    rows.push_back({family, "d2_Log_d", fmt(lhs), "formula"});
    rows.push_back({family, "ratio_d2Logd_over_C", fmt(lhs / s.class_size), "formula"});
  }
  return rows;
}

std::string section2_csv(const std::vector<Section2Row>& rows) {
  std::string out = "family,quantity,value,provenance\n";
  for (const auto& r : rows) out += r.family + "," + r.quantity + "," + r.value + "," + r.provenance + "\n";
  return out;
}

}  // namespace cheblab
