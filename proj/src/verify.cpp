#include "cheblab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>

#include "cheblab/ahc.hpp"
#include "cheblab/bounds.hpp"
#include "cheblab/census.hpp"
#include "cheblab/parallel.hpp"
#include "cheblab/schur.hpp"
#include "cheblab/sieve.hpp"
#include "cheblab/smoothing.hpp"

namespace cheblab {

double RunConfig::constant(const std::string& name) const {
  auto it = constants.find(name);
  return it == constants.end() ? 1.0 : it->second;
}

void RunConfig::validate() const {
  if (subgroup_cap == 0 || monomial_cap == 0 || census_cap == 0)
    throw std::invalid_argument("config: caps must be positive");
  for (const auto& [k, v] : constants)
    if (!(v > 0)) throw std::invalid_argument("config: constant " + k + " must be positive");
}

void RunConfig::load_constants(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: constants file must hold a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number()) throw std::invalid_argument("config: constant " + k + " is not a number");
    constants[k] = v.get<double>();
  }
  validate();
}

std::vector<std::vector<int>> quaternion_cayley_table() {
  // 1,-1,i,-i,j,-j,k,-k as 0..7; unit products as (sign, unit).
  static const int mul[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                   {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                   {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                   {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int s = mul[a / 2][b / 2][0] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      t[a][b] = 2 * mul[a / 2][b / 2][1] + (s < 0 ? 1 : 0);
    }
  return t;
}

Corpus default_corpus() {
  Corpus c;
  c.name = "default";
  for (int n = 1; n <= 24; ++n) c.groups.push_back(GroupSpec::cyclic(n));
  for (int n = 3; n <= 12; ++n) c.groups.push_back(GroupSpec::dihedral(n));
  c.groups.push_back(GroupSpec::frobenius(7, 3));
  c.groups.push_back(GroupSpec::frobenius(19, 3));
  c.groups.push_back(GroupSpec::frobenius(11, 5));
  for (int n = 3; n <= 6; ++n) c.groups.push_back(GroupSpec::symmetric(n));
  GroupSpec q8 = GroupSpec::cayley_table(quaternion_cayley_table());
  q8.text = "quaternion:8";
  c.groups.push_back(q8);
  c.groups.push_back(parse_group_spec("perm:(1,2,3);(4,5,6);(7,8,9);(1,4,7)(2,5,8)(3,6,9)"));
  c.budget_seconds = 600;
  return c;
}

namespace {

std::size_t spec_order(const GroupSpec& s) { return build_group(s)->order(); }

std::string label(const GroupSpec& s) { return s.text.empty() ? s.to_string() : s.text; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
SuiteResult timed(const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  r.name = name;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail["error"] = e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace

Corpus corpus_by_name(const std::string& name) {
  if (name == "default") return default_corpus();
  if (name == "small") {
    Corpus c = default_corpus();
    c.name = "small";
    std::erase_if(c.groups, [](const GroupSpec& s) { return spec_order(s) > 24; });
    c.budget_seconds = 120;
    return c;
  }
  throw std::invalid_argument("unknown corpus: " + name);
}

double round12(double v) {
  if (!std::isfinite(v) || v == 0) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

bool table_orthogonal(const CharacterTable& T) {
  const Group& G = T.group();
  std::int64_t sum_sq = 0;
  for (std::size_t i = 0; i < T.size(); ++i) {
    sum_sq += T[i].degree() * T[i].degree();
    for (std::size_t j = 0; j < T.size(); ++j)
      if (inner_product(G, T[i], T[j]) != Rational(i == j ? 1 : 0)) return false;
  }
  if (sum_sq != static_cast<std::int64_t>(G.order())) return false;
  for (std::size_t a = 0; a < G.num_classes(); ++a)
    for (std::size_t b = 0; b < G.num_classes(); ++b) {
      Cyclotomic s(0);
      for (const auto& row : T.rows()) s.add_product(row[a], row[b].conj());
      if (!(s == Cyclotomic(a == b ? static_cast<std::int64_t>(G.centralizer_order(a)) : 0))) return false;
    }
  return true;
}

TensorConstituentReport tensor_constituent_check(const CharacterTable& T) {
  TensorConstituentReport r;
  auto fail = [&](const std::string& why) {
    if (r.holds) r.first_failure = why;
    r.holds = false;
  };
  auto mult = [](const std::vector<std::pair<std::size_t, std::int64_t>>& dec, std::size_t row) -> std::int64_t {
    for (const auto& [i, m] : dec)
      if (i == row) return m;
    return 0;
  };
  for (std::size_t i = 0; i < T.size(); ++i) {
    std::size_t ci = T.conjugate_index(i);
    for (std::size_t j = 0; j < T.size(); ++j) {
      ++r.pairs;
      auto dec = tensor_decompose(T, T[i], T[j]);
      std::int64_t m1 = mult(dec, 0);
      if ((m1 > 0) != (j == ci)) fail("trivial constituent rule at rows " + std::to_string(i) + "," + std::to_string(j));
      if (j == ci && m1 != 1) fail("trivial multiplicity at row " + std::to_string(i));
    }
    if (T[i].degree() < 2) continue;
    auto dec = tensor_decompose(T, T[i], T[ci]);
    bool found = false;
    for (const auto& [tau, m] : dec) {
      if (tau == 0 || tau == i || tau == ci) continue;
      found = true;
      ++r.tau_checks;
      auto d2 = tensor_decompose(T, T[i], T[tau]);
      if (mult(d2, i) == 0) fail("chi not in chi (x) tau at row " + std::to_string(i));
      if (mult(d2, 0) != 0) fail("trivial in chi (x) tau at row " + std::to_string(i));
    }
    if (!found) fail("no extra constituent for row " + std::to_string(i));
  }
  return r;
}

SuiteResult suite_character_tables(const Corpus& corpus) {
  return timed("character_tables", [&](SuiteResult& r) {
    std::vector<int> ok(corpus.groups.size());
    std::vector<std::size_t> sizes(corpus.groups.size());
    parallel_for(corpus.groups.size(), [&](std::size_t i) {
      auto G = build_group(corpus.groups[i]);
      auto T = character_table(G);
      ok[i] = table_orthogonal(T);
      sizes[i] = T.size();
    });
    r.pass = true;
    Json groups = Json::array();
    for (std::size_t i = 0; i < ok.size(); ++i) {
      r.pass = r.pass && ok[i];
      groups.push_back({{"group", label(corpus.groups[i])}, {"irreducibles", sizes[i]}, {"orthogonal", bool(ok[i])}});
    }
    r.detail["groups"] = groups;
  });
}

SuiteResult suite_section2() {
  return timed("section2", [&](SuiteResult& r) {
    auto value = [](const std::vector<Section2Row>& rows, const std::string& q) {
      for (const auto& row : rows)
        if (row.quantity == q) return row.value;
      throw std::logic_error("missing quantity " + q);
    };
    Json checks = Json::array();
    r.pass = true;
    auto expect = [&](const std::string& family, const std::string& q, const std::string& want) {
      std::string got = value(section2_table(family), q);
      bool ok = got == want;
      r.pass = r.pass && ok;
      checks.push_back({{"family", family}, {"quantity", q}, {"value", got}, {"expected", want}, {"pass", ok}});
    };
    for (int n : {3, 4, 5, 12, 101}) expect("dihedral:" + std::to_string(n), "d2_Log_d", "4");
    expect("pq:7:3", "d_G", "3");
    expect("pq:7:3", "class_size", "7");
    for (int p : {2, 3}) {
      std::string fam = "sylow_s_p2:" + std::to_string(p);
      expect(fam, "H_order", std::to_string(static_cast<int>(std::pow(p, p + 1))));
      expect(fam, "d_H", std::to_string(p));
    }
    r.detail["checks"] = checks;
  });
}

SuiteResult suite_coefficients(const Corpus& corpus, std::size_t max_order, int l_max) {
  return timed("coefficients", [&](SuiteResult& r) {
    std::vector<GroupSpec> specs;
    for (const auto& s : corpus.groups)
      if (spec_order(s) <= max_order) specs.push_back(s);
    std::vector<SweepReport> reps(specs.size());
    parallel_for(specs.size(), [&](std::size_t i) { reps[i] = coefficient_sweep(build_group(specs[i]), l_max); });
    r.pass = true;
    std::uint64_t scen = 0, checks = 0;
    Json groups = Json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto& s = reps[i];
      r.pass = r.pass && s.violations == 0;
      scen += s.scenarios;
      checks += s.nonnegativity_checks + s.cauchy_schwarz_checks;
      Json g{{"group", label(specs[i])},
             {"scenarios", s.scenarios},
             {"distinct_profiles", s.distinct_profiles},
             {"nonnegativity_checks", s.nonnegativity_checks},
             {"cauchy_schwarz_checks", s.cauchy_schwarz_checks},
             {"violations", s.violations}};
      if (!s.first_violation.empty()) g["first_violation"] = s.first_violation;
      groups.push_back(g);
    }
    r.detail = {{"max_order", max_order}, {"l_max", l_max}, {"scenarios", scen}, {"checks", checks},
                {"groups", groups}};
  });
}

SuiteResult suite_tensor_constituents(const Corpus& corpus) {
  return timed("tensor_constituents", [&](SuiteResult& r) {
    std::vector<TensorConstituentReport> reps(corpus.groups.size());
    parallel_for(corpus.groups.size(),
                 [&](std::size_t i) { reps[i] = tensor_constituent_check(character_table(build_group(corpus.groups[i]))); });
    r.pass = true;
    Json groups = Json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      r.pass = r.pass && reps[i].holds;
      Json g{{"group", label(corpus.groups[i])}, {"pairs", reps[i].pairs}, {"tau_checks", reps[i].tau_checks},
             {"holds", reps[i].holds}};
      if (!reps[i].holds) g["first_failure"] = reps[i].first_failure;
      groups.push_back(g);
    }
    r.detail["groups"] = groups;
  });
}

SuiteResult suite_cauchy(std::uint64_t seed) {
  return timed("cauchy", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, 1);
    std::uniform_int_distribution<int> N(1, 4);
    int random_pass = 0;
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      auto draw = [&] {
        std::vector<std::complex<double>> v(N(rng));
        for (auto& z : v) z = std::polar(U(rng), 2 * M_PI * U(rng));
        return v;
      };
      auto a = draw(), b = draw();
      auto c = cauchy_check(a, b, 6);
      random_pass += c.holds;
      worst = std::max(worst, c.max_deviation);
    }
    // Exact check on root multisets arising from scenarios of small groups.
    std::set<std::pair<std::vector<std::pair<int, int>>, std::int64_t>> seen;
    std::vector<std::vector<Cyclotomic>> sets;
    for (const char* spec : {"symmetric:3", "dihedral:4", "quaternion", "frobenius:7:3", "symmetric:4", "cyclic:6"}) {
      GroupPtr G = std::string(spec) == "quaternion" ? build_group(GroupSpec::cayley_table(quaternion_cayley_table()))
                                                     : build_group(spec);
      auto T = character_table(G);
      for (const auto& sc : all_scenarios(*G))
        for (const auto& chi : T.rows()) {
          auto lr = local_roots(*G, chi, sc);
          auto key = lr.exponents;
          for (auto& [o, e] : key) {
            int g = std::gcd(o, e);
            o /= g;
            e /= g;
          }
          std::sort(key.begin(), key.end());
          if (seen.insert({key, lr.zeros}).second) sets.push_back(lr.all());
        }
    }
    std::size_t exact_pairs = 0, exact_pass = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i; j < sets.size(); ++j) {
        ++exact_pairs;
        exact_pass += cauchy_check(sets[i], sets[j], 6).holds;
      }
    r.pass = random_pass == 100 && exact_pass == exact_pairs;
    r.detail = {{"random_sets", 100},           {"random_pass", random_pass},
                {"max_deviation", round12(worst)}, {"degree", 6},
                {"exact_root_sets", sets.size()}, {"exact_pairs", exact_pairs},
                {"exact_pass", exact_pass}};
  });
}

SuiteResult suite_zeta() {
  return timed("zeta_factorization", [&](SuiteResult& r) {
    NumberField F(parse_field_spec("splitting:1,0,0,-2:symmetric:3"));
    auto a = zeta_factorization_check(F, 10000);
    NumberField C(parse_field_spec("cyclotomic:5"));
    auto b = zeta_factorization_check(C, 10000, cyclotomic_ramified_scenarios(C));
    bool five_checked = std::find(b.skipped.begin(), b.skipped.end(), 5u) == b.skipped.end();
    r.pass = a.holds && b.holds && five_checked;
    auto js = [](const ZetaCheckReport& z) {
      Json j{{"holds", z.holds}, {"prime_powers_checked", z.prime_powers_checked}, {"skipped", z.skipped}};
      if (z.first_mismatch)
        j["first_mismatch"] = {{"p", z.first_mismatch->p}, {"k", z.first_mismatch->k},
                               {"lhs", z.first_mismatch->lhs}, {"rhs", z.first_mismatch->rhs}};
      return j;
    };
    r.detail = {{"x3_minus_2", js(a)}, {"cyclotomic_5", js(b)}, {"N", 10000}};
  });
}

SuiteResult suite_conductor_discriminant() {
  return timed("conductor_discriminant", [&](SuiteResult& r) {
    r.pass = true;
    Json rows = Json::array();
    for (int q : {5, 7, 8, 9, 12}) {
      auto c = cyclotomic_conductor_discriminant(q);
      r.pass = r.pass && c.holds;
      rows.push_back({{"q", q}, {"product", c.product.get_str()}, {"D_L", c.expected.get_str()}, {"holds", c.holds}});
    }
    r.detail["fields"] = rows;
  });
}

SuiteResult suite_census() {
  return timed("census", [&](SuiteResult& r) {
    auto run = [](const std::string& spec, double x, double tol) {
      NumberField F(parse_field_spec(spec));
      auto rep = census(F, x);
      double worst = 0;
      Json classes = Json::array();
      for (const auto& c : rep.classes) {
        double freq = double(c.count) / double(rep.pi_x);
        worst = std::max(worst, std::abs(freq - c.density));
        classes.push_back({{"class", c.label}, {"count", c.count}, {"frequency", round12(freq)},
                           {"density", round12(c.density)}});
      }
      return std::pair<bool, Json>{worst < tol, {{"field", spec}, {"x", x}, {"pi_x", rep.pi_x},
                                                 {"max_deviation", round12(worst)}, {"tolerance", tol},
                                                 {"classes", classes}}};
    };
    auto [ok1, j1] = run("cyclotomic:5", 1e5, 0.02);
    auto [ok2, j2] = run("splitting:1,0,0,-2:symmetric:3", 1e4, 0.06);
    r.pass = ok1 && ok2;
    r.detail["fields"] = Json::array({j1, j2});
  });
}

SuiteResult suite_least_prime() {
  return timed("least_prime", [&](SuiteResult& r) {
    r.pass = true;
    std::uint64_t worst = 0;
    std::size_t entries = 0;
    for (int q = 3; q <= 50; ++q) {
      NumberField F(parse_field_spec("cyclotomic:" + std::to_string(q)));
      for (std::size_t c = 0; c < F.group()->num_classes(); ++c) {
        auto lp = least_prime(F, c, 100000);
        ++entries;
        r.pass = r.pass && lp.found;
        worst = std::max(worst, lp.p);
      }
    }
    NumberField F7(parse_field_spec("cyclotomic:7"));
    auto p74 = least_prime(F7, F7.class_of_residue(4), 100000);
    r.pass = r.pass && p74.found && p74.p == 11;
    r.detail = {{"moduli", "3..50"}, {"entries", entries}, {"largest", worst}, {"q7_class4", p74.p}, {"cap", 100000}};
  });
}

SuiteResult suite_base_change() {
  return timed("base_change", [&](SuiteResult& r) {
    r.pass = true;
    Json rows = Json::array();
    for (auto [q, d] : {std::pair{15, 3}, std::pair{8, 4}}) {
      auto H = cyclotomic_subgroup(q, d);
      for (int c : H) {
        auto b = base_change_check(q, H, c, 1e4);
        bool ok = b.holds && b.slack > 0;
        r.pass = r.pass && ok;
        rows.push_back({{"q", q}, {"K", "Q(zeta_" + std::to_string(d) + ")"}, {"c", c}, {"pi_C", b.pi_C},
                        {"pi_CH", b.pi_CH}, {"lhs", round12(b.lhs)}, {"rhs", round12(b.rhs)},
                        {"slack", round12(b.slack)}, {"holds", ok}});
      }
    }
    r.detail["towers"] = rows;
  });
}

SuiteResult suite_smoothing(std::uint64_t seed) {
  return timed("smoothing", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0, 1);
    const int draws = 50;
    std::vector<WeightParams> params(draws);
    for (auto& p : params) {
      p.x = std::exp(std::log(3.0) + (std::log(1e8) - std::log(3.0)) * U(rng));
      p.ell = 2 + static_cast<int>(U(rng) * 5);
      p.eps = 0.001 + 0.248 * U(rng);
    }
    std::vector<WeightReport> reps(draws);
    parallel_for(draws, [&](std::size_t i) { reps[i] = verify_weight_bounds(params[i], 200, seed + i); });
    int passed = 0;
    double qerr = 0, ierr = 0, f0min = 1, f0max = 0, vworst = 0;
    std::size_t asserted = 0;
    std::string first_failure;
    for (const auto& w : reps) {
      passed += w.pass;
      if (!w.pass && first_failure.empty()) first_failure = w.first_failure;
      qerr = std::max(qerr, w.max_quadrature_error);
      ierr = std::max(ierr, w.integral_error);
      f0min = std::min(f0min, w.F0);
      f0max = std::max(f0max, w.F0);
      for (const auto& s : w.samples) {
        if (s.asserted) ++asserted;
        else if (s.rhs > 0) vworst = std::max(vworst, s.lhs / s.rhs);
      }
    }
    auto phi = phi_pair(6);
    r.pass = passed == draws && phi.pass;
    r.detail = {{"draws", draws},
                {"passed", passed},
                {"asserted_samples", asserted},
                {"F0_min", round12(f0min)},
                {"F0_max", round12(f0max)},
                {"max_quadrature_error", round12(qerr)},
                {"max_integral_error", round12(ierr)},
                {"v_max_normalized_deviation", round12(vworst)},
                {"phi_grid_points", phi.grid_points},
                {"phi_sandwich_violations", phi.sandwich_violations},
                {"phi2_hat_1", round12(phi.phi2_hat_1)},
                {"phi2_hat_1_refinement_diff", round12(phi.phi2_hat_1_refined_diff)}};
    if (!first_failure.empty()) r.detail["first_failure"] = first_failure;
  });
}

SuiteResult suite_sieve(std::uint64_t seed) {
  return timed("sieve", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.05, 0.95);
    std::size_t runs = 0, constraint_ok = 0, identity_ok = 0;
    for (double z : {3.0, 6.0, 11.0, 15.0, 23.0, 31.0, 100.0})
      for (int t = 0; t < 5; ++t) {
        std::map<std::uint64_t, double> g;
        for (auto p : primes_up_to(100)) g[p] = U(rng);
        auto s = selberg_from_densities(g, z);
        ++runs;
        constraint_ok += s.constraints_hold;
        identity_ok += s.quadratic_form && std::abs(*s.quadratic_form * s.G_sum - 1) < 1e-9;
      }
    NumberField F(parse_field_spec("splitting:1,0,0,-2:symmetric:3"));
    const auto& G = *F.group();
    auto T = character_table(F.group());
    ScenarioProvider prov = [&](std::uint64_t p) -> std::optional<InertiaScenario> {
      auto rec = F.frobenius(p);
      if (rec.status == FrobeniusStatus::Resolved)
        return unramified_scenario(G, G.classes()[rec.cls].representative, p);
      // Ramified primes 2 and 3 modeled with full inertia.
      return InertiaScenario{whole_group(G), whole_group(G), 0, p};
    };
    for (const auto& chi : T.rows()) {
      auto s = selberg_objects(G, chi, prov, 200);
      ++runs;
      constraint_ok += s.constraints_hold;
      identity_ok += s.quadratic_form && std::abs(*s.quadratic_form * s.G_sum - 1) < 1e-9;
    }
    bool omega = true;
    for (double delta : {1.0, 0.5, 0.25}) omega = omega && omega_bound_check(100000, delta).holds;
    r.pass = constraint_ok == runs && identity_ok == runs && omega;
    r.detail = {{"runs", runs}, {"constraints_hold", constraint_ok}, {"identity_holds", identity_ok},
                {"omega_N", 100000}, {"omega_holds", omega}};
  });
}

SuiteResult suite_ahc(const Corpus& corpus, const RunConfig& config) {
  return timed("ahc", [&](SuiteResult& r) {
    std::vector<GroupSpec> specs;
    for (const auto& s : corpus.groups)
      if (spec_order(s) <= 48) specs.push_back(s);
    std::vector<Json> out(specs.size());
    std::vector<int> ok(specs.size());
    AhcOptions opt;
    opt.monomial_cap = config.monomial_cap;
    parallel_for(specs.size(), [&](std::size_t i) {
      auto G = build_group(specs[i]);
      bool good = true;
      Json classes = Json::array();
      for (std::size_t c = 0; c < G->num_classes(); ++c) {
        auto best = best_subgroup(*G, c, AhcMode::Unconditional, opt, config.subgroup_cap);
        auto os = orbit_stabilizer_bound(*G, c, config.subgroup_cap);
        good = good && !best.ranked.empty() && os.holds;
        Json jc{{"class", c}, {"candidates", best.ranked.size()}, {"orbit_stabilizer", os.holds}};
        if (!best.ranked.empty()) {
          jc["best_order"] = best.ranked.front().order;
          jc["best_objective"] = round12(best.ranked.front().objective);
        }
        classes.push_back(jc);
      }
      ok[i] = good;
      out[i] = {{"group", label(specs[i])}, {"classes", classes}};
    });
    r.pass = std::all_of(ok.begin(), ok.end(), [](int v) { return v != 0; });
    r.detail["groups"] = out;
  });
}

std::vector<SuiteResult> verify_all(const Corpus& corpus, const RunConfig& config) {
  std::vector<SuiteResult> out;
  out.push_back(suite_character_tables(corpus));
  out.push_back(suite_section2());
  out.push_back(suite_coefficients(corpus));
  out.push_back(suite_tensor_constituents(corpus));
  out.push_back(suite_cauchy(config.seed));
  out.push_back(suite_zeta());
  out.push_back(suite_conductor_discriminant());
  out.push_back(suite_census());
  out.push_back(suite_least_prime());
  out.push_back(suite_base_change());
  out.push_back(suite_smoothing(config.seed));
  out.push_back(suite_sieve(config.seed));
  out.push_back(suite_ahc(corpus, config));
  return out;
}

Json suites_json(const std::vector<SuiteResult>& suites, bool include_timing) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& s : suites) {
    Json j{{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}};
    if (include_timing) j["seconds"] = round12(s.seconds);
    arr.push_back(j);
    all = all && s.pass;
  }
  return {{"pass", all}, {"suites", arr}};
}

}  // namespace cheblab
