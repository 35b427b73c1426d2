#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cheblab/ahc.hpp"
#include "cheblab/bounds.hpp"
#include "cheblab/census.hpp"
#include "cheblab/cyclofield.hpp"
#include "cheblab/schur.hpp"
#include "cheblab/sieve.hpp"
#include "cheblab/smoothing.hpp"
#include "cheblab/verify.hpp"

using namespace cheblab;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') throw UsageError("file arguments take the form @path.json");
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot open " + arg.substr(1));
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON in ") + arg.substr(1) + ": " + e.what());
  }
}

std::string rational_str(const Rational& r) { return r.str(); }

Json cyclotomic_json(const Cyclotomic& c) {
  auto m = c.minimized();
  Json coeffs = Json::array();
  for (const auto& r : m.coeffs()) coeffs.push_back(rational_str(r));
  return {{"conductor", m.field()}, {"coeffs", coeffs}};
}

Json subgroup_json(const Group& G, const Subgroup& H) {
  Json gens = Json::array();
  for (ElementId g : H.generators) gens.push_back(cycle_string(G.permutation(g)));
  return {{"order", H.order()}, {"generators", gens}};
}

Json group_json(const GroupPtr& G, const CharacterTable& T) {
  Json classes = Json::array();
  for (const auto& c : G->classes())
    classes.push_back({{"rep", cycle_string(G->permutation(c.representative))},
                       {"size", c.size},
                       {"order", G->element_order(c.representative)}});
  Json irr = Json::array();
  for (const auto& chi : T.rows()) {
    Json vals = Json::array();
    for (const auto& v : chi.values) vals.push_back(cyclotomic_json(v));
    irr.push_back({{"degree", chi.degree()}, {"values", vals}});
  }
  return {{"name", G->name()}, {"order", G->order()}, {"exponent", G->exponent()}, {"abelian", G->is_abelian()},
          {"classes", classes}, {"irreducibles", irr}};
}

// Class by id, or by a representative permutation in cycle notation.
std::size_t parse_class(const Group& G, const std::string& text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), ::isdigit)) {
    std::size_t c = std::stoul(text);
    if (c >= G.num_classes()) throw UsageError("class id out of range: " + text);
    return c;
  }
  auto gens = parse_cycle_generators(text);
  if (gens.size() != 1) throw UsageError("class must be an id or a single permutation");
  std::vector<std::uint16_t> img(G.degree());
  for (int i = 0; i < G.degree(); ++i) img[i] = static_cast<std::uint16_t>(i);
  for (std::size_t i = 0; i < gens[0].size(); ++i) {
    if (static_cast<int>(i) >= G.degree() && gens[0][i] != static_cast<int>(i))
      throw UsageError("permutation moves points outside the group's degree");
    if (static_cast<int>(i) < G.degree()) img[i] = static_cast<std::uint16_t>(gens[0][i]);
  }
  auto id = G.find(img);
  if (id < 0) throw UsageError("permutation is not an element of the group");
  return G.class_of(static_cast<ElementId>(id));
}

Json objective_json(const Group& G, const ObjectiveReport& o) {
  return {{"subgroup_index", o.subgroup_index}, {"subgroup", subgroup_json(G, o.subgroup)},
          {"order", o.order}, {"d_H", o.d_H}, {"tier", tier_name(o.tier)},
          {"objective", round12(o.objective)}, {"abelian_objective", round12(o.abelian_objective)},
          {"class_density", round12(o.class_density)}};
}

std::optional<ExceptionalData> parse_exceptional(const std::string& text) {
  if (text.empty()) return std::nullopt;
  ExceptionalData e;
  bool have_beta = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("exceptional data must be beta1=...,chi1C=...");
    std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    try {
      if (k == "beta1") {
        e.beta1 = std::stod(v);
        have_beta = true;
      } else if (k == "chi1C") {
        e.chi1_C = std::stoi(v);
      } else {
        throw UsageError("unknown exceptional key " + k);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad exceptional value " + item);
    }
  }
  if (!have_beta || !(e.beta1 > 0 && e.beta1 < 1)) throw UsageError("beta1 must lie in (0,1)");
  if (e.chi1_C != 1 && e.chi1_C != -1) throw UsageError("chi1C must be +1 or -1");
  return e;
}

Json exceptional_json(const std::optional<ExceptionalData>& e) {
  if (!e) return nullptr;
  return {{"beta1", round12(e->beta1)}, {"chi1C", e->chi1_C}};
}

ConductorData conductor_data(const Json& j, std::size_t rows) {
  ConductorData c;
  c.D_F = mpz_class(j.value("D_F", std::string("1")));
  c.n_F = j.value("n_F", 1);
  if (!j.contains("conductor_norms")) throw UsageError("conductor data needs conductor_norms");
  for (const auto& v : j["conductor_norms"])
    c.conductor_norms.emplace_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()));
  if (c.conductor_norms.size() != rows)
    throw UsageError("conductor_norms has " + std::to_string(c.conductor_norms.size()) + " entries, expected " +
                     std::to_string(rows));
  return c;
}

Json q_json(const QReport& q) {
  return {{"d", q.d}, {"log_q", round12(q.log_q)}, {"log_Q", round12(q.log_Q)}, {"irr_count", q.irr_count}};
}

Json bound_json(const BoundReport& b) {
  Json per = Json::array();
  for (double v : b.per_candidate) per.push_back(round12(v));
  return {{"d_G", b.d_G},
          {"log_q", round12(b.log_q)},
          {"log_Q", round12(b.log_Q)},
          {"linnik_log_bound", round12(b.linnik_log_bound)},
          {"argmin", b.argmin},
          {"per_candidate", per},
          {"constant", round12(b.constant)},
          {"exceptional", exceptional_json(b.exceptional)},
          {"banner", b.banner}};
}

Json census_json(const NumberField& F, const CensusReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json j{{"class", c.cls}, {"label", c.label}, {"size", c.size}, {"count", c.count},
           {"density", round12(c.density)}};
    j["delta"] = c.delta ? Json(round12(*c.delta)) : Json(nullptr);
    if (c.least_prime) j["least_prime"] = *c.least_prime;
    classes.push_back(j);
  }
  Json amb = Json::array();
  for (const auto& [set, n] : r.ambiguous_sets) amb.push_back({{"classes", set}, {"count", n}});
  return {{"field", r.field},           {"x", round12(r.x)},
          {"pi_x", r.pi_x},             {"li_x", round12(r.li_x)},
          {"resolved", r.resolved},     {"ambiguous", r.ambiguous},
          {"ambiguous_sets", amb},      {"ramified", r.ramified},
          {"reconstructed", round12(r.reconstructed)},
          {"exceptional", exceptional_json(r.exceptional)},
          {"group_order", F.group()->order()},
          {"classes", classes}};
}

std::string census_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "class,label,size,count,density,delta\n";
  char buf[64];
  for (const auto& c : r.classes) {
    os << c.cls << ",\"" << c.label << "\"," << c.size << "," << c.count << ",";
    std::snprintf(buf, sizeof buf, "%.12g", c.density);
    os << buf << ",";
    if (c.delta) {
      std::snprintf(buf, sizeof buf, "%.12g", *c.delta);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

InertiaScenario scenario_from_json(const Group& G, const Json& j) {
  auto ids = [&](const char* key) {
    if (!j.contains(key)) throw UsageError(std::string("scenario needs ") + key);
    std::vector<ElementId> v;
    for (const auto& x : j[key]) {
      auto id = x.get<long long>();
      if (id < 0 || static_cast<std::size_t>(id) >= G.order()) throw UsageError("scenario element out of range");
      v.push_back(static_cast<ElementId>(id));
    }
    return v;
  };
  InertiaScenario sc;
  sc.D = closure(G, ids("D"));
  sc.I = closure(G, ids("I"));
  auto phi = j.value("phi", 0LL);
  if (phi < 0 || static_cast<std::size_t>(phi) >= G.order()) throw UsageError("scenario phi out of range");
  sc.phi = static_cast<ElementId>(phi);
  sc.Np = j.value("Np", 2ULL);
  return sc;
}

Json sweep_json(const SweepReport& s) {
  Json j{{"group", s.group},
         {"scenarios", s.scenarios},
         {"distinct_profiles", s.distinct_profiles},
         {"nonnegativity_checks", s.nonnegativity_checks},
         {"cauchy_schwarz_checks", s.cauchy_schwarz_checks},
         {"violations", s.violations}};
  if (!s.first_violation.empty()) j["first_violation"] = s.first_violation;
  return j;
}

Json weight_json(const WeightReport& w, const PhiReport& phi) {
  Json samples = Json::array();
  std::size_t asserted = 0, asserted_pass = 0;
  for (const auto& s : w.samples) {
    if (s.asserted) {
      ++asserted;
      asserted_pass += s.pass;
      continue;
    }
    samples.push_back({{"property", s.property}, {"sigma", round12(s.sigma)}, {"lhs", round12(s.lhs)},
                       {"rhs", round12(s.rhs)}, {"ratio", round12(s.rhs > 0 ? s.lhs / s.rhs : 0)}});
  }
  Json d1 = Json::array(), d2 = Json::array();
  for (double v : phi.decay_max_phi1) d1.push_back(round12(v));
  for (double v : phi.decay_max_phi2) d2.push_back(round12(v));
  Json j{{"pass", w.pass && phi.pass},
         {"params", {{"x", round12(w.params.x)}, {"ell", w.params.ell}, {"eps", round12(w.params.eps)},
                     {"A", round12(w.params.A())}}},
         {"F0", round12(w.F0)},
         {"F0_in_range", w.F0_in_range},
         {"shape_ok", w.shape_ok},
         {"integral_error", round12(w.integral_error)},
         {"max_quadrature_error", round12(w.max_quadrature_error)},
         {"asserted_samples", asserted},
         {"asserted_pass", asserted_pass},
         {"slack", samples},
         {"phi", {{"pass", phi.pass},
                  {"grid_points", phi.grid_points},
                  {"sandwich_violations", phi.sandwich_violations},
                  {"phi1_half", round12(phi.phi1_half)},
                  {"phi2_hat_1", round12(phi.phi2_hat_1)},
                  {"phi2_hat_1_refinement_diff", round12(phi.phi2_hat_1_refined_diff)},
                  {"decay_phi1", d1},
                  {"decay_phi2", d2}}}};
  if (!w.first_failure.empty()) j["first_failure"] = w.first_failure;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebotarev bound laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "json", constants_file;
  app.add_option("--seed", config.seed, "Seed for randomized checks");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--subgroup-cap", config.subgroup_cap, "Exhaustive subgroup enumeration cap");
  app.add_option("--monomial-cap", config.monomial_cap, "Monomial witness search cap");
  app.add_option("--census-cap", config.census_cap, "Least-prime search cap");
  app.add_option("--constants", constants_file, "Constant multipliers as @file.json");

  // group
  auto* group = app.add_subcommand("group", "Group structure and character table");
  std::string group_spec;
  group->add_option("--spec,--group", group_spec, "Group spec")->required();

  // ahc
  auto* ahc = app.add_subcommand("ahc", "AHC subgroup optimization");
  ahc->require_subcommand(1);
  auto* ahc_opt = ahc->add_subcommand("optimize", "Rank certified subgroups meeting a class");
  std::string ahc_group, ahc_class;
  bool assume_ahc = false;
  ahc_opt->add_option("--group", ahc_group)->required();
  ahc_opt->add_option("--class", ahc_class)->required();
  ahc_opt->add_flag("--assume-ahc", assume_ahc, "Rank every subgroup, certified or not");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Structural bound quantities");
  bounds->require_subcommand(1);
  auto* b_report = bounds->add_subcommand("report", "q, Q and the Linnik-type exponent");
  std::string b_group, b_class, b_conductors, b_field, b_exceptional;
  b_report->add_option("--group", b_group);
  b_report->add_option("--class", b_class)->required();
  b_report->add_option("--conductors", b_conductors, "@file.json with base and candidate conductor data");
  b_report->add_option("--field", b_field, "cyclotomic:q instead of a conductor file");
  b_report->add_option("--exceptional", b_exceptional, "beta1=...,chi1C=...");
  auto* b_sec2 = bounds->add_subcommand("section2", "Worked family table");
  std::string family;
  b_sec2->add_option("--family", family)->required();

  // census
  auto* cen = app.add_subcommand("census", "Prime splitting statistics");
  cen->require_subcommand(1);
  auto* c_run = cen->add_subcommand("run", "Frobenius census up to x");
  std::string c_field, c_exceptional, c_csv;
  double c_x = 0;
  c_run->add_option("--field", c_field)->required();
  c_run->add_option("--x", c_x)->required()->check(CLI::PositiveNumber);
  c_run->add_option("--exceptional", c_exceptional, "beta1=...,chi1C=...");
  c_run->add_option("--csv", c_csv, "Also write the per-class table to this path");
  auto* c_lp = cen->add_subcommand("least-prime", "Least unramified prime with a given Frobenius");
  std::string lp_field, lp_class;
  c_lp->add_option("--field", lp_field)->required();
  c_lp->add_option("--class", lp_class, "Residue (cyclotomic) or class id")->required();
  auto* c_bc = cen->add_subcommand("base-change", "Base change inequality for Q(zeta_q)/Q(zeta_d)");
  int bc_q = 0, bc_d = 1, bc_c = 1;
  double bc_x = 1e4;
  c_bc->add_option("--q", bc_q)->required();
  c_bc->add_option("--d", bc_d, "K = Q(zeta_d)")->required();
  c_bc->add_option("--c", bc_c, "Residue of the class, in H")->required();
  c_bc->add_option("--x", bc_x);

  // verify
  auto* ver = app.add_subcommand("verify", "Verification suites");
  ver->require_subcommand(1);
  auto* v_all = ver->add_subcommand("all", "Every suite over a corpus");
  std::string corpus_name = "default";
  bool timing = false;
  v_all->add_option("--corpus", corpus_name);
  v_all->add_flag("--timing", timing, "Include per-suite wall time (not byte-stable)");
  auto* v_coef = ver->add_subcommand("coefficients", "Nonnegativity and Cauchy-Schwarz sweep");
  std::string v_group, v_scenario;
  std::size_t max_order = 48;
  int l_max = 6;
  v_coef->add_option("--group", v_group)->required();
  v_coef->add_option("--max-order", max_order);
  v_coef->add_option("--lmax", l_max)->check(CLI::Range(1, 30));
  v_coef->add_option("--scenario", v_scenario, "@file.json {D, I, phi, Np}");

  // smoothing
  auto* smo = app.add_subcommand("smoothing", "Smoothing weight checks");
  smo->require_subcommand(1);
  auto* s_check = smo->add_subcommand("check", "Verify the weight and the bump pair");
  WeightParams wp{1e6, 4, 0.01};
  int grid = 200, m_max = 6;
  s_check->add_option("--x", wp.x);
  s_check->add_option("--ell", wp.ell);
  s_check->add_option("--eps", wp.eps);
  s_check->add_option("--grid", grid)->check(CLI::PositiveNumber);
  s_check->add_option("--m-max", m_max)->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    config.format = format == "csv" ? OutputFormat::Csv : format == "text" ? OutputFormat::Text : OutputFormat::Json;
    if (!constants_file.empty()) config.load_constants(read_json_arg(constants_file));
    config.validate();

    if (*group) {
      auto G = build_group(group_spec);
      emit(group_json(G, character_table(G)));
      return 0;
    }

    if (*ahc_opt) {
      auto G = build_group(ahc_group);
      std::size_t cls = parse_class(*G, ahc_class);
      AhcOptions opt;
      opt.monomial_cap = config.monomial_cap;
      auto best = best_subgroup(*G, cls, assume_ahc ? AhcMode::Conditional : AhcMode::Unconditional, opt,
                                config.subgroup_cap);
      Json ranked = Json::array();
      for (const auto& o : best.ranked) ranked.push_back(objective_json(*G, o));
      emit({{"group", G->name()},
            {"class", cls},
            {"mode", assume_ahc ? "conditional" : "unconditional"},
            {"exhaustive", best.exhaustive},
            {"ranked", ranked},
            {"best_abelian", best.best_abelian ? objective_json(*G, *best.best_abelian) : Json(nullptr)}});
      return 0;
    }

    if (*b_report) {
      auto exc = parse_exceptional(b_exceptional);
      double c = config.constant("c1");
      if (!b_field.empty()) {
        auto spec = parse_field_spec(b_field);
        if (spec.kind != NumberFieldSpec::Kind::Cyclotomic) throw UsageError("--field supports cyclotomic:q only");
        auto F = cyclotomic_field(spec.q);
        std::size_t cls = 0;
        {
          int r = std::stoi(b_class);
          if (std::gcd(r, spec.q) != 1) throw UsageError("class residue must be a unit");
          cls = F.group->class_of(F.element[((r % spec.q) + spec.q) % spec.q]);
        }
        auto cond = cyclotomic_conductors(F);
        LinnikCandidate lc;
        lc.certificate = certify_ahc(*F.group, whole_group(*F.group));
        lc.conductors = cond;
        lc.table_H = &F.table;
        auto rep = linnik_exponent(F.group, cls, {lc}, c, exc);
        emit({{"field", b_field}, {"q_and_Q", q_json(q_and_Q(cond, F.table))}, {"bound", bound_json(rep)},
              {"nu_at_Q", exc ? Json(round12(nu(std::exp(rep.log_Q), exc->beta1))) : Json(1)}});
        return 0;
      }
      if (b_group.empty() || b_conductors.empty()) throw UsageError("bounds report needs --group and --conductors");
      auto G = build_group(b_group);
      auto T = character_table(G);
      std::size_t cls = parse_class(*G, b_class);
      Json data = read_json_arg(b_conductors);
      Json out{{"group", G->name()}, {"class", cls}};
      if (data.contains("base")) out["q_and_Q"] = q_json(q_and_Q(conductor_data(data["base"], T.size()), T));
      if (!data.contains("candidates")) throw UsageError("conductor file needs candidates");
      std::vector<CharacterTable> tables;
      std::vector<Subgroup> subs;
      for (const auto& cj : data["candidates"]) {
        std::vector<ElementId> gens;
        if (cj.contains("elements")) {
          for (const auto& e : cj["elements"]) gens.push_back(static_cast<ElementId>(e.get<long long>()));
        } else if (cj.contains("generators")) {
          for (const auto& g : cj["generators"]) {
            auto perm = parse_cycle_generators(g.get<std::string>());
            std::vector<std::uint16_t> img(G->degree());
            for (int i = 0; i < G->degree(); ++i) img[i] = static_cast<std::uint16_t>(i < (int)perm[0].size() ? perm[0][i] : i);
            auto id = G->find(img);
            if (id < 0) throw UsageError("candidate generator not in group: " + g.get<std::string>());
            gens.push_back(static_cast<ElementId>(id));
          }
        }
        subs.push_back(closure(*G, gens));
        tables.push_back(character_table(subgroup_as_group(*G, subs.back(), nullptr)));
      }
      std::vector<LinnikCandidate> cands;
      AhcOptions opt;
      opt.monomial_cap = config.monomial_cap;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        LinnikCandidate lc;
        lc.certificate = certify_ahc(*G, subs[i], opt);
        lc.conductors = conductor_data(data["candidates"][i], tables[i].size());
        lc.table_H = &tables[i];
        cands.push_back(std::move(lc));
      }
      out["bound"] = bound_json(linnik_exponent(G, cls, cands, c, exc));
      emit(out);
      return 0;
    }

    if (*b_sec2) {
      auto rows = section2_table(family);
      if (config.format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& r : rows)
          arr.push_back({{"family", r.family}, {"quantity", r.quantity}, {"value", r.value},
                         {"provenance", r.provenance}});
        emit({{"rows", arr}, {"banner", kStructuralBanner}});
      } else {
        std::cout << section2_csv(rows);
      }
      return 0;
    }

    if (*c_run) {
      NumberField F(parse_field_spec(c_field));
      auto rep = census(F, c_x, parse_exceptional(c_exceptional));
      if (!c_csv.empty()) {
        std::ofstream out(c_csv);
        if (!out) throw UsageError("cannot write " + c_csv);
        out << census_csv(rep);
      }
      if (config.format == OutputFormat::Csv) std::cout << census_csv(rep);
      else emit(census_json(F, rep));
      return 0;
    }

    if (*c_lp) {
      NumberField F(parse_field_spec(lp_field));
      std::size_t cls;
      Json out{{"field", lp_field}};
      if (F.spec().kind == NumberFieldSpec::Kind::Cyclotomic) {
        int r = std::stoi(lp_class);
        int q = F.spec().q;
        r = ((r % q) + q) % q;
        if (std::gcd(r, q) != 1) throw UsageError("class residue must be a unit mod q");
        cls = F.class_of_residue(r);
        auto CF = cyclotomic_field(q);
        LinnikCandidate lc;
        lc.certificate = certify_ahc(*CF.group, whole_group(*CF.group));
        lc.conductors = cyclotomic_conductors(CF);
        lc.table_H = &CF.table;
        auto b = linnik_exponent(CF.group, CF.group->class_of(CF.element[r]), {lc}, config.constant("c1"));
        out["structural_log_bound"] = round12(b.linnik_log_bound);
        out["banner"] = b.banner;
      } else {
        cls = parse_class(*F.group(), lp_class);
      }
      auto lp = least_prime(F, cls, config.census_cap);
      out["class"] = cls;
      out["label"] = F.class_label(cls);
      out["found"] = lp.found;
      out["p"] = lp.found ? Json(lp.p) : Json(nullptr);
      out["log_p"] = lp.found ? Json(round12(std::log(double(lp.p)))) : Json(nullptr);
      out["cap"] = lp.cap;
      emit(out);
      return lp.found ? 0 : 1;
    }

    if (*c_bc) {
      if (bc_q < 1 || bc_d < 1 || bc_q % bc_d) throw UsageError("need d | q");
      auto H = cyclotomic_subgroup(bc_q, bc_d);
      auto b = base_change_check(bc_q, H, bc_c, bc_x);
      emit({{"q", b.q}, {"H", b.H}, {"c", b.c}, {"x", round12(b.x)}, {"pi_C", b.pi_C}, {"pi_CH", b.pi_CH},
            {"lhs", round12(b.lhs)}, {"rhs", round12(b.rhs)}, {"slack", round12(b.slack)}, {"holds", b.holds}});
      return b.holds ? 0 : 1;
    }

    if (*v_all) {
      auto corpus = corpus_by_name(corpus_name);
      auto suites = verify_all(corpus, config);
      Json j = suites_json(suites, timing);
      j["corpus"] = corpus.name;
      j["budget_seconds"] = corpus.budget_seconds;
      j["seed"] = config.seed;
      if (config.format == OutputFormat::Text) {
        for (const auto& s : suites) std::cout << (s.pass ? "PASS " : "FAIL ") << s.name << "\n";
      } else {
        emit(j);
      }
      return j["pass"].get<bool>() ? 0 : 1;
    }

    if (*v_coef) {
      auto G = build_group(v_group);
      if (G->order() > max_order)
        throw UsageError("group order " + std::to_string(G->order()) + " exceeds --max-order");
      SweepReport rep;
      if (!v_scenario.empty()) rep = scenario_sweep(G, scenario_from_json(*G, read_json_arg(v_scenario)), l_max);
      else rep = coefficient_sweep(G, l_max);
      Json j = sweep_json(rep);
      j["l_max"] = l_max;
      j["pass"] = rep.violations == 0;
      emit(j);
      return rep.violations == 0 ? 0 : 1;
    }

    if (*s_check) {
      auto w = verify_weight_bounds(wp, grid, config.seed);
      auto phi = phi_pair(m_max);
      emit(weight_json(w, phi));
      return w.pass && phi.pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
