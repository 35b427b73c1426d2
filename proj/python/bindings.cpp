#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cheblab/ahc.hpp"
#include "cheblab/bounds.hpp"
#include "cheblab/census.hpp"
#include "cheblab/cyclofield.hpp"
#include "cheblab/schur.hpp"
#include "cheblab/sieve.hpp"
#include "cheblab/smoothing.hpp"
#include "cheblab/verify.hpp"

namespace py = pybind11;
using namespace cheblab;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list l;
      for (const auto& v : j) l.append(to_py(v));
      return l;
    }
    case Json::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
      return d;
    }
    default: return py::none();
  }
}

py::dict group_info(const std::string& spec) {
  auto G = build_group(spec);
  py::list classes;
  for (const auto& c : G->classes())
    classes.append(py::dict(py::arg("rep") = cycle_string(G->permutation(c.representative)),
                            py::arg("size") = c.size, py::arg("order") = G->element_order(c.representative)));
  return py::dict(py::arg("name") = G->name(), py::arg("order") = G->order(), py::arg("exponent") = G->exponent(),
                  py::arg("abelian") = G->is_abelian(), py::arg("classes") = classes);
}

py::list character_table_values(const std::string& spec) {
  auto G = build_group(spec);
  auto T = character_table(G);
  py::list rows;
  for (const auto& chi : T.rows()) {
    std::vector<std::complex<double>> v;
    for (const auto& x : chi.values) v.push_back(x.to_complex());
    rows.append(v);
  }
  return rows;
}

py::list best_subgroup_py(const std::string& spec, std::size_t cls, bool assume_ahc) {
  auto G = build_group(spec);
  if (cls >= G->num_classes()) throw py::index_error("class out of range");
  auto r = best_subgroup(*G, cls, assume_ahc ? AhcMode::Conditional : AhcMode::Unconditional);
  py::list out;
  for (const auto& o : r.ranked)
    out.append(py::dict(py::arg("order") = o.order, py::arg("d_H") = o.d_H, py::arg("tier") = tier_name(o.tier),
                        py::arg("objective") = o.objective, py::arg("class_density") = o.class_density));
  return out;
}

py::dict cyclotomic_bounds(int q) {
  auto F = cyclotomic_field(q);
  auto r = q_and_Q(cyclotomic_conductors(F), F.table);
  return py::dict(py::arg("d") = r.d, py::arg("log_q") = r.log_q, py::arg("log_Q") = r.log_Q,
                  py::arg("irr_count") = r.irr_count, py::arg("discriminant") = cyclotomic_discriminant(q).get_str());
}

py::list section2(const std::string& family) {
  py::list out;
  for (const auto& r : section2_table(family))
    out.append(py::dict(py::arg("family") = r.family, py::arg("quantity") = r.quantity, py::arg("value") = r.value,
                        py::arg("provenance") = r.provenance));
  return out;
}

py::dict census_py(const std::string& field, double x, std::optional<double> beta1, int chi1) {
  NumberField F(parse_field_spec(field));
  std::optional<ExceptionalData> e;
  if (beta1) e = ExceptionalData{*beta1, chi1};
  py::gil_scoped_release release;
  auto r = census(F, x, e);
  py::gil_scoped_acquire acquire;
  py::list classes;
  for (const auto& c : r.classes)
    classes.append(py::dict(py::arg("label") = c.label, py::arg("size") = c.size, py::arg("count") = c.count,
                            py::arg("density") = c.density,
                            py::arg("delta") = c.delta ? py::object(py::float_(*c.delta)) : py::object(py::none())));
  return py::dict(py::arg("field") = r.field, py::arg("x") = r.x, py::arg("pi_x") = r.pi_x, py::arg("li_x") = r.li_x,
                  py::arg("resolved") = r.resolved, py::arg("ambiguous") = r.ambiguous,
                  py::arg("ramified") = r.ramified, py::arg("classes") = classes);
}

py::object least_prime_py(const std::string& field, int cls_or_residue, std::uint64_t cap) {
  NumberField F(parse_field_spec(field));
  std::size_t cls = F.spec().kind == NumberFieldSpec::Kind::Cyclotomic
                        ? F.class_of_residue(cls_or_residue)
                        : static_cast<std::size_t>(cls_or_residue);
  auto r = least_prime(F, cls, cap);
  if (!r.found) return py::none();
  return py::int_(r.p);
}

py::dict base_change_py(int q, int d, int c, double x) {
  auto b = base_change_check(q, cyclotomic_subgroup(q, d), c, x);
  return py::dict(py::arg("pi_C") = b.pi_C, py::arg("pi_CH") = b.pi_CH, py::arg("lhs") = b.lhs,
                  py::arg("rhs") = b.rhs, py::arg("slack") = b.slack, py::arg("holds") = b.holds);
}

py::dict sweep_py(const std::string& spec, int l_max) {
  auto r = coefficient_sweep(build_group(spec), l_max);
  return py::dict(py::arg("scenarios") = r.scenarios, py::arg("nonnegativity_checks") = r.nonnegativity_checks,
                  py::arg("cauchy_schwarz_checks") = r.cauchy_schwarz_checks, py::arg("violations") = r.violations);
}

py::dict weight_py(double x, int ell, double eps, int grid, std::uint64_t seed) {
  auto w = verify_weight_bounds({x, ell, eps}, grid, seed);
  return py::dict(py::arg("pass") = w.pass, py::arg("F0") = w.F0, py::arg("shape_ok") = w.shape_ok,
                  py::arg("max_quadrature_error") = w.max_quadrature_error,
                  py::arg("first_failure") = w.first_failure);
}

py::dict selberg_py(const std::map<std::uint64_t, double>& g, double z) {
  auto s = selberg_from_densities(g, z);
  return py::dict(py::arg("D") = s.D, py::arg("rho") = s.rho, py::arg("G") = s.G_sum,
                  py::arg("quadratic_form") = s.quadratic_form, py::arg("constraints_hold") = s.constraints_hold);
}

}  // namespace

PYBIND11_MODULE(_cheblab, m) {
  m.doc() = "Character-theoretic and prime-splitting checks for effective Chebotarev bounds";
  m.def("group_info", &group_info, py::arg("spec"));
  m.def("character_table", &character_table_values, py::arg("spec"), "Rows of complex character values");
  m.def("best_subgroup", &best_subgroup_py, py::arg("spec"), py::arg("cls"), py::arg("assume_ahc") = false);
  m.def("cyclotomic_bounds", &cyclotomic_bounds, py::arg("q"));
  m.def("section2_table", &section2, py::arg("family"));
  m.def("census", &census_py, py::arg("field"), py::arg("x"), py::arg("beta1") = py::none(), py::arg("chi1") = 1);
  m.def("least_prime", &least_prime_py, py::arg("field"), py::arg("cls"), py::arg("cap") = 10000000);
  m.def("base_change", &base_change_py, py::arg("q"), py::arg("d"), py::arg("c"), py::arg("x") = 1e4);
  m.def("coefficient_sweep", &sweep_py, py::arg("spec"), py::arg("l_max") = 6);
  m.def("weight_check", &weight_py, py::arg("x"), py::arg("ell"), py::arg("eps"), py::arg("grid") = 200,
        py::arg("seed") = 0);
  m.def("F", [](std::complex<double> z, double x, int ell, double eps) { return F_closed(z, {x, ell, eps}); },
        py::arg("z"), py::arg("x"), py::arg("ell"), py::arg("eps"));
  m.def("phi1", &Phi1);
  m.def("phi2", &Phi2);
  m.def("selberg", &selberg_py, py::arg("g"), py::arg("z"));
  m.def("conductor_discriminant", [](int q) { return cyclotomic_conductor_discriminant(q).holds; }, py::arg("q"));
  m.def(
      "verify_all",
      [](const std::string& corpus, std::uint64_t seed) {
        RunConfig cfg;
        cfg.seed = seed;
        Json j;
        {
          py::gil_scoped_release release;
          j = suites_json(verify_all(corpus_by_name(corpus), cfg));
        }
        return to_py(j);
      },
      py::arg("corpus") = "default", py::arg("seed") = 0);
}
