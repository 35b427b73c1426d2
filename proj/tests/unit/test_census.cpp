#include <cmath>
#include <numeric>

#include "cheblab/census.hpp"
#include "cheblab/cyclofield.hpp"
#include "doctest.h"

using namespace cheblab;

namespace {

bool prime_by_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Ramanujan-free oracle: li(x) = gamma + log log x + sum (log x)^k / (k k!).
double li_series(double x) {
  const double gamma = 0.57721566490153286061;
  double L = std::log(x), term = 1, sum = 0;
  for (int k = 1; k < 200; ++k) {
    term *= L / k;
    sum += term / k;
  }
  return gamma + std::log(L) + sum;
}

int roots_mod_p(std::int64_t a2, std::int64_t a1, std::int64_t a0, std::int64_t p) {
  int n = 0;
  for (std::int64_t t = 0; t < p; ++t)
    if (((t * t % p * t + a2 * t % p * t + a1 * t + a0) % p + p) % p == 0) ++n;
  return n;
}

std::size_t class_with_type(const Group& G, std::vector<int> type) {
  for (std::size_t c = 0; c < G.num_classes(); ++c)
    if (G.cycle_type(G.classes()[c].representative) == type) return c;
  FAIL("no class with that cycle type");
  return 0;
}

}  // namespace

TEST_CASE("discriminants") {
  CHECK(discriminant(parse_int_poly("1,0,0,-2")) == -108);
  CHECK(discriminant(parse_int_poly("1,0,1")) == -4);
  CHECK(discriminant(parse_int_poly("1,-3,2")) == 1);
  CHECK(discriminant(parse_int_poly("1,0,-2,0,1")) == 0);  // (x^2-1)^2
  // x^3 + a x + b: -4a^3 - 27b^2.
  CHECK(discriminant(parse_int_poly("1,0,-7,3")) == -4 * -343 - 27 * 9);
  CHECK_THROWS(parse_int_poly("1,x"));
}

TEST_CASE("sieve and li") {
  auto P = primes_up_to(10000);
  CHECK(P.size() == 1229);
  for (std::uint32_t n = 0; n < 2000; ++n)
    CHECK((std::find(P.begin(), P.end(), n) != P.end()) == prime_by_trial(n));
  CHECK(li(2) == 0);
  CHECK_THROWS(li(1.5));
  const double li2 = li_series(2.0);
  for (double x : {3.0, 100.0, 1e4, 1e6, 1e8}) CHECK(li(x) == doctest::Approx(li_series(x) - li2).epsilon(1e-10));
  CHECK(li(1e4) == doctest::Approx(1245.092).epsilon(1e-6));
  CHECK(li(std::exp(2.0)) > li(std::exp(1.5)));
}

TEST_CASE("frobenius cycle types") {
  auto f = parse_int_poly("1,0,0,-2");
  CHECK(*frobenius_cycle_type(f, 5) == std::vector<int>{2, 1});
  CHECK_FALSE(frobenius_cycle_type(f, 2).has_value());
  CHECK_FALSE(frobenius_cycle_type(f, 3).has_value());
  CHECK(*frobenius_cycle_type(f, 31) == std::vector<int>{1, 1, 1});  // 4^3 = 2 mod 31, and 31 = 1 mod 3
  CHECK_THROWS(frobenius_cycle_type(parse_int_poly("1,-2,1"), 5));
  for (std::uint32_t p : primes_up_to(2000)) {
    if (p <= 3) continue;
    auto ct = *frobenius_cycle_type(f, p);
    CHECK(std::accumulate(ct.begin(), ct.end(), 0) == 3);
    int r = roots_mod_p(0, 0, -2, p);
    int ones = static_cast<int>(std::count(ct.begin(), ct.end(), 1));
    CHECK(ones == r);
  }
  CHECK(*cyclotomic_frobenius(5, 7) == 2);
  CHECK(*cyclotomic_frobenius(8, 17) == 1);
  CHECK_FALSE(cyclotomic_frobenius(5, 5).has_value());
}

TEST_CASE("field specs") {
  auto s = parse_field_spec("splitting:1,0,0,-2:symmetric:3");
  CHECK(s.kind == NumberFieldSpec::Kind::SplittingField);
  CHECK(s.f == IntPoly{-2, 0, 0, 1});
  CHECK_THROWS(parse_field_spec("cyclotomic:x"));
  CHECK_THROWS(parse_field_spec("quadratic:5"));
  CHECK_THROWS(NumberField(parse_field_spec("splitting:1,0,0,-2:symmetric:4")));
  CHECK_THROWS(NumberField(parse_field_spec("splitting:1,-2,1:cyclic:2")));
}

TEST_CASE("cyclotomic census") {
  NumberField F(parse_field_spec("cyclotomic:5"));
  auto r = census(F, 100);
  CHECK(r.classes[F.class_of_residue(2)].count == 7);
  std::uint64_t total = r.resolved + r.ambiguous + r.ramified.size();
  CHECK(total == r.pi_x);
  CHECK(r.pi_x == 25);
  CHECK(r.reconstructed == doctest::Approx(static_cast<double>(r.resolved)));
  auto r2 = census(F, 2);
  CHECK(r2.pi_x == 1);
  CHECK(r2.classes[F.class_of_residue(2)].count == 1);
  CHECK_THROWS(census(F, 1.5));

  // Oracle: direct residue counts.
  for (int q : {5, 7, 8, 12}) {
    NumberField Fq(parse_field_spec("cyclotomic:" + std::to_string(q)));
    double prev = 1;
    for (double x : {1e3, 1e5}) {
      auto rep = census(Fq, x, std::nullopt, 3);
      std::vector<std::uint64_t> oracle(q, 0);
      for (std::uint32_t p : primes_up_to(static_cast<std::uint64_t>(x)))
        if (std::gcd<int, int>(p, q) == 1) ++oracle[p % q];
      double worst = 0;
      for (const auto& cc : rep.classes) {
        CHECK(cc.count == oracle[Fq.residue_of_class(cc.cls)]);
        worst = std::max(worst, std::abs(double(cc.count) / rep.pi_x - 1.0 / euler_phi(q)));
      }
      CHECK(worst < prev);
      prev = worst;
    }
  }
}

TEST_CASE("splitting field census of x^3 - 2") {
  NumberField F(parse_field_spec("splitting:1,0,0,-2:symmetric:3"));
  const Group& G = *F.group();
  auto r = census(F, 1e4);
  CHECK(r.ramified == std::vector<std::uint64_t>{2, 3});
  CHECK(r.ambiguous == 0);
  CHECK(r.resolved + r.ramified.size() == r.pi_x);
  std::size_t id = class_with_type(G, {1, 1, 1}), tr = class_with_type(G, {2, 1}), th = class_with_type(G, {3});
  std::uint64_t o_id = 0, o_tr = 0, o_th = 0;
  for (std::uint32_t p : primes_up_to(10000)) {
    if (p <= 3) continue;
    int n = roots_mod_p(0, 0, -2, p);
    (n == 3 ? o_id : n == 1 ? o_tr : o_th)++;
  }
  CHECK(r.classes[id].count == o_id);
  CHECK(r.classes[tr].count == o_tr);
  CHECK(r.classes[th].count == o_th);
  double pi = static_cast<double>(r.pi_x);
  CHECK(std::abs(o_id / pi - 1.0 / 6) < 0.06);
  CHECK(std::abs(o_tr / pi - 0.5) < 0.06);
  CHECK(std::abs(o_th / pi - 1.0 / 3) < 0.06);
  CHECK(*r.classes[tr].least_prime == 5);
  for (const auto& cc : r.classes) CHECK(cc.delta.has_value());
}

TEST_CASE("ambiguous classes are recorded, never apportioned") {
  // x^4 + 1 has Galois group V4, acting regularly: its three involutions
  // share the cycle type (2,2).
  NumberField F(parse_field_spec("splitting:1,0,0,0,1:perm:(1,2)(3,4);(1,3)(2,4)"));
  auto r = census(F, 2000);
  CHECK(r.ambiguous > 0);
  CHECK(r.ambiguous_sets.size() == 1);
  CHECK(r.resolved + r.ambiguous + r.ramified.size() == r.pi_x);
  CHECK(r.ramified == std::vector<std::uint64_t>{2});
  CHECK(r.ambiguous_sets.begin()->first.size() == 3);
  std::uint64_t not_one_mod_8 = 0;
  for (std::uint32_t p : primes_up_to(2000))
    if (p > 2 && p % 8 != 1) ++not_one_mod_8;
  CHECK(r.ambiguous == not_one_mod_8);
}

TEST_CASE("exceptional term in the relative error") {
  NumberField F(parse_field_spec("cyclotomic:5"));
  ExceptionalData e{0.9, -1};
  auto plain = census(F, 1e4);
  auto ex = census(F, 1e4, e);
  for (std::size_t c = 0; c < plain.classes.size(); ++c) {
    double main = plain.li_x + li(std::pow(1e4, 0.9));
    double expect = plain.classes[c].count / (plain.classes[c].density * main) - 1;
    CHECK(*ex.classes[c].delta == doctest::Approx(expect));
  }
  CHECK_THROWS(census(F, 100, ExceptionalData{1.2, 1}));
}

TEST_CASE("least primes") {
  NumberField F7(parse_field_spec("cyclotomic:7"));
  CHECK(least_prime(F7, F7.class_of_residue(4)).p == 11);
  NumberField F5(parse_field_spec("cyclotomic:5"));
  CHECK(least_prime(F5, F5.class_of_residue(1)).p == 11);
  NumberField F3(parse_field_spec("cyclotomic:3"));
  CHECK(least_prime(F3, 0).p == 7);
  auto miss = least_prime(F7, F7.class_of_residue(1), 20);
  CHECK_FALSE(miss.found);
  for (int q = 3; q <= 50; ++q) {
    NumberField F(parse_field_spec("cyclotomic:" + std::to_string(q)));
    for (std::size_t c = 0; c < F.group()->num_classes(); ++c) {
      auto lp = least_prime(F, c, 100000);
      REQUIRE(lp.found);
      int a = F.residue_of_class(c);
      std::uint64_t brute = 2;
      while (!(prime_by_trial(brute) && brute % q == static_cast<std::uint64_t>(a % q) && std::gcd<std::uint64_t, std::uint64_t>(brute, q) == 1)) ++brute;
      CHECK(lp.p == brute);
    }
  }
}

namespace {

// Dual census oracle for K = Q(zeta_d) inside L = Q(zeta_q) with q = d * m,
// gcd(d, m) = 1: a prime of K of norm N, unramified in L/K, has Frobenius the
// unit h = 1 mod d, h = N mod m.
std::uint64_t dual_count(int q, int d, int c, double x) {
  int m = q / d;
  std::uint64_t count = 0;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint64_t>(x))) {
    if (m % p == 0) continue;
    int f = 1;
    std::uint64_t N = p;
    if (d % p == 0) {
      f = 1;  // totally ramified in Q(zeta_d): one prime of norm p
    } else {
      while ((N - 1) % d) {
        N *= p;
        ++f;
      }
    }
    if (N > x) continue;
    int primes_above = d % p == 0 ? 1 : euler_phi(d) / f;
    int h = -1;
    for (int a = 0; a < q; ++a)
      if (std::gcd(a, q) == 1 && (a - 1) % d == 0 && a % m == static_cast<int>(N % m)) h = a;
    if (h == c) count += primes_above;
  }
  return count;
}

}  // namespace

TEST_CASE("base change inequality on cyclotomic towers") {
  for (int c : {1, 4, 7, 13}) {
    auto r = base_change_check(15, cyclotomic_subgroup(15, 3), c, 1e4);
    CHECK(r.holds);
    CHECK(r.slack > 0);
    CHECK(r.pi_CH == dual_count(15, 3, c, 1e4));
  }
  auto H8 = cyclotomic_subgroup(8, 4);
  CHECK(H8 == std::vector<int>{1, 5});
  for (int c : {1, 5}) {
    auto r = base_change_check(8, H8, c, 1e4);
    CHECK(r.holds);
    CHECK(r.slack > 0);
    std::uint64_t oracle = 0;
    for (std::uint32_t p : primes_up_to(10000)) {
      if (p == 2) continue;
      std::uint64_t N = p % 4 == 1 ? p : std::uint64_t(p) * p;
      if (N <= 10000 && static_cast<int>(N % 8) == c) oracle += p % 4 == 1 ? 2 : 1;
    }
    CHECK(r.pi_CH == oracle);
  }
  // Trivial tower: both sides count the same primes.
  auto whole = cyclotomic_subgroup(7, 1);
  for (int c : whole) {
    auto r = base_change_check(7, whole, c, 1e4);
    CHECK(r.lhs == doctest::Approx(0.0));
    CHECK(r.slack == doctest::Approx(r.rhs));
  }
  CHECK_THROWS(base_change_check(15, {1, 2}, 1, 100));
  CHECK_THROWS(base_change_check(15, cyclotomic_subgroup(15, 3), 2, 100));
}
