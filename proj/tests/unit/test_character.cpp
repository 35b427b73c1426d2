#include <algorithm>
#include <chrono>
#include <complex>
#include <functional>
#include <random>

#include "cheblab/character.hpp"
#include "doctest.h"

using namespace cheblab;

namespace {

// Hook-length oracle written independently: count standard Young tableaux
// by recursive removal of corners.
long long count_syt(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    bool corner = (i + 1 == shape.size()) || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto s = shape;
    --s[i];
    total += count_syt(s);
  }
  return total;
}

std::vector<long long> syt_degrees(int n) {
  std::vector<long long> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(count_syt(parts));
      return;
    }
    for (int k = std::min(rem, maxp); k >= 1; --k) {
      parts.push_back(k);
      rec(rem - k, k);
      parts.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> sorted_degrees(const CharacterTable& T) {
  auto d = T.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

void check_orthogonality(const CharacterTable& T) {
  const Group& G = T.group();
  std::int64_t sum_sq = 0;
  for (std::size_t i = 0; i < T.size(); ++i) {
    sum_sq += T[i].degree() * T[i].degree();
    CHECK(static_cast<std::int64_t>(G.order()) % T[i].degree() == 0);
    for (std::size_t j = 0; j < T.size(); ++j) CHECK(inner_product(G, T[i], T[j]) == Rational(i == j ? 1 : 0));
  }
  CHECK(sum_sq == static_cast<std::int64_t>(G.order()));
  for (std::size_t a = 0; a < G.num_classes(); ++a)
    for (std::size_t b = 0; b < G.num_classes(); ++b) {
      Cyclotomic s(0);
      for (const auto& row : T.rows()) s += row[a] * row[b].conj();
      std::int64_t expect = a == b ? static_cast<std::int64_t>(G.centralizer_order(a)) : 0;
      CHECK(s == Cyclotomic(expect));
    }
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  auto z5 = Cyclotomic::root_of_unity(5);
  Cyclotomic s(0);
  for (int k = 0; k < 5; ++k) s += Cyclotomic::root_of_unity(5, k);
  CHECK(s.is_zero());
  auto z3 = Cyclotomic::root_of_unity(3);
  CHECK(z3 * z3 * z3 == Cyclotomic(1));
  CHECK((z3 + z3.conj()) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(12, 4) == z3);
  CHECK(Cyclotomic::root_of_unity(12, 4).minimized().field() == 3);
  CHECK(Cyclotomic::root_of_unity(6, 1).conductor() == 3);  // zeta_6 = -zeta_3^2
  CHECK(Cyclotomic::root_of_unity(4, 1).conductor() == 4);
  // sqrt(5) = 1 + 2(zeta_5 + zeta_5^4)
  auto r5 = Cyclotomic(1) + (z5 + z5.conj()) * Rational(2);
  CHECK(r5 * r5 == Cyclotomic(5));
  CHECK(r5.conductor() == 5);
  CHECK(real_sign(r5) == 1);
  CHECK(real_sign(-r5) == -1);
  CHECK(real_sign(r5 * r5 - Cyclotomic(5)) == 0);
  CHECK(std::abs(r5.to_complex() - std::complex<double>(std::sqrt(5.0), 0)) < 1e-12);
  CHECK_THROWS(real_sign(z5));
  CHECK_THROWS_AS(z5.to_rational(), std::domain_error);
  // Mixed fields: zeta_3 * zeta_4 = zeta_12^7.
  CHECK(z3 * Cyclotomic::root_of_unity(4) == Cyclotomic::root_of_unity(12, 7));
  // Galois action and norm.
  Cyclotomic norm(1);
  for (int a : {1, 2, 3, 4}) norm *= (Cyclotomic(1) - z5).galois(a);
  CHECK(norm == Cyclotomic(5));
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(euler_phi(36) == 12);
}

TEST_CASE("cyclotomic field axioms on random elements") {
  std::mt19937 rng(0);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int m : {3, 4, 7, 8, 9, 12, 15}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto rnd = [&] {
        std::vector<Rational> c(euler_phi(m));
        for (auto& x : c) x = Rational(coef(rng), 1 + (coef(rng) + 3) % 3);
        return Cyclotomic(m, c);
      };
      auto a = rnd(), b = rnd(), c = rnd();
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * b).conj() == a.conj() * b.conj());
      auto za = a.to_complex() * b.to_complex();
      CHECK(std::abs((a * b).to_complex() - za) < 1e-9);
      CHECK(a.minimized() == a);
    }
  }
}

TEST_CASE("small character tables") {
  auto C4 = build_group("cyclic:4");
  auto T4 = character_table(C4);
  CHECK(T4.size() == 4);
  for (const auto& row : T4.rows()) {
    CHECK(row.degree() == 1);
    for (const auto& v : row.values) CHECK(v * v * v * v == Cyclotomic(1));
  }
  CHECK(T4[0].is_trivial());

  auto S5 = build_group("symmetric:5");
  auto T5 = character_table(S5);
  CHECK(sorted_degrees(T5) == std::vector<std::int64_t>{1, 1, 4, 4, 5, 5, 6});
  auto oracle = syt_degrees(5);
  CHECK(std::vector<std::int64_t>(oracle.begin(), oracle.end()) == sorted_degrees(T5));
  CHECK(T5.max_degree() == 6);

  auto F = build_group("frobenius:7:3");
  auto TF = character_table(F);
  CHECK(sorted_degrees(TF) == std::vector<std::int64_t>{1, 1, 1, 3, 3});
  CHECK(TF.max_degree() == 3);
  check_orthogonality(TF);
}

TEST_CASE("orthogonality over a spread of groups") {
  for (const char* spec : {"cyclic:1", "cyclic:12", "dihedral:7", "dihedral:8", "symmetric:4", "symmetric:6",
                           "frobenius:11:5", "frobenius:19:3", "units:24", "product:cyclic:3xsymmetric:3",
                           "perm:(1,2,3);(4,5,6);(7,8,9);(1,4,7)(2,5,8)(3,6,9)"}) {
    CAPTURE(spec);
    auto G = build_group(spec);
    auto T = character_table(G);
    CHECK(T.size() == G->num_classes());
    check_orthogonality(T);
    for (int n = 3; n <= 6; ++n)
      if (std::string(spec) == "symmetric:" + std::to_string(n)) {
        auto oracle = syt_degrees(n);
        CHECK(std::vector<std::int64_t>(oracle.begin(), oracle.end()) == sorted_degrees(T));
      }
  }
}

TEST_CASE("quaternion group from a Cayley table") {
  // Q8 elements 1,-1,i,-i,j,-j,k,-k encoded as 0..7.
  auto idx = [](int s, int u) { return 2 * u + (s < 0 ? 1 : 0); };
  int mul_unit[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                           {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                           {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                           {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
      auto [s, u] = std::pair{mul_unit[a / 2][b / 2][0], mul_unit[a / 2][b / 2][1]};
      t[a][b] = idx(s * sa * sb, u);
    }
  auto Q = build_group(GroupSpec::cayley_table(t));
  auto T = character_table(Q);
  CHECK(sorted_degrees(T) == std::vector<std::int64_t>{1, 1, 1, 1, 2});
  check_orthogonality(T);
  // Q8 and D4 share a character table but differ in element orders.
  int order4 = 0;
  for (ElementId g = 0; g < 8; ++g) order4 += Q->element_order(g) == 4;
  CHECK(order4 == 6);
}

TEST_CASE("inner products, tensors and induction on S3") {
  auto S3 = build_group("symmetric:3");
  auto T = character_table(S3);
  CHECK(T[0].is_trivial());
  CHECK(inner_product(*S3, T[0], T[0]) == Rational(1));
  const Character& sgn = T[1];
  const Character& std2 = T[2];
  CHECK(std2.degree() == 2);
  CHECK(inner_product(*S3, sgn, std2) == Rational(0));
  // Direct 6-term evaluation of <std (x) std, std>.
  Rational direct(0);
  for (ElementId g = 0; g < 6; ++g) {
    auto v = value_at(*S3, std2, g);
    direct += (v * v * v.conj()).to_rational();
  }
  direct /= Rational(6);
  CHECK(direct == Rational(1));
  CHECK(inner_product(*S3, tensor(std2, std2), std2) == direct);
  auto dec = tensor_decompose(T, std2, std2);
  CHECK(dec == std::vector<std::pair<std::size_t, std::int64_t>>{{0, 1}, {1, 1}, {2, 1}});
  CHECK(tensor_decompose(T, std2, T[0]) == std::vector<std::pair<std::size_t, std::int64_t>>{{2, 1}});

  // Induction from A_3 of a nontrivial linear character gives std.
  Subgroup A3 = derived_subgroup(*S3, whole_group(*S3));
  auto E = embed_subgroup(*S3, A3);
  auto TA = character_table(E.sub);
  auto ind = induce(*S3, E, TA[1]);
  CHECK(T.find(ind) == 2);
  // Two-term formula for the induced value at a 3-cycle: lambda(c) + lambda(c^2) = -1.
  for (std::size_t c = 0; c < S3->num_classes(); ++c)
    if (S3->classes()[c].element_order == 3) CHECK(ind[c] == Cyclotomic(-1));
  // Regular character.
  auto triv = trivial_subgroup(*S3);
  auto Et = embed_subgroup(*S3, triv);
  auto Tt = character_table(Et.sub);
  auto reg = induce(*S3, Et, Tt[0]);
  CHECK(decompose(T, reg) == std::vector<std::int64_t>{1, 1, 2});
  CHECK(restrict(E, T[0]).is_trivial());
}

TEST_CASE("Frobenius reciprocity on random subgroup pairs") {
  auto S4 = build_group("symmetric:4");
  auto T = character_table(S4);
  for (const auto& H : subgroups(*S4).subgroups) {
    auto E = embed_subgroup(*S4, H);
    auto TH = character_table(E.sub);
    for (const auto& phi : TH.rows()) {
      auto ind = induce(*S4, E, phi);
      CHECK(ind.degree() == static_cast<std::int64_t>(S4->order() / H.order()) * phi.degree());
      for (const auto& psi : T.rows())
        CHECK(inner_product(*S4, ind, psi) == inner_product(*E.sub, phi, restrict(E, psi)));
    }
  }
}

TEST_CASE("S_n degree statistics") {
  auto s4 = sn_degree_stats(4);
  CHECK(s4.d == "3");
  CHECK(sn_w({5}) == "5");
  CHECK(sn_class_size({5}) == "24");
  CHECK(sn_w({4, 3}) == "12");
  CHECK(sn_w({2, 2, 1}) == "8");
  CHECK(hook_length_degree({3, 2}) == "5");
  for (int n = 1; n <= 9; ++n) {
    auto st = sn_degree_stats(n);
    auto oracle = syt_degrees(n);
    CHECK(std::to_string(oracle.back()) == st.d);
  }
  auto s40 = sn_degree_stats(40);
  CHECK(s40.degrees.size() == 37338);
  CHECK_THROWS_AS(sn_degree_stats(41), std::invalid_argument);
  CHECK(Log(2.0) == 1.0);
  CHECK(Log(std::exp(2.0)) == doctest::Approx(2.0));
}

TEST_CASE("tensor constituent facts on corpus groups") {
  for (const char* spec : {"symmetric:4", "dihedral:5", "frobenius:7:3"}) {
    auto G = build_group(spec);
    auto T = character_table(G);
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = 0; j < T.size(); ++j) {
        auto m1 = inner_product(*G, tensor(T[i], T[j]), T[0]);
        CHECK(m1 == Rational(T.conjugate_index(i) == j ? 1 : 0));
      }
  }
}
