#include "cheblab/census.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cheblab/cyclofield.hpp"
#include "cheblab/modp.hpp"
#include "cheblab/parallel.hpp"
#include "cheblab/subgroup.hpp"

namespace cheblab {

IntPoly parse_int_poly(const std::string& text) {
  IntPoly lead_first;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      lead_first.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad polynomial coefficient '" + tok + "'");
    }
  }
  if (lead_first.size() < 2) throw std::invalid_argument("polynomial must have degree >= 1");
  return {lead_first.rbegin(), lead_first.rend()};
}

namespace {

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> M) {
  std::size_t n = M.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && M[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        M[i][j] = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

}  // namespace

mpz_class discriminant(const IntPoly& f) {
  int n = static_cast<int>(f.size()) - 1;
  if (n < 1 || f.back() != 1) throw std::invalid_argument("discriminant: polynomial must be monic of degree >= 1");
  if (n == 1) return 1;
  IntPoly df(n);
  for (int i = 1; i <= n; ++i) df[i - 1] = f[i] * i;
  int N = 2 * n - 1;
  std::vector<std::vector<mpz_class>> S(N, std::vector<mpz_class>(N, 0));
  for (int r = 0; r < n - 1; ++r)
    for (int i = 0; i <= n; ++i) S[r][r + i] = static_cast<long>(f[n - i]);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= n - 1; ++i) S[n - 1 + r][r + i] = static_cast<long>(df[n - 1 - i]);
  mpz_class res = bareiss_det(std::move(S));
  return (n * (n - 1) / 2) % 2 ? mpz_class(-res) : res;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

double li(double x) {
  if (!(x >= 2)) throw std::domain_error("li: x must be >= 2");
  if (x == 2) return 0;
  using boost::math::quadrature::gauss_kronrod;
  // Substituting t = e^u keeps the integrand smooth on a short interval.
  auto g = [](double u) { return std::exp(u) / u; };
  return gauss_kronrod<double, 61>::integrate(g, std::log(2.0), std::log(x), 20, 1e-13);
}

namespace {

// Li on (1, 2) continued as -integral from y to 2, for the x^{beta1} term.
double li_extended(double y) {
  if (y >= 2) return li(y);
  if (!(y > 1)) throw std::domain_error("li: argument must exceed 1");
  using boost::math::quadrature::gauss_kronrod;
  auto g = [](double u) { return std::exp(u) / u; };
  return -gauss_kronrod<double, 61>::integrate(g, std::log(y), std::log(2.0), 20, 1e-13);
}

}  // namespace

std::optional<std::vector<int>> frobenius_cycle_type(const IntPoly& f, std::uint64_t p) {
  auto D = discriminant(f);
  if (D == 0) throw std::invalid_argument("frobenius_cycle_type: polynomial is not squarefree");
  if (mpz_divisible_ui_p(D.get_mpz_t(), p)) return std::nullopt;
  modp::Poly fp;
  for (auto c : f) fp.push_back(modp::reduce(c, p));
  modp::trim(fp);
  return modp::distinct_degree_pattern(fp, p);
}

std::optional<int> cyclotomic_frobenius(int q, std::uint64_t p) {
  if (q < 1) throw std::invalid_argument("cyclotomic_frobenius: q must be positive");
  if (p % q == 0 || std::gcd<std::uint64_t, std::uint64_t>(p, q) != 1) return std::nullopt;
  return static_cast<int>(p % q);
}

NumberFieldSpec parse_field_spec(const std::string& text) {
  NumberFieldSpec s;
  s.text = text;
  if (text.rfind("cyclotomic:", 0) == 0) {
    s.kind = NumberFieldSpec::Kind::Cyclotomic;
    try {
      std::size_t pos = 0;
      s.q = std::stoi(text.substr(11), &pos);
      if (pos != text.size() - 11) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad cyclotomic field spec '" + text + "'");
    }
    if (s.q < 1) throw std::invalid_argument("cyclotomic field needs q >= 1");
    s.group = GroupSpec::units(s.q);
    return s;
  }
  if (text.rfind("splitting:", 0) == 0) {
    s.kind = NumberFieldSpec::Kind::SplittingField;
    auto rest = text.substr(10);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("splitting field spec needs a group");
    s.f = parse_int_poly(rest.substr(0, colon));
    s.group = parse_group_spec(rest.substr(colon + 1));
    return s;
  }
  throw std::invalid_argument("unknown field spec '" + text + "'");
}

NumberField::NumberField(NumberFieldSpec spec) : spec_(std::move(spec)) {
  group_ = build_group(spec_.group);
  const Group& G = *group_;
  if (spec_.kind == NumberFieldSpec::Kind::Cyclotomic) {
    int q = spec_.q;
    disc_ = cyclotomic_discriminant(q);
    residue_.resize(G.order());
    class_of_residue_.assign(q + 1, 0);
    for (ElementId g = 0; g < G.order(); ++g) {
      residue_[g] = q <= 2 ? 1 : G.permutation(g)[1];
      class_of_residue_[residue_[g]] = G.class_of(g);
    }
    return;
  }
  const auto& f = spec_.f;
  if (f.back() != 1) throw std::invalid_argument("splitting field polynomial must be monic");
  disc_ = cheblab::discriminant(f);
  if (disc_ == 0) throw std::invalid_argument("splitting field polynomial must be squarefree");
  disc_ = abs(disc_);
  if (G.degree() != static_cast<int>(f.size()) - 1)
    throw std::invalid_argument("declared group must act on deg f points");
  for (std::size_t c = 0; c < G.num_classes(); ++c) classes_by_type_[G.cycle_type(G.classes()[c].representative)].push_back(c);
}

FrobeniusRecord NumberField::frobenius(std::uint64_t p) const {
  FrobeniusRecord r;
  r.p = p;
  if (spec_.kind == NumberFieldSpec::Kind::Cyclotomic) {
    auto a = cyclotomic_frobenius(spec_.q, p);
    if (!a) return r;
    r.status = FrobeniusStatus::Resolved;
    r.cls = class_of_residue_[*a];
    r.candidates = {r.cls};
    return r;
  }
  if (mpz_divisible_ui_p(disc_.get_mpz_t(), p)) return r;
  modp::Poly fp;
  for (auto c : spec_.f) fp.push_back(modp::reduce(c, p));
  auto ct = modp::distinct_degree_pattern(fp, p);
  r.cycle_type = ct;
  auto it = classes_by_type_.find(ct);
  if (it == classes_by_type_.end())
    throw std::runtime_error("cycle type at p = " + std::to_string(p) + " does not occur in the declared group");
  r.candidates = it->second;
  if (r.candidates.size() == 1) {
    r.status = FrobeniusStatus::Resolved;
    r.cls = r.candidates[0];
  } else {
    r.status = FrobeniusStatus::Ambiguous;
  }
  return r;
}

std::size_t NumberField::class_of_residue(int a) const {
  if (spec_.kind != NumberFieldSpec::Kind::Cyclotomic) throw std::logic_error("class_of_residue: not cyclotomic");
  int q = spec_.q;
  int r = ((a % q) + q) % q;
  if (q <= 2) r = 1;
  if (std::gcd(r, q) != 1) throw std::invalid_argument("residue is not a unit mod q");
  return class_of_residue_[r];
}

int NumberField::residue_of_class(std::size_t cls) const {
  if (spec_.kind != NumberFieldSpec::Kind::Cyclotomic) throw std::logic_error("residue_of_class: not cyclotomic");
  return residue_[group_->classes().at(cls).representative];
}

std::string NumberField::class_label(std::size_t cls) const {
  if (spec_.kind == NumberFieldSpec::Kind::Cyclotomic) return std::to_string(residue_of_class(cls));
  return cycle_string(group_->permutation(group_->classes().at(cls).representative));
}

CensusReport census(const NumberField& field, double x, std::optional<ExceptionalData> exceptional,
                    std::size_t threads) {
  if (!(x >= 2)) throw std::invalid_argument("census: x must be >= 2");
  if (exceptional && !(exceptional->beta1 > 0 && exceptional->beta1 < 1))
    throw std::invalid_argument("census: beta1 must lie in (0,1)");
  const Group& G = *field.group();
  auto primes = primes_up_to(static_cast<std::uint64_t>(std::floor(x)));

  struct Partial {
    std::vector<std::uint64_t> counts, least;
    std::map<std::vector<std::size_t>, std::uint64_t> amb;
    std::vector<std::uint64_t> ramified;
  };
  const std::size_t chunk = 4096;
  std::size_t nchunks = (primes.size() + chunk - 1) / chunk;
  std::vector<Partial> parts(nchunks);
  parallel_for(
      nchunks,
      [&](std::size_t k) {
        Partial& P = parts[k];
        P.counts.assign(G.num_classes(), 0);
        P.least.assign(G.num_classes(), 0);
        std::size_t hi = std::min(primes.size(), (k + 1) * chunk);
        for (std::size_t i = k * chunk; i < hi; ++i) {
          auto rec = field.frobenius(primes[i]);
          switch (rec.status) {
            case FrobeniusStatus::Ramified: P.ramified.push_back(rec.p); break;
            case FrobeniusStatus::Ambiguous: ++P.amb[rec.candidates]; break;
            case FrobeniusStatus::Resolved:
              if (P.counts[rec.cls]++ == 0) P.least[rec.cls] = rec.p;
              break;
          }
        }
      },
      threads ? threads : pool_size());

  CensusReport rep;
  rep.field = field.spec().text;
  rep.x = x;
  rep.pi_x = primes.size();
  rep.li_x = li(x);
  rep.exceptional = exceptional;
  rep.classes.resize(G.num_classes());
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    auto& cc = rep.classes[c];
    cc.cls = c;
    cc.label = field.class_label(c);
    cc.size = G.classes()[c].size;
    cc.density = static_cast<double>(cc.size) / static_cast<double>(G.order());
  }
  for (const auto& P : parts) {  // chunks are in increasing prime order
    for (std::size_t c = 0; c < G.num_classes(); ++c) {
      rep.classes[c].count += P.counts[c];
      if (P.counts[c] && !rep.classes[c].least_prime) rep.classes[c].least_prime = P.least[c];
    }
    for (const auto& [k, v] : P.amb) {
      rep.ambiguous_sets[k] += v;
      rep.ambiguous += v;
    }
    rep.ramified.insert(rep.ramified.end(), P.ramified.begin(), P.ramified.end());
  }
  for (auto& cc : rep.classes) {
    rep.resolved += cc.count;
    double main = rep.li_x;
    if (exceptional) {
      // chi_1(C) is supplied per run; the same sign applies to every class.
      main -= exceptional->chi1_C * li_extended(std::pow(x, exceptional->beta1));
    }
    if (main > 0) {
      cc.delta = static_cast<double>(cc.count) / (cc.density * main) - 1.0;
      rep.reconstructed += cc.density * main * (1.0 + *cc.delta);
    }
  }
  return rep;
}

LeastPrimeResult least_prime(const NumberField& field, std::size_t cls, std::uint64_t cap) {
  if (cls >= field.group()->num_classes()) throw std::invalid_argument("least_prime: class out of range");
  LeastPrimeResult r;
  r.cap = cap;
  for (std::uint64_t p = 2; p <= cap; ++p) {
    if (!modp::is_prime(p)) continue;
    auto rec = field.frobenius(p);
    if (rec.status == FrobeniusStatus::Resolved && rec.cls == cls) {
      r.found = true;
      r.p = p;
      return r;
    }
  }
  return r;
}

std::vector<int> cyclotomic_subgroup(int q, int d) {
  if (d < 1 || q % d) throw std::invalid_argument("cyclotomic_subgroup: d must divide q");
  std::vector<int> H;
  for (int a = 1; a <= q; ++a)
    if (std::gcd(a, q) == 1 && (a - 1) % d == 0) H.push_back(a % q);
  std::sort(H.begin(), H.end());
  return H;
}

BaseChangeReport base_change_check(int q, const std::vector<int>& Hin, int c, double x) {
  if (q < 3) throw std::invalid_argument("base_change_check: q must be >= 3");
  if (!(x >= 2)) throw std::invalid_argument("base_change_check: x must be >= 2");
  std::vector<char> inH(q, 0);
  for (int h : Hin) {
    int r = ((h % q) + q) % q;
    if (std::gcd(r, q) != 1) throw std::invalid_argument("base_change_check: H must consist of units");
    inH[r] = 1;
  }
  std::vector<int> H;
  for (int a = 0; a < q; ++a)
    if (inH[a]) H.push_back(a);
  // Closed under multiplication?
  for (int a : H)
    for (int b : H)
      if (!inH[static_cast<std::int64_t>(a) * b % q]) throw std::invalid_argument("base_change_check: H is not a subgroup");
  c = ((c % q) + q) % q;
  if (!inH[c]) throw std::invalid_argument("base_change_check: class must lie in H");
  int phi = euler_phi(q);
  int index = phi / static_cast<int>(H.size());
  auto mulq = [q](std::int64_t a, std::int64_t b) { return static_cast<int>(a * b % q); };

  BaseChangeReport r;
  r.q = q;
  r.H = H;
  r.c = c;
  r.x = x;
  auto X = static_cast<std::uint64_t>(std::floor(x));
  for (std::uint32_t p : primes_up_to(X)) {
    if (q % p) {
      int g = static_cast<int>(p % q);
      if (g == c) ++r.pi_C;
      int f = 1;
      int gf = g;
      while (!inH[gf]) {
        gf = mulq(gf, g);
        ++f;
      }
      double norm = std::pow(static_cast<double>(p), f);
      if (norm <= x && gf == c) r.pi_CH += index / f;
      continue;
    }
    int m = q;
    while (m % static_cast<int>(p) == 0) m /= p;
    // Inertia: units = 1 mod m. Unramified in L/K iff it meets H trivially.
    bool meets = false;
    std::size_t inertia = 0;
    for (int a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1 || (a - 1) % m) continue;
      ++inertia;
      if (a != 1 % q && inH[a]) meets = true;
    }
    if (meets) continue;
    // <p mod m> in (Z/m)^x, and D_p cap H.
    std::vector<char> inPow(m, 0);
    int F = 0;
    for (int t = 1 % m;; t = static_cast<int>(static_cast<std::int64_t>(t) * p % m)) {
      if (inPow[t]) break;
      inPow[t] = 1;
      ++F;
    }
    int DH = 0;
    for (int h : H)
      if (inPow[h % m]) ++DH;
    int fK = F / DH;
    std::size_t gK = static_cast<std::size_t>(index) / (inertia * fK);
    int target = 1 % m;
    for (int i = 0; i < fK; ++i) target = static_cast<int>(static_cast<std::int64_t>(target) * p % m);
    int frob = -1;
    for (int h : H)
      if (h % m == target) frob = h;
    double norm = std::pow(static_cast<double>(p), fK);
    if (frob == c && norm <= x) r.pi_CH += gK;
  }
  double dens = 1.0 / phi;
  r.lhs = std::abs(static_cast<double>(r.pi_C) - dens * static_cast<double>(H.size()) * static_cast<double>(r.pi_CH));
  r.rhs = dens * (phi * std::sqrt(x) + 2.0 / std::log(2.0) * log_big(cyclotomic_discriminant(q)));
  r.slack = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace cheblab
