#include "cheblab/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace cheblab {

namespace {

bool is_prime_small(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int parse_int(const std::string& s, const std::string& ctx) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("bad integer '" + s + "' in group spec '" + ctx + "'");
  long long v = std::stoll(s);
  if (v > 1'000'000'000) throw std::invalid_argument("integer too large in group spec '" + ctx + "'");
  return static_cast<int>(v);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

const char* kKindPrefixes[] = {"cyclic:", "dihedral:", "symmetric:", "frobenius:", "units:",
                               "perm:", "cayley:"};

// Splits "cyclic:2xdihedral:4" on the 'x' that precede a kind keyword.
std::vector<std::string> split_product(const std::string& body) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != 'x' || i == start) continue;
    bool boundary = false;
    for (const char* k : kKindPrefixes)
      if (body.compare(i + 1, std::char_traits<char>::length(k), k) == 0) boundary = true;
    if (boundary) {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(body.substr(start));
  return parts;
}

std::vector<std::vector<int>> read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Cayley table file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed Cayley JSON '" + path + "': " + e.what());
  }
  if (!j.contains("table") || !j["table"].is_array())
    throw std::invalid_argument("Cayley JSON needs a 'table' array");
  auto table = j["table"].get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j["order"].get<std::size_t>() != table.size())
    throw std::invalid_argument("Cayley JSON 'order' disagrees with table size");
  return table;
}

using Perm = std::vector<int>;

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

struct PermSet {
  int degree = 0;
  std::vector<Perm> gens;
};

PermSet spec_to_permutations(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  PermSet out;
  switch (spec.kind) {
    case K::Cyclic: {
      int n = spec.n;
      out.degree = n;
      if (n > 1) {
        Perm r(n);
        for (int i = 0; i < n; ++i) r[i] = (i + 1) % n;
        out.gens.push_back(r);
      }
      break;
    }
    case K::Dihedral: {
      int n = spec.n;
      if (n == 1) return spec_to_permutations(GroupSpec::cyclic(2));
      if (n == 2) return spec_to_permutations(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
      out.degree = n;
      Perm r(n), s(n);
      for (int i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = (n - i) % n;
      }
      out.gens = {r, s};
      break;
    }
    case K::Symmetric: {
      int n = spec.n;
      out.degree = n;
      if (n >= 2) {
        Perm c(n), t = identity_perm(n);
        for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
        std::swap(t[0], t[1]);
        out.gens = {t};
        if (n > 2) out.gens.push_back(c);
      }
      break;
    }
    case K::Frobenius: {
      int p = spec.p, q = spec.q;
      int r = 2;
      for (; r < p; ++r) {
        long long x = 1;
        for (int i = 0; i < q; ++i) x = x * r % p;
        if (x == 1) break;
      }
      out.degree = p;
      Perm t(p), m(p);
      for (int i = 0; i < p; ++i) {
        t[i] = (i + 1) % p;
        m[i] = static_cast<int>(static_cast<long long>(i) * r % p);
      }
      out.gens = {t, m};
      break;
    }
    case K::Units: {
      int q = spec.n;
      out.degree = q;
      for (int a = 2; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        Perm m(q);
        for (int i = 0; i < q; ++i) m[i] = static_cast<int>(static_cast<long long>(i) * a % q);
        out.gens.push_back(m);
      }
      break;
    }
    case K::Product: {
      std::vector<PermSet> parts;
      for (const auto& f : spec.factors) {
        parts.push_back(spec_to_permutations(f));
        out.degree += parts.back().degree;
      }
      int offset = 0;
      for (const auto& part : parts) {
        for (const auto& g : part.gens) {
          Perm full = identity_perm(out.degree);
          for (int i = 0; i < part.degree; ++i) full[offset + i] = offset + g[i];
          out.gens.push_back(full);
        }
        offset += part.degree;
      }
      break;
    }
    case K::Permutation: {
      out.gens = spec.generators;
      out.degree = spec.generators.empty() ? 1 : static_cast<int>(spec.generators.front().size());
      break;
    }
    case K::Cayley: {
      const auto& t = spec.cayley;
      int n = static_cast<int>(t.size());
      out.degree = n;
      for (int g = 0; g < n; ++g) {
        Perm lam(n);
        for (int x = 0; x < n; ++x) lam[x] = t[g][x];
        out.gens.push_back(lam);
      }
      break;
    }
  }
  if (out.degree < 1) out.degree = 1;
  return out;
}

void check_permutation(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree) throw std::invalid_argument("generator degree mismatch");
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) throw std::invalid_argument("generator is not a permutation");
    seen[v] = 1;
  }
}

}  // namespace

GroupSpec GroupSpec::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic:n needs n >= 1");
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  s.text = "cyclic:" + std::to_string(n);
  return s;
}

GroupSpec GroupSpec::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral:n needs n >= 1");
  GroupSpec s;
  s.kind = Kind::Dihedral;
  s.n = n;
  s.text = "dihedral:" + std::to_string(n);
  return s;
}

GroupSpec GroupSpec::symmetric(int n) {
  if (n < 1) throw std::invalid_argument("symmetric:n needs n >= 1");
  GroupSpec s;
  s.kind = Kind::Symmetric;
  s.n = n;
  s.text = "symmetric:" + std::to_string(n);
  return s;
}

GroupSpec GroupSpec::frobenius(int p, int q) {
  if (!is_prime_small(p) || !is_prime_small(q)) throw std::invalid_argument("frobenius:p:q needs p, q prime");
  if (p % q != 1) throw std::invalid_argument("frobenius:p:q needs p = 1 mod q");
  GroupSpec s;
  s.kind = Kind::Frobenius;
  s.p = p;
  s.q = q;
  s.text = "frobenius:" + std::to_string(p) + ":" + std::to_string(q);
  return s;
}

GroupSpec GroupSpec::units(int q) {
  if (q < 1) throw std::invalid_argument("units:q needs q >= 1");
  GroupSpec s;
  s.kind = Kind::Units;
  s.n = q;
  s.text = "units:" + std::to_string(q);
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  GroupSpec s;
  s.kind = Kind::Product;
  s.text = "product:";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s.text += "x";
    s.text += factors[i].text;
  }
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::permutation(std::vector<std::vector<int>> generators) {
  int degree = 1;
  for (const auto& g : generators) degree = std::max(degree, static_cast<int>(g.size()));
  for (auto& g : generators) {
    for (int i = static_cast<int>(g.size()); i < degree; ++i) g.push_back(i);
    check_permutation(g, degree);
  }
  if (degree > 65535) throw std::invalid_argument("permutation degree too large");
  GroupSpec s;
  s.kind = Kind::Permutation;
  s.generators = std::move(generators);
  s.text = "perm:";
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    if (i) s.text += ";";
    std::vector<std::uint16_t> p(s.generators[i].begin(), s.generators[i].end());
    s.text += cycle_string(p);
  }
  return s;
}

GroupSpec GroupSpec::cayley_table(std::vector<std::vector<int>> table) {
  validate_cayley_table(table);
  GroupSpec s;
  s.kind = Kind::Cayley;
  s.text = "cayley:order=" + std::to_string(table.size());
  s.cayley = std::move(table);
  return s;
}

std::string GroupSpec::to_string() const { return text; }

std::vector<std::vector<int>> parse_cycle_generators(const std::string& text) {
  std::vector<std::vector<std::vector<int>>> cycles_per_gen;
  int degree = 1;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty generator in '" + text + "'");
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < item.size()) {
      if (std::isspace(static_cast<unsigned char>(item[i]))) {
        ++i;
        continue;
      }
      if (item[i] != '(') throw std::invalid_argument("expected '(' in cycle notation '" + item + "'");
      auto close = item.find(')', i);
      if (close == std::string::npos) throw std::invalid_argument("unclosed cycle in '" + item + "'");
      std::string inner = item.substr(i + 1, close - i - 1);
      std::vector<int> cyc;
      std::stringstream cs(inner);
      std::string num;
      while (std::getline(cs, num, ',')) {
        num = trim(num);
        if (num.empty()) continue;
        int v = parse_int(num, text);
        if (v < 1) throw std::invalid_argument("cycle points are 1-based");
        cyc.push_back(v - 1);
        degree = std::max(degree, v);
      }
      cycles.push_back(cyc);
      i = close + 1;
    }
    cycles_per_gen.push_back(cycles);
  }
  if (degree > 65535) throw std::invalid_argument("permutation degree too large");
  std::vector<std::vector<int>> gens;
  for (const auto& cycles : cycles_per_gen) {
    Perm p = identity_perm(degree);
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
      for (int v : c) {
        if (used[v]) throw std::invalid_argument("point repeated in cycle notation '" + text + "'");
        used[v] = 1;
      }
      for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
    }
    gens.push_back(p);
  }
  return gens;
}

std::string cycle_string(std::span<const std::uint16_t> perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupSpec parse_group_spec(const std::string& raw) {
  std::string text = trim(raw);
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("group spec needs 'kind:args': '" + raw + "'");
  std::string kind = text.substr(0, colon);
  std::string body = text.substr(colon + 1);
  GroupSpec s;
  if (kind == "cyclic") {
    s = GroupSpec::cyclic(parse_int(body, raw));
  } else if (kind == "dihedral") {
    s = GroupSpec::dihedral(parse_int(body, raw));
  } else if (kind == "symmetric") {
    s = GroupSpec::symmetric(parse_int(body, raw));
  } else if (kind == "units") {
    s = GroupSpec::units(parse_int(body, raw));
  } else if (kind == "frobenius") {
    auto c2 = body.find(':');
    if (c2 == std::string::npos) throw std::invalid_argument("frobenius spec needs p:q");
    s = GroupSpec::frobenius(parse_int(body.substr(0, c2), raw), parse_int(body.substr(c2 + 1), raw));
  } else if (kind == "product") {
    std::vector<GroupSpec> factors;
    for (const auto& part : split_product(body)) factors.push_back(parse_group_spec(part));
    s = GroupSpec::product(std::move(factors));
  } else if (kind == "perm") {
    s = GroupSpec::permutation(parse_cycle_generators(body));
  } else if (kind == "cayley") {
    if (body.empty() || body[0] != '@') throw std::invalid_argument("cayley spec must be cayley:@file.json");
    s = GroupSpec::cayley_table(read_cayley_file(body.substr(1)));
  } else {
    throw std::invalid_argument("unknown group kind '" + kind + "'");
  }
  return s;
}

void validate_cayley_table(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) throw std::invalid_argument("Cayley table is empty");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Cayley table is not square");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("Cayley table is not a Latin square");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r) {
      if (seen[t[r][c]]) throw std::invalid_argument("Cayley table is not a Latin square");
      seen[t[r][c]] = 1;
    }
  }
  int e = -1;
  for (int g = 0; g < n && e < 0; ++g) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = t[g][x] == x && t[x][g] == x;
    if (ok) e = g;
  }
  if (e < 0) throw std::invalid_argument("Cayley table has no identity");
  for (int g = 0; g < n; ++g) {
    bool has_inv = false;
    for (int h = 0; h < n && !has_inv; ++h) has_inv = t[g][h] == e && t[h][g] == e;
    if (!has_inv) throw std::invalid_argument("Cayley table lacks inverses");
  }
  auto assoc = [&](int a, int b, int c) { return t[t[a][b]][c] == t[a][t[b][c]]; };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw std::invalid_argument("Cayley table is not associative");
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 10000; ++k)
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw std::invalid_argument("Cayley table is not associative");
  }
}

ElementId Group::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  std::vector<std::uint16_t> buf(degree_);
  auto pa = permutation(a), pb = permutation(b);
  for (int x = 0; x < degree_; ++x) buf[x] = pa[pb[x]];
  return static_cast<ElementId>(find(buf));
}

ElementId Group::power(ElementId a, std::int64_t k) const {
  std::int64_t o = orders_[a];
  k %= o;
  if (k < 0) k += o;
  ElementId result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<int> Group::cycle_type(ElementId a) const {
  auto p = permutation(a);
  std::vector<char> seen(degree_, 0);
  std::vector<int> parts;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::int64_t Group::find(std::span<const std::uint16_t> images) const {
  std::size_t lo = 0, hi = order_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto pm = permutation(static_cast<ElementId>(mid));
    int cmp = 0;
    for (int i = 0; i < degree_ && cmp == 0; ++i)
      cmp = (pm[i] < images[i]) ? -1 : (pm[i] > images[i] ? 1 : 0);
    if (cmp == 0) return static_cast<std::int64_t>(mid);
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return -1;
}

std::size_t Group::power_class(std::size_t cls, std::int64_t k) const {
  return class_of_[power(classes_[cls].representative, k)];
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (multiply(generators_[i], generators_[j]) != multiply(generators_[j], generators_[i])) return false;
  return true;
}

std::shared_ptr<const Group> Group::from_permutations(const std::vector<std::vector<int>>& gens, int degree,
                                                      const std::string& name, std::size_t order_cap) {
  if (degree < 1 || degree > 65535) throw std::invalid_argument("permutation degree out of range");
  for (const auto& g : gens) check_permutation(g, degree);

  std::vector<std::u16string> gen_words;
  for (const auto& g : gens) gen_words.emplace_back(g.begin(), g.end());
  std::u16string id(degree, 0);
  for (int i = 0; i < degree; ++i) id[i] = static_cast<char16_t>(i);

  std::unordered_set<std::u16string> seen{id};
  std::vector<std::u16string> frontier{id}, all{id};
  std::u16string buf(degree, 0);
  while (!frontier.empty()) {
    std::vector<std::u16string> next;
    for (const auto& w : frontier) {
      for (const auto& g : gen_words) {
        for (int x = 0; x < degree; ++x) buf[x] = g[w[x]];
        if (seen.insert(buf).second) {
          if (seen.size() > order_cap)
            throw std::length_error("group order exceeds cap " + std::to_string(order_cap) + " for " + name);
          next.push_back(buf);
          all.push_back(buf);
        }
      }
    }
    frontier = std::move(next);
  }
  seen.clear();
  std::sort(all.begin(), all.end());

  auto G = std::shared_ptr<Group>(new Group());
  G->name_ = name;
  G->order_ = all.size();
  G->degree_ = degree;
  G->perms_.resize(G->order_ * degree);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (int x = 0; x < degree; ++x) G->perms_[i * degree + x] = static_cast<std::uint16_t>(all[i][x]);
  all.clear();
  all.shrink_to_fit();
  G->finish(gens);
  return G;
}

void Group::finish(const std::vector<std::vector<int>>& gens) {
  const std::size_t n = order_;
  std::vector<std::uint16_t> buf(degree_);

  if (n <= 2048) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      auto pa = permutation(static_cast<ElementId>(a));
      for (std::size_t b = 0; b < n; ++b) {
        auto pb = permutation(static_cast<ElementId>(b));
        for (int x = 0; x < degree_; ++x) buf[x] = pa[pb[x]];
        table_[a * n + b] = static_cast<ElementId>(find(buf));
      }
    }
  }

  orders_.resize(n);
  inverse_.resize(n);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::int64_t o = 1;
    for (int len : cycle_type(static_cast<ElementId>(a))) o = lcm64(o, len);
    orders_[a] = static_cast<int>(o);
    exponent_ = lcm64(exponent_, o);
    auto pa = permutation(static_cast<ElementId>(a));
    for (int x = 0; x < degree_; ++x) buf[pa[x]] = static_cast<std::uint16_t>(x);
    inverse_[a] = static_cast<ElementId>(find(buf));
  }

  for (const auto& g : gens) {
    std::vector<std::uint16_t> w(g.begin(), g.end());
    auto id = static_cast<ElementId>(find(w));
    if (id != 0 && std::find(generators_.begin(), generators_.end(), id) == generators_.end())
      generators_.push_back(id);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  class_of_.assign(n, kNone);
  std::vector<ConjugacyClass> raw;
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] != kNone) continue;
    ConjugacyClass c;
    std::size_t idx = raw.size();
    std::vector<ElementId> stack{static_cast<ElementId>(a)};
    class_of_[a] = idx;
    while (!stack.empty()) {
      ElementId x = stack.back();
      stack.pop_back();
      c.members.push_back(x);
      for (ElementId g : generators_) {
        ElementId y = conjugate(x, g);
        if (class_of_[y] == kNone) {
          class_of_[y] = idx;
          stack.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    c.size = c.members.size();
    c.element_order = orders_[c.representative];
    raw.push_back(std::move(c));
  }
  std::sort(raw.begin(), raw.end(), [](const ConjugacyClass& x, const ConjugacyClass& y) {
    if (x.size != y.size) return x.size < y.size;
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    return x.representative < y.representative;
  });
  classes_ = std::move(raw);
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (ElementId x : classes_[i].members) class_of_[x] = i;
}

GroupPtr build_group(const GroupSpec& spec, const BuildOptions& options) {
  PermSet ps = spec_to_permutations(spec);
  return Group::from_permutations(ps.gens, ps.degree, spec.text, options.order_cap);
}

}  // namespace cheblab
