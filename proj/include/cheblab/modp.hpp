#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cheblab::modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);
/// Reduces a signed integer into [0, p).
inline u64 reduce(std::int64_t a, u64 p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);
/// Smallest prime p > lower_bound with p = 1 (mod m).
u64 prime_congruent_one(u64 m, u64 lower_bound);
u64 primitive_root(u64 p);
/// Square root in F_p (Tonelli-Shanks); throws if a is a non-residue.
u64 sqrt(u64 a, u64 p);

/// Dense polynomial over F_p, constant term first, no trailing zeros.
using Poly = std::vector<u64>;

void trim(Poly& f);
int degree(const Poly& f);
Poly poly_mul(const Poly& a, const Poly& b, u64 p);
Poly poly_sub(const Poly& a, const Poly& b, u64 p);
/// Remainder of a by b.
Poly poly_mod(const Poly& a, const Poly& b, u64 p);
/// Quotient of a by b (exact division not required).
Poly poly_div(const Poly& a, const Poly& b, u64 p);
Poly poly_gcd(Poly a, Poly b, u64 p);
Poly poly_monic(const Poly& f, u64 p);
/// base^e mod f.
Poly poly_powmod(const Poly& base, u64 e, const Poly& f, u64 p);
u64 poly_eval(const Poly& f, u64 x, u64 p);

/// Distinct roots of f in F_p (gcd with x^p - x, then equal-degree splitting).
std::vector<u64> roots(const Poly& f, u64 p, std::mt19937_64& rng);
/// Degrees of the irreducible factors of a squarefree f, sorted descending.
std::vector<int> distinct_degree_pattern(const Poly& f, u64 p);

using Matrix = std::vector<std::vector<u64>>;

/// Characteristic polynomial det(xI - A), monic, via Hessenberg reduction.
Poly charpoly(Matrix A, u64 p);
/// Basis of the right null space of A (vectors as columns, returned as rows).
std::vector<std::vector<u64>> nullspace(Matrix A, u64 p);

}  // namespace cheblab::modp
