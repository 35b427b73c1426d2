#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cheblab/bounds.hpp"
#include "cheblab/group.hpp"

namespace cheblab {

/// Integer polynomial, constant term first.
using IntPoly = std::vector<std::int64_t>;

/// Parses "1,0,0,-2" (leading coefficient first) into an IntPoly.
IntPoly parse_int_poly(const std::string& text);
mpz_class discriminant(const IntPoly& f);

/// Sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

/// Li(x) = integral from 2 to x of dt / log t (adaptive Gauss-Kronrod).
double li(double x);

/// Degrees of the irreducible factors of f mod p, sorted descending, or
/// nullopt when p divides disc(f). Throws if f is not monic and squarefree.
std::optional<std::vector<int>> frobenius_cycle_type(const IntPoly& f, std::uint64_t p);

/// p mod q, or nullopt when p | q.
std::optional<int> cyclotomic_frobenius(int q, std::uint64_t p);

struct NumberFieldSpec {
  enum class Kind { Cyclotomic, SplittingField };
  Kind kind = Kind::Cyclotomic;
  int q = 1;
  IntPoly f;
  GroupSpec group;
  std::string text;
};

/// `cyclotomic:q` or `splitting:<coeffs>:<group spec>`, e.g.
/// `splitting:1,0,0,-2:symmetric:3`.
NumberFieldSpec parse_field_spec(const std::string& text);

enum class FrobeniusStatus { Resolved, Ambiguous, Ramified };

struct FrobeniusRecord {
  std::uint64_t p = 0;
  FrobeniusStatus status = FrobeniusStatus::Ramified;
  std::size_t cls = 0;                 // when resolved
  std::vector<std::size_t> candidates;  // when ambiguous (or the single resolved class)
  std::vector<int> cycle_type;          // splitting-field kind
};

/// A field spec together with its Galois group and the lookup data used to
/// read off Frobenius classes.
class NumberField {
 public:
  explicit NumberField(NumberFieldSpec spec);
  const NumberFieldSpec& spec() const { return spec_; }
  const GroupPtr& group() const { return group_; }
  /// |disc f| for the splitting kind, the cyclotomic discriminant otherwise.
  const mpz_class& discriminant() const { return disc_; }
  FrobeniusRecord frobenius(std::uint64_t p) const;
  /// Cyclotomic kind: class of the residue a mod q.
  std::size_t class_of_residue(int a) const;
  int residue_of_class(std::size_t cls) const;
  /// Human-readable class label (residue or cycle notation of the representative).
  std::string class_label(std::size_t cls) const;

 private:
  NumberFieldSpec spec_;
  GroupPtr group_;
  mpz_class disc_;
  std::vector<int> residue_;           // element -> residue (cyclotomic)
  std::vector<std::size_t> class_of_residue_;
  std::map<std::vector<int>, std::vector<std::size_t>> classes_by_type_;
};

struct ClassCount {
  std::size_t cls = 0;
  std::string label;
  std::size_t size = 0;
  std::uint64_t count = 0;
  double density = 0;                  // |C|/|G|
  std::optional<double> delta;         // relative error, when the main term is positive
  std::optional<std::uint64_t> least_prime;
};

struct CensusReport {
  std::string field;
  double x = 0;
  std::uint64_t pi_x = 0;
  double li_x = 0;
  std::vector<ClassCount> classes;
  std::uint64_t resolved = 0;
  std::uint64_t ambiguous = 0;
  std::map<std::vector<std::size_t>, std::uint64_t> ambiguous_sets;
  std::vector<std::uint64_t> ramified;
  std::optional<ExceptionalData> exceptional;
  /// Sum over classes of density * main term * (1 + delta); equals `resolved`.
  double reconstructed = 0;
};

CensusReport census(const NumberField& field, double x, std::optional<ExceptionalData> exceptional = std::nullopt,
                    std::size_t threads = 0);

struct LeastPrimeResult {
  bool found = false;
  std::uint64_t p = 0;
  std::uint64_t cap = 0;
};
LeastPrimeResult least_prime(const NumberField& field, std::size_t cls, std::uint64_t cap = 10000000);

/// Base change check for L = Q(zeta_q) over K = L^H, H given by
/// residues mod q, and the class of residue c in H.
struct BaseChangeReport {
  int q = 1;
  std::vector<int> H;
  int c = 1;
  double x = 0;
  std::uint64_t pi_C = 0;          // primes p <= x, p = c mod q
  std::uint64_t pi_CH = 0;         // prime ideals of K, norm <= x, unramified in L/K, Frobenius c
  double lhs = 0;
  double rhs = 0;
  double slack = 0;                // rhs - lhs
  bool holds = false;
};
BaseChangeReport base_change_check(int q, const std::vector<int>& H, int c, double x);
/// H = units congruent to 1 mod d, i.e. K = Q(zeta_d).
std::vector<int> cyclotomic_subgroup(int q, int d);

}  // namespace cheblab
