#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cheblab/ahc.hpp"
#include "cheblab/character.hpp"

namespace cheblab {

/// Base-field discriminant, degree and one conductor norm per irreducible
/// (in table row order).
struct ConductorData {
  mpz_class D_F = 1;
  int n_F = 1;
  std::vector<mpz_class> conductor_norms;
};

struct ExceptionalData {
  double beta1 = 0;   // in (0, 1)
  int chi1_C = 1;     // +1 or -1
};

/// Natural log of a positive big integer.
double log_big(const mpz_class& x);

struct QReport {
  std::int64_t d = 1;
  double log_q = 0;
  double log_Q = 0;
  std::size_t irr_count = 1;
};

/// log q = d^2 log D_F + 2 d log max Nf;
/// log Q = d^2 n_F LogLog(d) log(d^2 n_F) + log |Irr| + log q.
QReport q_and_Q(const ConductorData& cond, const CharacterTable& table);

struct LinnikCandidate {
  AhcCertificate certificate;
  ConductorData conductors;  // for L / L^H
  const CharacterTable* table_H = nullptr;
};

struct BoundReport {
  std::int64_t d_G = 1;
  double log_q = 0;                  // of the argmin candidate
  double log_Q = 0;
  double linnik_log_bound = 0;       // c * Log d_H * log(2 Q_{L/L^H})
  std::size_t argmin = 0;
  std::vector<double> per_candidate;
  double constant = 1;
  std::optional<ExceptionalData> exceptional;
  std::string banner;
};

/// Minimum over certified candidates meeting class `cls`; throws on an empty
/// list or on an uncertified candidate or one that misses the class.
BoundReport linnik_exponent(const GroupPtr& G, std::size_t cls, const std::vector<LinnikCandidate>& candidates,
                            double constant = 1.0, std::optional<ExceptionalData> exceptional = std::nullopt);

struct DlEstimate {
  double log_variable_part = 0;  // (4 d_H^2/|H|) log D_L + log |Irr(H)|
  std::string implied_constant = "unspecified (depends on d_H and n_{L^H})";
};
DlEstimate dl_estimate(const mpz_class& D_L, std::size_t H_order, const CharacterTable& table_H);

/// min{1, (1 - beta1) log U}; 1 without an exceptional zero. Throws for U <= 1.
double nu(double U, std::optional<double> beta1 = std::nullopt);

struct Section2Row {
  std::string family;
  std::string quantity;
  std::string value;
  std::string provenance;  // "character table", "hook lengths", "closed form", ...
};

/// Families: dihedral:n, pq:p:q, sn:n:mu (mu as 4-3), sylow_s_p2:p,
/// product:<family>x<family>...
std::vector<Section2Row> section2_table(const std::string& family);
std::string section2_csv(const std::vector<Section2Row>& rows);

extern const char* const kStructuralBanner;

}  // namespace cheblab
