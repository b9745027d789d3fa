#ifndef ARBORDIM_DIMENSION_HPP
#define ARBORDIM_DIMENSION_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"

#include "arbordim/logvalue.hpp"

namespace arbordim {

// A base degree d plus exact field degrees deg_0, deg_1, ... indexed by
// level; deg_n plays the role of [K_n:K].
struct DegreeSequence {
  int base_degree = 2;
  std::vector<mpz_class> degrees;

  // Throws std::invalid_argument naming the first failing index when
  // deg_0 != 1, divisibility fails, or deg_n exceeds d!^((d^n-1)/(d-1)).
  void validate() const;
  std::size_t length() const { return degrees.size(); }
};

// a_n = (d-1)/log(d!) * log(deg_n)/d^n, with suffix envelopes.
struct DimEstimate {
  int base_degree = 2;
  std::vector<LogValue> a;
  std::vector<LogValue> tail_min; // tail_min[i] = min over j >= i of a_j
  std::vector<LogValue> tail_max;
  int precision_digits = 50;

  const LogValue &last() const { return a.back(); }
  nlohmann::json to_json() const;
};

DimEstimate estimate(const DegreeSequence &seq, int precision_digits = 50);

// degrees[n] = |Aut(T_n^com)| for n <= N; the fully surjective case.
DegreeSequence full_image_sequence(int d, int N);

struct CollapseBound {
  mpz_class finite_bound; // d!^(R*(1+d+...+d^(k-1))) * |Aut(T_m)|
  mpq_class asymptotic;   // R / d^m
};
// Finite-level degree bound below a collapsed level: requires Lm < d^m.
CollapseBound collapse_bound(int d, int m, long Lm, const mpz_class &aut_tm, int k);

// 1 - d^(-m), the bound for an m-periodic (or depth-m post-critical) base point.
mpq_class periodic_bound(int d, int m);

// lhs <= product(factors)?
bool compositum_check(const mpz_class &lhs, const std::vector<mpz_class> &factors);

// Subsamples every m-th degree; base degree becomes d^m.  The estimator
// identity C_{d^m} a'_k = C_d a_{mk} holds exactly by construction.
DegreeSequence rescale_iterate(const DegreeSequence &seq, int m);

// (d-1)/log(d!) * log(M)/(d^m - 1); equals 1 exactly at M = |Aut(T_m^com)|.
LogValue specialization_tail_bound(int d, int m, const mpz_class &M, int precision_digits = 50);

// deg_{n+m}/deg_n <= M^(d^n) for every applicable n?
bool iterative_degree_check(const DegreeSequence &seq, int m, const mpz_class &M);

// d^(5n)
mpz_class genus_one_bound(int d, int n);

std::string degree_table_csv(const DegreeSequence &seq, const DimEstimate &est);
nlohmann::json degree_table_json(const DegreeSequence &seq, const DimEstimate &est);

} // namespace arbordim

#endif
