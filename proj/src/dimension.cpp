#include "arbordim/dimension.hpp"

#include "arbordim/errors.hpp"
#include "arbordim/group.hpp"
#include "arbordim/rational_io.hpp"

#include <sstream>
#include <stdexcept>

namespace arbordim {

void DegreeSequence::validate() const {
  if (base_degree < 2)
    throw std::invalid_argument("DegreeSequence: base degree must be >= 2");
  if (degrees.empty())
    throw std::invalid_argument("DegreeSequence: empty");
  if (degrees[0] != 1)
    throw std::invalid_argument("DegreeSequence: deg_0 != 1 at index 0");
  mpz_class fact = factorial(static_cast<unsigned>(base_degree));
  for (std::size_t n = 0; n < degrees.size(); ++n) {
    if (degrees[n] < 1)
      throw std::invalid_argument("DegreeSequence: nonpositive degree at index " + std::to_string(n));
    if (n + 1 < degrees.size() && !mpz_divisible_p(degrees[n + 1].get_mpz_t(), degrees[n].get_mpz_t()))
      throw std::invalid_argument("DegreeSequence: deg_" + std::to_string(n) +
                                  " does not divide deg_" + std::to_string(n + 1) +
                                  " at index " + std::to_string(n));
    mpz_class e = (pow_mpz(base_degree, static_cast<unsigned long>(n)) - 1) / (base_degree - 1);
    if (cmp_with_power(degrees[n], fact, e) > 0)
      throw std::invalid_argument("DegreeSequence: deg exceeds automorphism bound at index " +
                                  std::to_string(n));
  }
}

DimEstimate estimate(const DegreeSequence &seq, int precision_digits) {
  seq.validate();
  DimEstimate out;
  out.base_degree = seq.base_degree;
  out.precision_digits = precision_digits;
  const int d = seq.base_degree;
  mpz_class fact = factorial(static_cast<unsigned>(d));
  for (std::size_t n = 0; n < seq.degrees.size(); ++n) {
    LogValue lr = log_ratio(seq.degrees[n], fact, precision_digits);
    mpq_class scale(d - 1, pow_mpz(d, static_cast<unsigned long>(n)));
    scale.canonicalize();
    out.a.push_back(lr.scaled(scale));
  }
  out.tail_min.resize(out.a.size());
  out.tail_max.resize(out.a.size());
  for (std::size_t i = out.a.size(); i-- > 0;) {
    out.tail_min[i] = out.a[i];
    out.tail_max[i] = out.a[i];
    if (i + 1 < out.a.size()) {
      if (out.tail_min[i + 1].value < out.tail_min[i].value)
        out.tail_min[i] = out.tail_min[i + 1];
      if (out.tail_max[i + 1].value > out.tail_max[i].value)
        out.tail_max[i] = out.tail_max[i + 1];
    }
  }
  return out;
}

nlohmann::json DimEstimate::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &v : a)
    arr.push_back({{"decimal", v.str(precision_digits)},
                   {"exact", v.exact},
                   {"rational", v.exact ? rat_to_string(v.value) : ""}});
  return {{"d", base_degree},
          {"a", arr},
          {"tail_min", tail_min.empty() ? "" : tail_min.front().str(precision_digits)},
          {"tail_max", tail_max.empty() ? "" : tail_max.front().str(precision_digits)},
          {"precision_digits", precision_digits}};
}

DegreeSequence full_image_sequence(int d, int N) {
  if (d < 2 || N < 0)
    throw std::invalid_argument("full_image_sequence: need d >= 2 and N >= 0");
  DegreeSequence seq;
  seq.base_degree = d;
  for (int n = 0; n <= N; ++n)
    seq.degrees.push_back(aut_order_formula(d, n));
  return seq;
}

CollapseBound collapse_bound(int d, int m, long Lm, const mpz_class &aut_tm, int k) {
  if (d < 2 || m < 1 || k < 0)
    throw std::invalid_argument("collapse_bound: bad parameters");
  mpz_class dm = pow_mpz(d, static_cast<unsigned long>(m));
  if (Lm >= dm)
    throw std::invalid_argument("collapse_bound: |L_m| must be < d^m (no collapse)");
  // exponent R*(1 + d + ... + d^(k-1))
  mpz_class geo = (pow_mpz(d, static_cast<unsigned long>(k)) - 1) / (d - 1);
  mpz_class e = Lm * geo;
  mpz_class fact = factorial(static_cast<unsigned>(d));
  mpz_class bits = e * static_cast<unsigned long>(mpz_sizeinbase(fact.get_mpz_t(), 2));
  if (bits > 64 * 1024 * 1024)
    throw resource_limit_error("collapse_bound: result would exceed 64 Mbit");
  CollapseBound out;
  out.finite_bound = pow_mpz(fact, e.get_ui()) * aut_tm;
  out.asymptotic = mpq_class(Lm) / mpq_class(dm);
  out.asymptotic.canonicalize();
  return out;
}

mpq_class periodic_bound(int d, int m) {
  if (d < 2 || m < 1)
    throw std::invalid_argument("periodic_bound: need d >= 2 and m >= 1");
  mpz_class dm = pow_mpz(d, static_cast<unsigned long>(m));
  mpq_class r(dm - 1, dm);
  r.canonicalize();
  return r;
}

bool compositum_check(const mpz_class &lhs, const std::vector<mpz_class> &factors) {
  if (lhs < 1)
    throw std::invalid_argument("compositum_check: degrees are positive");
  mpz_class prod = 1;
  for (const auto &f : factors) {
    if (f < 1)
      throw std::invalid_argument("compositum_check: degrees are positive");
    prod *= f;
  }
  return lhs <= prod;
}

DegreeSequence rescale_iterate(const DegreeSequence &seq, int m) {
  if (m < 1)
    throw std::invalid_argument("rescale_iterate: need m >= 1");
  seq.validate();
  if (seq.degrees.size() < static_cast<std::size_t>(m + 1) && m > 1)
    throw std::invalid_argument("rescale_iterate: sequence too short for m = " + std::to_string(m));
  DegreeSequence out;
  mpz_class dm = pow_mpz(seq.base_degree, static_cast<unsigned long>(m));
  if (!dm.fits_sint_p())
    throw resource_limit_error("rescale_iterate: d^m too large");
  out.base_degree = static_cast<int>(dm.get_si());
  for (std::size_t k = 0; m * k < seq.degrees.size(); ++k)
    out.degrees.push_back(seq.degrees[m * k]);
  return out;
}

LogValue specialization_tail_bound(int d, int m, const mpz_class &M, int precision_digits) {
  if (d < 2 || m < 1 || M < 1)
    throw std::invalid_argument("specialization_tail_bound: bad parameters");
  if (M == 1)
    return LogValue::make_exact(0);
  mpz_class fact = factorial(static_cast<unsigned>(d));
  LogValue lr = log_ratio(M, fact, precision_digits);
  mpq_class scale(d - 1, pow_mpz(d, static_cast<unsigned long>(m)) - 1);
  scale.canonicalize();
  return lr.scaled(scale);
}

bool iterative_degree_check(const DegreeSequence &seq, int m, const mpz_class &M) {
  if (m < 1 || M < 1)
    throw std::invalid_argument("iterative_degree_check: bad parameters");
  seq.validate();
  for (std::size_t n = 0; n + m < seq.degrees.size(); ++n) {
    mpz_class ratio = seq.degrees[n + m] / seq.degrees[n]; // exact by divisibility
    if (M == 1) {
      if (ratio > 1)
        return false;
      continue;
    }
    mpz_class dn = pow_mpz(seq.base_degree, static_cast<unsigned long>(n));
    if (cmp_with_power(ratio, M, dn) > 0)
      return false;
  }
  return true;
}

mpz_class genus_one_bound(int d, int n) {
  if (d < 2 || n < 0)
    throw std::invalid_argument("genus_one_bound: need d >= 2 and n >= 0");
  return pow_mpz(d, 5ul * static_cast<unsigned long>(n));
}

std::string degree_table_csv(const DegreeSequence &seq, const DimEstimate &est) {
  std::ostringstream os;
  os << "n,deg_n,a_n,a_n_exact\n";
  for (std::size_t n = 0; n < seq.degrees.size(); ++n) {
    const LogValue &v = est.a[n];
    os << n << "," << seq.degrees[n].get_str() << "," << v.str(est.precision_digits) << ","
       << (v.exact ? "1" : "0") << "\n";
  }
  return os.str();
}

nlohmann::json degree_table_json(const DegreeSequence &seq, const DimEstimate &est) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 0; n < seq.degrees.size(); ++n) {
    const LogValue &v = est.a[n];
    rows.push_back({{"n", n},
                    {"deg", seq.degrees[n].get_str()},
                    {"a", v.str(est.precision_digits)},
                    {"a_exact", v.exact},
                    {"a_rational", v.exact ? rat_to_string(v.value) : ""}});
  }
  return {{"d", seq.base_degree}, {"rows", rows}};
}

} // namespace arbordim
