#include "doctest.h"

#include "arbordim/dimension.hpp"
#include "arbordim/group.hpp"
#include "arbordim/logvalue.hpp"
#include "arbordim/rational_io.hpp"

#include <random>

using namespace arbordim;

namespace {

mpq_class q(long n, long d) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

DegreeSequence seq2(std::vector<long> degs) {
  DegreeSequence s;
  s.base_degree = 2;
  for (long v : degs)
    s.degrees.emplace_back(v);
  return s;
}

// admissible random sequence: divisibility- and bound-respecting
DegreeSequence random_sequence(int d, int len, std::mt19937 &rng) {
  DegreeSequence s;
  s.base_degree = d;
  s.degrees = {1};
  mpz_class fact = factorial(static_cast<unsigned>(d));
  for (int n = 1; n < len; ++n) {
    mpz_class bound = (pow_mpz(d, n) - 1) / (d - 1);
    // multiplier: a random power of a random divisor source, kept under the bound
    mpz_class prev = s.degrees.back();
    mpz_class maxmul = 1;
    mpz_class cap = pow_mpz(fact, bound.get_ui());
    while (prev * maxmul * 2 <= cap && mpz_sizeinbase(maxmul.get_mpz_t(), 2) < 40)
      maxmul *= 2;
    std::uniform_int_distribution<long> bits(0, std::max(0l, (long)mpz_sizeinbase(maxmul.get_mpz_t(), 2) - 1));
    mpz_class mul = pow_mpz(2, bits(rng));
    s.degrees.push_back(prev * mul);
  }
  return s;
}

} // namespace

TEST_CASE("log_ratio exact and interval paths") {
  CHECK(log_ratio(1, 2).exact);
  CHECK(log_ratio(1, 2).value == 0);
  auto r = log_ratio(8, 2);
  CHECK(r.exact);
  CHECK(r.value == 3);
  auto r2 = log_ratio(8, 4); // 4^(3/2) = 8
  CHECK(r2.exact);
  CHECK(r2.value == q(3, 2));
  auto r3 = log_ratio(1296, 6);
  CHECK(r3.exact);
  CHECK(r3.value == 4);

  auto r4 = log_ratio(3, 2, 50); // log2(3), irrational
  CHECK_FALSE(r4.exact);
  CHECK(r4.radius > 0);
  CHECK(r4.radius < q(1, 100000000));  // far better than 1e-8
  // log2(3) = 1.58496250072115618145373894394781650875981...
  mpq_class approx = rat_from_string("1.5849625007211561814537389439478165087598144076924");
  CHECK(abs(r4.value - approx) < q(1, 1000000000));
}

TEST_CASE("estimate of the full image sequence") {
  DegreeSequence s = full_image_sequence(2, 3);
  CHECK(s.degrees == std::vector<mpz_class>{1, 2, 8, 128});
  DimEstimate e = estimate(s);
  REQUIRE(e.a.size() == 4);
  CHECK(e.a[0].exact);
  CHECK(e.a[0].value == 0);
  CHECK(e.a[1].value == q(1, 2));
  CHECK(e.a[2].value == q(3, 4));
  CHECK(e.a[3].value == q(7, 8));

  DegreeSequence s3 = full_image_sequence(3, 2);
  CHECK(s3.degrees == std::vector<mpz_class>{1, 6, 1296});
  DimEstimate e3 = estimate(s3);
  CHECK(e3.a[1].value == q(2, 3)); // (3-1)/3 * log6(6)
  CHECK(e3.a[2].value == q(8, 9));

  CHECK(full_image_sequence(2, 0).degrees == std::vector<mpz_class>{1});
}

TEST_CASE("degenerate all-ones sequence") {
  DimEstimate e = estimate(seq2({1, 1, 1, 1}));
  for (const auto &v : e.a) {
    CHECK(v.exact);
    CHECK(v.value == 0);
  }
}

TEST_CASE("sequence invariants rejected with index") {
  DegreeSequence bad = seq2({1, 3, 6}); // 3 > |Aut(T_1)| = 2
  CHECK_THROWS_WITH_AS(bad.validate(),
                       "DegreeSequence: deg exceeds automorphism bound at index 1",
                       std::invalid_argument);
  DegreeSequence bad2 = seq2({1, 2, 3}); // 2 does not divide 3
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
  DegreeSequence bad3 = seq2({2, 2});
  CHECK_THROWS_AS(bad3.validate(), std::invalid_argument);
}

TEST_CASE("estimates stay in [0,1]") {
  std::mt19937 rng(20240817);
  for (int rep = 0; rep < 20; ++rep) {
    DegreeSequence s = random_sequence(2, 8, rng);
    DimEstimate e = estimate(s);
    for (const auto &v : e.a) {
      CHECK(v.certainly_ge(0));
      CHECK(v.certainly_le(1));
    }
  }
}

TEST_CASE("monotonicity under pointwise domination") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    DegreeSequence hi = random_sequence(2, 7, rng);
    DegreeSequence lo;
    lo.base_degree = 2;
    // divide out some factors while keeping divisibility chain: take a prefix power
    lo.degrees.push_back(1);
    for (std::size_t n = 1; n < hi.degrees.size(); ++n) {
      mpz_class v = hi.degrees[n];
      while (v > lo.degrees.back() && v > 1 &&
             mpz_divisible_ui_p(v.get_mpz_t(), 4))
        v /= 2;
      if (v < lo.degrees.back())
        v = lo.degrees.back();
      lo.degrees.push_back(v);
    }
    DimEstimate ehi = estimate(hi), elo = estimate(lo);
    for (std::size_t n = 0; n < hi.degrees.size(); ++n)
      CHECK(elo.a[n].value <= ehi.a[n].value);
  }
}

TEST_CASE("finite index stability") {
  // multiplying all degrees from n0 on by M shifts a_n by exactly
  // (d-1) log M / (log d! * d^n), which vanishes with n
  DegreeSequence s;
  s.base_degree = 2;
  for (int n = 0; n <= 10; ++n)
    s.degrees.push_back(pow_mpz(2, n)); // deg_n = 2^n, well below the bound
  DegreeSequence t = s;
  const long M = 16;
  const std::size_t n0 = 4;
  for (std::size_t n = n0; n < t.degrees.size(); ++n)
    t.degrees[n] *= M;
  DimEstimate es = estimate(s), et = estimate(t);
  for (std::size_t n = n0; n < t.degrees.size(); ++n) {
    mpq_class diff = et.a[n].value - es.a[n].value;
    mpq_class expect = q(4, 1) / q(1, 1); // log2(16) = 4
    expect = expect / mpq_class(pow_mpz(2, n));
    CHECK(diff == expect);
  }
  // envelopes converge: for n with log2(M)/2^n < 1/1024 the difference is below 1/1024
  for (std::size_t n = n0; n < t.degrees.size(); ++n)
    if (mpq_class(4) / mpq_class(pow_mpz(2, n)) < q(1, 1024))
      CHECK(et.a[n].value - es.a[n].value < q(1, 1024));
}

TEST_CASE("collapse bound") {
  auto b = collapse_bound(2, 1, 1, 1, 2);
  CHECK(b.finite_bound == 8); // 2^(1*(1+2)) * 1
  CHECK(b.asymptotic == q(1, 2));
  CHECK(collapse_bound(2, 2, 3, 1, 0).asymptotic == q(3, 4));
  CHECK_THROWS_AS(collapse_bound(2, 1, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("periodic bound") {
  CHECK(periodic_bound(2, 1) == q(1, 2));
  CHECK(periodic_bound(2, 2) == q(3, 4));
  CHECK(periodic_bound(3, 1) == q(2, 3));
}

TEST_CASE("compositum check") {
  CHECK(compositum_check(8, {2, 4}));
  CHECK_FALSE(compositum_check(9, {2, 4}));
}

TEST_CASE("rescale_iterate") {
  DegreeSequence s = seq2({1, 2, 8, 128, 32768});
  DegreeSequence r = rescale_iterate(s, 2);
  CHECK(r.base_degree == 4);
  CHECK(r.degrees == std::vector<mpz_class>{1, 8, 32768});
  CHECK(rescale_iterate(s, 1).degrees == s.degrees);

  // C_{d^m} a'_k = C_d a_{mk}: both sides equal log(deg_{mk}) / d^{mk}
  DimEstimate es = estimate(s), er = estimate(r);
  for (std::size_t k = 0; k < r.degrees.size(); ++k) {
    // a'_k * log((d^m)!)/(d^m-1) == a_{mk} * log(d!)/(d-1):
    // with exact values, cross-check via the defining ratios
    mpq_class lhs = er.a[k].value * q(1, 4 - 1);   // / (D-1)
    mpq_class rhs = es.a[2 * k].value * q(1, 2 - 1);
    // lhs * log(24) == rhs * log(2) cannot be compared rationally; instead use
    // the identity in its integer form: deg'_k == deg_{2k} and bases match
    CHECK(r.degrees[k] == s.degrees[2 * k]);
    (void)lhs;
    (void)rhs;
  }
  DegreeSequence tooshort = seq2({1, 2});
  CHECK_THROWS_AS(rescale_iterate(tooshort, 3), std::invalid_argument);
}

TEST_CASE("specialization tail bound") {
  CHECK(specialization_tail_bound(2, 1, 1).value == 0);
  CHECK(specialization_tail_bound(2, 1, 2).value == 1);
  CHECK(specialization_tail_bound(2, 1, 2).exact);
  auto v = specialization_tail_bound(2, 2, 4);
  CHECK(v.exact);
  CHECK(v.value == q(2, 3));
  // boundary M = |Aut(T_m^com)| gives exactly 1
  for (auto [d, m] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    auto b = specialization_tail_bound(d, m, aut_order_formula(d, m));
    CHECK(b.exact);
    CHECK(b.value == 1);
  }
}

TEST_CASE("iterative degree check") {
  DegreeSequence s = full_image_sequence(2, 5);
  CHECK(iterative_degree_check(s, 1, 2));
  DegreeSequence t = seq2({1, 2, 8});
  CHECK_FALSE(iterative_degree_check(t, 1, 1));
}

TEST_CASE("genus one bound") {
  CHECK(genus_one_bound(2, 0) == 1);
  CHECK(genus_one_bound(2, 1) == 32);
  CHECK(genus_one_bound(3, 2) == 59049);
}

TEST_CASE("csv and json emission") {
  DegreeSequence s = full_image_sequence(2, 2);
  DimEstimate e = estimate(s);
  std::string csv = degree_table_csv(s, e);
  CHECK(csv.find("n,deg_n,a_n") == 0);
  CHECK(csv.find("2,8,0.75") != std::string::npos);
  auto j = degree_table_json(s, e);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["a_rational"] == "3/4");
}

TEST_CASE("decimal rendering") {
  CHECK(rat_to_decimal(q(7, 8), 50) == "0.875");
  CHECK(rat_to_decimal(q(1, 3), 5) == "0.33333");
  CHECK(rat_to_decimal(q(-1, 3), 5) == "-0.33333");
  CHECK(rat_to_decimal(q(2, 3), 5) == "0.66667");
  CHECK(rat_to_decimal(mpq_class(1234), 2) == "1200");
  CHECK(rat_to_decimal(q(999, 1000), 2) == "1");
  CHECK(rat_to_decimal(mpq_class(0), 8) == "0");
}
