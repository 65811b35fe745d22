#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "circnorm/circulant.hpp"
#include "circnorm/norms.hpp"

using namespace circnorm;

namespace {

double ratio(const Circulant& c, const std::vector<double>& x, PExponent p) {
  return vector_norm(matvec(c, x), p) / vector_norm(x, p);
}

double ratio(const TwoParamCirculant& c, const std::vector<double>& x, PExponent p) {
  return ratio(c.to_circulant(), x, p);
}

}  // namespace

TEST_CASE("exponent arithmetic") {
  CHECK(PExponent::finite(1.0).value() == 1.0);
  CHECK(PExponent::infinity().is_infinite());
  CHECK_FALSE(PExponent::finite(12.0).is_infinite());
  CHECK_THROWS_AS(PExponent::finite(0.5), std::invalid_argument);
  CHECK_THROWS_AS(PExponent::finite(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(PExponent::finite(std::nan("")), std::invalid_argument);

  CHECK(PExponent::finite(1.0).conjugate().is_infinite());
  CHECK(PExponent::infinity().conjugate().value() == 1.0);
  CHECK(PExponent::finite(2.0).conjugate().value() == 2.0);
  CHECK(conjugate_exponent(PExponent::finite(4.0)).value() == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("vector norms") {
  const std::vector<double> v{3.0, -4.0};
  CHECK(vector_norm(v, PExponent::finite(2.0)) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(vector_norm(v, PExponent::finite(1.0)) == 7.0);
  CHECK(vector_norm(v, PExponent::infinity()) == 4.0);
  CHECK(vector_norm(std::vector<double>{1.0, 1.0}, PExponent::finite(4.0)) ==
        doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
  CHECK(vector_norm(std::vector<double>{0.0, 0.0}, PExponent::finite(3.0)) == 0.0);
  CHECK_THROWS_AS(vector_norm(std::vector<double>{}, PExponent::finite(2.0)),
                  std::invalid_argument);

  // scaling by the largest entry keeps huge vectors finite
  const double big = 1e300;
  CHECK(vector_norm(std::vector<double>{big, big}, PExponent::finite(2.0)) ==
        doctest::Approx(std::sqrt(2.0) * big));
}

TEST_CASE("tolerance scales") {
  CHECK(tolerance_scale(make_two_param(3, -2.0, 1.0)) == 6.0);
  CHECK(tolerance_scale(Circulant({1.0, -2.0, 3.0})) == 7.0);
}

TEST_CASE("certificate and regime names") {
  CHECK(std::string(to_string(Regime::Wide)) == "WIDE");
  CHECK(std::string(to_string(Regime::Narrow)) == "NARROW");
  CHECK(std::string(to_string(Regime::Boundary)) == "BOUNDARY");
  CHECK(std::string(to_string(Certificate::Inspection)) == "INSPECTION");
  CHECK(std::string(to_string(Certificate::Lemma1Case1)) == "LEMMA1_CASE1");
  CHECK(std::string(to_string(Certificate::Lemma1Case2)) == "LEMMA1_CASE2");
  CHECK(std::string(to_string(Certificate::Thm2Case1)) == "THM2_CASE1");
  CHECK(std::string(to_string(Certificate::Thm2Case2)) == "THM2_CASE2");
  CHECK(std::string(to_string(Certificate::Thm3)) == "THM3");
  CHECK(std::string(to_string(Certificate::Thm4)) == "THM4");
  CHECK(std::string(to_string(Certificate::Thm5)) == "THM5");
  CHECK(std::string(to_string(Certificate::RemarkNonneg)) == "REMARK_NONNEG");
}

TEST_CASE("row and column sums") {
  CHECK(norm_1_inf(make_two_param(3, -2.0, 1.0)) == 4.0);
  CHECK(norm_1_inf(make_two_param(1, -5.0, 0.0)) == 5.0);
  CHECK(norm_1_inf(make_two_param(4, 0.0, 2.0)) == 6.0);
}

TEST_CASE("largest eigenvalue magnitude and regimes") {
  const LambdaMax wide = lambda_max_abs(make_two_param(6, -1.0, 1.0));
  CHECK(wide.regime == Regime::Wide);
  CHECK(wide.value == 4.0);

  const LambdaMax narrow = lambda_max_abs(make_two_param(3, -2.0, 1.0));
  CHECK(narrow.regime == Regime::Narrow);
  CHECK(narrow.value == 3.0);

  const LambdaMax boundary = lambda_max_abs(make_two_param(4, -1.0, 1.0));
  CHECK(boundary.regime == Regime::Boundary);
  CHECK(boundary.value == 2.0);

  CHECK(lambda_max_abs(make_two_param(1, -7.0, 0.0)).value == 7.0);
  CHECK(lambda_max_abs(make_two_param(5, 3.0, 2.0)).value == 11.0);

  // n = 2 has an empty middle band: boundary only at a = 0
  CHECK(lambda_max_abs(make_two_param(2, 0.0, 3.0)).regime == Regime::Boundary);
  const LambdaMax two = lambda_max_abs(make_two_param(2, -1.0, 3.0));
  CHECK(two.regime == Regime::Narrow);
  CHECK(two.value == 4.0);
}

TEST_CASE("spectral norm closed form") {
  const NormResult nonneg = exact_norm_2(make_two_param(4, 0.0, 2.0));
  CHECK(nonneg.kind == NormResult::Kind::Exact);
  CHECK(nonneg.value == 6.0);
  CHECK(nonneg.lower == 6.0);
  CHECK(nonneg.upper == 6.0);
  CHECK(nonneg.certificate == Certificate::Thm2Case1);
  CHECK(*nonneg.witness == std::vector<double>(4, 1.0));

  const NormResult narrow = exact_norm_2(make_two_param(3, -2.0, 1.0));
  CHECK(narrow.value == 3.0);
  CHECK(narrow.certificate == Certificate::Thm2Case2);
  CHECK(*narrow.witness == std::vector<double>{-1.0, 1.0, 0.0});

  const NormResult boundary = exact_norm_2(make_two_param(4, -1.0, 1.0));
  CHECK(boundary.value == 2.0);
  CHECK(boundary.certificate == Certificate::Thm2Case2);
  CHECK(*boundary.witness == std::vector<double>{-1.0, 1.0, 0.0, 0.0});

  const NormResult single = exact_norm_2(make_two_param(1, -3.0, 0.0));
  CHECK(single.value == 3.0);
  CHECK(single.certificate == Certificate::Inspection);
  CHECK(*single.witness == std::vector<double>{1.0});
}

TEST_CASE("non-negative diagonal is exact at every exponent") {
  for (double p : {1.0, 2.0, 2.5, 4.0, 16.0}) {
    const NormResult r = exact_norm_p_nonneg(make_two_param(3, 1.0, 1.0), PExponent::finite(p));
    CHECK(r.kind == NormResult::Kind::Exact);
    CHECK(r.value == 3.0);
    CHECK(r.certificate == Certificate::Thm3);
  }
  CHECK(exact_norm_p_nonneg(make_two_param(4, 1.0, 3.0), PExponent::infinity()).value == 10.0);
  CHECK(exact_norm_p_nonneg(make_two_param(1, 3.0, 0.0), PExponent::finite(2.0)).value == 3.0);
  CHECK(exact_norm_p_nonneg(make_two_param(6, 1.0, 2.0), PExponent::finite(5.0)).value == 11.0);
  CHECK_THROWS_AS(exact_norm_p_nonneg(make_two_param(3, -0.1, 1.0), PExponent::finite(2.0)),
                  std::invalid_argument);

  // the all-ones witness attains the value at any exponent
  const TwoParamCirculant c = make_two_param(6, 1.0, 2.0);
  for (double p : {1.5, 2.0, 3.0, 8.0})
    CHECK(ratio(c, std::vector<double>(6, 1.0), PExponent::finite(p)) ==
          doctest::Approx(11.0).epsilon(1e-12));
}

TEST_CASE("general circulant with non-negative entries") {
  const NormResult r =
      general_nonneg_circulant_norm(Circulant({1.0, 2.0, 3.0}), PExponent::finite(4.0));
  CHECK(r.value == 6.0);
  CHECK(r.certificate == Certificate::RemarkNonneg);
  CHECK(*r.witness == std::vector<double>(3, 1.0));
  CHECK(ratio(Circulant({1.0, 2.0, 3.0}), *r.witness, PExponent::finite(4.0)) ==
        doctest::Approx(6.0).epsilon(1e-12));
  CHECK_THROWS_AS(
      general_nonneg_circulant_norm(Circulant({1.0, -0.1, 2.0}), PExponent::finite(2.0)),
      std::invalid_argument);
}

TEST_CASE("upper bounds for the negative-diagonal family") {
  const TwoParamCirculant c = make_two_param(3, -2.0, 1.0);
  const BoundDetails bd = bound_details(c, PExponent::finite(4.0));
  CHECK(bd.lower == 3.0);
  CHECK(bd.thm4 == doctest::Approx(std::pow(3.0, 0.25) * 3.0).epsilon(1e-14));
  CHECK(bd.thm5 == doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));

  const NormResult r = bounds_p(c, PExponent::finite(4.0));
  CHECK(r.kind == NormResult::Kind::Interval);
  CHECK(r.lower == 3.0);
  CHECK(r.upper == doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));
  CHECK(r.certificate == Certificate::Thm5);
  CHECK(*r.witness == std::vector<double>{-1.0, 1.0, 0.0});
  CHECK(r.lower >= 0.0);
  CHECK(r.lower <= r.upper);

  // at p = 2 the interval collapses
  const NormResult collapsed = bounds_p(c, PExponent::finite(2.0));
  CHECK(collapsed.kind == NormResult::Kind::Exact);
  CHECK(collapsed.value == 3.0);
  CHECK(collapsed.certificate == Certificate::Thm2Case2);

  CHECK_THROWS_AS(bounds_p(make_two_param(3, 1.0, 1.0), PExponent::finite(4.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(bounds_p(c, PExponent::finite(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(bounds_p(c, PExponent::infinity()), std::invalid_argument);
}

TEST_CASE("interpolation bound never loses to the dimension bound") {
  for (int n : {2, 3, 5, 9, 16, 33}) {
    for (double a : {-0.5, -2.0, -7.5}) {
      for (double b : {0.0, 0.5, 1.0, 4.0}) {
        for (double p : {2.5, 3.0, 4.0, 8.0, 64.0}) {
          const BoundDetails bd = bound_details(make_two_param(n, a, b), PExponent::finite(p));
          CHECK(bd.thm5 <= bd.thm4 + 1e-12 * (1.0 + bd.thm4));
        }
      }
    }
  }
}

TEST_CASE("interpolation bound tends to the row sum as p grows") {
  const TwoParamCirculant c = make_two_param(5, -2.0, 1.0);
  const BoundDetails bd = bound_details(c, PExponent::finite(1e6));
  CHECK(std::abs(bd.thm5 - norm_1_inf(c)) < 1e-4);
}

TEST_CASE("witness vectors and their ratios") {
  const TwoParamCirculant wide = make_two_param(6, -1.0, 1.0);
  CHECK(witness_vector(wide, PExponent::finite(3.0)) == std::vector<double>(6, 1.0));
  for (double p : {1.0, 2.0, 3.0, 7.5})
    CHECK(ratio(wide, std::vector<double>(6, 1.0), PExponent::finite(p)) ==
          doctest::Approx(4.0).epsilon(1e-12));

  const TwoParamCirculant narrow = make_two_param(3, -2.0, 1.0);
  const std::vector<double> nw{-1.0, 1.0, 0.0};
  CHECK(witness_vector(narrow, PExponent::finite(2.0)) == nw);
  for (double p : {1.0, 2.0, 4.0, 16.0})
    CHECK(ratio(narrow, nw, PExponent::finite(p)) == doctest::Approx(3.0).epsilon(1e-12));

  // at the boundary both branches agree in value; the pair vector is returned
  const TwoParamCirculant boundary = make_two_param(4, -1.0, 1.0);
  const std::vector<double> bw{-1.0, 1.0, 0.0, 0.0};
  CHECK(witness_vector(boundary, PExponent::finite(2.0)) == bw);
  for (double p : {2.0, 3.0, 6.0})
    CHECK(ratio(boundary, bw, PExponent::finite(p)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ratio(boundary, std::vector<double>(4, 1.0), PExponent::finite(3.0)) ==
        doctest::Approx(2.0).epsilon(1e-12));

  CHECK(witness_vector(make_two_param(1, -2.0, 0.0), PExponent::finite(2.0)) ==
        std::vector<double>{1.0});
  CHECK_THROWS_AS(witness_vector(make_two_param(3, 0.0, 1.0), PExponent::finite(2.0)),
                  std::invalid_argument);
}

TEST_CASE("boundary branch values match exactly in floating point") {
  for (int n : {3, 4, 6, 10, 17}) {
    for (int t : {1, 2, 5}) {
      const double b = 2.0 * t;
      const double a = -static_cast<double>((n - 2) * t);
      const TwoParamCirculant c = make_two_param(n, a, b);
      const LambdaMax lm = lambda_max_abs(c);
      CHECK(lm.regime == Regime::Boundary);
      const double wide_branch = a + (n - 1) * b;
      const double narrow_branch = -a + b;
      CHECK(wide_branch == narrow_branch);
      CHECK(lm.value == static_cast<double>(n * t));
    }
  }
}

TEST_CASE("full dispatch") {
  const TwoParamCirculant neg = make_two_param(3, -2.0, 1.0);

  const NormResult one = norm_p(neg, PExponent::finite(1.0));
  CHECK(one.kind == NormResult::Kind::Exact);
  CHECK(one.value == 4.0);
  CHECK(one.certificate == Certificate::Inspection);
  CHECK(*one.witness == std::vector<double>{1.0, 0.0, 0.0});
  CHECK(ratio(neg, *one.witness, PExponent::finite(1.0)) == 4.0);

  const NormResult inf = norm_p(neg, PExponent::infinity());
  CHECK(inf.value == 4.0);
  CHECK(inf.certificate == Certificate::Inspection);
  CHECK(*inf.witness == std::vector<double>{-1.0, 1.0, 1.0});
  CHECK(ratio(neg, *inf.witness, PExponent::infinity()) == 4.0);

  CHECK(norm_p(make_two_param(4, 1.0, 3.0), PExponent::finite(3.0)).certificate ==
        Certificate::Thm3);
  CHECK(norm_p(neg, PExponent::finite(2.0)).certificate == Certificate::Thm2Case2);

  const NormResult interval = norm_p(neg, PExponent::finite(4.0));
  CHECK(interval.kind == NormResult::Kind::Interval);
  CHECK(interval.lower == 3.0);
  CHECK(interval.upper == doctest::Approx(std::sqrt(12.0)).epsilon(1e-14));
  CHECK(interval.certificate == Certificate::Thm5);

  const NormResult single = norm_p(make_two_param(1, -6.0, 0.0), PExponent::finite(9.0));
  CHECK(single.value == 6.0);
  CHECK(single.certificate == Certificate::Inspection);
}

TEST_CASE("conjugate exponents give the same result") {
  const TwoParamCirculant cases[] = {
      make_two_param(6, -1.0, 1.0),
      make_two_param(3, -2.0, 1.0),
      make_two_param(5, -4.0, 2.0),
      make_two_param(4, -1.0, 1.0),
  };
  for (const TwoParamCirculant& c : cases) {
    const double tol = 1e-13 * tolerance_scale(c);
    for (double p : {2.5, 4.0, 8.0}) {
      const PExponent pe = PExponent::finite(p);
      const NormResult direct = norm_p(c, pe);
      const NormResult mirrored = norm_p(c, pe.conjugate());
      CHECK(direct.kind == mirrored.kind);
      CHECK(direct.certificate == mirrored.certificate);
      CHECK(std::abs(direct.lower - mirrored.lower) <= tol);
      CHECK(std::abs(direct.upper - mirrored.upper) <= tol);
    }
  }
}

TEST_CASE("interval invariants over a parameter grid") {
  for (int n : {2, 3, 4, 7, 12}) {
    for (double a : {-0.25, -1.0, -3.0, -9.0}) {
      for (double b : {0.0, 0.5, 2.0}) {
        const TwoParamCirculant c = make_two_param(n, a, b);
        for (double p : {2.5, 3.0, 5.0, 32.0}) {
          const NormResult r = norm_p(c, PExponent::finite(p));
          REQUIRE(r.kind == NormResult::Kind::Interval);
          CHECK(r.lower >= 0.0);
          CHECK(r.lower <= r.upper);
          REQUIRE(r.witness.has_value());
          // the witness certifies the lower endpoint
          CHECK(ratio(c, *r.witness, PExponent::finite(p)) ==
                doctest::Approx(r.lower).epsilon(1e-10));
        }
      }
    }
  }
}
