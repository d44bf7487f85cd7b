// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "hofa/hofa.hpp"
#include "hofa/oracle.hpp"

namespace hofa {
namespace {

constexpr double kTol = 1e-9;

GroupFunctionH values_of(std::uint32_t p, int n, const std::vector<Residue>& v) {
  return GroupFunctionH(single_group_space(p, n), 1, v);
}

const MonomialPoly kSquare(5, 1, {{{2}, 1}});

TEST(MonomialPoly, FrobeniusReduction) {
  const MonomialPoly a(3, 1, {{{3}, 1}});
  const MonomialPoly b(3, 1, {{{1}, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(MonomialPoly(2, 2, {{{2, 3}, 1}}).degree(), 2);
  EXPECT_EQ(MonomialPoly(5, 1).degree(), -1);
  EXPECT_TRUE((MonomialPoly(5, 1, {{{1}, 2}}) + MonomialPoly(5, 1, {{{1}, 3}})).is_zero());
}

TEST(MonomialPoly, EvalAndTable) {
  const Group g(PrimeModulus(5), 1);
  for (Residue x = 0; x < 5; ++x) EXPECT_EQ(kSquare.eval(g, x), x * x % 5);
  const auto t = kSquare.table();
  for (Residue x = 0; x < 5; ++x) EXPECT_EQ(t.at(x, 0), x * x % 5);
}

TEST(MonomialPoly, MonomialOrder) {
  const auto monos = monomials_up_to(3, 2, 2);
  ASSERT_EQ(monos.size(), 6u);
  EXPECT_EQ(monos[0], (MonomialPoly::Exponents{0, 0}));
  for (std::size_t i = 1; i < monos.size(); ++i)
    EXPECT_LE(monos[i - 1][0] + monos[i - 1][1], monos[i][0] + monos[i][1]);
}

TEST(Delta, Examples) {
  const auto c = values_of(5, 1, {3, 3, 3, 3, 3});
  EXPECT_EQ(delta(c, 2), values_of(5, 1, {0, 0, 0, 0, 0}));
  const auto sq = kSquare.table();
  EXPECT_EQ(delta(sq, 0), GroupFunctionH::zero(sq.space(), 1));
  const auto d1 = delta(sq, 1);
  for (Residue x = 0; x < 5; ++x) EXPECT_EQ(d1.at(x, 0), (2 * x + 1) % 5);
}

TEST(Delta, DerivativesCommute) {
  const auto s = single_group_space(3, 2);
  SplitMix64 rng(5);
  std::vector<Residue> v(s.total_size());
  for (auto& e : v) e = static_cast<Residue>(rng.below(3));
  const GroupFunctionH f(s, 1, v);
  for (Group::Element a = 0; a < 9; ++a)
    for (Group::Element b = 0; b < 9; ++b) EXPECT_EQ(delta(delta(f, a), b), delta(delta(f, b), a));
  const std::vector<Group::Element> ab = {4, 7};
  const auto dd = delta(delta(f, 4), 7);
  for (Group::Element x = 0; x < 9; ++x) EXPECT_EQ(iterated_delta(f, x, ab)[0], dd.at(x, 0));
}

TEST(MultDerivative, Examples) {
  const auto s = single_group_space(5, 1);
  const Complex c = std::polar(1.0, 0.9);
  const auto one = mult_derivative(FunctionTable::constant(s, c), 3);
  for (std::uint64_t x = 0; x < 5; ++x) EXPECT_LT(std::abs(one[x] - 1.0), kTol);
  const auto f = lab::random_table(s, 2);
  const auto d0 = mult_derivative(f, 0);
  for (std::uint64_t x = 0; x < 5; ++x) EXPECT_LT(std::abs(d0[x] - std::norm(f[x])), kTol);
}

TEST(MultDerivative, QuadraticPhase) {
  // d_a (omega^g)(x) = omega^{g(x) - g(x - a)}.
  const MonomialPoly g(5, 1, {{{2}, 3}, {{1}, 1}});
  const auto f = phase_table(g);
  const Group grp(PrimeModulus(5), 1);
  const PrimeModulus m(5);
  for (Group::Element a = 0; a < 5; ++a) {
    const auto d = mult_derivative(f, a);
    for (Group::Element x = 0; x < 5; ++x)
      EXPECT_LT(std::abs(d[x] - m.character(m.sub(g.eval(grp, x), g.eval(grp, grp.sub(x, a))))), kTol);
  }
}

TEST(MultDerivative, Commute) {
  const auto s = single_group_space(3, 2);
  const auto f = lab::random_table(s, 9);
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = 0; b < 9; ++b) {
      const auto x = mult_derivative(mult_derivative(f, a), b);
      const auto y = mult_derivative(mult_derivative(f, b), a);
      for (std::uint64_t i = 0; i < 9; ++i) EXPECT_LT(std::abs(x[i] - y[i]), 1e-12);
    }
}

TEST(DegreeTest, Examples) {
  EXPECT_TRUE(degree_test(values_of(5, 1, {2, 2, 2, 2, 2}), 0).ok);
  const auto sq = kSquare.table();
  EXPECT_TRUE(degree_test(sq, 2).ok);
  const auto r = degree_test(sq, 1);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.shifts.size(), 2u);
  EXPECT_NE(iterated_delta(sq, r.x, r.shifts)[0], 0u);
  EXPECT_THROW(degree_test(sq, 5), PreconditionError);
}

TEST(DegreeTest, MatchesSyntacticDegree) {
  for (int n = 1; n <= 2; ++n)
    for (int e = 0; e <= 3; ++e)
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        // A polynomial with a nonzero top-degree term of degree exactly e.
        auto g = lab::random_poly(5, n, e, seed);
        MonomialPoly::Exponents top(n, 0);
        top[0] = e;
        g.add_term(top, 1);
        if (g.degree() != e) g.add_term(top, 1);
        ASSERT_EQ(g.degree(), e);
        const auto t = g.table();
        for (int d = 0; d <= 3; ++d) {
          EXPECT_EQ(degree_test(t, d).ok, e <= d);
          if (std::pow(std::pow(5.0, n), d + 2) <= 1e6) EXPECT_EQ(oracle::degree_test_full(t, d), e <= d);
        }
      }
}

TEST(ApproxFraction, Examples) {
  EXPECT_EQ(approx_poly_fraction(kSquare.table(), 2).fraction, 1.0);
  // f(0) = 0, f(1) = 1 over F_2: f(x + a) = f(x) exactly when a = 0.
  const auto f = values_of(2, 1, {0, 1});
  const auto r = approx_poly_fraction(f, 0);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.fraction, 0.5);
  const MonomialPoly cube(5, 1, {{{3}, 1}});
  const auto c = approx_poly_fraction(cube.table(), 2);
  EXPECT_LT(c.fraction, 1.0);
  EXPECT_TRUE(c.witness.has_value());
}

TEST(ApproxFraction, OneIffDegreeTestPasses) {
  const auto s = single_group_space(3, 1);
  SplitMix64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Residue> v(3);
    for (auto& e : v) e = static_cast<Residue>(rng.below(3));
    const GroupFunctionH f(s, 1, v);
    for (int d = 0; d < 3; ++d)
      EXPECT_EQ(approx_poly_fraction(f, d, true).fraction == 1.0, degree_test(f, d).ok);
  }
}

TEST(ApproxFraction, SampledModeIsSeeded) {
  const MonomialPoly cube(5, 2, {{{3, 0}, 1}});
  const auto a = approx_poly_fraction(cube.table(), 1, false, 2000, 4);
  const auto b = approx_poly_fraction(cube.table(), 1, false, 2000, 4);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.total, 2000u);
  EXPECT_EQ(a.vanishing, b.vanishing);
}

TEST(Polarize, SquareOverF5) {
  const auto sigma = polarize(kSquare, 2);
  EXPECT_EQ(sigma.coeffs(), std::vector<Residue>{2});
  EXPECT_EQ(poly_from_symmetric(sigma, 2), kSquare);
  for (std::uint64_t x = 0; x < 25; ++x) {
    const auto a = sigma.space().component(x, 0), b = sigma.space().component(x, 1);
    EXPECT_EQ(sigma.eval(x), 2 * a * b % 5);
  }
}

TEST(Polarize, ZeroAndMixedProduct) {
  const ProductSpace s(5, {2, 2});
  EXPECT_TRUE(poly_from_symmetric(MultilinearForm::zero(s, {0, 1}), 2).is_zero());
  const MonomialPoly x1x2(5, 2, {{{1, 1}, 1}});
  const auto sigma = polarize(x1x2, 2);
  EXPECT_EQ(sigma.coeffs(), (std::vector<Residue>{0, 1, 1, 0}));
  EXPECT_EQ(poly_from_symmetric(sigma, 2), x1x2);
}

TEST(Polarize, RoundTripsCubics) {
  for (int n = 1; n <= 2; ++n)
    for (int k = 2; k <= 3; ++k)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto all = lab::random_poly(5, n, k, seed);
        MonomialPoly g(5, n);
        for (const auto& [e, c] : all.terms()) {
          int deg = 0;
          for (int v : e) deg += v;
          if (deg == k) g.add_term(e, c);
        }
        EXPECT_EQ(poly_from_symmetric(polarize(g, k), k), g);
      }
}

TEST(Polarize, NeedsLargeCharacteristic) {
  EXPECT_THROW(polarize(MonomialPoly(5, 1, {{{1}, 1}}), 2), SchemaError);
  EXPECT_THROW(polarize(MonomialPoly(3, 2, {{{1, 2}, 1}}), 3), PreconditionError);
}

TEST(PhaseCorrelation, Examples) {
  EXPECT_NEAR(phase_correlation(phase_table(kSquare, -1), kSquare), 1.0, kTol);
  const auto s = single_group_space(5, 1);
  const auto chi = FunctionTable::from_function(s, [](std::uint64_t x) { return PrimeModulus(5).character(static_cast<Residue>(x)); });
  EXPECT_NEAR(phase_correlation(chi, MonomialPoly(5, 1)), 0.0, kTol);
  const auto f = lab::random_table(s, 3);
  Complex acc = 0;
  for (std::uint64_t x = 0; x < 5; ++x) acc += f[x] * PrimeModulus(5).character(static_cast<Residue>(x * x % 5));
  EXPECT_NEAR(phase_correlation(f, kSquare), std::abs(acc / 5.0), kTol);
}

TEST(PhaseNorms, LowDegreePhasesHaveUnitNorm) {
  for (int k = 1; k <= 3; ++k)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto g = lab::random_poly(5, 1, k - 1, seed);
      EXPECT_NEAR(uk_norm(phase_table(g), k), 1.0, kTol);
    }
}

TEST(BestPolyCorrelation, Examples) {
  const auto s = single_group_space(2, 3);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g0 = lab::random_poly(2, 3, 2, seed);
    const auto r = best_poly_correlation(phase_table(g0, -1), 2);
    EXPECT_NEAR(r.value, 1.0, kTol);
  }
  EXPECT_NEAR(best_poly_correlation(FunctionTable::constant(s, 0.0), 1).value, 0.0, kTol);
}

TEST(BestPolyCorrelation, LinearPhasesMatchFourier) {
  const auto s = single_group_space(2, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = lab::random_table(s, seed);
    double mx = 0;
    for (const auto& c : oracle::fourier_direct(f)) mx = std::max(mx, std::abs(c));
    const auto r = best_poly_correlation(f, 1);
    EXPECT_NEAR(r.value, mx, kTol);
    EXPECT_GE(r.value * r.value + kTol, uk_norm_power(f, 2));
  }
}

TEST(BestPolyAgreement, Examples) {
  const auto g = lab::random_poly(3, 2, 1, 6);
  auto t = g.table();
  EXPECT_EQ(best_poly_agreement(t, 1).agreement, 9u);
  t.set(4, std::vector<Residue>{static_cast<Residue>((t.at(4, 0) + 1) % 3)});
  EXPECT_GE(best_poly_agreement(t, 1).agreement, 8u);
}

TEST(BestPolyAgreement, MatchesReversedScan) {
  const auto s = single_group_space(2, 2);
  SplitMix64 rng(8);
  for (int trial = 0; trial < 16; ++trial) {
    std::vector<Residue> v(4);
    for (auto& e : v) e = static_cast<Residue>(rng.below(2));
    const GroupFunctionH f(s, 1, v);
    EXPECT_EQ(best_poly_agreement(f, 1).agreement, oracle::poly_agreement_reversed(f, 1).agreement);
  }
}

}  // namespace
}  // namespace hofa
