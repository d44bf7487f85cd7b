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

FunctionTable char_of_dot(const ProductSpace& s, Group::Element r) {
  const Group g = s.flat();
  return FunctionTable::from_function(s, [&](std::uint64_t x) { return s.modulus().character(g.dot(r, x)); })
      .mark_bounded();
}

TEST(Fourier, ConstantOne) {
  const auto s = single_group_space(2, 3);
  const auto fh = fourier(FunctionTable::constant(s, 1.0));
  for (std::uint64_t r = 0; r < s.total_size(); ++r)
    EXPECT_NEAR(std::abs(fh[r] - Complex(r == 0 ? 1.0 : 0.0)), 0.0, kTol);
}

TEST(Fourier, CharacterGivesIndicator) {
  const auto s = single_group_space(3, 2);
  for (Group::Element t = 0; t < s.total_size(); ++t) {
    const auto fh = fourier(char_of_dot(s, t));
    for (std::uint64_t r = 0; r < s.total_size(); ++r)
      EXPECT_NEAR(std::abs(fh[r] - Complex(r == t ? 1.0 : 0.0)), 0.0, kTol);
  }
}

TEST(Fourier, MatchesDirectSum) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto s = single_group_space(p, 2);
    const auto f = lab::random_table(s, 11 + p);
    const auto fast = fourier(f);
    const auto slow = oracle::fourier_direct(f);
    for (std::uint64_t r = 0; r < s.total_size(); ++r) EXPECT_LT(std::abs(fast[r] - slow[r]), kTol);
  }
}

TEST(Fourier, ProductSpaceUsesFlatGroup) {
  const ProductSpace s(3, {1, 2});
  const auto f = lab::random_table(s, 5);
  const auto fast = fourier(f);
  const auto slow = oracle::fourier_direct(f);
  for (std::uint64_t r = 0; r < s.total_size(); ++r) EXPECT_LT(std::abs(fast[r] - slow[r]), kTol);
}

TEST(Fourier, InverseRoundTrip) {
  const auto s = single_group_space(3, 3);
  const auto f = lab::random_table(s, 3);
  const auto back = inverse_fourier(fourier(f));
  for (std::uint64_t x = 0; x < s.total_size(); ++x) EXPECT_LT(std::abs(back[x] - f[x]), kTol);
}

TEST(Conv, TrivialCases) {
  const auto s = single_group_space(2, 3);
  const auto one = FunctionTable::constant(s, 1.0);
  const auto c = conv(one, one);
  for (std::uint64_t x = 0; x < s.total_size(); ++x) EXPECT_LT(std::abs(c[x] - 1.0), kTol);
  const auto z = conv(lab::random_table(s, 1), FunctionTable::constant(s, 0.0));
  for (std::uint64_t x = 0; x < s.total_size(); ++x) EXPECT_LT(std::abs(z[x]), kTol);
}

TEST(Conv, EqualsSpectralProduct) {
  const auto s = single_group_space(2, 4);
  const auto f = lab::random_table(s, 21);
  const auto g = lab::random_table(s, 22);
  const auto fh = oracle::fourier_direct(f);
  const auto gh = oracle::fourier_direct(g);
  Spectrum prod{s, std::vector<Complex>(s.total_size())};
  for (std::uint64_t r = 0; r < s.total_size(); ++r) prod.coeffs[r] = fh[r] * std::conj(gh[r]);
  const auto want = inverse_fourier(prod);
  const auto got = conv(f, g);
  for (std::uint64_t x = 0; x < s.total_size(); ++x) EXPECT_LT(std::abs(got[x] - want[x]), kTol);
}

TEST(DirConv, ConstantOne) {
  const ProductSpace s(3, {1, 2});
  for (int d = 0; d < 2; ++d) {
    const auto c = dir_conv(FunctionTable::constant(s, 1.0), d);
    for (std::uint64_t x = 0; x < s.total_size(); ++x) EXPECT_LT(std::abs(c[x] - 1.0), kTol);
  }
}

TEST(DirConv, DotCharacterOverF2) {
  const ProductSpace s(2, {1, 1});
  const auto f = FunctionTable::from_function(s, [&](std::uint64_t x) {
    return s.modulus().character(s.modulus().mul(static_cast<Residue>(s.component(x, 0)),
                                                 static_cast<Residue>(s.component(x, 1))));
  });
  const auto c = dir_conv(f, 1);
  for (std::uint64_t x = 0; x < s.total_size(); ++x) {
    const auto x1 = s.component(x, 0), y2 = s.component(x, 1);
    // Two-point average of f(x1, y2 + z) conj f(x1, z).
    Complex want = 0;
    for (Residue z = 0; z < 2; ++z)
      want += f[s.index_from(std::vector<Group::Element>{x1, (y2 + z) % 2})] *
              std::conj(f[s.index_from(std::vector<Group::Element>{x1, z})]);
    want /= 2.0;
    EXPECT_LT(std::abs(c[x] - want), kTol);
    EXPECT_LT(std::abs(c[x] - s.modulus().character(static_cast<Residue>(x1 * y2 % 2))), kTol);
  }
}

TEST(DirConv, ZeroShiftIsNonNegative) {
  const ProductSpace s(3, {1, 2});
  const auto f = lab::random_table(s, 8);
  for (int d = 0; d < 2; ++d) {
    const auto c = dir_conv(f, d);
    for (std::uint64_t x = 0; x < s.total_size(); ++x) {
      if (s.component(x, d) != 0) continue;
      EXPECT_LT(std::abs(c[x].imag()), kTol);
      EXPECT_GE(c[x].real(), -1e-12);
    }
  }
}

TEST(MixedConv, SingleDirectionIsDirConv) {
  const ProductSpace s(2, {2, 1});
  const auto f = lab::random_table(s, 4);
  const std::vector<int> dirs = {1};
  const auto a = mixed_conv(f, dirs);
  const auto b = dir_conv(f, 1);
  for (std::uint64_t x = 0; x < s.total_size(); ++x) {
    EXPECT_LT(std::abs(a[x] - b[x]), kTol);
    EXPECT_LT(std::abs(mixed_conv_expanded(f, dirs, x) - b[x]), kTol);
  }
}

TEST(MixedConv, ConstantsAndExpansion) {
  const ProductSpace s(2, {1, 1});
  const Complex c = std::polar(0.7, 0.4);
  const auto f = FunctionTable::constant(s, c);
  const std::vector<int> dirs = {0, 1, 0};
  for (std::uint64_t x = 0; x < s.total_size(); ++x)
    EXPECT_LT(std::abs(mixed_conv_expanded(f, dirs, x) - std::pow(std::norm(c), 4)), kTol);
  const auto one = mixed_conv(FunctionTable::constant(s, 1.0), dirs);
  for (std::uint64_t x = 0; x < s.total_size(); ++x) EXPECT_LT(std::abs(one[x] - 1.0), kTol);
}

TEST(MixedConv, RecursionMatchesExpansion) {
  const ProductSpace s(2, {1, 1});
  for (const std::vector<int>& dirs : {std::vector<int>{0, 1, 0}, std::vector<int>{1, 0}}) {
    const auto f = lab::random_table(s, 77);
    const auto rec = mixed_conv(f, dirs);
    for (std::uint64_t x = 0; x < s.total_size(); ++x)
      EXPECT_LT(std::abs(rec[x] - mixed_conv_expanded(f, dirs, x)), kTol);
  }
}

TEST(UkNorm, SimpleValues) {
  const auto s = single_group_space(2, 3);
  for (int k = 1; k <= 3; ++k) EXPECT_NEAR(uk_norm(FunctionTable::constant(s, 1.0), k), 1.0, kTol);
  EXPECT_NEAR(uk_norm(char_of_dot(s, 5), 2), 1.0, kTol);
}

TEST(UkNorm, U2IsFourthMomentOfSpectrum) {
  const auto s = single_group_space(2, 4);
  const auto f = lab::random_table(s, 99);
  double sum = 0;
  for (const auto& c : oracle::fourier_direct(f)) sum += std::pow(std::abs(c), 4);
  EXPECT_NEAR(uk_norm_power(f, 2), sum, kTol);
}

TEST(UkNorm, MatchesCubeAverage) {
  const auto s = single_group_space(3, 2);
  const auto f = lab::random_table(s, 12);
  for (int k = 1; k <= 3; ++k) EXPECT_NEAR(uk_norm_power(f, k), oracle::uk_power_direct(f, k), kTol);
}

TEST(BoxNorm, SimpleValues) {
  const ProductSpace s(3, {1, 1});
  EXPECT_NEAR(box_norm(FunctionTable::constant(s, 1.0)), 1.0, kTol);
  const auto prod = FunctionTable::from_function(s, [&](std::uint64_t x) {
    return std::polar(1.0, 0.3 * static_cast<double>(s.component(x, 0))) *
           std::polar(1.0, 1.1 * static_cast<double>(s.component(x, 1)));
  });
  EXPECT_NEAR(box_norm(prod), 1.0, kTol);
}

TEST(BoxNorm, DotCharacterOverF2) {
  const ProductSpace s(2, {1, 1});
  const auto f = FunctionTable::from_function(s, [&](std::uint64_t x) {
    return s.modulus().character(static_cast<Residue>(s.component(x, 0) * s.component(x, 1)));
  });
  EXPECT_NEAR(box_norm_power(f), 0.5, kTol);
  EXPECT_NEAR(oracle::box_power_direct(f), 0.5, kTol);
}

TEST(BoxNorm, MatchesDirectExpansion) {
  for (const auto& dims : {std::vector<int>{1, 1, 1}, std::vector<int>{2, 1}}) {
    const ProductSpace s(3, dims);
    const auto f = lab::random_table(s, 31);
    EXPECT_NEAR(box_norm_power(f), oracle::box_power_direct(f), kTol);
  }
}

TEST(LargeSpectrum, SimpleValues) {
  const auto s = single_group_space(2, 3);
  EXPECT_EQ(large_spectrum(FunctionTable::constant(s, 1.0), 0.5), std::vector<std::uint64_t>{0});
  EXPECT_EQ(large_spectrum(char_of_dot(s, 6), 0.5), std::vector<std::uint64_t>{6});
}

TEST(LargeSpectrum, SizeBound) {
  const auto s = single_group_space(2, 6);
  SplitMix64 rng(4);
  std::vector<Complex> v(s.total_size());
  for (auto& z : v) z = rng.below(2) ? 1.0 : -1.0;
  const FunctionTable f(s, v, true);
  const auto fh = oracle::fourier_direct(f);
  for (double eps : {0.1, 0.2, 0.5}) {
    std::size_t want = 0;
    for (const auto& c : fh) want += std::abs(c) >= eps;
    const auto got = large_spectrum(f, eps);
    EXPECT_EQ(got.size(), want);
    EXPECT_LE(static_cast<double>(got.size()), 1.0 / (eps * eps));
  }
}

TEST(LargeSpectrum, NeedsBoundedInput) {
  const auto s = single_group_space(2, 2);
  EXPECT_THROW(large_spectrum(FunctionTable::constant(s, 2.0), 0.5), PreconditionError);
}

TEST(SpectralApprox, ExactCases) {
  const auto s = single_group_space(2, 4);
  const auto f = char_of_dot(s, 3);
  EXPECT_NEAR(spectral_conv_approx(f, f, 0.3).l2_error, 0.0, kTol);
  const auto z = FunctionTable(s, std::vector<Complex>(s.total_size()), true);
  EXPECT_NEAR(spectral_conv_approx(z, z, 0.3).l2_error, 0.0, kTol);
}

TEST(SpectralApprox, ErrorWithinEps) {
  const auto s = single_group_space(2, 7);
  const auto f = lab::random_table(s, 1);
  const auto g = lab::random_table(s, 2);
  const auto r = spectral_conv_approx(f, g, 0.2);
  // Recompute the L2 error from scratch.
  const auto exact = conv(f, g);
  double acc = 0;
  for (std::uint64_t x = 0; x < s.total_size(); ++x) acc += std::norm(exact[x] - r.approximant[x]);
  EXPECT_NEAR(std::sqrt(acc / static_cast<double>(s.total_size())), r.l2_error, kTol);
  EXPECT_LE(r.l2_error, 0.2 + kTol);
}

TEST(Norms, Basics) {
  const auto s = single_group_space(3, 2);
  const auto one = FunctionTable::constant(s, 1.0);
  for (double q : {1.0, 2.0, 4.0}) EXPECT_NEAR(lq_norm(one, q), 1.0, kTol);
  EXPECT_EQ(linf_norm(FunctionTable::constant(s, 0.0)), 0.0);
  const auto f = lab::random_table(s, 3);
  EXPECT_EQ(l1_distance(f, f), 0.0);
}

TEST(FunctionTable, Validation) {
  const auto s = single_group_space(2, 2);
  EXPECT_THROW(FunctionTable(s, std::vector<Complex>(3)), SchemaError);
  EXPECT_THROW(FunctionTable(s, std::vector<Complex>(4, 2.0), true), SchemaError);
}

}  // namespace
}  // namespace hofa
