// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hofa/hofa.hpp"
#include "hofa/oracle.hpp"

namespace hofa {
namespace {

std::vector<std::uint64_t> all_points(const ProductSpace& s) {
  std::vector<std::uint64_t> v(s.total_size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

PartialMap square_map_f5() {
  const auto s = single_group_space(5, 1);
  PartialMap phi(s, 1);
  for (Residue x = 0; x < 5; ++x) phi.set(x, std::vector<Residue>{x * x % 5});
  return phi;
}

MultiAffineMap dot_map(int n) {
  const ProductSpace s(2, {n, n});
  std::vector<Residue> c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i * n + i)] = 1;
  return MultiAffineMap::from_forms(s, {MultilinearForm(s, {0, 1}, c)});
}

TEST(PartialMap, Basics) {
  const auto s = single_group_space(3, 1);
  PartialMap phi(s, 2);
  EXPECT_EQ(phi.domain_size(), 0u);
  phi.set(1, std::vector<Residue>{2, 0});
  EXPECT_TRUE(phi.contains(1));
  EXPECT_FALSE(phi.contains(0));
  EXPECT_EQ(phi.value(1)[0], 2u);
  EXPECT_NEAR(phi.density(), 1.0 / 3, 1e-12);
  phi.erase(1);
  EXPECT_EQ(phi.domain_size(), 0u);
  EXPECT_THROW(phi.set(0, std::vector<Residue>{3, 0}), SchemaError);
}

TEST(FreimanHom, AffineRestrictions) {
  const auto s = single_group_space(3, 2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto alpha = lab::random_multiaffine(s, 2, seed);
    const auto phi = lab::random_restriction(alpha, 0.6, seed + 100);
    for (int m = 1; m <= 3; ++m) EXPECT_TRUE(is_freiman_hom(phi, m).ok);
  }
}

TEST(FreimanHom, TwoPointDomain) {
  const auto s = single_group_space(2, 1);
  PartialMap phi(s, 2);
  phi.set(0, std::vector<Residue>{0, 0});
  phi.set(1, std::vector<Residue>{1, 0});
  EXPECT_TRUE(is_freiman_hom(phi, 2).ok);
}

TEST(FreimanHom, SquareMapFails) {
  const auto phi = square_map_f5();
  const auto r = is_freiman_hom(phi, 2);
  ASSERT_FALSE(r.ok);
  ASSERT_EQ(r.witness.size(), 4u);
  const auto& w = r.witness;
  EXPECT_EQ((w[0] + w[1]) % 5, (w[2] + w[3]) % 5);
  EXPECT_NE((phi.value(w[0])[0] + phi.value(w[1])[0]) % 5, (phi.value(w[2])[0] + phi.value(w[3])[0]) % 5);
}

TEST(MultiHom, GlobalRestrictions) {
  const ProductSpace s(3, {1, 2});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto phi = lab::random_restriction(lab::random_multiaffine(s, 1, seed), 0.5, seed);
    EXPECT_TRUE(is_multi_hom(phi, 2).ok);
    EXPECT_TRUE(is_multi_hom(phi, 4).ok);
  }
}

TEST(MultiHom, SparseSlicesAlwaysPass) {
  // Over F_2 a slice with at most two points admits only degenerate relations.
  const ProductSpace s(2, {1, 1});
  SplitMix64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    PartialMap phi(s, 1);
    for (std::uint64_t x = 0; x < 4; ++x)
      if (rng.below(2)) phi.set(x, std::vector<Residue>{static_cast<Residue>(rng.below(2))});
    EXPECT_TRUE(is_multi_hom(phi, 2).ok);
  }
}

TEST(MultiHom, CorruptionDetected) {
  const auto phi0 = dot_map(2);
  auto phi = PartialMap::restrict(phi0, all_points(phi0.space()));
  phi.set(5, std::vector<Residue>{static_cast<Residue>(1 - phi0.eval(5)[0])});
  const auto r = is_multi_hom(phi, 2);
  EXPECT_FALSE(r.ok);
  EXPECT_GE(r.direction, 0);
  EXPECT_EQ(r.witness.size(), 4u);
}

TEST(Quadruples, Examples) {
  const ProductSpace s(2, {1});
  EXPECT_EQ(count_d_additive_quadruples(s, std::vector<bool>(2, false), 0).total, 0u);
  const auto full = count_d_additive_quadruples(s, std::vector<bool>(2, true), 0);
  EXPECT_EQ(full.total, 8u);
}

TEST(Quadruples, MatchDirectEnumeration) {
  const ProductSpace s(3, {1, 1});
  SplitMix64 rng(6);
  const auto alpha = lab::random_multiaffine(s, 1, 6);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<bool> in(s.total_size());
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = rng.below(3) != 0;
    std::vector<std::uint64_t> dom;
    for (std::size_t i = 0; i < in.size(); ++i)
      if (in[i]) dom.push_back(i);
    auto sigma = lab::corrupt(PartialMap::restrict(alpha, dom), 0.3, trial);
    for (int d = 0; d < 2; ++d) {
      const auto a = count_d_additive_quadruples(s, in, d, &sigma);
      const auto b = oracle::quadruples_direct(s, in, d, &sigma);
      EXPECT_EQ(a.total, b.total);
      EXPECT_EQ(a.respected, b.respected);
      EXPECT_LE(a.respected, a.total);
      const auto clean = PartialMap::restrict(alpha, dom);
      const auto c = count_d_additive_quadruples(s, in, d, &clean);
      EXPECT_EQ(c.respected, c.total);
    }
  }
}

TEST(AffineExtension, FullDomain) {
  const auto s = single_group_space(3, 2);
  const auto alpha = lab::random_multiaffine(s, 1, 3);
  const auto phi = PartialMap::restrict(alpha, all_points(s));
  const auto ext = affine_extension(phi, Coset::whole(s.factor(0)), true);
  for (std::uint64_t x = 0; x < s.total_size(); ++x) EXPECT_EQ(ext.at(x), alpha.eval(x));
}

TEST(AffineExtension, RecoversDeletedPoint) {
  const auto s = single_group_space(2, 3);
  const auto alpha = lab::random_multiaffine(s, 2, 12);
  for (std::uint64_t gone = 0; gone < 8; ++gone) {
    std::vector<std::uint64_t> dom;
    for (std::uint64_t x = 0; x < 8; ++x)
      if (x != gone) dom.push_back(x);
    const auto ext = affine_extension(PartialMap::restrict(alpha, dom), Coset::whole(s.factor(0)), true);
    EXPECT_EQ(ext.at(gone), alpha.eval(gone));
  }
}

TEST(AffineExtension, DensityBoundary) {
  const auto s = single_group_space(5, 1);
  const auto alpha = lab::random_multiaffine(s, 1, 1);
  const std::vector<std::uint64_t> dom = {0, 1, 2, 3};
  EXPECT_THROW(affine_extension(PartialMap::restrict(alpha, dom), Coset::whole(s.factor(0))),
               PreconditionError);
}

TEST(AffineExtension, ProperCoset) {
  const Group g(PrimeModulus(3), 2);
  const Coset c(g, 1, {g.from_digits(std::vector<Residue>{1, 2})});
  const auto s = single_group_space(3, 2);
  const auto alpha = lab::random_multiaffine(s, 1, 2);
  const auto ext = affine_extension(PartialMap::restrict(alpha, c.members()), c, true);
  for (auto x : c.members()) EXPECT_EQ(ext.at(x), alpha.eval(x));
}

TEST(BestAffineAgreement, ExactAndCorrupted) {
  const auto s = single_group_space(2, 3);
  const auto alpha = lab::random_multiaffine(s, 1, 5);
  const auto dom = std::vector<std::uint64_t>{0, 1, 2, 4, 6, 7};
  auto phi = PartialMap::restrict(alpha, dom);
  EXPECT_EQ(best_affine_agreement(phi).agreement, dom.size());
  phi.set(4, std::vector<Residue>{static_cast<Residue>(1 - alpha.eval(4)[0])});
  EXPECT_EQ(best_affine_agreement(phi).agreement, dom.size() - 1);
}

TEST(BestAffineAgreement, MatchesReversedScan) {
  const auto s = single_group_space(2, 3);
  SplitMix64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    PartialMap phi(s, 1);
    for (std::uint64_t x = 0; x < 8; ++x)
      if (rng.below(4)) phi.set(x, std::vector<Residue>{static_cast<Residue>(rng.below(2))});
    const auto a = best_affine_agreement(phi);
    const auto b = oracle::affine_scan_reversed(phi);
    EXPECT_EQ(a.agreement, b.agreement);
    EXPECT_EQ(a.affine.map, detail::affine_from_code(s.modulus(), 1, 3, b.code));
  }
}

TEST(Arrangements, EmptyWord) {
  const ProductSpace s(2, {1, 1});
  const auto qs = enumerate_arrangements(s, std::vector<int>{}, 2, EnumerationMode::kExhaustive);
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_EQ(qs[0].points, std::vector<std::uint64_t>{2});
  const auto phi = PartialMap::restrict(lab::random_multiaffine(s, 1, 1), all_points(s));
  EXPECT_EQ(*arrangement_value(phi, qs[0]), std::vector<Residue>(phi.value(2).begin(), phi.value(2).end()));
}

TEST(Arrangements, SingleSplit) {
  const ProductSpace s(3, {1, 1});
  const std::uint64_t l = s.index_from(std::vector<Group::Element>{2, 1});
  const auto qs = enumerate_arrangements(s, std::vector<int>{0}, l, EnumerationMode::kExhaustive);
  ASSERT_EQ(qs.size(), 3u);
  for (Group::Element y = 0; y < 3; ++y) {
    const auto& q = qs[y];
    EXPECT_EQ(q.points[0], s.index_from(std::vector<Group::Element>{(2 + y) % 3, 1}));
    EXPECT_EQ(q.points[1], s.index_from(std::vector<Group::Element>{y, 1}));
    EXPECT_TRUE(is_valid_arrangement(s, q));
  }
}

// Independent recursion: the split in word[0] with parameter y, then the two
// halves with their own parameters.
void hand_arrangements(const ProductSpace& s, const std::vector<int>& word, std::size_t level,
                       std::uint64_t lengths, std::vector<std::vector<std::uint64_t>>& out) {
  if (level == word.size()) {
    out.push_back({lengths});
    return;
  }
  const int d = word[level];
  const Group& g = s.factor(d);
  for (Group::Element y = 0; y < g.size(); ++y) {
    std::vector<std::vector<std::uint64_t>> a, b;
    hand_arrangements(s, word, level + 1, s.with_component(lengths, d, g.add(s.component(lengths, d), y)), a);
    hand_arrangements(s, word, level + 1, s.with_component(lengths, d, y), b);
    for (const auto& u : a)
      for (const auto& v : b) {
        auto w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.push_back(w);
      }
  }
}

TEST(Arrangements, TwoSplitsMatchHandRecursion) {
  const ProductSpace s(2, {1, 1});
  const std::vector<int> word = {1, 0};
  for (std::uint64_t l = 0; l < 4; ++l) {
    const auto qs = enumerate_arrangements(s, word, l, EnumerationMode::kExhaustive);
    std::vector<std::vector<std::uint64_t>> want;
    hand_arrangements(s, word, 0, l, want);
    ASSERT_EQ(qs.size(), 8u);
    std::multiset<std::vector<std::uint64_t>> got_set, want_set(want.begin(), want.end());
    for (const auto& q : qs) {
      EXPECT_EQ(q.points.size(), 4u);
      EXPECT_TRUE(is_valid_arrangement(s, q));
      got_set.insert(q.points);
    }
    EXPECT_EQ(got_set, want_set);
  }
}

TEST(Arrangements, SampledModeIsSeeded) {
  const ProductSpace s(3, {1, 1});
  const std::vector<int> word = {0, 1, 0};
  const auto a = enumerate_arrangements(s, word, 4, EnumerationMode::kSample, 9, 20);
  const auto b = enumerate_arrangements(s, word, 4, EnumerationMode::kSample, 9, 20);
  ASSERT_EQ(a.size(), 20u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].points, b[i].points);
    EXPECT_TRUE(is_valid_arrangement(s, a[i]));
  }
}

TEST(Arrangements, ValueDependsOnlyOnLengths) {
  const ProductSpace s(2, {1, 1});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto phi = PartialMap::restrict(lab::random_multiaffine(s, 1, seed), all_points(s));
    for (const std::vector<int>& word : {std::vector<int>{0}, std::vector<int>{1, 0}, std::vector<int>{0, 1, 0}})
      for (std::uint64_t l = 0; l < 4; ++l) {
        std::set<std::vector<Residue>> vals;
        for (const auto& q : enumerate_arrangements(s, word, l, EnumerationMode::kExhaustive))
          vals.insert(*arrangement_value(phi, q));
        EXPECT_EQ(vals.size(), 1u);
      }
  }
}

TEST(Arrangements, MissingPointGivesNoValue) {
  const ProductSpace s(2, {1, 1});
  PartialMap phi(s, 1);
  phi.set(0, std::vector<Residue>{1});
  const auto q = make_arrangement(s, std::vector<int>{0}, 2, std::vector<Group::Element>{0});
  EXPECT_FALSE(arrangement_value(phi, q).has_value());
}

TEST(TriArrangements, Singleton) {
  const ProductSpace s(3, {1, 1});
  const auto phi = PartialMap::restrict(lab::random_multiaffine(s, 1, 2), all_points(s));
  const auto q = make_tri_arrangement(s, std::vector<int>{}, 7, std::vector<Group::Element>{});
  EXPECT_EQ(q.points, std::vector<std::uint64_t>{7});
  EXPECT_EQ((*tri_arrangement_value(phi, q))[0], phi.value(7)[0]);
}

TEST(TriArrangements, AffineDirectionIsInvariant) {
  const ProductSpace s(3, {1, 1});
  const auto phi = PartialMap::restrict(lab::random_multiaffine(s, 1, 4), all_points(s));
  const std::vector<int> word = {0};
  for (std::uint64_t l = 0; l < 9; ++l)
    for (Group::Element u = 0; u < 3; ++u)
      for (Group::Element v = 0; v < 3; ++v) {
        const auto q = make_tri_arrangement(s, word, l, std::vector<Group::Element>{u, v});
        EXPECT_TRUE(is_valid_tri_arrangement(s, q));
        EXPECT_EQ((*tri_arrangement_value(phi, q))[0], phi.value(l)[0]);
      }
}

TEST(TriArrangements, MatchesNinePointExpansion) {
  const ProductSpace s(2, {1, 1});
  SplitMix64 rng(3);
  const std::vector<int> word = {1, 0};  // outer split along factor 0
  ASSERT_EQ(tri_arrangement_param_count(s, word), 8u);
  for (int trial = 0; trial < 20; ++trial) {
    PartialMap phi(s, 1);
    for (std::uint64_t x = 0; x < 4; ++x) phi.set(x, std::vector<Residue>{static_cast<Residue>(rng.below(2))});
    const std::uint64_t l = rng.below(4);
    std::vector<Group::Element> prm(8);
    for (auto& v : prm) v = rng.below(2);
    const auto q = make_tri_arrangement(s, word, l, prm);
    // Outer (u, v, w) in factor 0, then inner (u, v, w) in factor 1 for each.
    const Group::Element l0 = s.component(l, 0), l1 = s.component(l, 1);
    const Group::Element outer[3] = {prm[0], prm[1], (prm[0] + prm[1] + l0) % 2};
    int sum = 0;
    for (int i = 0; i < 3; ++i) {
      const auto iu = prm[2 + 2 * i], iv = prm[3 + 2 * i];
      const Group::Element inner[3] = {iu, iv, (iu + iv + l1) % 2};
      for (int j = 0; j < 3; ++j) {
        const auto x = s.index_from(std::vector<Group::Element>{outer[i], inner[j]});
        sum += static_cast<int>(phi.value(x)[0]);
      }
    }
    EXPECT_EQ((*tri_arrangement_value(phi, q))[0], static_cast<Residue>(sum % 2));
  }
}

TEST(Drc, ZeroTIsIdentity) {
  const ProductSpace s(3, {1, 1});
  const auto phi = lab::random_restriction(lab::random_multiaffine(s, 2, 1), 0.5, 1);
  EXPECT_EQ(drc_filter(phi, 0, 5).kept, phi);
}

TEST(Drc, KeptPointsSatisfyFilter) {
  const ProductSpace s(3, {1, 2});
  const auto phi = lab::random_restriction(lab::random_multiaffine(s, 2, 3), 0.7, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = drc_filter(phi, 1, seed);
    const LinearMapFp lin(r.pi);
    for (auto x : phi.domain())
      EXPECT_EQ(r.kept.contains(x), lin.apply(phi.value(x)) == r.psi.eval(x));
  }
}

TEST(Drc, PureTensorKeepProbability) {
  const ProductSpace s(3, {1, 1});
  PartialMap phi(s, 1);
  phi.set(s.index_from(std::vector<Group::Element>{1, 2}), std::vector<Residue>{1});
  const int trials = 3000;
  int kept = 0;
  for (int t = 0; t < trials; ++t) kept += drc_filter(phi, 1, static_cast<std::uint64_t>(t)).kept.domain_size() > 0;
  const double p = 1.0 / 3, mean = static_cast<double>(kept) / trials;
  EXPECT_LT(std::abs(mean - p), 4 * std::sqrt(p * (1 - p) / trials));
}

TEST(Census, GlobalMapIsFullyRespected) {
  const ProductSpace s(2, {1, 1});
  const auto phi = PartialMap::restrict(lab::random_multiaffine(s, 1, 7), all_points(s));
  const auto r = respected_census(phi, {{1, 0}, {0, 1}}, 4, 20, 1);
  ASSERT_TRUE(r.agree_fraction);
  EXPECT_EQ(*r.agree_fraction, 1.0);
}

TEST(Census, EmptyDomainHasNoData) {
  const ProductSpace s(2, {1, 1});
  const auto r = respected_census(PartialMap(s, 1), {{1, 0}}, 4, 10, 1);
  EXPECT_FALSE(r.agree_fraction.has_value());
}

TEST(Census, CorruptedMapIsPartlyRespected) {
  const ProductSpace s(2, {2, 2});
  const auto phi = lab::corrupt(PartialMap::restrict(lab::random_multiaffine(s, 1, 3), all_points(s)), 0.1, 3);
  const auto a = respected_census(phi, {{1, 0}, {1, 0}}, 16, 50, 8);
  const auto b = respected_census(phi, {{1, 0}, {1, 0}}, 16, 50, 8);
  ASSERT_TRUE(a.agree_fraction);
  EXPECT_GT(*a.agree_fraction, 0.0);
  EXPECT_LT(*a.agree_fraction, 1.0);
  EXPECT_EQ(a.agreeing, b.agreeing);
  EXPECT_EQ(a.with_data, b.with_data);
}

TEST(InverseSearch, RecoversGlobalMap) {
  const ProductSpace s(2, {1, 2});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto phi = lab::random_restriction(lab::random_multiaffine(s, 1, seed), 0.5, seed);
    const auto r = multiaffine_inverse_search(phi);
    EXPECT_EQ(r.agreement, phi.domain_size());
    for (auto x : phi.domain()) EXPECT_EQ(r.map.eval(x)[0], phi.value(x)[0]);
  }
}

TEST(InverseSearch, EmptyDomain) {
  const ProductSpace s(2, {1, 1});
  EXPECT_EQ(multiaffine_inverse_search(PartialMap(s, 1)).agreement, 0u);
}

}  // namespace
}  // namespace hofa
