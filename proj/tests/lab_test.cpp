// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hofa/hofa.hpp"
#include "hofa/oracle.hpp"

namespace hofa {
namespace {

using io::Json;

TEST(Records, HashIsKeyOrderIndependent) {
  const Json a = Json::parse(R"({"b": 1, "a": [1, 2]})");
  const Json b = Json::parse(R"({"a": [1, 2], "b": 1})");
  EXPECT_EQ(lab::config_hash(a), lab::config_hash(b));
  EXPECT_NE(lab::config_hash(a), lab::config_hash(Json::parse(R"({"a": [1, 2], "b": 2})")));
  EXPECT_EQ(lab::hex64(0xabcULL), "0000000000000abc");
  // FNV-1a 64 of the empty object "{}".
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : std::string("{}")) h = (h ^ c) * 0x100000001b3ULL;
  EXPECT_EQ(lab::config_hash(Json::object()), h);
}

TEST(Records, JsonAndCsv) {
  lab::ResultRecord r;
  r.experiment = "demo";
  r.config = {{"seed", 3}};
  r.metrics = {{"z", 1.5}, {"a", 2.0}};
  const Json j = r.to_json();
  EXPECT_EQ(j["config_hash"], r.hash());
  EXPECT_FALSE(j.contains("witnesses"));
  const auto csv = lab::to_csv({r, r});
  EXPECT_EQ(csv, "experiment,config_hash,a,z\ndemo," + r.hash() + ",2.0,1.5\ndemo," + r.hash() + ",2.0,1.5\n");
  lab::ResultRecord other = r;
  other.metrics["extra"] = 0;
  EXPECT_THROW(lab::to_csv({r, other}), SchemaError);
}

TEST(Generators, Deterministic) {
  const ProductSpace s(3, {1, 2});
  EXPECT_EQ(io::to_json(lab::random_multiaffine(s, 2, 9)), io::to_json(lab::random_multiaffine(s, 2, 9)));
  EXPECT_NE(io::to_json(lab::random_multiaffine(s, 2, 9)), io::to_json(lab::random_multiaffine(s, 2, 10)));
  EXPECT_EQ(lab::random_table(s, 1).values(), lab::random_table(s, 1).values());
  EXPECT_EQ(lab::random_poly(5, 2, 2, 3), lab::random_poly(5, 2, 2, 3));
}

TEST(Generators, TablesAreBounded) {
  const ProductSpace s(2, {4});
  const auto f = lab::random_table(s, 5);
  EXPECT_TRUE(f.bounded());
  EXPECT_LE(f.max_modulus(), 1.0);
  const auto u = lab::random_unimodular_table(s, 5);
  for (const auto& z : u.values()) EXPECT_NEAR(std::abs(z), 1.0, 1e-12);
}

TEST(Generators, RestrictionAndCorruption) {
  const ProductSpace s(3, {1, 2});
  const auto phi = lab::random_multiaffine(s, 2, 4);
  const auto r = lab::random_restriction(phi, 0.5, 4);
  EXPECT_EQ(r.domain_size(), 14u);
  for (auto x : r.domain()) EXPECT_EQ(std::vector<Residue>(r.value(x).begin(), r.value(x).end()), phi.eval(x));
  EXPECT_EQ(lab::corrupt(r, 0.0, 1), r);
  const auto c = lab::corrupt(r, 0.25, 1);
  std::size_t changed = 0;
  for (auto x : r.domain()) changed += !std::equal(c.value(x).begin(), c.value(x).end(), r.value(x).begin());
  EXPECT_EQ(changed, 4u);
  EXPECT_EQ(c.domain(), r.domain());
}

TEST(Generators, VarietiesAreNonempty) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto v = lab::random_variety(ProductSpace(3, {1, 1}), 2, seed);
    EXPECT_GT(v.size(), 0u);
  }
}

TEST(Generators, PolyDegree) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_LE(lab::random_poly(5, 2, 3, seed).degree(), 3);
}

TEST(CosetExperiment, MeanNearExpectation) {
  const auto r = lab::coset_intersection_experiment(2, 6, 2, 0.5, 2000, 3);
  EXPECT_EQ(r.set_size, 32u);
  EXPECT_EQ(r.expected, 2.0);
  EXPECT_LT(std::abs(r.mean - r.expected), 4 * r.std_error);
  const auto again = lab::coset_intersection_experiment(2, 6, 2, 0.5, 2000, 3);
  EXPECT_EQ(again.mean, r.mean);
}

TEST(Io, RoundTrips) {
  const ProductSpace s(3, {1, 2});
  EXPECT_EQ(io::space_from_json(io::to_json(s)), s);
  const auto f = lab::random_table(s, 2);
  EXPECT_EQ(io::table_from_json(io::to_json(f)).values(), f.values());
  const auto fh = fourier(f);
  EXPECT_EQ(io::spectrum_from_json(io::to_json(fh)).coeffs, fh.coeffs);
  const auto phi = lab::random_multiaffine(s, 2, 1);
  EXPECT_EQ(io::to_json(io::map_from_json(io::to_json(phi))), io::to_json(phi));
  SplitMix64 rng(3);
  const auto form = lab::random_form(s, {0, 1}, rng);
  EXPECT_EQ(io::form_from_json(io::to_json(form)), form);
  const auto pm = lab::random_restriction(phi, 0.4, 2);
  EXPECT_EQ(io::partial_map_from_json(io::to_json(pm)), pm);
  const auto v = lab::random_variety(s, 1, 5);
  const auto v2 = io::variety_from_json(io::to_json(v));
  EXPECT_EQ(v2.members(), v.members());
  const auto g = lab::random_poly(5, 2, 3, 1);
  EXPECT_EQ(io::poly_from_json(io::to_json(g)), g);
  const auto t = g.table();
  EXPECT_EQ(io::group_function_from_json(io::to_json(t)), t);
}

TEST(Io, SchemaErrors) {
  EXPECT_THROW(io::space_from_json(Json::parse(R"({"p": 4, "dims": [1]})")), SchemaError);
  EXPECT_THROW(io::space_from_json(Json::parse(R"({"p": "x"})")), SchemaError);
  EXPECT_THROW(io::table_from_json(Json::parse(R"({"space": {"p": 2, "dims": [1]}, "values": [[1, 0]]})")),
               SchemaError);
  EXPECT_THROW(io::read_json("/nonexistent/file.json"), SchemaError);
}

TEST(Golden, SuitesAgreeWithOracles) {
  for (const auto& name : oracle::suite_names()) {
    if (name == "coset-intersection") continue;
    const auto golden = oracle::golden_suite(name, 1);
    EXPECT_FALSE(golden["entries"].empty()) << name;
    EXPECT_FALSE(oracle::check_golden(golden, 1e-9).has_value()) << name;
  }
}

TEST(Golden, DivergenceIsLocated) {
  auto golden = oracle::golden_suite("qr-micro", 2);
  auto& entries = golden["entries"];
  const std::string key = entries.begin().key();
  entries[key]["values"]["eta_min"] = 0.9;
  const auto d = oracle::check_golden(golden, 1e-9);
  ASSERT_TRUE(d.has_value());
  EXPECT_NE(d->find("eta_min"), std::string::npos);
  EXPECT_NE(d->find(key), std::string::npos);
}

TEST(Golden, Deterministic) {
  EXPECT_EQ(io::dump(oracle::golden_suite("poly-micro", 4)), io::dump(oracle::golden_suite("poly-micro", 4)));
}

}  // namespace
}  // namespace hofa
