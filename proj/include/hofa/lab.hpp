// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded instance generators, experiment records and CSV export.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hofa/error.hpp"
#include "hofa/field.hpp"
#include "hofa/freiman.hpp"
#include "hofa/harmonic.hpp"
#include "hofa/multiaffine.hpp"
#include "hofa/polynomial.hpp"
#include "hofa/random.hpp"

namespace hofa::lab {

using Json = nlohmann::json;

// --- records ----------------------------------------------------------------

/// FNV-1a 64 of the canonical (sorted-key, compact) JSON text.
inline std::uint64_t config_hash(const Json& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct ResultRecord {
  std::string experiment;
  Json config = Json::object();
  std::map<std::string, double> metrics;
  Json witnesses;  ///< null when absent

  std::string hash() const { return hex64(config_hash(config)); }

  Json to_json() const {
    Json j = {{"experiment", experiment},
              {"config_hash", hash()},
              {"config", config},
              {"metrics", metrics}};
    if (!witnesses.is_null()) j["witnesses"] = witnesses;
    return j;
  }
};

inline std::string csv_header(const ResultRecord& r) {
  std::string s = "experiment,config_hash";
  for (const auto& [k, v] : r.metrics) s += "," + k;
  return s + "\n";
}

/// One row; metric columns in name order.
inline std::string csv_row(const ResultRecord& r) {
  std::string s = r.experiment + "," + r.hash();
  for (const auto& [k, v] : r.metrics) s += "," + Json(v).dump();
  return s + "\n";
}

/// Header plus one row per record; every record must carry the same metrics.
inline std::string to_csv(const std::vector<ResultRecord>& rs) {
  if (rs.empty()) return "experiment,config_hash\n";
  std::string out = csv_header(rs[0]);
  for (const auto& r : rs) {
    detail::check_schema(csv_header(r) == csv_header(rs[0]), "records have different metric columns");
    out += csv_row(r);
  }
  return out;
}

// --- generators ---------------------------------------------------------------

/// Values r e^{i theta} with r, theta uniform; flagged bounded.
inline FunctionTable random_table(const ProductSpace& s, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Complex> v(s.total_size());
  for (auto& z : v) {
    const double r = rng.uniform();
    const double t = 2 * std::numbers::pi * rng.uniform();
    z = std::polar(r, t);
  }
  return FunctionTable(s, std::move(v), true);
}

/// Values uniform on the unit circle; flagged bounded.
inline FunctionTable random_unimodular_table(const ProductSpace& s, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Complex> v(s.total_size());
  for (auto& z : v) z = std::polar(1.0, 2 * std::numbers::pi * rng.uniform());
  return FunctionTable(s, std::move(v), true);
}

inline MultilinearForm random_form(const ProductSpace& s, const Subset& support, SplitMix64& rng) {
  auto z = MultilinearForm::zero(s, support);
  std::vector<Residue> c(z.coeffs().size());
  for (auto& e : c) e = static_cast<Residue>(rng.below(s.p()));
  return MultilinearForm(s, support, std::move(c));
}

/// Uniform map with a part for every subset in `family` (all subsets of [k]
/// when empty).
inline MultiAffineMap random_multiaffine(const ProductSpace& s, int h, std::uint64_t seed,
                                         std::vector<Subset> family = {}) {
  if (family.empty())
    for (std::uint32_t mask = 0; mask < (1u << s.k()); ++mask) {
      Subset I;
      for (int i = 0; i < s.k(); ++i)
        if (mask >> i & 1) I.push_back(i);
      family.push_back(I);
    }
  SplitMix64 rng(seed);
  MultiAffineMap m(s, h);
  for (const auto& I : family) {
    std::vector<MultilinearForm> forms;
    for (int c = 0; c < h; ++c) forms.push_back(random_form(s, I, rng));
    m.add_part(I, forms);
  }
  return m;
}

/// A uniformly random subset of exactly `size` points, in increasing order.
inline std::vector<std::uint64_t> random_subset(std::uint64_t universe, std::uint64_t size,
                                                SplitMix64& rng) {
  detail::check_schema(size <= universe, "subset larger than the universe");
  require_budget(universe, "random_subset");
  std::vector<std::uint64_t> all(universe);
  for (std::uint64_t i = 0; i < universe; ++i) all[i] = i;
  for (std::uint64_t i = 0; i < size; ++i) std::swap(all[i], all[i + rng.below(universe - i)]);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

inline std::uint64_t rounded_count(double fraction, std::uint64_t n) {
  detail::check_schema(fraction >= 0 && fraction <= 1, "fraction must be in [0, 1]");
  return static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(n)));
}

/// phi restricted to round(density |G|) uniformly chosen points.
inline PartialMap random_restriction(const MultiAffineMap& phi, double density, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto n = phi.space().total_size();
  const auto dom = random_subset(n, rounded_count(density, n), rng);
  return PartialMap::restrict(phi, dom);
}

/// Changes round(fraction |A|) values of phi, each by a uniform nonzero
/// vector. Fraction 0 returns phi unchanged.
inline PartialMap corrupt(const PartialMap& phi, double fraction, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto dom = phi.domain();
  const auto pick = random_subset(dom.size(), rounded_count(fraction, dom.size()), rng);
  PartialMap out = phi;
  const std::uint32_t p = phi.space().p();
  const std::uint64_t nonzero = sat_pow(p, static_cast<std::uint64_t>(phi.h())) - 1;
  const auto& m = phi.space().modulus();
  for (auto i : pick) {
    std::uint64_t code = 1 + rng.below(nonzero);
    const auto v = phi.value(dom[i]);
    std::vector<Residue> w(v.begin(), v.end());
    for (int c = phi.h() - 1; c >= 0; --c) {
      w[c] = m.add(w[c], static_cast<Residue>(code % p));
      code /= p;
    }
    out.set(dom[i], w);
  }
  return out;
}

/// Variety of a random map, its target the value at a random point (so it
/// is never empty).
inline Variety random_variety(const ProductSpace& s, int codim, std::uint64_t seed,
                              std::vector<Subset> family = {}) {
  auto map = random_multiaffine(s, codim, seed, std::move(family));
  SplitMix64 rng(derive_seed(seed, 1));
  const auto target = map.eval(rng.below(s.total_size()));
  return Variety(std::move(map), target);
}

/// Uniform polynomial on the monomials of degree at most d.
inline MonomialPoly random_poly(std::uint32_t p, int n, int d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto monos = monomials_up_to(p, n, d);
  std::vector<Residue> c(monos.size());
  for (auto& e : c) e = static_cast<Residue>(rng.below(p));
  return poly_from_coeffs(p, n, monos, c);
}

// --- experiments ------------------------------------------------------------

struct CosetIntersectionResult {
  std::uint64_t set_size = 0;
  double delta = 0;
  double expected = 0;   ///< delta p^r
  double mean = 0;
  double std_error = 0;  ///< sample standard deviation / sqrt(trials)
  std::uint64_t trials = 0;
};

/// S is a uniform subset of F_p^n of size round(delta p^n). Each trial draws
/// x_0, ..., x_r uniformly and counts lambda in F_p^r with
/// x_0 + sum lambda_i x_i in S.
inline CosetIntersectionResult coset_intersection_experiment(std::uint32_t p, int n, int r,
                                                             double delta, std::uint64_t trials,
                                                             std::uint64_t seed) {
  detail::check_schema(trials >= 2, "need at least two trials");
  const Group g(PrimeModulus(p), n);
  const Group lam(PrimeModulus(p), r);
  require_budget(sat_mul(trials, lam.size()), "coset_intersection_experiment");
  SplitMix64 rng(seed);
  const auto members = random_subset(g.size(), rounded_count(delta, g.size()), rng);
  std::vector<bool> in(g.size(), false);
  for (auto x : members) in[x] = true;
  CosetIntersectionResult res;
  res.set_size = members.size();
  res.delta = static_cast<double>(members.size()) / static_cast<double>(g.size());
  res.expected = res.delta * static_cast<double>(lam.size());
  res.trials = trials;
  double sum = 0, sumsq = 0;
  std::vector<Group::Element> x(r + 1);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (auto& e : x) e = rng.below(g.size());
    std::uint64_t count = 0;
    for (Group::Element l = 0; l < lam.size(); ++l) {
      Group::Element y = x[0];
      for (int i = 0; i < r; ++i) y = g.add(y, g.scale(lam.digit(l, i), x[i + 1]));
      count += in[y];
    }
    sum += static_cast<double>(count);
    sumsq += static_cast<double>(count) * static_cast<double>(count);
  }
  const double tn = static_cast<double>(trials);
  res.mean = sum / tn;
  const double var = std::max(0.0, (sumsq - tn * res.mean * res.mean) / (tn - 1));
  res.std_error = std::sqrt(var / tn);
  return res;
}

}  // namespace hofa::lab
