// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations, independent of the fast paths in
// the library, and the golden-file suites built from them.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hofa/budget.hpp"
#include "hofa/error.hpp"
#include "hofa/field.hpp"
#include "hofa/freiman.hpp"
#include "hofa/harmonic.hpp"
#include "hofa/lab.hpp"
#include "hofa/multiaffine.hpp"
#include "hofa/polynomial.hpp"

namespace hofa::oracle {

using Json = nlohmann::json;

// --- harmonic ---------------------------------------------------------------

/// f^(r) = E_x f(x) omega^{-r.x} by direct summation, one character at a time.
inline std::vector<Complex> fourier_direct(const FunctionTable& f) {
  const Group g = f.space().flat();
  require_budget(sat_mul(g.size(), g.size()), "fourier_direct");
  const double p = g.p();
  std::vector<Complex> out(g.size());
  for (Group::Element r = 0; r < g.size(); ++r) {
    Complex acc = 0;
    for (Group::Element x = 0; x < g.size(); ++x) {
      const double angle = -2 * std::numbers::pi * static_cast<double>(g.dot(r, x)) / p;
      acc += f[x] * Complex(std::cos(angle), std::sin(angle));
    }
    out[r] = acc / static_cast<double>(g.size());
  }
  return out;
}

/// E_{x, h_1..h_k} prod_w Conj^{|w|} f(x + w.h), by (k+1)-fold enumeration.
inline double uk_power_direct(const FunctionTable& f, int k) {
  const Group g = f.space().flat();
  const std::uint64_t n = g.size();
  require_budget(sat_mul(sat_pow(n, static_cast<std::uint64_t>(k) + 1), std::uint64_t{1} << k),
                 "uk_power_direct");
  std::vector<Group::Element> h(k, 0);
  Complex total = 0;
  const std::uint64_t tuples = sat_pow(n, static_cast<std::uint64_t>(k));
  for (Group::Element x = 0; x < n; ++x)
    for (std::uint64_t t = 0; t < tuples; ++t) {
      std::uint64_t r = t;
      for (int i = 0; i < k; ++i) {
        h[i] = r % n;
        r /= n;
      }
      Complex prod = 1;
      for (std::uint32_t w = 0; w < (1u << k); ++w) {
        Group::Element y = x;
        for (int i = 0; i < k; ++i)
          if (w >> i & 1) y = g.add(y, h[i]);
        prod *= (std::popcount(w) % 2) ? std::conj(f[y]) : f[y];
      }
      total += prod;
    }
  return (total / static_cast<double>(sat_mul(n, tuples))).real();
}

/// E_{x, y in G_[k]} prod_I Conj^{|I|} f(x_I, y_{[k] \ I}).
inline double box_power_direct(const FunctionTable& f) {
  const ProductSpace& s = f.space();
  const std::uint64_t n = s.total_size();
  const int k = s.k();
  require_budget(sat_mul(sat_mul(n, n), std::uint64_t{1} << k), "box_power_direct");
  std::vector<Group::Element> pt(k);
  Complex total = 0;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      Complex prod = 1;
      for (std::uint32_t I = 0; I < (1u << k); ++I) {
        for (int i = 0; i < k; ++i) pt[i] = (I >> i & 1) ? s.component(x, i) : s.component(y, i);
        const Complex v = f[s.index_from(pt)];
        prod *= (std::popcount(I) % 2) ? std::conj(v) : v;
      }
      total += prod;
    }
  return (total / static_cast<double>(n * n)).real();
}

// --- multiaffine ------------------------------------------------------------

/// Quasirandomness report from explicit column sets.
inline QuasirandomReport quasirandom_direct(const MultiAffineMap& beta,
                                            std::span<const Residue> lambda, const Coset& c1,
                                            const Coset& c2) {
  const ProductSpace& s = beta.space();
  const std::vector<Residue> target(lambda.begin(), lambda.end());
  std::vector<std::set<Group::Element>> cols;
  for (auto x : c1.members()) {
    std::set<Group::Element> v;
    for (auto y : c2.members())
      if (beta.eval(s.index_from(std::vector<Group::Element>{x, y})) == target) v.insert(y);
    cols.push_back(std::move(v));
  }
  QuasirandomReport rep;
  rep.c1_size = c1.size();
  rep.c2_size = c2.size();
  if (std::all_of(cols.begin(), cols.end(), [](const auto& v) { return v.empty(); })) {
    rep.empty = true;
    return rep;
  }
  std::map<std::uint64_t, std::uint64_t> freq;
  for (const auto& v : cols) ++freq[v.size()];
  std::uint64_t best = 0, best_freq = 0;
  for (const auto& [c, f] : freq)
    if (f > best_freq || (f == best_freq && c > best)) {
      best = c;
      best_freq = f;
    }
  const double n1 = static_cast<double>(cols.size()), n2 = static_cast<double>(c2.size());
  rep.delta_count = best;
  rep.delta = static_cast<double>(best) / n2;
  std::uint64_t xbad = 0;
  for (const auto& v : cols) xbad += v.size() != best;
  rep.x_failure = static_cast<double>(xbad) / n1;
  const double want = rep.delta * rep.delta * n2;
  std::uint64_t bad = 0;
  for (const auto& a : cols)
    for (const auto& b : cols) {
      std::uint64_t inter = 0;
      for (auto y : a) inter += b.count(y);
      bad += std::abs(static_cast<double>(inter) - want) > 1e-9;
    }
  rep.pair_failure = static_cast<double>(bad) / (n1 * n1);
  rep.eta_min = std::max(rep.x_failure, rep.pair_failure);
  return rep;
}

/// Partition rank of a bilinear form: the rank of its coefficient matrix.
inline std::size_t bilinear_partition_rank(const MultilinearForm& alpha) {
  detail::check_schema(alpha.support().size() == 2, "form is not bilinear");
  const auto sh = alpha.shape();
  MatrixFp m(alpha.space().modulus(), sh[0], sh[1]);
  m.data = alpha.coeffs();
  return rank_fp(m);
}

// --- freiman ----------------------------------------------------------------

/// d-additive quadruples by enumerating all of S^4.
inline QuadrupleCount quadruples_direct(const ProductSpace& s, const std::vector<bool>& in_s, int d,
                                        const PartialMap* sigma = nullptr) {
  std::vector<std::uint64_t> pts;
  for (std::uint64_t x = 0; x < in_s.size(); ++x)
    if (in_s[x]) pts.push_back(x);
  require_budget(sat_pow(pts.size(), 4), "quadruples_direct");
  const Group& gd = s.factor(d);
  const auto& m = s.modulus();
  QuadrupleCount out;
  for (auto x : pts)
    for (auto y : pts)
      for (auto z : pts)
        for (auto w : pts) {
          bool same = true;
          for (int i = 0; i < s.k() && same; ++i)
            if (i != d)
              same = s.component(x, i) == s.component(y, i) && s.component(x, i) == s.component(z, i) &&
                     s.component(x, i) == s.component(w, i);
          if (!same) continue;
          if (gd.sub(gd.add(gd.sub(s.component(x, d), s.component(y, d)), s.component(z, d)),
                     s.component(w, d)) != 0)
            continue;
          ++out.total;
          if (!sigma) continue;
          bool ok = true;
          for (int c = 0; c < sigma->h(); ++c)
            ok = ok && m.sub(m.add(m.sub(sigma->value(x)[c], sigma->value(y)[c]), sigma->value(z)[c]),
                             sigma->value(w)[c]) == 0;
          out.respected += ok;
        }
  return out;
}

struct ScanResult {
  std::uint64_t agreement = 0;
  std::uint64_t code = 0;  ///< lexicographic index of the chosen candidate
};

/// Best affine agreement over the whole group, scanning candidates from the
/// last code down and keeping ties, so the smallest maximizer survives.
inline ScanResult affine_scan_reversed(const PartialMap& phi) {
  const Group& g = phi.space().factor(0);
  const auto& m = g.modulus();
  const int h = phi.h(), n = g.dim();
  const std::uint64_t count = sat_pow(m.p(), static_cast<std::uint64_t>(h) * (n + 1));
  const auto dom = phi.domain();
  require_budget(sat_mul(count, dom.size() + 1), "affine_scan_reversed");
  ScanResult best;
  for (std::uint64_t code = count; code-- > 0;) {
    std::vector<Residue> digits(h * (n + 1));
    std::uint64_t r = code;
    for (std::size_t i = digits.size(); i-- > 0;) {
      digits[i] = static_cast<Residue>(r % m.p());
      r /= m.p();
    }
    std::uint64_t agree = 0;
    for (auto x : dom) {
      const auto xd = g.digits(x);
      bool ok = true;
      for (int c = 0; c < h && ok; ++c) {
        Residue v = digits[c * (n + 1)];
        for (int j = 0; j < n; ++j) v = m.add(v, m.mul(digits[c * (n + 1) + 1 + j], xd[j]));
        ok = v == phi.value(x)[c];
      }
      agree += ok;
    }
    if (agree >= best.agreement) best = {agree, code};
  }
  return best;
}

/// Best polynomial agreement by a reversed scan over coefficient vectors.
inline ScanResult poly_agreement_reversed(const GroupFunctionH& f, int d) {
  const std::uint32_t p = f.space().p();
  const int n = f.space().dims()[0];
  const auto monos = monomials_up_to(p, n, d);
  const std::size_t nm = monos.size();
  const int h = f.h();
  const std::uint64_t count = sat_pow(p, static_cast<std::uint64_t>(h) * nm);
  require_budget(sat_mul(count, f.size()), "poly_agreement_reversed");
  ScanResult best;
  for (std::uint64_t code = count; code-- > 0;) {
    std::vector<Residue> digits(h * nm);
    std::uint64_t r = code;
    for (std::size_t i = digits.size(); i-- > 0;) {
      digits[i] = static_cast<Residue>(r % p);
      r /= p;
    }
    std::vector<MonomialPoly> comps;
    for (int c = 0; c < h; ++c)
      comps.push_back(poly_from_coeffs(p, n, monos, std::span<const Residue>(digits).subspan(c * nm, nm)));
    std::uint64_t agree = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      bool ok = true;
      for (int c = 0; c < h && ok; ++c) ok = comps[c].eval(f.group(), x) == f.at(x, c);
      agree += ok;
    }
    if (agree >= best.agreement) best = {agree, code};
  }
  return best;
}

// --- polynomial -------------------------------------------------------------

/// Degree test over all (x, a_1, ..., a_{d+1}) in G^{d+2}, each derivative
/// applied as a function table.
inline bool degree_test_full(const GroupFunctionH& f, int d) {
  const Group& g = f.group();
  require_budget(sat_mul(sat_pow(g.size(), static_cast<std::uint64_t>(d) + 1),
                         sat_mul(f.size(), static_cast<std::uint64_t>(d) + 1)),
                 "degree_test_full");
  std::function<bool(const GroupFunctionH&, int)> rec = [&](const GroupFunctionH& cur, int left) {
    if (left == 0)
      return std::all_of(cur.values().begin(), cur.values().end(), [](Residue v) { return v == 0; });
    for (Group::Element a = 0; a < g.size(); ++a)
      if (!rec(delta(cur, a), left - 1)) return false;
    return true;
  };
  return rec(f, d + 1);
}

// --- golden suites ----------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "harmonic-micro", "mixed-conv-micro", "prank-micro",   "qr-micro",
      "freiman-micro",  "affine-micro",     "poly-micro",    "coset-intersection"};
  return names;
}

namespace detail {

inline Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

inline std::vector<Json> suite_configs(const std::string& suite, std::uint64_t seed) {
  std::vector<Json> out;
  auto base = [&](std::uint64_t i) {
    return Json{{"suite", suite}, {"index", i}, {"seed", derive_seed(seed, i)}};
  };
  if (suite == "harmonic-micro") {
    for (std::uint64_t i = 0; i < 20; ++i) {
      Json c = base(i);
      c["space"] = {{"p", 2}, {"dims", {4}}};
      out.push_back(c);
    }
  } else if (suite == "mixed-conv-micro") {
    const std::vector<std::vector<int>> words = {{0}, {1}, {0, 1}, {1, 0}, {0, 0}, {1, 1, 0}};
    for (std::uint64_t i = 0; i < words.size(); ++i) {
      Json c = base(i);
      c["space"] = {{"p", 2}, {"dims", {1, 1}}};
      c["word"] = words[i];
      out.push_back(c);
    }
  } else if (suite == "prank-micro") {
    for (std::uint64_t i = 0; i < 10; ++i) {
      Json c = base(i);
      c["space"] = {{"p", 2}, {"dims", {3, 3}}};
      out.push_back(c);
    }
  } else if (suite == "qr-micro") {
    for (int n = 2; n <= 4; ++n) {
      Json c = base(n);
      c["n"] = n;
      out.push_back(c);
    }
  } else if (suite == "freiman-micro") {
    for (std::uint64_t i = 0; i < 8; ++i) {
      Json c = base(i);
      c["space"] = {{"p", 3}, {"dims", {1, 1}}};
      c["direction"] = static_cast<int>(i % 2);
      c["density"] = 0.6;
      c["corruption"] = 0.2;
      out.push_back(c);
    }
  } else if (suite == "affine-micro") {
    for (std::uint64_t i = 0; i < 8; ++i) {
      Json c = base(i);
      c["space"] = {{"p", 3}, {"dims", {2}}};
      c["density"] = 0.8;
      c["corruption"] = 0.25;
      out.push_back(c);
    }
  } else if (suite == "poly-micro") {
    std::uint64_t i = 0;
    for (int n = 1; n <= 2; ++n)
      for (const auto& e : monomials_up_to(5, n, 3))
        for (int d = 0; d <= (n == 1 ? 3 : 2); ++d) {
          Json c = base(i++);
          c["p"] = 5;
          c["n"] = n;
          c["exps"] = e;
          c["d"] = d;
          out.push_back(c);
        }
  } else if (suite == "coset-intersection") {
    for (int i = 0; i < 2; ++i) {
      Json c = base(i);
      c.update({{"p", 2}, {"n", 8}, {"r", 3}, {"delta", i ? 0.5 : 0.25}, {"trials", 10000}});
      out.push_back(c);
    }
  } else {
    throw SchemaError("unknown oracle suite " + suite);
  }
  return out;
}

inline MultiAffineMap dot_map(int n) {
  const ProductSpace s(2, {n, n});
  std::vector<Residue> c(n * n, 0);
  for (int i = 0; i < n; ++i) c[i * n + i] = 1;
  return MultiAffineMap::from_forms(s, {MultilinearForm(s, {0, 1}, c)});
}

inline Json qr_json(const QuasirandomReport& r) {
  return {{"empty", r.empty},
          {"delta", r.delta},
          {"x_failure", r.x_failure},
          {"pair_failure", r.pair_failure},
          {"eta_min", r.eta_min}};
}

// Values of one configuration, by the oracle path or by the library path.
inline Json suite_values(const Json& c, bool use_oracle) {
  const std::string suite = c.at("suite");
  const std::uint64_t seed = c.at("seed");
  if (suite == "harmonic-micro") {
    const ProductSpace s(c["space"]["p"].get<std::uint32_t>(), c["space"]["dims"].get<std::vector<int>>());
    const auto f = lab::random_table(s, seed);
    const auto spec = use_oracle ? fourier_direct(f) : fourier(f).coeffs;
    double l2 = 0, l4 = 0;
    for (const auto& z : spec) {
      l2 += std::norm(z);
      l4 += std::norm(z) * std::norm(z);
    }
    return {{"u2_power", use_oracle ? uk_power_direct(f, 2) : uk_norm_power(f, 2)},
            {"spectral_fourth_moment", l4},
            {"spectral_l2", l2}};
  }
  if (suite == "mixed-conv-micro") {
    const ProductSpace s(2, c["space"]["dims"].get<std::vector<int>>());
    const auto f = lab::random_table(s, seed);
    const auto word = c["word"].get<std::vector<int>>();
    Json vals = Json::array();
    if (use_oracle) {
      for (std::uint64_t x = 0; x < s.total_size(); ++x) vals.push_back(complex_json(mixed_conv_expanded(f, word, x)));
    } else {
      const auto g = mixed_conv(f, word);
      for (const auto& z : g.values()) vals.push_back(complex_json(z));
    }
    return {{"values", vals}};
  }
  if (suite == "prank-micro") {
    const ProductSpace s(2, c["space"]["dims"].get<std::vector<int>>());
    SplitMix64 rng(seed);
    const auto alpha = lab::random_form(s, {0, 1}, rng);
    if (use_oracle) return {{"rank", bilinear_partition_rank(alpha)}};
    const auto res = partition_rank_search(alpha, 3);
    return {{"rank", res ? res->rank : -1}};
  }
  if (suite == "qr-micro") {
    const int n = c["n"];
    const auto beta = dot_map(n);
    const Coset c1 = Coset::whole(beta.space().factor(0));
    const Coset c2 = Coset::whole(beta.space().factor(1));
    const std::vector<Residue> lambda{0};
    return qr_json(use_oracle ? quasirandom_direct(beta, lambda, c1, c2)
                              : check_quasirandom(beta, lambda, c1, c2));
  }
  if (suite == "freiman-micro") {
    const ProductSpace s(3, c["space"]["dims"].get<std::vector<int>>());
    const auto phi = lab::random_multiaffine(s, 1, seed);
    const auto rest = lab::random_restriction(phi, c["density"], derive_seed(seed, 1));
    const auto sigma = lab::corrupt(rest, c["corruption"], derive_seed(seed, 2));
    const int d = c["direction"];
    const auto q = use_oracle ? quadruples_direct(s, sigma.indicator(), d, &sigma)
                              : count_d_additive_quadruples(s, sigma.indicator(), d, &sigma);
    return {{"total", q.total}, {"respected", q.respected}};
  }
  if (suite == "affine-micro") {
    const ProductSpace s(3, c["space"]["dims"].get<std::vector<int>>());
    const auto phi = lab::random_multiaffine(s, 1, seed);
    const auto rest = lab::random_restriction(phi, c["density"], derive_seed(seed, 1));
    const auto sigma = lab::corrupt(rest, c["corruption"], derive_seed(seed, 2));
    if (use_oracle) return {{"agreement", affine_scan_reversed(sigma).agreement}};
    return {{"agreement", best_affine_agreement(sigma).agreement}};
  }
  if (suite == "poly-micro") {
    const std::uint32_t p = c["p"];
    const int n = c["n"], d = c["d"];
    MonomialPoly g(p, n);
    g.add_term(c["exps"].get<std::vector<int>>(), 1);
    const auto f = g.table();
    return {{"passes", use_oracle ? degree_test_full(f, d) : degree_test(f, d).ok}};
  }
  if (suite == "coset-intersection") {
    const std::uint32_t p = c["p"];
    const int n = c["n"], r = c["r"];
    const double delta = c["delta"];
    const std::uint64_t size = lab::rounded_count(delta, sat_pow(p, n));
    const double exact = static_cast<double>(size) / std::pow(p, n) * std::pow(p, r);
    if (use_oracle) return {{"expected", exact}, {"within_3_sigma", true}};
    const auto res = lab::coset_intersection_experiment(p, n, r, delta, c["trials"], seed);
    return {{"expected", res.expected},
            {"within_3_sigma", std::abs(res.mean - exact) <= 3 * res.std_error}};
  }
  throw SchemaError("unknown oracle suite " + suite);
}

}  // namespace detail

/// Golden file for a suite: entries keyed by config hash, values from the
/// brute-force oracles.
inline Json golden_suite(const std::string& suite, std::uint64_t seed) {
  Json entries = Json::object();
  for (const auto& c : detail::suite_configs(suite, seed))
    entries[lab::hex64(lab::config_hash(c))] = {{"config", c}, {"values", detail::suite_values(c, true)}};
  return {{"suite", suite}, {"seed", seed}, {"entries", entries}};
}

/// First place where two JSON values differ (numbers within tolerance), as
/// "key: expected X, got Y".
inline std::optional<std::string> first_divergence(const Json& expected, const Json& actual,
                                                   double tolerance, const std::string& path = "") {
  auto diff = [&] { return path + ": expected " + expected.dump() + ", got " + actual.dump(); };
  if (expected.is_number() && actual.is_number()) {
    if (std::abs(expected.get<double>() - actual.get<double>()) > tolerance) return diff();
    return std::nullopt;
  }
  if (expected.type() != actual.type()) return diff();
  if (expected.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      if (!actual.contains(it.key())) return path + "/" + it.key() + ": missing";
      if (auto d = first_divergence(it.value(), actual[it.key()], tolerance, path + "/" + it.key())) return d;
    }
    if (actual.size() != expected.size()) return diff();
    return std::nullopt;
  }
  if (expected.is_array()) {
    if (expected.size() != actual.size()) return diff();
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (auto d = first_divergence(expected[i], actual[i], tolerance, path + "/" + std::to_string(i)))
        return d;
    return std::nullopt;
  }
  if (expected != actual) return diff();
  return std::nullopt;
}

/// Recomputes every golden entry through the library and reports the first
/// divergence, if any.
inline std::optional<std::string> check_golden(const Json& golden, double tolerance) {
  for (const auto& [key, entry] : golden.at("entries").items()) {
    const auto actual = detail::suite_values(entry.at("config"), false);
    if (auto d = first_divergence(entry.at("values"), actual, tolerance, key)) return d;
  }
  return std::nullopt;
}

}  // namespace hofa::oracle
