// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// Polynomials over F_p^n: discrete derivatives, degree testing,
// approximate-polynomial statistics, polarization and polynomial phases.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hofa/budget.hpp"
#include "hofa/error.hpp"
#include "hofa/field.hpp"
#include "hofa/harmonic.hpp"
#include "hofa/multiaffine.hpp"
#include "hofa/random.hpp"

namespace hofa {

/// Total function G = F_p^n -> F_p^h.
class GroupFunctionH {
 public:
  GroupFunctionH(ProductSpace space, int h, std::vector<Residue> values)
      : space_(std::move(space)), h_(h), values_(std::move(values)) {
    detail::check_schema(space_.k() == 1, "function must live on a single group");
    detail::check_schema(h_ >= 1, "codomain dimension must be at least 1");
    detail::check_schema(values_.size() == space_.total_size() * static_cast<std::uint64_t>(h_),
                         "value table has the wrong length");
    for (Residue v : values_) detail::check_schema(v < space_.p(), "value out of range");
  }

  static GroupFunctionH zero(const ProductSpace& s, int h) {
    return GroupFunctionH(s, h, std::vector<Residue>(s.total_size() * h, 0));
  }

  const ProductSpace& space() const noexcept { return space_; }
  const Group& group() const { return space_.factor(0); }
  int h() const noexcept { return h_; }
  std::uint64_t size() const noexcept { return space_.total_size(); }
  const std::vector<Residue>& values() const noexcept { return values_; }

  std::span<const Residue> value(std::uint64_t x) const {
    space_.check_index(x);
    return {values_.data() + x * h_, static_cast<std::size_t>(h_)};
  }
  Residue at(std::uint64_t x, int c) const { return values_[x * h_ + c]; }
  void set(std::uint64_t x, std::span<const Residue> v) {
    space_.check_index(x);
    detail::check_schema(v.size() == static_cast<std::size_t>(h_), "value has wrong length");
    for (int c = 0; c < h_; ++c) {
      detail::check_schema(v[c] < space_.p(), "value out of range");
      values_[x * h_ + c] = v[c];
    }
  }

  friend bool operator==(const GroupFunctionH& a, const GroupFunctionH& b) {
    return a.space_ == b.space_ && a.h_ == b.h_ && a.values_ == b.values_;
  }

 private:
  ProductSpace space_;
  int h_;
  std::vector<Residue> values_;
};

/// Polynomial in n variables over F_p in Frobenius-reduced form: every
/// exponent is at most p - 1 and zero coefficients are dropped.
class MonomialPoly {
 public:
  using Exponents = std::vector<int>;

  MonomialPoly(std::uint32_t p, int n) : m_(p), n_(n) {
    detail::check_schema(n >= 0, "number of variables must be non-negative");
  }
  MonomialPoly(std::uint32_t p, int n, const std::vector<std::pair<Exponents, Residue>>& terms)
      : MonomialPoly(p, n) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  /// Adds c * x^e, reducing x^p to x.
  MonomialPoly& add_term(Exponents e, Residue c) {
    detail::check_schema(e.size() == static_cast<std::size_t>(n_), "exponent vector has wrong length");
    detail::check_schema(c < m_.p(), "coefficient out of range");
    for (int& v : e) {
      detail::check_schema(v >= 0, "negative exponent");
      if (v > 0) v = (v - 1) % static_cast<int>(m_.p() - 1) + 1;
    }
    Residue& slot = terms_[e];
    slot = m_.add(slot, c);
    if (slot == 0) terms_.erase(e);
    return *this;
  }

  const PrimeModulus& modulus() const noexcept { return m_; }
  std::uint32_t p() const noexcept { return m_.p(); }
  int n() const noexcept { return n_; }
  const std::map<Exponents, Residue>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Maximum total degree of a nonzero term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }
  bool is_homogeneous(int k) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
      return std::accumulate(t.first.begin(), t.first.end(), 0) == k;
    });
  }

  Residue eval_digits(std::span<const Residue> x) const {
    detail::check_schema(x.size() == static_cast<std::size_t>(n_), "point has wrong dimension");
    Residue acc = 0;
    for (const auto& [e, c] : terms_) {
      Residue t = c;
      for (int i = 0; i < n_; ++i) t = m_.mul(t, m_.pow(x[i], e[i]));
      acc = m_.add(acc, t);
    }
    return acc;
  }
  Residue eval(const Group& g, Group::Element x) const { return eval_digits(g.digits(x)); }

  ProductSpace space() const { return single_group_space(m_.p(), n_); }

  /// Value table as a function into F_p^1.
  GroupFunctionH table() const {
    const ProductSpace s = space();
    std::vector<Residue> v(s.total_size());
    for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = eval(s.factor(0), x);
    return GroupFunctionH(s, 1, std::move(v));
  }

  MonomialPoly operator+(const MonomialPoly& o) const {
    check_same(o);
    MonomialPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MonomialPoly scaled(Residue c) const {
    MonomialPoly r(m_.p(), n_);
    for (const auto& [e, v] : terms_) r.add_term(e, m_.mul(v, c));
    return r;
  }

  friend bool operator==(const MonomialPoly& a, const MonomialPoly& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const MonomialPoly& o) const {
    detail::check_schema(m_ == o.m_ && n_ == o.n_, "polynomials over different rings");
  }

  PrimeModulus m_;
  int n_;
  std::map<Exponents, Residue> terms_;
};

/// Reduced exponent vectors of total degree at most d, by degree then
/// lexicographically.
inline std::vector<MonomialPoly::Exponents> monomials_up_to(std::uint32_t p, int n, int d) {
  std::vector<MonomialPoly::Exponents> out;
  MonomialPoly::Exponents e(n, 0);
  const int top = static_cast<int>(p) - 1;
  while (true) {
    if (std::accumulate(e.begin(), e.end(), 0) <= d) out.push_back(e);
    int i = n - 1;
    while (i >= 0 && ++e[i] > top) e[i--] = 0;
    if (i < 0) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  return out;
}

/// Polynomial with the given coefficients on the given monomials.
inline MonomialPoly poly_from_coeffs(std::uint32_t p, int n,
                                     const std::vector<MonomialPoly::Exponents>& monos,
                                     std::span<const Residue> coeffs) {
  MonomialPoly g(p, n);
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (coeffs[i]) g.add_term(monos[i], coeffs[i]);
  return g;
}

/// Discrete derivative (Delta_a f)(x) = f(x + a) - f(x).
inline GroupFunctionH delta(const GroupFunctionH& f, Group::Element a) {
  const Group& g = f.group();
  detail::check_schema(a < g.size(), "shift out of range");
  const auto& m = f.space().modulus();
  std::vector<Residue> out(f.values().size());
  for (std::uint64_t x = 0; x < f.size(); ++x)
    for (int c = 0; c < f.h(); ++c) out[x * f.h() + c] = m.sub(f.at(g.add(x, a), c), f.at(x, c));
  return GroupFunctionH(f.space(), f.h(), std::move(out));
}

/// Delta_{a_1} ... Delta_{a_m} f (x), expanded as a signed sum over subsets.
inline std::vector<Residue> iterated_delta(const GroupFunctionH& f, Group::Element x,
                                           std::span<const Group::Element> a) {
  const Group& g = f.group();
  const auto& mod = f.space().modulus();
  const std::size_t m = a.size();
  detail::check_schema(m < 32, "too many derivative directions");
  std::vector<Residue> acc(f.h(), 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    Group::Element y = x;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1) y = g.add(y, a[i]);
    const bool neg = (m - std::popcount(s)) % 2;
    for (int c = 0; c < f.h(); ++c)
      acc[c] = neg ? mod.sub(acc[c], f.at(y, c)) : mod.add(acc[c], f.at(y, c));
  }
  return acc;
}

struct DegreeTestResult {
  bool ok = true;
  Group::Element x = 0;                  ///< failing basepoint
  std::vector<Group::Element> shifts;    ///< failing directions
};

/// Whether f has degree at most d (needs d < p). All (d+1)-fold derivatives
/// vanish iff those along multisets of standard basis vectors do, so the
/// check runs over |G| * C(n+d, d+1) configurations. On failure the witness
/// is a basepoint and d+1 basis directions.
inline DegreeTestResult degree_test(const GroupFunctionH& f, int d) {
  const std::uint32_t p = f.space().p();
  detail::check_schema(d >= 0, "degree must be non-negative");
  if (static_cast<std::uint32_t>(d) >= p)
    throw PreconditionError("degree test needs d < p",
                            "{\"d\": " + std::to_string(d) + ", \"p\": " + std::to_string(p) + "}");
  const Group& g = f.group();
  const int n = g.dim();
  std::vector<Group::Element> basis(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Residue> e(n, 0);
    e[j] = 1;
    basis[j] = g.from_digits(e);
  }
  DegreeTestResult res;
  if (n == 0) return res;
  // Non-decreasing index sequences of length d + 1.
  std::vector<int> idx(d + 1, 0);
  std::vector<Group::Element> shifts(d + 1);
  std::uint64_t work = 0;
  while (true) {
    work += g.size() << (d + 1);
    require_budget(work, "degree_test");
    for (int i = 0; i <= d; ++i) shifts[i] = basis[idx[i]];
    for (Group::Element x = 0; x < g.size(); ++x) {
      const auto v = iterated_delta(f, x, shifts);
      if (std::any_of(v.begin(), v.end(), [](Residue r) { return r != 0; })) {
        res.ok = false;
        res.x = x;
        res.shifts = shifts;
        return res;
      }
    }
    int i = d;
    while (i >= 0 && idx[i] == n - 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j <= d; ++j) idx[j] = idx[i];
  }
  return res;
}

inline constexpr std::uint64_t kDefaultSamples = 100000;

struct ApproxPolyFraction {
  double fraction = 0;
  bool exhaustive = true;
  std::uint64_t vanishing = 0;
  std::uint64_t total = 0;
  std::optional<std::pair<Group::Element, std::vector<Group::Element>>> witness;
};

/// Fraction of (x, a_1, ..., a_{d+1}) in G^{d+2} at which the iterated
/// derivative of f vanishes. Exhaustive when |G|^{d+2} fits the budget (or
/// when forced), otherwise `samples` seeded uniform draws.
inline ApproxPolyFraction approx_poly_fraction(const GroupFunctionH& f, int d,
                                               std::optional<bool> exhaustive = std::nullopt,
                                               std::uint64_t samples = kDefaultSamples,
                                               std::uint64_t seed = 0) {
  detail::check_schema(d >= 0 && d < 30, "degree out of range");
  const Group& g = f.group();
  const std::uint64_t configs = sat_pow(g.size(), static_cast<std::uint64_t>(d) + 2);
  const std::uint64_t cost = sat_mul(configs, std::uint64_t{1} << (d + 1));
  ApproxPolyFraction res;
  res.exhaustive = exhaustive.value_or(cost <= enumeration_budget());
  std::vector<Group::Element> a(d + 1, 0);
  auto record = [&](Group::Element x) {
    const auto v = iterated_delta(f, x, a);
    ++res.total;
    if (std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; }))
      ++res.vanishing;
    else if (!res.witness)
      res.witness.emplace(x, a);
  };
  if (res.exhaustive) {
    require_budget(cost, "approx_poly_fraction");
    for (std::uint64_t it = 0; it < configs; ++it) {
      std::uint64_t r = it;
      for (int i = d; i >= 0; --i) {
        a[i] = r % g.size();
        r /= g.size();
      }
      record(r);
    }
  } else {
    require_budget(sat_mul(samples, std::uint64_t{1} << (d + 1)), "approx_poly_fraction");
    SplitMix64 rng(seed);
    for (std::uint64_t it = 0; it < samples; ++it) {
      const Group::Element x = rng.below(g.size());
      for (auto& ai : a) ai = rng.below(g.size());
      record(x);
    }
  }
  res.fraction = res.total ? static_cast<double>(res.vanishing) / static_cast<double>(res.total) : 1.0;
  return res;
}

/// The k-linear form sigma(a_1, ..., a_k) = Delta_{a_1} ... Delta_{a_k} g on
/// G^k, for g homogeneous of degree k (or zero). Needs p > k. The value is
/// checked to be independent of the basepoint.
inline MultilinearForm polarize(const MonomialPoly& g, int k) {
  const std::uint32_t p = g.p();
  detail::check_schema(k >= 1 && k <= 8, "polarization order must be in [1, 8]");
  if (static_cast<std::uint32_t>(k) >= p)
    throw PreconditionError("polarization needs p > k",
                            "{\"k\": " + std::to_string(k) + ", \"p\": " + std::to_string(p) + "}");
  detail::check_schema(g.is_homogeneous(k), "polarization needs a homogeneous polynomial of degree k");
  const int n = g.n();
  const ProductSpace target(PrimeModulus(p), std::vector<int>(k, n));
  Subset all(k);
  std::iota(all.begin(), all.end(), 0);
  const GroupFunctionH f = g.table();
  const Group& grp = f.group();
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(n);
  require_budget(sat_mul(sat_mul(count, grp.size()), std::uint64_t{1} << k), "polarize");
  std::vector<Residue> coeffs(count);
  std::vector<Group::Element> shifts(k);
  for (std::uint64_t j = 0; j < count; ++j) {
    std::uint64_t r = j;
    for (int i = k - 1; i >= 0; --i) {
      std::vector<Residue> e(n, 0);
      e[r % n] = 1;
      shifts[i] = grp.from_digits(e);
      r /= n;
    }
    coeffs[j] = iterated_delta(f, 0, shifts)[0];
    for (Group::Element y = 1; y < grp.size(); ++y)
      detail::check_internal(iterated_delta(f, y, shifts)[0] == coeffs[j],
                             "k-fold derivative depends on the basepoint");
  }
  return MultilinearForm(target, all, std::move(coeffs));
}

/// g(x) = sigma(x, ..., x) / k! for a symmetric k-linear form on (F_p^n)^k.
/// Needs p > k.
inline MonomialPoly poly_from_symmetric(const MultilinearForm& sigma, int k) {
  detail::check_power_form(sigma);
  const ProductSpace& s = sigma.space();
  detail::check_schema(s.k() == k, "form has the wrong number of arguments");
  const std::uint32_t p = s.p();
  if (static_cast<std::uint32_t>(k) >= p)
    throw PreconditionError("polarization needs p > k",
                            "{\"k\": " + std::to_string(k) + ", \"p\": " + std::to_string(p) + "}");
  const int n = s.dims()[0];
  const auto& m = s.modulus();
  const auto& c = sigma.coeffs();
  Residue fact = 1;
  for (int i = 2; i <= k; ++i) fact = m.mul(fact, static_cast<Residue>(i));
  const Residue inv = m.inv(fact);
  MonomialPoly g(p, n);
  std::vector<int> j(k);
  for (std::uint64_t idx = 0; idx < c.size(); ++idx) {
    std::uint64_t r = idx;
    for (int i = k - 1; i >= 0; --i) {
      j[i] = static_cast<int>(r % n);
      r /= n;
    }
    std::vector<int> sorted = j;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t sidx = 0;
    for (int v : sorted) sidx = sidx * n + v;
    if (c[sidx] != c[idx])
      throw PreconditionError("form is not symmetric",
                              "{\"index\": " + std::to_string(idx) + "}");
    MonomialPoly::Exponents e(n, 0);
    for (int v : j) ++e[v];
    g.add_term(e, m.mul(c[idx], inv));
  }
  return g;
}

/// Phase table x -> omega^{sign * g(x)}.
inline FunctionTable phase_table(const MonomialPoly& g, int sign = 1) {
  const ProductSpace s = g.space();
  const auto& m = g.modulus();
  return FunctionTable::from_function(s, [&](std::uint64_t x) {
           const Residue v = g.eval(s.factor(0), x);
           return m.character(sign > 0 ? v : m.neg(v));
         })
      .mark_bounded();
}

/// |E_x f(x) omega^{g(x)}|.
inline double phase_correlation(const FunctionTable& f, const MonomialPoly& g) {
  const ProductSpace& s = f.space();
  detail::check_schema(s.k() == 1 && s.p() == g.p() && s.dims()[0] == g.n(),
                       "function and polynomial live on different spaces");
  Complex acc = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) acc += f[x] * g.modulus().character(g.eval(s.factor(0), x));
  return std::abs(acc / static_cast<double>(f.size()));
}

struct PolyCorrelation {
  MonomialPoly poly;
  double value = 0;
};

namespace detail {

inline std::vector<std::vector<Residue>> monomial_table(const Group& g,
                                                        const std::vector<MonomialPoly::Exponents>& monos) {
  const auto& m = g.modulus();
  std::vector<std::vector<Residue>> t(g.size(), std::vector<Residue>(monos.size()));
  for (Group::Element x = 0; x < g.size(); ++x) {
    const auto d = g.digits(x);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      Residue v = 1;
      for (std::size_t j = 0; j < d.size(); ++j) v = m.mul(v, m.pow(d[j], monos[i][j]));
      t[x][i] = v;
    }
  }
  return t;
}

inline bool next_digits(std::vector<Residue>& d, std::uint32_t p) {
  for (std::size_t j = d.size(); j-- > 0;) {
    if (++d[j] < p) return true;
    d[j] = 0;
  }
  return false;
}

}  // namespace detail

/// Exhaustive maximizer of |E f omega^g| over polynomials g of degree at
/// most d. Candidates run through coefficient vectors lexicographically
/// (monomials ordered as monomials_up_to); a later candidate wins only by
/// more than the tolerance.
inline PolyCorrelation best_poly_correlation(const FunctionTable& f, int d,
                                             double tolerance = kDefaultTolerance) {
  const ProductSpace& s = f.space();
  detail::check_schema(s.k() == 1, "function must live on a single group");
  detail::check_schema(d >= 0, "degree must be non-negative");
  const std::uint32_t p = s.p();
  const int n = s.dims()[0];
  const auto monos = monomials_up_to(p, n, d);
  const std::uint64_t count = sat_pow(p, monos.size());
  require_budget(sat_mul(count, f.size()), "best_poly_correlation");
  const Group& g = s.factor(0);
  const auto table = detail::monomial_table(g, monos);
  const auto& m = s.modulus();
  std::vector<Residue> coeffs(monos.size(), 0), best_coeffs = coeffs;
  double best = -1;
  do {
    Complex acc = 0;
    for (Group::Element x = 0; x < g.size(); ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < coeffs.size(); ++i) v += std::uint64_t{coeffs[i]} * table[x][i];
      acc += f[x] * m.character(static_cast<Residue>(v % p));
    }
    const double val = std::abs(acc / static_cast<double>(g.size()));
    if (val > best + tolerance) {
      best = val;
      best_coeffs = coeffs;
    }
  } while (detail::next_digits(coeffs, p));
  return {poly_from_coeffs(p, n, monos, best_coeffs), best};
}

struct PolyAgreement {
  std::vector<MonomialPoly> components;
  std::uint64_t agreement = 0;
};

/// Exhaustive maximizer of |{x : psi(x) = f(x)}| over polynomial maps psi
/// into F_p^h with components of degree at most d. Ties go to the
/// lexicographically smallest coefficient vector (component 0 first).
inline PolyAgreement best_poly_agreement(const GroupFunctionH& f, int d) {
  detail::check_schema(d >= 0, "degree must be non-negative");
  const std::uint32_t p = f.space().p();
  const int n = f.space().dims()[0];
  const int h = f.h();
  const auto monos = monomials_up_to(p, n, d);
  const std::size_t nm = monos.size();
  const std::uint64_t count = sat_pow(p, static_cast<std::uint64_t>(h) * nm);
  require_budget(sat_mul(count, f.size()), "best_poly_agreement");
  const Group& g = f.group();
  const auto table = detail::monomial_table(g, monos);
  std::vector<Residue> coeffs(h * nm, 0), best_coeffs = coeffs;
  std::uint64_t best = 0;
  bool have = false;
  do {
    std::uint64_t agree = 0;
    for (Group::Element x = 0; x < g.size(); ++x) {
      bool ok = true;
      for (int c = 0; c < h && ok; ++c) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < nm; ++i) v += std::uint64_t{coeffs[c * nm + i]} * table[x][i];
        ok = v % p == f.at(x, c);
      }
      agree += ok;
    }
    if (!have || agree > best) {
      best = agree;
      best_coeffs = coeffs;
      have = true;
      if (best == g.size()) break;
    }
  } while (detail::next_digits(coeffs, p));
  PolyAgreement out;
  out.agreement = best;
  for (int c = 0; c < h; ++c)
    out.components.push_back(
        poly_from_coeffs(p, n, monos, std::span<const Residue>(best_coeffs).subspan(c * nm, nm)));
  return out;
}

}  // namespace hofa
