// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// Multilinear forms, multiaffine maps and their varieties: evaluation, slice
// statistics, bias, analytic and partition rank, quasirandomness, and the
// extraction of multilinear varieties from multilinear sets.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hofa/budget.hpp"
#include "hofa/error.hpp"
#include "hofa/field.hpp"

namespace hofa {

/// Sorted list of 0-based factor indices.
using Subset = std::vector<int>;

namespace detail {

inline std::vector<int> factor_offsets(const ProductSpace& s) {
  std::vector<int> off(s.k());
  int acc = 0;
  for (int i = 0; i < s.k(); ++i) {
    off[i] = acc;
    acc += s.dims()[i];
  }
  return off;
}

inline void check_subset(const Subset& I, int k) {
  for (std::size_t t = 0; t < I.size(); ++t) {
    check_schema(I[t] >= 0 && I[t] < k, "factor index out of range in subset");
    check_schema(t == 0 || I[t - 1] < I[t], "subset must be strictly increasing");
  }
}

inline Subset subset_minus(const Subset& I, int d) {
  Subset out;
  for (int i : I)
    if (i != d) out.push_back(i);
  return out;
}

inline bool subset_contains(const Subset& I, int d) {
  return std::binary_search(I.begin(), I.end(), d);
}

}  // namespace detail

/// alpha(x_I) = sum_{j_I} coeffs[j_I] prod_{i in I} x_{i, j_i} mod p.
/// Coefficients are stored row-major, first factor of I slowest.
class MultilinearForm {
 public:
  MultilinearForm(ProductSpace space, Subset support, std::vector<Residue> coeffs)
      : space_(std::move(space)), support_(std::move(support)), coeffs_(std::move(coeffs)) {
    detail::check_subset(support_, space_.k());
    std::uint64_t n = 1;
    for (int i : support_) n *= static_cast<std::uint64_t>(space_.dims()[i]);
    detail::check_schema(coeffs_.size() == n, "form has " + std::to_string(coeffs_.size()) +
                                                  " coefficients, expected " +
                                                  std::to_string(n));
    for (Residue c : coeffs_)
      detail::check_schema(c < space_.p(), "form coefficient out of range");
    offsets_ = detail::factor_offsets(space_);
  }

  static MultilinearForm zero(const ProductSpace& s, Subset support) {
    std::uint64_t n = 1;
    for (int i : support) n *= static_cast<std::uint64_t>(s.dims().at(i));
    return MultilinearForm(s, std::move(support), std::vector<Residue>(n, 0));
  }

  const ProductSpace& space() const noexcept { return space_; }
  const Subset& support() const noexcept { return support_; }
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
  std::vector<int> shape() const {
    std::vector<int> sh;
    for (int i : support_) sh.push_back(space_.dims()[i]);
    return sh;
  }
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
  }

  /// Evaluation on the concatenated coordinates of a point.
  Residue eval_digits(std::span<const Residue> flat) const {
    const std::uint32_t p = space_.p();
    std::vector<std::uint64_t> cur(coeffs_.begin(), coeffs_.end());
    for (int t = static_cast<int>(support_.size()) - 1; t >= 0; --t) {
      const int f = support_[t];
      const std::size_t n = static_cast<std::size_t>(space_.dims()[f]);
      const std::size_t m = n == 0 ? 0 : cur.size() / n;
      std::vector<std::uint64_t> next(m, 0);
      for (std::size_t a = 0; a < m; ++a) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += cur[a * n + j] * flat[offsets_[f] + j];
        next[a] = acc % p;
      }
      cur = std::move(next);
    }
    return cur.empty() ? 0 : static_cast<Residue>(cur[0] % p);
  }

  Residue eval(std::uint64_t idx) const {
    space_.check_index(idx);
    const auto flat = space_.flat().digits(idx);
    return eval_digits(flat);
  }

  /// The form with factor d fixed to the group element y_d.
  MultilinearForm fix(int d, Group::Element yd) const {
    detail::check_schema(detail::subset_contains(support_, d), "fixed factor not in support");
    const auto y = space_.factor(d).digits(yd);
    const Subset rest = detail::subset_minus(support_, d);
    std::size_t pos = 0;
    while (support_[pos] != d) ++pos;
    std::size_t outer = 1, inner = 1;
    for (std::size_t t = 0; t < support_.size(); ++t) {
      if (t < pos) outer *= space_.dims()[support_[t]];
      if (t > pos) inner *= space_.dims()[support_[t]];
    }
    const std::size_t n = y.size();
    std::vector<Residue> out(outer * inner, 0);
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t i = 0; i < inner; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j)
          acc += std::uint64_t{coeffs_[(o * n + j) * inner + i]} * y[j];
        out[o * inner + i] = static_cast<Residue>(acc % space_.p());
      }
    return MultilinearForm(space_, rest, std::move(out));
  }

  MultilinearForm operator+(const MultilinearForm& o) const {
    detail::check_schema(space_ == o.space_ && support_ == o.support_,
                         "adding forms with different supports");
    std::vector<Residue> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = space_.modulus().add(coeffs_[i], o.coeffs_[i]);
    return MultilinearForm(space_, support_, std::move(c));
  }
  MultilinearForm scaled(Residue a) const {
    std::vector<Residue> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = space_.modulus().mul(a % space_.p(), coeffs_[i]);
    return MultilinearForm(space_, support_, std::move(c));
  }

  friend bool operator==(const MultilinearForm& a, const MultilinearForm& b) {
    return a.space_ == b.space_ && a.support_ == b.support_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const MultilinearForm& a, const MultilinearForm& b) {
    return std::tie(a.support_, a.coeffs_) < std::tie(b.support_, b.coeffs_);
  }

 private:
  ProductSpace space_;
  Subset support_;
  std::vector<Residue> coeffs_;
  std::vector<int> offsets_;
};

/// Phi(x) = sum_I Phi_I(x_I) into F_p^h, each part stored as h forms.
class MultiAffineMap {
 public:
  MultiAffineMap(ProductSpace space, int h) : space_(std::move(space)), h_(h) {
    detail::check_schema(h_ >= 0, "codomain dimension must be non-negative");
  }

  static MultiAffineMap zero(const ProductSpace& s, int h) { return MultiAffineMap(s, h); }

  /// Component i is the single form forms[i].
  static MultiAffineMap from_forms(const ProductSpace& s, const std::vector<MultilinearForm>& forms) {
    MultiAffineMap m(s, static_cast<int>(forms.size()));
    for (std::size_t c = 0; c < forms.size(); ++c) {
      std::vector<MultilinearForm> part;
      for (std::size_t j = 0; j < forms.size(); ++j)
        part.push_back(j == c ? forms[c] : MultilinearForm::zero(s, forms[c].support()));
      m.add_part(forms[c].support(), part);
    }
    return m;
  }

  const ProductSpace& space() const noexcept { return space_; }
  int h() const noexcept { return h_; }
  const std::map<Subset, std::vector<MultilinearForm>>& parts() const noexcept { return parts_; }

  /// Adds h forms on G_I to the part indexed by I.
  MultiAffineMap& add_part(const Subset& I, const std::vector<MultilinearForm>& forms) {
    detail::check_subset(I, space_.k());
    detail::check_schema(forms.size() == static_cast<std::size_t>(h_),
                         "part must have one form per codomain coordinate");
    for (const auto& f : forms)
      detail::check_schema(f.space() == space_ && f.support() == I, "part form has wrong support");
    auto it = parts_.find(I);
    if (it == parts_.end()) {
      parts_.emplace(I, forms);
    } else {
      for (int c = 0; c < h_; ++c) it->second[c] = it->second[c] + forms[c];
    }
    return *this;
  }

  std::vector<Residue> eval_digits(std::span<const Residue> flat) const {
    std::vector<Residue> out(h_, 0);
    const auto& m = space_.modulus();
    for (const auto& [I, forms] : parts_)
      for (int c = 0; c < h_; ++c) out[c] = m.add(out[c], forms[c].eval_digits(flat));
    return out;
  }
  std::vector<Residue> eval(std::uint64_t idx) const {
    space_.check_index(idx);
    return eval_digits(space_.flat().digits(idx));
  }

  /// Component c as a map into F_p.
  MultiAffineMap component(int c) const {
    detail::check_schema(c >= 0 && c < h_, "component out of range");
    MultiAffineMap m(space_, 1);
    for (const auto& [I, forms] : parts_) m.add_part(I, {forms[c]});
    return m;
  }

  /// The part on the full index set [k], component c (zero if absent).
  MultilinearForm top_part(int c = 0) const {
    Subset all(space_.k());
    std::iota(all.begin(), all.end(), 0);
    auto it = parts_.find(all);
    if (it == parts_.end()) return MultilinearForm::zero(space_, all);
    return it->second.at(c);
  }

  /// Indices of parts with a nonzero form in component c.
  std::vector<Subset> nonzero_parts(int c) const {
    std::vector<Subset> out;
    for (const auto& [I, forms] : parts_)
      if (!forms[c].is_zero()) out.push_back(I);
    return out;
  }

  bool is_zero() const {
    for (int c = 0; c < h_; ++c)
      if (!nonzero_parts(c).empty()) return false;
    return true;
  }

 private:
  ProductSpace space_;
  int h_;
  std::map<Subset, std::vector<MultilinearForm>> parts_;
};

/// Family of subsets of [k] closed under taking subsets.
class DownSet {
 public:
  DownSet(int k, std::vector<Subset> family) : k_(k) {
    for (auto& I : family) {
      std::sort(I.begin(), I.end());
      detail::check_subset(I, k_);
      sets_.insert(I);
    }
    for (const auto& I : sets_)
      for (int d : I)
        detail::check_schema(sets_.count(detail::subset_minus(I, d)) > 0,
                             "family is not closed under taking subsets");
  }
  int k() const noexcept { return k_; }
  bool contains(const Subset& I) const { return sets_.count(I) > 0; }
  const std::set<Subset>& sets() const noexcept { return sets_; }

 private:
  int k_;
  std::set<Subset> sets_;
};

/// True iff every nonzero part of phi is indexed by a member of g.
inline bool is_supported(const MultiAffineMap& phi, const DownSet& g) {
  for (int c = 0; c < phi.h(); ++c)
    for (const auto& I : phi.nonzero_parts(c))
      if (!g.contains(I)) return false;
  return true;
}

/// True iff each codomain coordinate has at most one nonzero part.
inline bool is_mixed_linear(const MultiAffineMap& phi) {
  for (int c = 0; c < phi.h(); ++c)
    if (phi.nonzero_parts(c).size() > 1) return false;
  return true;
}

/// {x : map(x) = target}, codimension h.
class Variety {
 public:
  Variety(MultiAffineMap map, std::vector<Residue> target)
      : map_(std::move(map)), target_(std::move(target)) {
    detail::check_schema(target_.size() == static_cast<std::size_t>(map_.h()),
                         "variety target has wrong length");
    for (Residue v : target_) detail::check_schema(v < map_.space().p(), "target out of range");
  }

  const MultiAffineMap& map() const noexcept { return map_; }
  const std::vector<Residue>& target() const noexcept { return target_; }
  const ProductSpace& space() const noexcept { return map_.space(); }
  int codim() const noexcept { return map_.h(); }

  bool contains(std::uint64_t idx) const { return map_.eval(idx) == target_; }

  /// Membership of every point in index order.
  std::vector<bool> indicator() const {
    const ProductSpace& s = space();
    require_budget(s.total_size(), "variety enumeration");
    const Group flat = s.flat();
    std::vector<bool> in(s.total_size());
    for (std::uint64_t x = 0; x < s.total_size(); ++x)
      in[x] = map_.eval_digits(flat.digits(x)) == target_;
    return in;
  }

  /// Every member in increasing index order. Checks |V| >= p^{-k codim}|G|
  /// whenever V is nonempty.
  std::vector<std::uint64_t> members() const {
    const auto in = indicator();
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < in.size(); ++x)
      if (in[x]) out.push_back(x);
    check_size_bound(out.size());
    return out;
  }
  std::uint64_t size() const { return members().size(); }

  /// Whether the defining map is multilinear with zero target: every
  /// component a single form on a nonempty index set.
  bool is_multilinear() const {
    for (int c = 0; c < map_.h(); ++c) {
      const auto parts = map_.nonzero_parts(c);
      if (parts.size() > 1) return false;
      if (parts.size() == 1 && parts[0].empty()) return false;
    }
    return std::all_of(target_.begin(), target_.end(), [](Residue v) { return v == 0; });
  }

  void check_size_bound(std::uint64_t count) const {
    if (count == 0) return;
    const double bound = std::pow(static_cast<double>(space().p()),
                                  -static_cast<double>(space().k()) * codim()) *
                         static_cast<double>(space().total_size());
    detail::check_internal(static_cast<double>(count) >= bound - 1e-9,
                           "nonempty variety smaller than p^{-k r}|G|");
  }

 private:
  MultiAffineMap map_;
  std::vector<Residue> target_;
};

/// Table x_{[i]} -> |V_{x_{[i]}}| indexed by the prefix point in G_{[i]}.
/// For i = k-1 the nonzero counts take at most codim+1 values, each of the
/// form p^{-j}|G_k|.
inline std::vector<std::uint64_t> slice_size_profile(const Variety& v, int i) {
  const ProductSpace& s = v.space();
  detail::check_schema(i >= 0 && i <= s.k(), "prefix length out of range");
  const std::uint64_t tail = i == 0 ? s.total_size() : s.stride(i - 1);
  const auto in = v.indicator();
  std::vector<std::uint64_t> prof(s.total_size() / tail, 0);
  for (std::uint64_t x = 0; x < in.size(); ++x)
    if (in[x]) ++prof[x / tail];
  if (i == s.k() - 1) {
    std::set<std::uint64_t> distinct;
    for (auto c : prof)
      if (c) distinct.insert(c);
    detail::check_internal(distinct.size() <= static_cast<std::size_t>(v.codim()) + 1,
                           "too many distinct slice sizes");
    const std::uint64_t gk = s.factor(s.k() - 1).size();
    for (auto c : distinct) {
      std::uint64_t q = gk;
      while (q > c && q % s.p() == 0) q /= s.p();
      detail::check_internal(q == c, "slice size is not p^{-j}|G_k|");
    }
  }
  return prof;
}

/// E_x omega^{alpha(x)} for a map into F_p.
inline Complex bias(const MultiAffineMap& alpha) {
  detail::check_schema(alpha.h() == 1, "bias needs a map into F_p");
  const ProductSpace& s = alpha.space();
  require_budget(s.total_size(), "bias");
  const Group flat = s.flat();
  Complex acc = 0;
  for (std::uint64_t x = 0; x < s.total_size(); ++x)
    acc += s.modulus().character(alpha.eval_digits(flat.digits(x))[0]);
  return acc / static_cast<double>(s.total_size());
}

/// Bias of a multilinear form; real and non-negative.
inline double bias(const MultilinearForm& alpha) {
  MultiAffineMap m(alpha.space(), 1);
  m.add_part(alpha.support(), {alpha});
  const Complex b = bias(m);
  detail::check_internal(std::abs(b.imag()) <= 1e-9 && b.real() >= -1e-9,
                         "bias of a multilinear form is not a non-negative real");
  return b.real();
}

/// -log_p bias(alpha); +infinity when the bias is below tolerance.
inline double analytic_rank(const MultilinearForm& alpha, double tolerance = kDefaultTolerance) {
  const double b = bias(alpha);
  if (b <= tolerance) return std::numeric_limits<double>::infinity();
  const double r = -std::log(b) / std::log(static_cast<double>(alpha.space().p()));
  return std::abs(r) < 1e-12 ? 0.0 : r;
}

/// |{x : Phi(x) != 0}|, which is 0 or at least p^{-k}|G|.
inline std::uint64_t nonzero_count(const MultiAffineMap& phi) {
  const ProductSpace& s = phi.space();
  require_budget(s.total_size(), "nonzero_count");
  const Group flat = s.flat();
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < s.total_size(); ++x) {
    const auto v = phi.eval_digits(flat.digits(x));
    if (std::any_of(v.begin(), v.end(), [](Residue r) { return r != 0; })) ++count;
  }
  const double bound = std::pow(static_cast<double>(s.p()), -static_cast<double>(s.k())) *
                       static_cast<double>(s.total_size());
  detail::check_internal(count == 0 || static_cast<double>(count) >= bound - 1e-9,
                         "nonzero multiaffine map vanishes too often");
  return count;
}

// ---------------------------------------------------------------------------
// Partition rank.

/// beta(x_I) gamma(x_{S \ I}) with S the support of the decomposed form.
struct PartitionTerm {
  Subset I;
  MultilinearForm beta;
  MultilinearForm gamma;
};

struct PartitionRankResult {
  int rank = 0;
  std::vector<PartitionTerm> terms;
  bool verified = false;
};

namespace detail {

// All RREF bases of r-dimensional subspaces of F_p^n.
inline std::vector<std::vector<std::vector<Residue>>> rref_subspaces(std::uint32_t p, int n,
                                                                    int r) {
  std::vector<std::vector<std::vector<Residue>>> out;
  if (r > n) return out;
  std::vector<int> piv(r);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    // Free entries: row t, column c > piv[t], c not a pivot.
    std::vector<std::pair<int, int>> free;
    for (int t = 0; t < r; ++t)
      for (int c = piv[t] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(t, c);
    const std::uint64_t count = sat_pow(p, free.size());
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::vector<Residue>> basis(r, std::vector<Residue>(n, 0));
      for (int t = 0; t < r; ++t) basis[t][piv[t]] = 1;
      std::uint64_t c = code;
      for (const auto& [t, col] : free) {
        basis[t][col] = static_cast<Residue>(c % p);
        c /= p;
      }
      out.push_back(std::move(basis));
    }
    int t = r - 1;
    while (t >= 0 && piv[t] == n - r + t) --t;
    if (t < 0) break;
    ++piv[t];
    for (int u = t + 1; u < r; ++u) piv[u] = piv[u - 1] + 1;
  }
  return out;
}

// Compositions of total into `parts` non-negative integers bounded by caps.
inline void compositions(int total, const std::vector<int>& caps, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  const std::size_t i = cur.size();
  if (i + 1 == caps.size()) {
    if (total <= caps[i]) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = 0; v <= std::min(total, caps[i]); ++v) {
    cur.push_back(v);
    compositions(total - v, caps, cur, out);
    cur.pop_back();
  }
}

inline std::uint64_t count_subspaces(std::uint32_t p, int n, int r) {
  // Gaussian binomial coefficient.
  double num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    num *= std::pow(p, n - i) - 1;
    den *= std::pow(p, i + 1) - 1;
  }
  return static_cast<std::uint64_t>(std::llround(num / den));
}

}  // namespace detail

/// Evaluates sum_i beta_i(x_{I_i}) gamma_i(x_{S \ I_i}) at every point and
/// compares with alpha.
inline bool verify_partition_decomposition(const MultilinearForm& alpha,
                                           const std::vector<PartitionTerm>& terms) {
  const ProductSpace& s = alpha.space();
  require_budget(s.total_size(), "partition decomposition check");
  const Group flat = s.flat();
  const auto& m = s.modulus();
  for (std::uint64_t x = 0; x < s.total_size(); ++x) {
    const auto d = flat.digits(x);
    Residue acc = 0;
    for (const auto& t : terms) acc = m.add(acc, m.mul(t.beta.eval_digits(d), t.gamma.eval_digits(d)));
    if (acc != alpha.eval_digits(d)) return false;
  }
  return true;
}

/// Minimum-length decomposition alpha = sum_i beta_i(x_{I_i}) gamma_i(x_{S \ I_i})
/// into products of lower-order forms, S the support of alpha and every I_i a
/// nonempty proper subset not containing the last factor of S. Searches
/// r = 0, 1, ..., max_rank; nullopt means the rank exceeds max_rank.
/// Limited to |S| <= 3, factor dimensions <= 3 and max_rank <= 4.
inline std::optional<PartitionRankResult> partition_rank_search(const MultilinearForm& alpha,
                                                                int max_rank) {
  const ProductSpace& s = alpha.space();
  const Subset& S = alpha.support();
  const int k = static_cast<int>(S.size());
  detail::check_schema(max_rank >= 0, "max_rank must be non-negative");
  if (alpha.is_zero()) {
    PartitionRankResult res;
    res.verified = verify_partition_decomposition(alpha, res.terms);
    return res;
  }
  detail::check_schema(k >= 2, "partition rank needs a nonzero form of order at least 2");
  if (k > 3 || max_rank > 4)
    throw BudgetError("partition rank search is limited to order <= 3 and rank <= 4");
  for (int i : S)
    if (s.dims()[i] > 3)
      throw BudgetError("partition rank search is limited to factor dimension <= 3");

  const auto& m = s.modulus();
  const std::uint32_t p = s.p();
  // One split type per support position j: a linear form on S[j] times a
  // form on the rest. For two factors a single type suffices.
  const int types = k == 2 ? 1 : k;
  std::vector<int> caps(types);
  for (int j = 0; j < types; ++j) caps[j] = s.dims()[S[j]];

  // Coefficient tensor strides over S.
  std::vector<std::size_t> dims(k), stride(k);
  for (int t = 0; t < k; ++t) dims[t] = static_cast<std::size_t>(s.dims()[S[t]]);
  std::size_t total = 1;
  for (int t = k - 1; t >= 0; --t) {
    stride[t] = total;
    total *= dims[t];
  }
  auto rest_index = [&](std::size_t flat_idx, int j) {
    std::size_t r = 0;
    for (int t = 0; t < k; ++t) {
      if (t == j) continue;
      r = r * dims[t] + (flat_idx / stride[t]) % dims[t];
    }
    return r;
  };
  auto rest_size = [&](int j) { return total / dims[j]; };

  for (int r = 1; r <= max_rank; ++r) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    detail::compositions(r, caps, cur, comps);
    std::uint64_t work = 0;
    for (const auto& c : comps) {
      std::uint64_t w = 1;
      for (int j = 0; j < types; ++j) w = sat_mul(w, detail::count_subspaces(p, caps[j], c[j]));
      work += w;
    }
    require_budget(work, "partition rank search");

    for (const auto& comp : comps) {
      std::vector<std::vector<std::vector<std::vector<Residue>>>> choices(types);
      for (int j = 0; j < types; ++j) choices[j] = detail::rref_subspaces(p, caps[j], comp[j]);
      std::vector<std::size_t> pick(types, 0);
      while (true) {
        // Unknowns: for each type j and basis vector t, a tensor on S \ {S[j]}.
        std::vector<std::pair<int, int>> blocks;
        std::vector<std::size_t> block_off;
        std::size_t nunk = 0;
        for (int j = 0; j < types; ++j)
          for (int t = 0; t < comp[j]; ++t) {
            blocks.emplace_back(j, t);
            block_off.push_back(nunk);
            nunk += rest_size(j);
          }
        MatrixFp a(m, total, nunk);
        for (std::size_t e = 0; e < total; ++e)
          for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto [j, t] = blocks[b];
            const Residue w = choices[j][pick[j]][t][(e / stride[j]) % dims[j]];
            a.at(e, block_off[b] + rest_index(e, j)) = w;
          }
        auto sol = solve_linear(a, alpha.coeffs());
        if (sol) {
          PartitionRankResult res;
          res.rank = r;
          for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto [j, t] = blocks[b];
            MultilinearForm lin(s, {S[j]}, choices[j][pick[j]][t]);
            std::vector<Residue> g(sol->begin() + block_off[b],
                                   sol->begin() + block_off[b] + rest_size(j));
            MultilinearForm other(s, detail::subset_minus(S, S[j]), std::move(g));
            if (j == k - 1)
              res.terms.push_back({other.support(), other, lin});
            else
              res.terms.push_back({lin.support(), lin, other});
          }
          res.verified = verify_partition_decomposition(alpha, res.terms);
          detail::check_internal(res.verified, "partition decomposition does not re-evaluate");
          return res;
        }
        int j = types - 1;
        while (j >= 0 && ++pick[j] == choices[j].size()) pick[j--] = 0;
        if (j < 0) break;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Symmetric forms on G^k.

namespace detail {

inline void check_power_form(const MultilinearForm& psi) {
  const ProductSpace& s = psi.space();
  check_schema(static_cast<int>(psi.support().size()) == s.k(),
               "form must depend on every factor");
  for (int n : s.dims()) check_schema(n == s.dims()[0], "all factors must have one dimension");
}

}  // namespace detail

/// psi_pi(a_1, ..., a_k) = psi(a_{pi(1)}, ..., a_{pi(k)}), pi given 0-based.
inline MultilinearForm permute_form(const MultilinearForm& psi, std::span<const int> pi) {
  detail::check_power_form(psi);
  const int k = psi.space().k();
  detail::check_schema(static_cast<int>(pi.size()) == k, "permutation has wrong length");
  std::vector<int> seen(k, 0);
  for (int v : pi) {
    detail::check_schema(v >= 0 && v < k && !seen[v], "not a permutation");
    seen[v] = 1;
  }
  const std::size_t n = static_cast<std::size_t>(psi.space().dims()[0]);
  const std::size_t total = psi.coeffs().size();
  std::vector<Residue> out(total);
  std::vector<std::size_t> jn(k), j(k);
  for (std::size_t e = 0; e < total; ++e) {
    std::size_t rem = e;
    for (int t = k - 1; t >= 0; --t) {
      jn[t] = rem % n;
      rem /= n;
    }
    // psi_pi(a) = sum_j c[j] prod_i a_{pi(i), j_i}, so j_i = j'_{pi(i)}.
    std::size_t src = 0;
    for (int i = 0; i < k; ++i) src = src * n + jn[pi[i]];
    out[e] = psi.coeffs()[src];
  }
  return MultilinearForm(psi.space(), psi.support(), std::move(out));
}

/// (1/k!) sum over all permutations of psi_pi; needs p > k.
inline MultilinearForm symmetrize(const MultilinearForm& psi) {
  detail::check_power_form(psi);
  const int k = psi.space().k();
  const auto& m = psi.space().modulus();
  if (m.p() <= static_cast<std::uint32_t>(k))
    throw PreconditionError("symmetrize needs p > k so that k! is invertible");
  std::vector<int> pi(k);
  std::iota(pi.begin(), pi.end(), 0);
  MultilinearForm acc = MultilinearForm::zero(psi.space(), psi.support());
  Residue fact = 1;
  for (int i = 2; i <= k; ++i) fact = m.mul(fact, static_cast<Residue>(i));
  do {
    acc = acc + permute_form(psi, pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  MultilinearForm out = acc.scaled(m.inv(fact));
  std::iota(pi.begin(), pi.end(), 0);
  do {
    detail::check_internal(permute_form(out, pi) == out, "symmetrization is not symmetric");
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Quasirandomness of biaffine varieties.

struct QuasirandomReport {
  bool empty = false;
  /// delta = delta_count / c2_size when not empty.
  std::optional<std::uint64_t> delta_count;
  std::uint64_t c1_size = 0;
  std::uint64_t c2_size = 0;
  double delta = 0;
  double x_failure = 0;
  double pair_failure = 0;
  double eta_min = 0;
};

/// Smallest eta for which (beta, lambda, C1, C2) is eta-quasirandom with the
/// most common column density delta (ties go to the larger density).
inline QuasirandomReport check_quasirandom(const MultiAffineMap& beta,
                                           std::span<const Residue> lambda, const Coset& c1,
                                           const Coset& c2) {
  const ProductSpace& s = beta.space();
  detail::check_schema(s.k() == 2, "quasirandomness needs a biaffine map");
  detail::check_schema(lambda.size() == static_cast<std::size_t>(beta.h()), "lambda has wrong length");
  detail::check_schema(c1.ambient() == s.factor(0) && c2.ambient() == s.factor(1),
                       "cosets do not live in the factors of the map");
  const std::uint64_t n1 = c1.size(), n2 = c2.size();
  require_budget(sat_mul(n1, n1), "check_quasirandom");
  require_budget(sat_mul(n1, n2), "check_quasirandom");

  const auto xs = c1.members();
  const auto ys = c2.members();
  const std::vector<Residue> target(lambda.begin(), lambda.end());
  const std::size_t words = (n2 + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n1, std::vector<std::uint64_t>(words, 0));
  std::vector<std::uint64_t> count(n1, 0);
  bool any = false;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const std::uint64_t idx = xs[i] * s.stride(0) + ys[j];
      if (beta.eval(idx) == target) {
        rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
        ++count[i];
        any = true;
      }
    }
  QuasirandomReport rep;
  rep.c1_size = n1;
  rep.c2_size = n2;
  if (!any) {
    rep.empty = true;
    return rep;
  }
  std::map<std::uint64_t, std::uint64_t> freq;
  for (auto c : count) ++freq[c];
  std::uint64_t best = 0, best_freq = 0;
  for (const auto& [c, f] : freq)
    if (f >= best_freq) {
      best = c;
      best_freq = f;
    }
  rep.delta_count = best;
  rep.delta = static_cast<double>(best) / static_cast<double>(n2);
  rep.x_failure = static_cast<double>(n1 - best_freq) / static_cast<double>(n1);

  // |V_x1 cap V_x2| must equal delta^2 |C2| = best^2 / n2 exactly.
  const bool integral = (best * best) % n2 == 0;
  const std::uint64_t want = integral ? best * best / n2 : 0;
  std::uint64_t bad = 0;
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b) {
      std::uint64_t inter = 0;
      for (std::size_t w = 0; w < words; ++w) inter += std::popcount(rows[a][w] & rows[b][w]);
      if (!integral || inter != want) ++bad;
    }
  rep.pair_failure = static_cast<double>(bad) / static_cast<double>(n1 * n1);
  rep.eta_min = std::max(rep.x_failure, rep.pair_failure);
  return rep;
}

// ---------------------------------------------------------------------------
// Multilinear varieties inside multilinear sets.

using MembershipOracle = std::function<bool(std::uint64_t)>;

/// Checks that every axis-parallel line meets M in a subspace (possibly
/// empty). Returns a description of the first offending line, if any.
inline std::optional<std::string> multilinear_set_violation(const ProductSpace& s,
                                                            const MembershipOracle& in_m) {
  require_budget(s.total_size(), "multilinear set check");
  std::vector<bool> in(s.total_size());
  for (std::uint64_t x = 0; x < s.total_size(); ++x) in[x] = in_m(x);
  for (int d = 0; d < s.k(); ++d) {
    const Group& gd = s.factor(d);
    require_budget(sat_mul(s.total_size(), gd.size()), "multilinear set check");
    for (std::uint64_t base = 0; base < s.total_size(); ++base) {
      if (s.component(base, d) != 0) continue;
      std::vector<Group::Element> line;
      for (Group::Element z = 0; z < gd.size(); ++z)
        if (in[s.with_component(base, d, z)]) line.push_back(z);
      if (line.empty()) continue;
      auto bad = [&] {
        return "{\"direction\": " + std::to_string(d) + ", \"base\": " + std::to_string(base) + "}";
      };
      if (line.front() != 0) return bad();
      std::vector<bool> mem(gd.size(), false);
      for (auto z : line) mem[z] = true;
      for (auto a : line)
        for (auto b : line)
          if (!mem[gd.add(a, b)]) return bad();
    }
  }
  return std::nullopt;
}

struct MultilinearExtraction {
  Variety variety;
  std::vector<std::uint64_t> witnesses;  ///< y chosen at each step
};

/// Given a multilinear set M and a nonempty variety B inside it, returns a
/// nonempty multilinear variety contained in M by fixing the directions one
/// at a time, each time freezing the lexicographically smallest member of
/// the current variety.
inline MultilinearExtraction multilinear_variety_inside(const MembershipOracle& in_m,
                                                        const Variety& b) {
  const ProductSpace& s = b.space();
  const auto bmem = b.members();
  if (bmem.empty()) throw PreconditionError("variety B is empty");
  for (auto x : bmem)
    if (!in_m(x))
      throw PreconditionError("B is not contained in M",
                              "{\"point\": " + std::to_string(x) + "}");
  if (auto bad = multilinear_set_violation(s, in_m))
    throw PreconditionError("M is not a multilinear set", *bad);

  // Rows alpha(x_I) = lambda with alpha a single multilinear form.
  struct Row {
    MultilinearForm form;
    Residue lambda;
  };
  std::vector<Row> rows;
  const auto y0 = s.flat().digits(bmem.front());
  for (const auto& [I, forms] : b.map().parts()) {
    if (I.empty()) continue;
    for (const auto& f : forms) rows.push_back({f, f.eval_digits(y0)});
  }

  auto normalize = [&](std::vector<Row> in) {
    std::vector<Row> out;
    std::set<std::pair<MultilinearForm, Residue>> seen;
    for (auto& r : in) {
      if (r.form.support().empty() || r.form.is_zero()) {
        detail::check_internal(r.lambda == (r.form.support().empty() ? r.form.coeffs()[0] : 0),
                               "witness violates a constant constraint");
        continue;
      }
      if (seen.insert({r.form, r.lambda}).second) out.push_back(std::move(r));
    }
    return out;
  };
  rows = normalize(std::move(rows));

  auto to_variety = [&](const std::vector<Row>& rs) {
    MultiAffineMap map(s, static_cast<int>(rs.size()));
    std::vector<Residue> target;
    for (std::size_t c = 0; c < rs.size(); ++c) {
      std::vector<MultilinearForm> part;
      for (std::size_t j = 0; j < rs.size(); ++j)
        part.push_back(j == c ? rs[c].form : MultilinearForm::zero(s, rs[c].form.support()));
      map.add_part(rs[c].form.support(), part);
      target.push_back(rs[c].lambda);
    }
    return Variety(std::move(map), std::move(target));
  };

  std::vector<std::uint64_t> witnesses;
  for (int d = 0; d < s.k(); ++d) {
    const auto cur = to_variety(rows).members();
    detail::check_internal(!cur.empty(), "intermediate variety is empty");
    const std::uint64_t y = cur.front();
    witnesses.push_back(y);
    const Group::Element yd = s.component(y, d);
    std::vector<Row> next;
    for (const auto& r : rows) {
      if (detail::subset_contains(r.form.support(), d)) {
        next.push_back({r.form, 0});
        next.push_back({r.form.fix(d, yd), r.lambda});
      } else {
        next.push_back(r);
      }
    }
    rows = normalize(std::move(next));
  }
  for (const auto& r : rows) detail::check_internal(r.lambda == 0, "final target is not zero");
  Variety out = to_variety(rows);
  const auto members = out.members();
  detail::check_internal(!members.empty(), "extracted variety is empty");
  for (auto x : members) detail::check_internal(in_m(x), "extracted variety leaves M");
  return MultilinearExtraction{std::move(out), std::move(witnesses)};
}

}  // namespace hofa
