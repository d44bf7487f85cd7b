// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// Partial maps on product spaces: Freiman (multi-)homomorphism checks,
// additive quadruples, affine extension, arrangements and tri-arrangements,
// the dependent-random-choice filter, and exhaustive inverse searches.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hofa/budget.hpp"
#include "hofa/error.hpp"
#include "hofa/field.hpp"
#include "hofa/multiaffine.hpp"
#include "hofa/random.hpp"

namespace hofa {

/// A map phi : A -> F_p^h defined on a subset A of a product space.
class PartialMap {
 public:
  PartialMap(ProductSpace space, int h)
      : space_(std::move(space)), h_(h), in_(space_.total_size(), false),
        values_(space_.total_size() * static_cast<std::uint64_t>(h), 0) {
    detail::check_schema(h_ >= 1, "partial map needs codomain dimension at least 1");
  }

  /// Phi restricted to the given points.
  static PartialMap restrict(const MultiAffineMap& phi, std::span<const std::uint64_t> domain) {
    PartialMap out(phi.space(), phi.h());
    for (auto x : domain) out.set(x, phi.eval(x));
    return out;
  }

  const ProductSpace& space() const noexcept { return space_; }
  int h() const noexcept { return h_; }

  void set(std::uint64_t x, std::span<const Residue> v) {
    space_.check_index(x);
    detail::check_schema(v.size() == static_cast<std::size_t>(h_), "value has wrong length");
    for (int c = 0; c < h_; ++c) {
      detail::check_schema(v[c] < space_.p(), "value out of range");
      values_[x * h_ + c] = v[c];
    }
    in_[x] = true;
  }
  void erase(std::uint64_t x) {
    space_.check_index(x);
    in_[x] = false;
    for (int c = 0; c < h_; ++c) values_[x * h_ + c] = 0;
  }

  bool contains(std::uint64_t x) const { return x < in_.size() && in_[x]; }
  std::span<const Residue> value(std::uint64_t x) const {
    detail::check_schema(contains(x), "point " + std::to_string(x) + " is not in the domain");
    return {values_.data() + x * h_, static_cast<std::size_t>(h_)};
  }
  std::vector<std::uint64_t> domain() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < in_.size(); ++x)
      if (in_[x]) out.push_back(x);
    return out;
  }
  const std::vector<bool>& indicator() const noexcept { return in_; }
  std::uint64_t domain_size() const {
    return static_cast<std::uint64_t>(std::count(in_.begin(), in_.end(), true));
  }
  double density() const {
    return static_cast<double>(domain_size()) / static_cast<double>(space_.total_size());
  }

  friend bool operator==(const PartialMap& a, const PartialMap& b) {
    return a.space_ == b.space_ && a.h_ == b.h_ && a.in_ == b.in_ && a.values_ == b.values_;
  }

 private:
  ProductSpace space_;
  int h_;
  std::vector<bool> in_;
  std::vector<Residue> values_;
};

/// Outcome of a homomorphism check. On failure `witness` holds a_1..a_m then
/// b_1..b_m (point indices) with equal sums but different value sums, and
/// `direction` the slice direction for multi-homomorphism checks.
struct HomCheck {
  bool ok = true;
  std::vector<std::uint64_t> witness;
  int direction = -1;
};

namespace detail {

// Enumerates ordered m-tuples of `pts` (group elements of g; `ids` are the
// corresponding point indices) and records the first value sum seen per
// group sum.
inline HomCheck hom_check_slice(const Group& g, const PartialMap& phi,
                                std::span<const Group::Element> pts,
                                std::span<const std::uint64_t> ids, int m) {
  HomCheck res;
  const std::size_t n = pts.size();
  if (n == 0) return res;
  const int h = phi.h();
  const auto& mod = g.modulus();
  std::unordered_map<Group::Element, std::pair<std::vector<Residue>, std::vector<std::size_t>>> seen;
  std::vector<std::size_t> t(m, 0);
  std::vector<Residue> val(h);
  while (true) {
    Group::Element sum = 0;
    std::fill(val.begin(), val.end(), 0);
    for (int i = 0; i < m; ++i) {
      sum = g.add(sum, pts[t[i]]);
      const auto v = phi.value(ids[t[i]]);
      for (int c = 0; c < h; ++c) val[c] = mod.add(val[c], v[c]);
    }
    auto it = seen.find(sum);
    if (it == seen.end()) {
      seen.emplace(sum, std::make_pair(val, t));
    } else if (it->second.first != val) {
      res.ok = false;
      for (auto i : it->second.second) res.witness.push_back(ids[i]);
      for (auto i : t) res.witness.push_back(ids[i]);
      return res;
    }
    int i = m - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) break;
  }
  return res;
}

}  // namespace detail

/// Freiman homomorphism of order m on a one-factor space: sum a_i = sum b_i
/// implies sum phi(a_i) = sum phi(b_i). Enumerates |A|^m tuples.
inline HomCheck is_freiman_hom(const PartialMap& phi, int m) {
  const ProductSpace& s = phi.space();
  detail::check_schema(s.k() == 1, "is_freiman_hom needs a single-group space");
  detail::check_schema(m >= 1, "order must be at least 1");
  const auto dom = phi.domain();
  require_budget(sat_pow(dom.size(), static_cast<std::uint64_t>(m)), "is_freiman_hom");
  return detail::hom_check_slice(s.factor(0), phi, dom, dom, m);
}

/// Every axis-parallel slice of phi is a Freiman homomorphism of order m.
inline HomCheck is_multi_hom(const PartialMap& phi, int m) {
  const ProductSpace& s = phi.space();
  detail::check_schema(m >= 1, "order must be at least 1");
  std::uint64_t work = 0;
  for (int d = 0; d < s.k(); ++d) {
    const Group& gd = s.factor(d);
    std::vector<std::uint64_t> ids;
    std::vector<Group::Element> pts;
    for (std::uint64_t base = 0; base < s.total_size(); ++base) {
      if (s.component(base, d) != 0) continue;
      ids.clear();
      pts.clear();
      for (Group::Element z = 0; z < gd.size(); ++z) {
        const auto x = s.with_component(base, d, z);
        if (phi.contains(x)) {
          ids.push_back(x);
          pts.push_back(z);
        }
      }
      work += sat_pow(pts.size(), static_cast<std::uint64_t>(m));
      require_budget(work, "is_multi_hom");
      auto r = detail::hom_check_slice(gd, phi, pts, ids, m);
      if (!r.ok) {
        r.direction = d;
        return r;
      }
    }
  }
  return {};
}

struct QuadrupleCount {
  std::uint64_t total = 0;
  std::uint64_t respected = 0;
};

/// Ordered d-additive quadruples (x, y, z, w) in S: equal off direction d and
/// x_d - y_d + z_d - w_d = 0. With sigma, also counts those where
/// sigma(x) - sigma(y) + sigma(z) - sigma(w) = 0.
inline QuadrupleCount count_d_additive_quadruples(const ProductSpace& s,
                                                  const std::vector<bool>& in_s, int d,
                                                  const PartialMap* sigma = nullptr) {
  detail::check_schema(in_s.size() == s.total_size(), "set indicator has wrong length");
  detail::check_schema(d >= 0 && d < s.k(), "direction out of range");
  if (sigma) {
    detail::check_schema(sigma->space() == s, "sigma lives on a different space");
    for (std::uint64_t x = 0; x < in_s.size(); ++x)
      if (in_s[x]) detail::check_schema(sigma->contains(x), "sigma is not defined on all of S");
  }
  const Group& gd = s.factor(d);
  QuadrupleCount out;
  std::uint64_t work = 0;
  for (std::uint64_t base = 0; base < s.total_size(); ++base) {
    if (s.component(base, d) != 0) continue;
    std::vector<Group::Element> pts;
    for (Group::Element z = 0; z < gd.size(); ++z)
      if (in_s[s.with_component(base, d, z)]) pts.push_back(z);
    work += sat_pow(pts.size(), 3);
    require_budget(work, "count_d_additive_quadruples");
    for (auto x : pts)
      for (auto y : pts)
        for (auto z : pts) {
          const auto w = gd.add(gd.sub(x, y), z);
          const auto wi = s.with_component(base, d, w);
          if (!in_s[wi]) continue;
          ++out.total;
          if (!sigma) continue;
          const auto& mod = s.modulus();
          const auto vx = sigma->value(s.with_component(base, d, x));
          const auto vy = sigma->value(s.with_component(base, d, y));
          const auto vz = sigma->value(s.with_component(base, d, z));
          const auto vw = sigma->value(wi);
          bool ok = true;
          for (int c = 0; c < sigma->h() && ok; ++c)
            ok = mod.sub(mod.add(mod.sub(vx[c], vy[c]), vz[c]), vw[c]) == 0;
          if (ok) ++out.respected;
        }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Affine maps on cosets.

/// An affine map on a coset, written in the coset coordinates t:
/// u0 + sum_j t_j b_j -> M t + c.
struct AffineOnCoset {
  Coset coset;
  LinearMapFp map;

  std::vector<Residue> at(Group::Element x) const {
    const auto t = coset.coordinates_of(x);
    detail::check_schema(t.has_value(), "point is not in the coset");
    return map.apply(coset.coordinate_group().digits(*t));
  }
};

namespace detail {

inline void check_on_coset(const PartialMap& phi, const Coset& c) {
  check_schema(phi.space().k() == 1, "map must live on a single group");
  check_schema(phi.space().factor(0) == c.ambient(), "coset lives in a different group");
  for (auto x : phi.domain())
    check_schema(c.contains(x), "domain point " + std::to_string(x) + " is outside the coset");
}

// Affine map in coset coordinates from p^{h(dim+1)} code, most significant
// coefficient first: per component (c, m_1, ..., m_dim).
inline LinearMapFp affine_from_code(const PrimeModulus& m, int h, std::size_t dim,
                                    std::uint64_t code) {
  const std::size_t per = dim + 1;
  std::vector<Residue> digits(h * per);
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<Residue>(code % m.p());
    code /= m.p();
  }
  MatrixFp mat(m, h, dim);
  std::vector<Residue> off(h);
  for (int c = 0; c < h; ++c) {
    off[c] = digits[c * per];
    for (std::size_t j = 0; j < dim; ++j) mat.at(c, j) = digits[c * per + 1 + j];
  }
  return LinearMapFp(std::move(mat), std::move(off));
}

}  // namespace detail

struct AffineAgreement {
  AffineOnCoset affine;
  std::uint64_t agreement = 0;
};

/// Exhaustive maximization of |{x in A : alpha(x) = phi(x)}| over affine
/// alpha on the coset (the whole group when omitted). Ties go to the
/// lexicographically smallest coefficient vector.
inline AffineAgreement best_affine_agreement(const PartialMap& phi,
                                             std::optional<Coset> coset = std::nullopt) {
  detail::check_schema(phi.space().k() == 1, "map must live on a single group");
  const Coset c = coset ? *coset : Coset::whole(phi.space().factor(0));
  detail::check_on_coset(phi, c);
  const int h = phi.h();
  const auto& m = phi.space().modulus();
  const std::uint64_t count = sat_pow(m.p(), static_cast<std::uint64_t>(h) * (c.dim() + 1));
  const auto dom = phi.domain();
  require_budget(sat_mul(count, std::max<std::uint64_t>(1, dom.size())), "best_affine_agreement");
  std::vector<std::vector<Residue>> coords;
  for (auto x : dom) coords.push_back(c.coordinate_group().digits(*c.coordinates_of(x)));
  std::uint64_t best_code = 0, best = 0;
  bool have = false;
  for (std::uint64_t code = 0; code < count; ++code) {
    const auto a = detail::affine_from_code(m, h, c.dim(), code);
    std::uint64_t agree = 0;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const auto v = a.apply(coords[i]);
      const auto w = phi.value(dom[i]);
      if (std::equal(v.begin(), v.end(), w.begin())) ++agree;
    }
    if (!have || agree > best) {
      best = agree;
      best_code = code;
      have = true;
      if (best == dom.size()) break;
    }
  }
  return {AffineOnCoset{c, detail::affine_from_code(m, h, c.dim(), best_code)}, best};
}

/// The unique affine map on the coset extending phi, built as
/// psi(x) = phi(a) + phi(b) - phi(c) with a + b - c = x. Needs
/// |A| > (4/5)|C| and phi a Freiman 2-homomorphism; with `strict` the
/// uniqueness is confirmed against every affine map on the coset.
inline AffineOnCoset affine_extension(const PartialMap& phi, const Coset& coset,
                                      bool strict = false) {
  detail::check_on_coset(phi, coset);
  const auto dom = phi.domain();
  if (5 * dom.size() <= 4 * coset.size())
    throw PreconditionError("domain must cover more than 4/5 of the coset",
                            "{\"domain\": " + std::to_string(dom.size()) +
                                ", \"coset\": " + std::to_string(coset.size()) + "}");
  const auto hom = is_freiman_hom(phi, 2);
  if (!hom.ok) {
    std::string w = "{\"quadruple\": [";
    for (std::size_t i = 0; i < hom.witness.size(); ++i)
      w += (i ? ", " : "") + std::to_string(hom.witness[i]);
    throw PreconditionError("map does not respect all additive quadruples", w + "]}");
  }
  const Group& g = coset.ambient();
  const auto& m = g.modulus();
  const int h = phi.h();
  auto psi = [&](Group::Element x) {
    for (auto a : dom)
      for (auto c : dom) {
        const auto b = g.add(g.sub(x, a), c);
        if (!phi.contains(b)) continue;
        std::vector<Residue> v(h);
        const auto pa = phi.value(a), pb = phi.value(b), pc = phi.value(c);
        for (int i = 0; i < h; ++i) v[i] = m.sub(m.add(pa[i], pb[i]), pc[i]);
        return v;
      }
    throw InternalError("no representation x = a + b - c inside the domain");
  };
  const auto base = psi(coset.basepoint());
  MatrixFp mat(m, h, coset.dim());
  for (std::size_t j = 0; j < coset.dim(); ++j) {
    const auto v = psi(g.add(coset.basepoint(), coset.basis()[j]));
    for (int c = 0; c < h; ++c) mat.at(c, j) = m.sub(v[c], base[c]);
  }
  AffineOnCoset out{coset, LinearMapFp(std::move(mat), base)};
  for (auto x : dom) {
    const auto v = out.at(x);
    const auto w = phi.value(x);
    detail::check_internal(std::equal(v.begin(), v.end(), w.begin()),
                           "affine extension disagrees with the map on its domain");
  }
  if (strict) {
    const std::uint64_t count = sat_pow(m.p(), static_cast<std::uint64_t>(h) * (coset.dim() + 1));
    require_budget(sat_mul(count, dom.size()), "affine_extension uniqueness scan");
    std::uint64_t matches = 0;
    for (std::uint64_t code = 0; code < count; ++code) {
      const auto a = detail::affine_from_code(m, h, coset.dim(), code);
      bool all = true;
      for (std::size_t i = 0; i < dom.size() && all; ++i) {
        const auto v = a.apply(coset.coordinate_group().digits(*coset.coordinates_of(dom[i])));
        const auto w = phi.value(dom[i]);
        all = std::equal(v.begin(), v.end(), w.begin());
      }
      if (all) {
        ++matches;
        detail::check_internal(a == out.map, "a different affine map also extends the map");
      }
    }
    detail::check_internal(matches == 1, "affine extension is not unique");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Arrangements.

/// A (d_r, ..., d_1)-arrangement. word[0] = d_r is the outermost split; the
/// first half of `points` is the sub-arrangement with d_r-length l + y and
/// the second half the one with d_r-length y. Point j carries the sign
/// (-1)^{popcount(j)}.
struct Arrangement {
  std::vector<int> word;
  std::uint64_t lengths = 0;
  std::vector<std::uint64_t> points;
};

/// Tri-arrangement with splits along word[L-1] (outermost) down to word[0].
/// Each split is (q1, q2, q3) with lengths u, v, w and u + v - w = x in the
/// split direction; the signs are +, +, -.
struct TriArrangement {
  std::vector<int> word;
  std::uint64_t lengths = 0;
  std::vector<std::uint64_t> points;
};

namespace detail {

inline void check_word(const ProductSpace& s, std::span<const int> word) {
  for (int d : word) check_schema(d >= 0 && d < s.k(), "direction out of range in word");
  check_schema(word.size() <= 20, "word too long");
}

// Builds points from parameters laid out in pre-order of the split tree.
inline void build_arrangement(const ProductSpace& s, std::span<const int> word, std::size_t level,
                              std::uint64_t lengths, std::span<const Group::Element> params,
                              std::size_t& next, std::vector<std::uint64_t>& out) {
  if (level == word.size()) {
    out.push_back(lengths);
    return;
  }
  const int d = word[level];
  const Group& gd = s.factor(d);
  const Group::Element y = params[next++];
  const Group::Element l = s.component(lengths, d);
  build_arrangement(s, word, level + 1, s.with_component(lengths, d, gd.add(l, y)), params, next, out);
  build_arrangement(s, word, level + 1, s.with_component(lengths, d, y), params, next, out);
}

inline std::optional<std::uint64_t> arrangement_lengths(const ProductSpace& s,
                                                        std::span<const int> word,
                                                        std::size_t level,
                                                        std::span<const std::uint64_t> pts) {
  if (level == word.size()) {
    if (pts.size() != 1) return std::nullopt;
    return pts[0];
  }
  if (pts.size() % 2) return std::nullopt;
  const std::size_t half = pts.size() / 2;
  const auto a = arrangement_lengths(s, word, level + 1, pts.subspan(0, half));
  const auto b = arrangement_lengths(s, word, level + 1, pts.subspan(half));
  if (!a || !b) return std::nullopt;
  const int d = word[level];
  if (s.with_component(*a, d, 0) != s.with_component(*b, d, 0)) return std::nullopt;
  return s.with_component(*a, d, s.factor(d).sub(s.component(*a, d), s.component(*b, d)));
}

inline std::uint64_t arrangement_param_count(const ProductSpace& s, std::span<const int> word,
                                             std::size_t* nparams = nullptr) {
  std::uint64_t count = 1;
  std::size_t n = 0;
  for (std::size_t t = 0; t < word.size(); ++t) {
    count = sat_mul(count, sat_pow(s.factor(word[t]).size(), std::uint64_t{1} << t));
    n += std::size_t{1} << t;
  }
  if (nparams) *nparams = n;
  return count;
}

// Parameter radices in pre-order.
inline void arrangement_radices(const ProductSpace& s, std::span<const int> word, std::size_t level,
                                std::vector<std::uint64_t>& out) {
  if (level == word.size()) return;
  out.push_back(s.factor(word[level]).size());
  arrangement_radices(s, word, level + 1, out);
  arrangement_radices(s, word, level + 1, out);
}

}  // namespace detail

/// The arrangement with the given split parameters (pre-order: the root
/// split first, then all of q1's, then all of q2's).
inline Arrangement make_arrangement(const ProductSpace& s, std::span<const int> word,
                                    std::uint64_t lengths,
                                    std::span<const Group::Element> params) {
  detail::check_word(s, word);
  s.check_index(lengths);
  std::vector<std::uint64_t> radix;
  detail::arrangement_radices(s, word, 0, radix);
  detail::check_schema(params.size() == radix.size(), "wrong number of arrangement parameters");
  for (std::size_t i = 0; i < radix.size(); ++i)
    detail::check_schema(params[i] < radix[i], "arrangement parameter out of range");
  Arrangement a{std::vector<int>(word.begin(), word.end()), lengths, {}};
  std::size_t next = 0;
  detail::build_arrangement(s, word, 0, lengths, params, next, a.points);
  return a;
}

/// Whether q obeys the recursive length law for its word and lengths.
inline bool is_valid_arrangement(const ProductSpace& s, const Arrangement& q) {
  detail::check_word(s, q.word);
  if (q.points.size() != (std::size_t{1} << q.word.size())) return false;
  const auto l = detail::arrangement_lengths(s, q.word, 0, q.points);
  return l && *l == q.lengths;
}

enum class EnumerationMode { kExhaustive, kSample };

/// All arrangements of a word and lengths (exhaustive, each exactly once) or
/// `count` independent uniform ones drawn from `seed`.
inline std::vector<Arrangement> enumerate_arrangements(const ProductSpace& s,
                                                       std::span<const int> word,
                                                       std::uint64_t lengths,
                                                       EnumerationMode mode,
                                                       std::uint64_t seed = 0,
                                                       std::uint64_t count = 0) {
  detail::check_word(s, word);
  s.check_index(lengths);
  std::vector<std::uint64_t> radix;
  detail::arrangement_radices(s, word, 0, radix);
  std::vector<Arrangement> out;
  std::vector<Group::Element> params(radix.size(), 0);
  if (mode == EnumerationMode::kExhaustive) {
    const std::uint64_t total = detail::arrangement_param_count(s, word);
    require_budget(sat_mul(total, std::uint64_t{1} << word.size()), "enumerate_arrangements");
    for (std::uint64_t it = 0; it < total; ++it) {
      out.push_back(make_arrangement(s, word, lengths, params));
      for (std::size_t j = radix.size(); j-- > 0;) {
        if (++params[j] < radix[j]) break;
        params[j] = 0;
      }
    }
  } else {
    require_budget(sat_mul(count, std::uint64_t{1} << word.size()), "enumerate_arrangements");
    SplitMix64 rng(seed);
    for (std::uint64_t it = 0; it < count; ++it) {
      for (std::size_t j = 0; j < radix.size(); ++j) params[j] = rng.below(radix[j]);
      out.push_back(make_arrangement(s, word, lengths, params));
    }
  }
  return out;
}

namespace detail {

inline std::optional<std::vector<Residue>> signed_sum(const PartialMap& phi,
                                                      std::span<const std::uint64_t> pts,
                                                      std::span<const int> signs) {
  const auto& m = phi.space().modulus();
  std::vector<Residue> acc(phi.h(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!phi.contains(pts[i])) return std::nullopt;
    const auto v = phi.value(pts[i]);
    for (int c = 0; c < phi.h(); ++c)
      acc[c] = signs[i] > 0 ? m.add(acc[c], v[c]) : m.sub(acc[c], v[c]);
  }
  return acc;
}

}  // namespace detail

/// phi(q) = phi(q1) - phi(q2) recursively; nullopt if a point is outside the
/// domain.
inline std::optional<std::vector<Residue>> arrangement_value(const PartialMap& phi,
                                                             const Arrangement& q) {
  std::vector<int> signs(q.points.size());
  for (std::size_t j = 0; j < signs.size(); ++j) signs[j] = (std::popcount(j) % 2) ? -1 : 1;
  return detail::signed_sum(phi, q.points, signs);
}

namespace detail {

inline void build_tri(const ProductSpace& s, std::span<const int> word, int level,
                      std::uint64_t lengths, std::span<const Group::Element> params,
                      std::size_t& next, std::vector<std::uint64_t>& out) {
  if (level < 0) {
    out.push_back(lengths);
    return;
  }
  const int d = word[level];
  const Group& gd = s.factor(d);
  const Group::Element u = params[next++];
  const Group::Element v = params[next++];
  const Group::Element w = gd.sub(gd.add(u, v), s.component(lengths, d));
  build_tri(s, word, level - 1, s.with_component(lengths, d, u), params, next, out);
  build_tri(s, word, level - 1, s.with_component(lengths, d, v), params, next, out);
  build_tri(s, word, level - 1, s.with_component(lengths, d, w), params, next, out);
}

inline void tri_radices(const ProductSpace& s, std::span<const int> word, int level,
                        std::vector<std::uint64_t>& out) {
  if (level < 0) return;
  out.push_back(s.factor(word[level]).size());
  out.push_back(s.factor(word[level]).size());
  for (int i = 0; i < 3; ++i) tri_radices(s, word, level - 1, out);
}

inline std::optional<std::uint64_t> tri_lengths(const ProductSpace& s, std::span<const int> word,
                                                int level, std::span<const std::uint64_t> pts) {
  if (level < 0) {
    if (pts.size() != 1) return std::nullopt;
    return pts[0];
  }
  if (pts.size() % 3) return std::nullopt;
  const std::size_t third = pts.size() / 3;
  const auto a = tri_lengths(s, word, level - 1, pts.subspan(0, third));
  const auto b = tri_lengths(s, word, level - 1, pts.subspan(third, third));
  const auto c = tri_lengths(s, word, level - 1, pts.subspan(2 * third));
  if (!a || !b || !c) return std::nullopt;
  const int d = word[level];
  const auto off = s.with_component(*a, d, 0);
  if (off != s.with_component(*b, d, 0) || off != s.with_component(*c, d, 0)) return std::nullopt;
  const Group& gd = s.factor(d);
  return s.with_component(
      *a, d, gd.sub(gd.add(s.component(*a, d), s.component(*b, d)), s.component(*c, d)));
}

}  // namespace detail

/// Parameters (u, v) per split in pre-order, outermost split first.
inline TriArrangement make_tri_arrangement(const ProductSpace& s, std::span<const int> word,
                                           std::uint64_t lengths,
                                           std::span<const Group::Element> params) {
  detail::check_word(s, word);
  s.check_index(lengths);
  std::vector<std::uint64_t> radix;
  detail::tri_radices(s, word, static_cast<int>(word.size()) - 1, radix);
  detail::check_schema(params.size() == radix.size(), "wrong number of tri-arrangement parameters");
  for (std::size_t i = 0; i < radix.size(); ++i)
    detail::check_schema(params[i] < radix[i], "tri-arrangement parameter out of range");
  TriArrangement q{std::vector<int>(word.begin(), word.end()), lengths, {}};
  std::size_t next = 0;
  detail::build_tri(s, word, static_cast<int>(word.size()) - 1, lengths, params, next, q.points);
  return q;
}

inline std::size_t tri_arrangement_param_count(const ProductSpace& s, std::span<const int> word) {
  std::vector<std::uint64_t> radix;
  detail::tri_radices(s, word, static_cast<int>(word.size()) - 1, radix);
  return radix.size();
}

inline bool is_valid_tri_arrangement(const ProductSpace& s, const TriArrangement& q) {
  detail::check_word(s, q.word);
  std::size_t n = 1;
  for (std::size_t i = 0; i < q.word.size(); ++i) n *= 3;
  if (q.points.size() != n) return false;
  const auto l = detail::tri_lengths(s, q.word, static_cast<int>(q.word.size()) - 1, q.points);
  return l && *l == q.lengths;
}

/// phi(q) = phi(q1) + phi(q2) - phi(q3) recursively.
inline std::optional<std::vector<Residue>> tri_arrangement_value(const PartialMap& phi,
                                                                 const TriArrangement& q) {
  std::vector<int> signs(q.points.size());
  for (std::size_t j = 0; j < signs.size(); ++j) {
    int twos = 0;
    for (std::size_t r = j; r; r /= 3) twos += (r % 3 == 2);
    signs[j] = (twos % 2) ? -1 : 1;
  }
  return detail::signed_sum(phi, q.points, signs);
}

// ---------------------------------------------------------------------------
// Dependent random choice.

struct DrcResult {
  PartialMap kept;
  MatrixFp pi;           ///< t x h
  MultiAffineMap psi;    ///< multilinear on [k], into F_p^t
};

/// Keeps the points x of the domain with pi(phi(x)) = psi(x) for a uniform
/// linear pi : F_p^h -> F_p^t and a uniform multilinear psi : G_[k] -> F_p^t.
/// pi's entries are drawn row-major, then psi's coefficients component by
/// component.
inline DrcResult drc_filter(const PartialMap& phi, int t, std::uint64_t seed) {
  detail::check_schema(t >= 0, "t must be non-negative");
  const ProductSpace& s = phi.space();
  const auto& m = s.modulus();
  SplitMix64 rng(seed);
  MatrixFp pi(m, t, phi.h());
  for (auto& e : pi.data) e = static_cast<Residue>(rng.below(m.p()));
  Subset all(s.k());
  std::iota(all.begin(), all.end(), 0);
  std::vector<MultilinearForm> forms;
  for (int c = 0; c < t; ++c) {
    const auto size = MultilinearForm::zero(s, all).coeffs().size();
    std::vector<Residue> coeffs(size);
    for (auto& e : coeffs) e = static_cast<Residue>(rng.below(m.p()));
    forms.emplace_back(s, all, std::move(coeffs));
  }
  MultiAffineMap psi = MultiAffineMap::from_forms(s, forms);
  if (t == 0) return {phi, std::move(pi), std::move(psi)};
  PartialMap kept(s, phi.h());
  const LinearMapFp lin(pi);
  for (auto x : phi.domain()) {
    const auto v = phi.value(x);
    if (lin.apply(v) == psi.eval(x)) kept.set(x, v);
  }
  return {std::move(kept), std::move(pi), std::move(psi)};
}

// ---------------------------------------------------------------------------
// Census of arrangement values.

struct CensusStratum {
  std::uint64_t lengths = 0;
  std::uint64_t samples = 0;
  std::uint64_t with_data = 0;
  std::uint64_t agreeing = 0;
  std::optional<std::vector<Residue>> modal_value;  ///< nullopt: no data
};

struct CensusReport {
  std::uint64_t with_data = 0;
  std::uint64_t agreeing = 0;
  std::optional<double> agree_fraction;  ///< nullopt: no data at all
  std::vector<CensusStratum> strata;
};

/// Stratified Monte Carlo over lengths: for each of `lengths_samples` random
/// lengths l (stream derive_seed(seed, stratum)), draws `per_lengths` tuples
/// consisting of one random arrangement of l per word and records whether all
/// their phi-values are defined and equal. The modal value per stratum is the
/// most frequent defined value (ties: lexicographically smallest).
inline CensusReport respected_census(const PartialMap& phi,
                                     const std::vector<std::vector<int>>& shapes,
                                     std::uint64_t lengths_samples, std::uint64_t per_lengths,
                                     std::uint64_t seed) {
  const ProductSpace& s = phi.space();
  detail::check_schema(!shapes.empty(), "census needs at least one word");
  std::uint64_t work = 0;
  for (const auto& w : shapes) {
    detail::check_word(s, w);
    work += std::uint64_t{1} << w.size();
  }
  require_budget(sat_mul(sat_mul(lengths_samples, per_lengths), work), "respected_census");
  std::vector<std::vector<std::uint64_t>> radices(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i)
    detail::arrangement_radices(s, shapes[i], 0, radices[i]);

  CensusReport rep;
  for (std::uint64_t st = 0; st < lengths_samples; ++st) {
    SplitMix64 rng(derive_seed(seed, st));
    CensusStratum cs;
    cs.lengths = rng.below(s.total_size());
    cs.samples = per_lengths;
    std::map<std::vector<Residue>, std::uint64_t> freq;
    for (std::uint64_t j = 0; j < per_lengths; ++j) {
      std::vector<std::optional<std::vector<Residue>>> vals;
      for (std::size_t i = 0; i < shapes.size(); ++i) {
        std::vector<Group::Element> params(radices[i].size());
        for (std::size_t t = 0; t < params.size(); ++t) params[t] = rng.below(radices[i][t]);
        const auto q = make_arrangement(s, shapes[i], cs.lengths, params);
        vals.push_back(arrangement_value(phi, q));
        if (vals.back()) ++freq[*vals.back()];
      }
      if (std::all_of(vals.begin(), vals.end(), [](const auto& v) { return v.has_value(); })) {
        ++cs.with_data;
        if (std::all_of(vals.begin(), vals.end(), [&](const auto& v) { return *v == *vals[0]; }))
          ++cs.agreeing;
      }
    }
    std::uint64_t best = 0;
    for (const auto& [v, f] : freq)
      if (f > best) {
        best = f;
        cs.modal_value = v;
      }
    rep.with_data += cs.with_data;
    rep.agreeing += cs.agreeing;
    rep.strata.push_back(std::move(cs));
  }
  if (rep.with_data)
    rep.agree_fraction = static_cast<double>(rep.agreeing) / static_cast<double>(rep.with_data);
  return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive inverse search over global multiaffine maps.

namespace detail {

// Monomial vector (x) -> tensor product over factors of (1, x_{i,1}, ..., x_{i,n_i}).
inline std::vector<Residue> monomial_vector(const ProductSpace& s, std::uint64_t x) {
  std::vector<Residue> cur{1};
  const auto& m = s.modulus();
  for (int i = 0; i < s.k(); ++i) {
    const auto d = s.factor(i).digits(s.component(x, i));
    std::vector<Residue> next;
    next.reserve(cur.size() * (d.size() + 1));
    for (Residue c : cur) {
      next.push_back(c);
      for (Residue v : d) next.push_back(m.mul(c, v));
    }
    cur = std::move(next);
  }
  return cur;
}

// Converts per-component monomial coefficients into multilinear parts.
inline MultiAffineMap map_from_monomials(const ProductSpace& s,
                                         const std::vector<std::vector<Residue>>& coeffs) {
  const int k = s.k();
  const int h = static_cast<int>(coeffs.size());
  MultiAffineMap out(s, h);
  std::map<Subset, std::vector<std::vector<Residue>>> tensors;
  const std::size_t total = coeffs.empty() ? 0 : coeffs[0].size();
  for (std::size_t e = 0; e < total; ++e) {
    // Decode choice per factor: 0 is the constant 1, j >= 1 is coordinate j-1.
    std::vector<int> choice(k);
    std::size_t rem = e;
    for (int i = k - 1; i >= 0; --i) {
      const std::size_t r = static_cast<std::size_t>(s.dims()[i]) + 1;
      choice[i] = static_cast<int>(rem % r);
      rem /= r;
    }
    Subset I;
    std::size_t pos = 0;
    for (int i = 0; i < k; ++i)
      if (choice[i]) {
        I.push_back(i);
        pos = pos * s.dims()[i] + (choice[i] - 1);
      }
    auto& t = tensors[I];
    if (t.empty()) t.assign(h, MultilinearForm::zero(s, I).coeffs());
    for (int c = 0; c < h; ++c) t[c][pos] = coeffs[c][e];
  }
  for (auto& [I, ts] : tensors) {
    std::vector<MultilinearForm> forms;
    for (auto& t : ts) forms.emplace_back(s, I, t);
    out.add_part(I, forms);
  }
  return out;
}

}  // namespace detail

struct MultiaffineAgreement {
  MultiAffineMap map;
  std::uint64_t agreement = 0;
};

/// Exhaustive maximization of agreement with phi over every multiaffine map
/// G_[k] -> F_p^h. Coefficients are enumerated lexicographically in the
/// monomial basis, so ties go to the smallest coefficient vector.
inline MultiaffineAgreement multiaffine_inverse_search(const PartialMap& phi) {
  const ProductSpace& s = phi.space();
  const int h = phi.h();
  std::size_t nmono = 1;
  for (int n : s.dims()) nmono *= static_cast<std::size_t>(n) + 1;
  const std::uint64_t count = sat_pow(s.p(), static_cast<std::uint64_t>(h) * nmono);
  const auto dom = phi.domain();
  require_budget(sat_mul(count, std::max<std::uint64_t>(1, dom.size())),
                 "multiaffine_inverse_search");
  std::vector<std::vector<Residue>> mono;
  for (auto x : dom) mono.push_back(detail::monomial_vector(s, x));
  const auto& m = s.modulus();
  std::vector<Residue> digits(h * nmono, 0);
  std::vector<Residue> best_digits = digits;
  std::uint64_t best = 0;
  bool have = false;
  for (std::uint64_t it = 0; it < count; ++it) {
    std::uint64_t agree = 0;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const auto v = phi.value(dom[i]);
      bool ok = true;
      for (int c = 0; c < h && ok; ++c) {
        std::uint64_t acc = 0;
        for (std::size_t e = 0; e < nmono; ++e) acc += std::uint64_t{digits[c * nmono + e]} * mono[i][e];
        ok = acc % m.p() == v[c];
      }
      if (ok) ++agree;
    }
    if (!have || agree > best) {
      best = agree;
      best_digits = digits;
      have = true;
      if (best == dom.size()) break;
    }
    for (std::size_t j = digits.size(); j-- > 0;) {
      if (++digits[j] < m.p()) break;
      digits[j] = 0;
    }
  }
  std::vector<std::vector<Residue>> coeffs(h);
  for (int c = 0; c < h; ++c)
    coeffs[c].assign(best_digits.begin() + c * nmono, best_digits.begin() + (c + 1) * nmono);
  return {detail::map_from_monomials(s, coeffs), best};
}

}  // namespace hofa
