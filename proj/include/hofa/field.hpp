// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// Exact prime-field arithmetic, vectors over F_p, indexed groups F_p^n and
// their products, cosets, and the small amount of linear algebra mod p the
// rest of the library is built on.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hofa/budget.hpp"
#include "hofa/error.hpp"

namespace hofa {

using Residue = std::uint32_t;
using Complex = std::complex<double>;

inline constexpr std::uint32_t kMaxPrime = 251;

namespace detail {

constexpr bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// e^{2 pi i a / p} for every prime p <= kMaxPrime, built once.
inline const std::vector<Complex>& character_table(std::uint32_t p) {
  static const auto tables = [] {
    std::array<std::vector<Complex>, kMaxPrime + 1> t{};
    for (std::uint32_t q = 2; q <= kMaxPrime; ++q) {
      if (!is_prime(q)) continue;
      t[q].resize(q);
      for (std::uint32_t a = 0; a < q; ++a) {
        const double angle = 2.0 * std::numbers::pi * a / q;
        t[q][a] = Complex(std::cos(angle), std::sin(angle));
      }
    }
    return t;
  }();
  return tables[p];
}

}  // namespace detail

/// The prime p of the ground field together with its additive character
/// a -> omega^a, omega = e^{2 pi i / p}.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint32_t p) : p_(p) {
    detail::check_schema(p >= 2 && p <= kMaxPrime && detail::is_prime(p),
                         "modulus must be a prime in [2, 251], got " +
                             std::to_string(p));
  }

  std::uint32_t p() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    const std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept { return (a * b) % p_; }
  Residue pow(Residue a, std::uint64_t e) const noexcept {
    Residue r = 1 % p_;
    Residue b = a % p_;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  Residue inv(Residue a) const {
    if (a % p_ == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  /// omega^a for a residue a.
  const Complex& character(Residue a) const noexcept {
    return detail::character_table(p_)[a];
  }

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

/// omega^a, the additive character of F_p evaluated at a.
inline Complex character(const PrimeModulus& m, Residue a) {
  detail::check_schema(a < m.p(), "character argument out of range");
  return m.character(a);
}

/// An element of F_p^n.
class FpVector {
 public:
  FpVector(PrimeModulus m, std::vector<Residue> coords)
      : m_(m), coords_(std::move(coords)) {
    for (Residue c : coords_)
      detail::check_schema(c < m_.p(), "vector coordinate out of range");
  }

  static FpVector zero(PrimeModulus m, std::size_t n) {
    return FpVector(m, std::vector<Residue>(n, 0));
  }

  const PrimeModulus& modulus() const noexcept { return m_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Residue> coords() const noexcept { return coords_; }
  Residue operator[](std::size_t i) const { return coords_.at(i); }
  bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Residue c) { return c == 0; });
  }

  FpVector operator+(const FpVector& o) const {
    check_same(o);
    std::vector<Residue> r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = m_.add(coords_[i], o.coords_[i]);
    return FpVector(m_, std::move(r));
  }
  FpVector operator-(const FpVector& o) const {
    check_same(o);
    std::vector<Residue> r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = m_.sub(coords_[i], o.coords_[i]);
    return FpVector(m_, std::move(r));
  }
  FpVector scaled(Residue c) const {
    std::vector<Residue> r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = m_.mul(c % m_.p(), coords_[i]);
    return FpVector(m_, std::move(r));
  }

  friend bool operator==(const FpVector& a, const FpVector& b) {
    return a.m_ == b.m_ && a.coords_ == b.coords_;
  }
  friend bool operator<(const FpVector& a, const FpVector& b) {
    return a.coords_ < b.coords_;
  }

  void check_same(const FpVector& o) const {
    detail::check_schema(m_ == o.m_, "vectors over different fields");
    detail::check_schema(dim() == o.dim(), "vector dimension mismatch: " +
                                               std::to_string(dim()) + " vs " +
                                               std::to_string(o.dim()));
  }

 private:
  PrimeModulus m_;
  std::vector<Residue> coords_;
};

/// sum_i u_i v_i mod p.
inline Residue dot(const FpVector& u, const FpVector& v) {
  u.check_same(v);
  const auto& m = u.modulus();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::uint64_t{u[i]} * v[i];
  return static_cast<Residue>(acc % m.p());
}

/// F_p^n with elements identified with integers in [0, p^n): coordinate 1 is
/// the most significant p-ary digit.
class Group {
 public:
  using Element = std::uint64_t;

  Group(PrimeModulus m, int n) : m_(m), n_(n) {
    detail::check_schema(n >= 0 && n <= 63, "group dimension out of range");
    size_ = sat_pow(m_.p(), static_cast<std::uint64_t>(n));
    detail::check_schema(size_ < (std::uint64_t{1} << 62), "group too large");
    place_.resize(n_);
    std::uint64_t s = 1;
    for (int j = n_ - 1; j >= 0; --j) {
      place_[j] = s;
      s *= m_.p();
    }
  }

  const PrimeModulus& modulus() const noexcept { return m_; }
  std::uint32_t p() const noexcept { return m_.p(); }
  int dim() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  Residue digit(Element a, int j) const noexcept {
    return static_cast<Residue>((a / place_[j]) % m_.p());
  }
  std::vector<Residue> digits(Element a) const {
    std::vector<Residue> d(n_);
    for (int j = 0; j < n_; ++j) d[j] = digit(a, j);
    return d;
  }
  Element from_digits(std::span<const Residue> d) const {
    detail::check_schema(d.size() == static_cast<std::size_t>(n_),
                         "element has wrong number of coordinates");
    Element a = 0;
    for (int j = 0; j < n_; ++j) {
      detail::check_schema(d[j] < m_.p(), "coordinate out of range");
      a += d[j] * place_[j];
    }
    return a;
  }
  FpVector vector(Element a) const { return FpVector(m_, digits(a)); }
  Element element(const FpVector& v) const {
    detail::check_schema(v.modulus() == m_, "vector over a different field");
    return from_digits(v.coords());
  }

  Element add(Element a, Element b) const noexcept {
    if (m_.p() == 2) return a ^ b;
    Element r = 0;
    for (int j = 0; j < n_; ++j) r += m_.add(digit(a, j), digit(b, j)) * place_[j];
    return r;
  }
  Element sub(Element a, Element b) const noexcept {
    if (m_.p() == 2) return a ^ b;
    Element r = 0;
    for (int j = 0; j < n_; ++j) r += m_.sub(digit(a, j), digit(b, j)) * place_[j];
    return r;
  }
  Element neg(Element a) const noexcept { return sub(0, a); }
  Element scale(Residue c, Element a) const noexcept {
    Element r = 0;
    for (int j = 0; j < n_; ++j) r += m_.mul(c % m_.p(), digit(a, j)) * place_[j];
    return r;
  }
  Residue dot(Element a, Element b) const noexcept {
    std::uint64_t acc = 0;
    for (int j = 0; j < n_; ++j) acc += std::uint64_t{digit(a, j)} * digit(b, j);
    return static_cast<Residue>(acc % m_.p());
  }

  friend bool operator==(const Group& a, const Group& b) {
    return a.m_ == b.m_ && a.n_ == b.n_;
  }

 private:
  PrimeModulus m_;
  int n_;
  std::uint64_t size_ = 1;
  std::vector<std::uint64_t> place_;
};

/// G_1 x ... x G_k with G_i = F_p^{n_i}. Points are indexed in mixed radix
/// with factor 1 varying slowest, so a point index is the big-endian p-ary
/// number formed by concatenating all coordinates.
class ProductSpace {
 public:
  ProductSpace(PrimeModulus m, std::vector<int> dims) : m_(m), dims_(std::move(dims)) {
    detail::check_schema(!dims_.empty(), "product space needs at least one factor");
    std::uint64_t total = 1;
    int flat = 0;
    for (int n : dims_) {
      detail::check_schema(n >= 0, "negative factor dimension");
      factors_.emplace_back(m_, n);
      total = sat_mul(total, factors_.back().size());
      flat += n;
    }
    require_budget(total, "product space size");
    total_ = total;
    flat_dim_ = flat;
    strides_.assign(dims_.size(), 1);
    for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
      strides_[i] = strides_[i + 1] * factors_[i + 1].size();
  }

  ProductSpace(std::uint32_t p, std::vector<int> dims)
      : ProductSpace(PrimeModulus(p), std::move(dims)) {}

  const PrimeModulus& modulus() const noexcept { return m_; }
  std::uint32_t p() const noexcept { return m_.p(); }
  int k() const noexcept { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  std::uint64_t total_size() const noexcept { return total_; }
  const Group& factor(int i) const { return factors_.at(i); }
  std::uint64_t stride(int i) const { return strides_.at(i); }

  /// The whole space viewed as the single group F_p^{n_1 + ... + n_k}; point
  /// indices coincide under this identification.
  Group flat() const { return Group(m_, flat_dim_); }

  /// Factor element of point `idx` in factor i.
  Group::Element component(std::uint64_t idx, int i) const {
    return (idx / strides_[i]) % factors_[i].size();
  }
  std::vector<Group::Element> components(std::uint64_t idx) const {
    check_index(idx);
    std::vector<Group::Element> c(dims_.size());
    for (int i = 0; i < k(); ++i) c[i] = component(idx, i);
    return c;
  }
  std::uint64_t index_from(std::span<const Group::Element> comps) const {
    detail::check_schema(comps.size() == dims_.size(), "point has wrong number of factors");
    std::uint64_t idx = 0;
    for (int i = 0; i < k(); ++i) {
      detail::check_schema(comps[i] < factors_[i].size(), "factor element out of range");
      idx += comps[i] * strides_[i];
    }
    return idx;
  }
  /// Replaces the factor-i component of `idx` by `e`.
  std::uint64_t with_component(std::uint64_t idx, int i, Group::Element e) const {
    return idx - component(idx, i) * strides_[i] + e * strides_[i];
  }

  std::vector<FpVector> point_of(std::uint64_t idx) const {
    check_index(idx);
    std::vector<FpVector> pt;
    pt.reserve(dims_.size());
    for (int i = 0; i < k(); ++i) pt.push_back(factors_[i].vector(component(idx, i)));
    return pt;
  }
  std::uint64_t index_of(std::span<const FpVector> pt) const {
    detail::check_schema(pt.size() == dims_.size(), "point has wrong number of factors");
    std::uint64_t idx = 0;
    for (int i = 0; i < k(); ++i) idx += factors_[i].element(pt[i]) * strides_[i];
    return idx;
  }

  void check_index(std::uint64_t idx) const {
    if (idx >= total_)
      throw SchemaError("point index " + std::to_string(idx) + " out of range [0, " +
                        std::to_string(total_) + ")");
  }

  friend bool operator==(const ProductSpace& a, const ProductSpace& b) {
    return a.m_ == b.m_ && a.dims_ == b.dims_;
  }

 private:
  PrimeModulus m_;
  std::vector<int> dims_;
  std::vector<Group> factors_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t total_ = 1;
  int flat_dim_ = 0;
};

// ---------------------------------------------------------------------------
// Matrices over F_p.

/// Dense row-major matrix over F_p.
struct MatrixFp {
  PrimeModulus modulus;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Residue> data;

  MatrixFp(PrimeModulus m, std::size_t r, std::size_t c)
      : modulus(m), rows(r), cols(c), data(r * c, 0) {}
  MatrixFp(PrimeModulus m, std::vector<std::vector<Residue>> rows_in)
      : modulus(m), rows(rows_in.size()), cols(rows_in.empty() ? 0 : rows_in[0].size()) {
    data.reserve(rows * cols);
    for (const auto& row : rows_in) {
      detail::check_schema(row.size() == cols, "ragged matrix");
      for (Residue v : row) data.push_back(v % m.p());
    }
  }

  Residue& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Reduced row echelon form in place. Returns pivot columns.
inline std::vector<std::size_t> row_reduce(MatrixFp& a) {
  const auto& m = a.modulus;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t sel = row;
    while (sel < a.rows && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(sel, c), a.at(row, c));
    const Residue inv = m.inv(a.at(row, col));
    for (std::size_t c = 0; c < a.cols; ++c) a.at(row, c) = m.mul(a.at(row, c), inv);
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const Residue f = a.at(r, col);
      for (std::size_t c = 0; c < a.cols; ++c)
        a.at(r, c) = m.sub(a.at(r, c), m.mul(f, a.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Row rank by Gaussian elimination mod p.
inline std::size_t rank_fp(MatrixFp a) { return row_reduce(a).size(); }

/// Some solution of A x = b, or nullopt. Free variables are set to zero.
inline std::optional<std::vector<Residue>> solve_linear(const MatrixFp& a,
                                                        std::span<const Residue> b) {
  detail::check_schema(b.size() == a.rows, "right-hand side length mismatch");
  MatrixFp aug(a.modulus, a.rows, a.cols + 1);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols) = b[r] % a.modulus.p();
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
  std::vector<Residue> x(a.cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols);
  return x;
}

/// Basis of {x : A x = 0}.
inline std::vector<std::vector<Residue>> nullspace(MatrixFp a) {
  const auto& m = a.modulus;
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(a.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = m.neg(a.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

inline MatrixFp transpose(const MatrixFp& a) {
  MatrixFp t(a.modulus, a.cols, a.rows);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c) t.at(c, r) = a.at(r, c);
  return t;
}

/// x -> M x + offset from F_p^{domain} to F_p^{codomain}. The offset is zero
/// for a linear map.
class LinearMapFp {
 public:
  LinearMapFp(MatrixFp matrix, std::vector<Residue> offset = {})
      : matrix_(std::move(matrix)), offset_(std::move(offset)) {
    if (offset_.empty()) offset_.assign(matrix_.rows, 0);
    detail::check_schema(offset_.size() == matrix_.rows, "offset length mismatch");
  }

  std::size_t domain_dim() const noexcept { return matrix_.cols; }
  std::size_t codomain_dim() const noexcept { return matrix_.rows; }
  const MatrixFp& matrix() const noexcept { return matrix_; }
  const std::vector<Residue>& offset() const noexcept { return offset_; }
  bool is_linear() const noexcept {
    return std::all_of(offset_.begin(), offset_.end(), [](Residue v) { return v == 0; });
  }

  std::vector<Residue> apply(std::span<const Residue> x) const {
    detail::check_schema(x.size() == matrix_.cols, "linear map input dimension mismatch");
    const auto& m = matrix_.modulus;
    std::vector<Residue> y(offset_);
    for (std::size_t r = 0; r < matrix_.rows; ++r) {
      std::uint64_t acc = y[r];
      for (std::size_t c = 0; c < matrix_.cols; ++c)
        acc += std::uint64_t{matrix_.at(r, c)} * x[c];
      y[r] = static_cast<Residue>(acc % m.p());
    }
    return y;
  }

  friend bool operator==(const LinearMapFp& a, const LinearMapFp& b) {
    return a.matrix_.rows == b.matrix_.rows && a.matrix_.cols == b.matrix_.cols &&
           a.matrix_.data == b.matrix_.data && a.offset_ == b.offset_;
  }

 private:
  MatrixFp matrix_;
  std::vector<Residue> offset_;
};

// ---------------------------------------------------------------------------
// Cosets.

/// u0 + U inside a single group, U spanned by an independent basis.
/// Members are enumerated by coordinates t in F_p^{dim U} (t_1 most
/// significant): u0 + sum_j t_j b_j.
class Coset {
 public:
  Coset(Group ambient, Group::Element basepoint, std::vector<Group::Element> basis)
      : g_(std::move(ambient)), u0_(basepoint), basis_(std::move(basis)) {
    detail::check_schema(u0_ < g_.size(), "coset basepoint out of range");
    MatrixFp b(g_.modulus(), basis_.size(), static_cast<std::size_t>(g_.dim()));
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      detail::check_schema(basis_[r] < g_.size(), "coset basis vector out of range");
      for (int c = 0; c < g_.dim(); ++c) b.at(r, c) = g_.digit(basis_[r], c);
    }
    detail::check_schema(rank_fp(b) == basis_.size(), "coset basis is not independent");
    size_ = sat_pow(g_.p(), basis_.size());
    require_budget(size_, "coset size");
    coords_ = Group(g_.modulus(), static_cast<int>(basis_.size()));
  }

  /// The whole group with its standard basis.
  static Coset whole(const Group& g) {
    std::vector<Group::Element> basis;
    for (int j = 0; j < g.dim(); ++j) {
      std::vector<Residue> d(g.dim(), 0);
      d[j] = 1;
      basis.push_back(g.from_digits(d));
    }
    return Coset(g, 0, std::move(basis));
  }

  const Group& ambient() const noexcept { return g_; }
  Group::Element basepoint() const noexcept { return u0_; }
  const std::vector<Group::Element>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  /// F_p^{dim U}, the coordinate group of the coset.
  const Group& coordinate_group() const noexcept { return coords_; }

  Group::Element member(Group::Element t) const {
    Group::Element x = u0_;
    for (std::size_t j = 0; j < basis_.size(); ++j)
      x = g_.add(x, g_.scale(coords_.digit(t, static_cast<int>(j)), basis_[j]));
    return x;
  }
  std::vector<Group::Element> members() const {
    std::vector<Group::Element> out;
    out.reserve(size_);
    for (std::uint64_t t = 0; t < size_; ++t) out.push_back(member(t));
    return out;
  }
  /// Coordinates of x in the coset parametrization, if x is a member.
  std::optional<Group::Element> coordinates_of(Group::Element x) const {
    const auto& m = g_.modulus();
    MatrixFp a(m, static_cast<std::size_t>(g_.dim()), basis_.size());
    std::vector<Residue> rhs(g_.dim());
    const Group::Element diff = g_.sub(x, u0_);
    for (int r = 0; r < g_.dim(); ++r) {
      for (std::size_t c = 0; c < basis_.size(); ++c) a.at(r, c) = g_.digit(basis_[c], r);
      rhs[r] = g_.digit(diff, r);
    }
    auto t = solve_linear(a, rhs);
    if (!t) return std::nullopt;
    return coords_.from_digits(*t);
  }
  bool contains(Group::Element x) const { return coordinates_of(x).has_value(); }

 private:
  Group g_;
  Group::Element u0_;
  std::vector<Group::Element> basis_;
  std::uint64_t size_ = 1;
  Group coords_{PrimeModulus(2), 0};
};

/// One linear constraint x . y = lambda on the unknown y.
struct DotConstraint {
  FpVector x;
  Residue lambda;
};

namespace detail {

inline void check_constraints(std::span<const DotConstraint> cs, const Coset& c) {
  for (const auto& k : cs) {
    check_schema(k.x.modulus() == c.ambient().modulus(), "constraint over a different field");
    check_schema(k.x.dim() == static_cast<std::size_t>(c.ambient().dim()),
                 "constraint dimension mismatch");
    check_schema(k.lambda < c.ambient().p(), "constraint value out of range");
  }
}

// A[i][j] = x_i . b_j and rhs_i = lambda_i - x_i . u0 in coset coordinates.
inline std::pair<MatrixFp, std::vector<Residue>> coset_system(
    std::span<const DotConstraint> cs, const Coset& c) {
  const Group& g = c.ambient();
  const auto& m = g.modulus();
  MatrixFp a(m, cs.size(), c.dim());
  std::vector<Residue> rhs(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto xi = g.element(cs[i].x);
    for (std::size_t j = 0; j < c.dim(); ++j) a.at(i, j) = g.dot(xi, c.basis()[j]);
    rhs[i] = m.sub(cs[i].lambda, g.dot(xi, c.basepoint()));
  }
  return {std::move(a), std::move(rhs)};
}

}  // namespace detail

/// Some y in the coset with x_i . y = lambda_i for every constraint, found by
/// row reduction over the coset parametrization.
inline std::optional<FpVector> solve_on_coset(std::span<const DotConstraint> constraints,
                                              const Coset& coset) {
  detail::check_constraints(constraints, coset);
  const Group& g = coset.ambient();
  if (constraints.empty()) return g.vector(coset.basepoint());
  auto [a, rhs] = detail::coset_system(constraints, coset);
  auto t = solve_linear(a, rhs);
  if (!t) return std::nullopt;
  return g.vector(coset.member(coset.coordinate_group().from_digits(*t)));
}

/// The dual criterion for solubility: sum_i mu_i (lambda_i - x_i . u0) = 0
/// for every mu with sum_i mu_i x_i in U^perp.
inline bool coset_system_consistent(std::span<const DotConstraint> constraints,
                                    const Coset& coset) {
  detail::check_constraints(constraints, coset);
  if (constraints.empty()) return true;
  auto [a, rhs] = detail::coset_system(constraints, coset);
  const auto& m = coset.ambient().modulus();
  // mu with sum_i mu_i x_i in U^perp are exactly mu^T A = 0.
  for (const auto& mu : nullspace(transpose(a))) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) acc += std::uint64_t{mu[i]} * rhs[i];
    if (acc % m.p() != 0) return false;
  }
  return true;
}

}  // namespace hofa
