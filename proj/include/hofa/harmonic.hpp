// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// Dense complex tables on product spaces: Fourier transform, convolutions,
// Gowers and box norms, spectral approximation.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hofa/budget.hpp"
#include "hofa/error.hpp"
#include "hofa/field.hpp"

namespace hofa {

/// Space G = F_p^n viewed as a one-factor product space.
inline ProductSpace single_group_space(std::uint32_t p, int n) {
  return ProductSpace(PrimeModulus(p), {n});
}

/// Complex-valued function on a product space, stored in canonical index
/// order.
class FunctionTable {
 public:
  FunctionTable(ProductSpace space, std::vector<Complex> values, bool bounded = false)
      : space_(std::move(space)), values_(std::move(values)), bounded_(bounded) {
    detail::check_schema(values_.size() == space_.total_size(),
                         "table has " + std::to_string(values_.size()) +
                             " values but the space has " +
                             std::to_string(space_.total_size()) + " points");
    if (bounded_)
      detail::check_schema(max_modulus() <= 1.0 + 1e-12,
                           "table flagged bounded has a value of modulus > 1");
  }

  static FunctionTable constant(const ProductSpace& s, Complex c) {
    return FunctionTable(s, std::vector<Complex>(s.total_size(), c), std::abs(c) <= 1.0);
  }

  template <class F>
  static FunctionTable from_function(const ProductSpace& s, F&& fn) {
    std::vector<Complex> v(s.total_size());
    for (std::uint64_t i = 0; i < v.size(); ++i) v[i] = fn(i);
    return FunctionTable(s, std::move(v));
  }

  const ProductSpace& space() const noexcept { return space_; }
  std::uint64_t size() const noexcept { return values_.size(); }
  const std::vector<Complex>& values() const noexcept { return values_; }
  const Complex& operator[](std::uint64_t i) const { return values_[i]; }
  bool bounded() const noexcept { return bounded_; }

  double max_modulus() const {
    double m = 0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
  }
  /// Sets the bounded flag after checking sup |f| <= 1.
  FunctionTable& mark_bounded() {
    detail::check_schema(max_modulus() <= 1.0 + 1e-12, "table is not bounded by 1");
    bounded_ = true;
    return *this;
  }

 private:
  ProductSpace space_;
  std::vector<Complex> values_;
  bool bounded_ = false;
};

/// Fourier coefficients r -> f^(r), r indexed over the flattened group.
struct Spectrum {
  ProductSpace space;
  std::vector<Complex> coeffs;

  Group group() const { return space.flat(); }
  const Complex& operator[](std::uint64_t r) const { return coeffs[r]; }
};

namespace detail {

inline void check_same_space(const FunctionTable& f, const FunctionTable& g) {
  check_schema(f.space() == g.space(), "functions live on different spaces");
}

// Length-p DFT along every flat digit, sign -1 or +1 in the exponent.
inline void digit_transform(const ProductSpace& s, std::vector<Complex>& v, int sign) {
  const std::uint32_t p = s.p();
  const PrimeModulus& m = s.modulus();
  const std::uint64_t n = v.size();
  std::vector<Complex> in(p), out(p);
  for (std::uint64_t place = 1; place < n; place *= p) {
    const std::uint64_t block = place * p;
    for (std::uint64_t base = 0; base < n; base += block) {
      for (std::uint64_t low = 0; low < place; ++low) {
        for (std::uint32_t t = 0; t < p; ++t) in[t] = v[base + low + t * place];
        for (std::uint32_t r = 0; r < p; ++r) {
          Complex acc = 0;
          for (std::uint32_t t = 0; t < p; ++t) {
            const Residue e = (r * t) % p;
            acc += in[t] * m.character(sign < 0 ? m.neg(e) : e);
          }
          out[r] = acc;
        }
        for (std::uint32_t r = 0; r < p; ++r) v[base + low + r * place] = out[r];
      }
    }
  }
}

}  // namespace detail

/// f^(r) = E_x f(x) omega^{-r.x}, with a product space flattened to a single
/// group. Runs the factor-wise fast transform in O(|G| log_p|G| p).
inline Spectrum fourier(const FunctionTable& f) {
  std::vector<Complex> v = f.values();
  detail::digit_transform(f.space(), v, -1);
  const double inv = 1.0 / static_cast<double>(v.size());
  for (auto& c : v) c *= inv;
  return Spectrum{f.space(), std::move(v)};
}

/// f(x) = sum_r f^(r) omega^{r.x}.
inline FunctionTable inverse_fourier(const Spectrum& s) {
  detail::check_schema(s.coeffs.size() == s.space.total_size(), "spectrum size mismatch");
  std::vector<Complex> v = s.coeffs;
  detail::digit_transform(s.space, v, +1);
  return FunctionTable(s.space, std::move(v));
}

/// (f conv g)(x) = E_y f(x + y) conj g(y), summed directly.
inline FunctionTable conv(const FunctionTable& f, const FunctionTable& g) {
  detail::check_same_space(f, g);
  const std::uint64_t n = f.size();
  require_budget(sat_mul(n, n), "conv");
  const Group grp = f.space().flat();
  std::vector<Complex> out(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    Complex acc = 0;
    for (std::uint64_t y = 0; y < n; ++y) acc += f[grp.add(x, y)] * std::conj(g[y]);
    out[x] = acc / static_cast<double>(n);
  }
  return FunctionTable(f.space(), std::move(out));
}

/// Convolution in direction d (0-based):
/// (f conv_d)(x with x_d = y) = E_z f(x with x_d = y + z) conj f(x with x_d = z).
inline FunctionTable dir_conv(const FunctionTable& f, int d) {
  const ProductSpace& s = f.space();
  detail::check_schema(d >= 0 && d < s.k(), "direction " + std::to_string(d) +
                                                 " out of range for k = " +
                                                 std::to_string(s.k()));
  const Group& gd = s.factor(d);
  require_budget(sat_mul(s.total_size(), gd.size()), "dir_conv");
  std::vector<Complex> out(s.total_size());
  const double inv = 1.0 / static_cast<double>(gd.size());
  for (std::uint64_t x = 0; x < s.total_size(); ++x) {
    const Group::Element y = s.component(x, d);
    Complex acc = 0;
    for (Group::Element z = 0; z < gd.size(); ++z)
      acc += f[s.with_component(x, d, gd.add(y, z))] * std::conj(f[s.with_component(x, d, z)]);
    out[x] = acc * inv;
  }
  return FunctionTable(s, std::move(out));
}

/// Repeated directional convolution; dirs[0] is applied first.
inline FunctionTable mixed_conv(const FunctionTable& f, std::span<const int> dirs) {
  detail::check_schema(!dirs.empty(), "mixed_conv needs at least one direction");
  FunctionTable cur = f;
  for (int d : dirs) cur = dir_conv(cur, d);
  return cur;
}

/// mixed_conv(f, dirs) at one point x, evaluated as the explicit average over
/// 2^r-point configurations rather than by recursion.
inline Complex mixed_conv_expanded(const FunctionTable& f, std::span<const int> dirs,
                                   std::uint64_t x) {
  const ProductSpace& s = f.space();
  s.check_index(x);
  const int r = static_cast<int>(dirs.size());
  detail::check_schema(r >= 1 && r <= 16, "mixed_conv_expanded needs 1..16 directions");
  for (int d : dirs) detail::check_schema(d >= 0 && d < s.k(), "direction out of range");

  // Outermost convolution first: e[0] is the last direction applied.
  std::vector<int> e(dirs.rbegin(), dirs.rend());

  // Parameter a^i has 2^i copies (indexed by eps restricted to [0, i)).
  std::vector<std::uint64_t> offset(r);
  std::uint64_t nparams = 0;
  std::uint64_t count = 1;
  for (int i = 0; i < r; ++i) {
    offset[i] = nparams;
    nparams += std::uint64_t{1} << i;
  }
  std::vector<std::uint64_t> radix(nparams);
  for (int i = 0; i < r; ++i)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << i); ++c) {
      radix[offset[i] + c] = s.factor(e[i]).size();
      count = sat_mul(count, s.factor(e[i]).size());
    }
  require_budget(sat_mul(count, std::uint64_t{1} << r), "mixed_conv_expanded");

  const std::vector<Group::Element> xc = s.components(x);
  std::vector<std::uint64_t> a(nparams, 0);
  std::vector<Group::Element> pt(s.k());
  Complex total = 0;
  for (std::uint64_t it = 0; it < count; ++it) {
    Complex prod = 1;
    for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << r); ++eps) {
      // eps bit i is eps_{i+1} in 1-based numbering.
      for (int d = 0; d < s.k(); ++d) {
        const Group& gd = s.factor(d);
        // Occurrences of d from last to first; `suffix` is the product of
        // eps over the occurrences already passed.
        Group::Element acc = 0;
        bool suffix = true;
        for (int i = r - 1; i >= 0; --i) {
          if (e[i] != d) continue;
          const std::uint64_t mask = (std::uint64_t{1} << i) - 1;
          if (suffix) acc = gd.add(acc, a[offset[i] + (eps & mask)]);
          suffix = suffix && ((eps >> i) & 1);
        }
        pt[d] = suffix ? gd.add(xc[d], acc) : acc;
      }
      const Complex val = f[s.index_from(pt)];
      const int ones = std::popcount(eps);
      prod *= ((r - ones) % 2) ? std::conj(val) : val;
    }
    total += prod;
    for (std::uint64_t j = 0; j < nparams; ++j) {
      if (++a[j] < radix[j]) break;
      a[j] = 0;
    }
  }
  return total / static_cast<double>(count);
}

/// Multiplicative derivative: (d_a f)(x) = f(x) conj f(x - a), with a in the
/// flattened group.
inline FunctionTable mult_derivative(const FunctionTable& f, std::uint64_t a) {
  const Group g = f.space().flat();
  detail::check_schema(a < g.size(), "shift out of range");
  std::vector<Complex> out(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) out[x] = f[x] * std::conj(f[g.sub(x, a)]);
  return FunctionTable(f.space(), std::move(out));
}

inline Complex mean(const FunctionTable& f) {
  Complex acc = 0;
  for (const auto& v : f.values()) acc += v;
  return acc / static_cast<double>(f.size());
}

namespace detail {

inline double uk_power(const FunctionTable& f, int k) {
  if (k == 1) return std::norm(mean(f));
  double acc = 0;
  for (std::uint64_t a = 0; a < f.size(); ++a) acc += uk_power(mult_derivative(f, a), k - 1);
  return acc / static_cast<double>(f.size());
}

inline double clamped_root(double power, int k, const char* what) {
  check_internal(power >= -1e-9, std::string(what) + " power is negative");
  return std::pow(std::max(power, 0.0), 1.0 / static_cast<double>(std::uint64_t{1} << k));
}

}  // namespace detail

/// ||f||_{U^k}^{2^k}, computed by the derivative recursion
/// E_a ||d_a f||_{U^{k-1}}^{2^{k-1}} down to |E f|^2.
inline double uk_norm_power(const FunctionTable& f, int k) {
  detail::check_schema(k >= 1 && k <= 8, "uniformity order must be in [1, 8]");
  require_budget(sat_pow(f.size(), static_cast<std::uint64_t>(k)), "uk_norm");
  return detail::uk_power(f, k);
}

/// Gowers U^k norm over the flattened group.
inline double uk_norm(const FunctionTable& f, int k) {
  return detail::clamped_root(uk_norm_power(f, k), k, "U^k");
}

namespace detail {

inline double box_power(const FunctionTable& f) {
  const ProductSpace& s = f.space();
  const int k = s.k();
  if (k == 1) return std::norm(mean(f));
  std::vector<int> dims(s.dims().begin(), s.dims().end() - 1);
  const ProductSpace rest(s.modulus(), dims);
  const Group& gk = s.factor(k - 1);
  double acc = 0;
  std::vector<Complex> g(rest.total_size());
  for (Group::Element xk = 0; xk < gk.size(); ++xk)
    for (Group::Element yk = 0; yk < gk.size(); ++yk) {
      for (std::uint64_t z = 0; z < rest.total_size(); ++z)
        g[z] = f[z * gk.size() + yk] * std::conj(f[z * gk.size() + xk]);
      acc += box_power(FunctionTable(rest, g));
    }
  return acc / static_cast<double>(gk.size() * gk.size());
}

}  // namespace detail

/// ||f||_box^{2^k} = E_{x,y} prod_{I} Conj^{|I|} f(x_I, y_{[k] \ I}).
inline double box_norm_power(const FunctionTable& f) {
  std::uint64_t cost = 1;
  for (int i = 0; i < f.space().k(); ++i)
    cost = sat_mul(cost, sat_mul(f.space().factor(i).size(), f.space().factor(i).size()));
  require_budget(cost, "box_norm");
  return detail::box_power(f);
}

inline double box_norm(const FunctionTable& f) {
  return detail::clamped_root(box_norm_power(f), f.space().k(), "box norm");
}

inline double lq_norm(const FunctionTable& f, double q) {
  detail::check_schema(q >= 1.0, "q must be at least 1");
  double acc = 0;
  for (const auto& v : f.values()) acc += std::pow(std::abs(v), q);
  return std::pow(acc / static_cast<double>(f.size()), 1.0 / q);
}

inline double linf_norm(const FunctionTable& f) { return f.max_modulus(); }

inline double l1_distance(const FunctionTable& f, const FunctionTable& g) {
  detail::check_same_space(f, g);
  double acc = 0;
  for (std::uint64_t i = 0; i < f.size(); ++i) acc += std::abs(f[i] - g[i]);
  return acc / static_cast<double>(f.size());
}

inline FunctionTable difference(const FunctionTable& f, const FunctionTable& g) {
  detail::check_same_space(f, g);
  std::vector<Complex> v(f.size());
  for (std::uint64_t i = 0; i < f.size(); ++i) v[i] = f[i] - g[i];
  return FunctionTable(f.space(), std::move(v));
}

namespace detail {

inline void require_bounded(const FunctionTable& f, const char* what) {
  if (f.max_modulus() > 1.0 + 1e-12)
    throw PreconditionError(std::string(what) + " requires sup|f| <= 1",
                            "{\"max_modulus\": " + std::to_string(f.max_modulus()) + "}");
}

inline std::vector<std::uint64_t> threshold_set(const Spectrum& s, double eps) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < s.coeffs.size(); ++r)
    if (std::abs(s.coeffs[r]) >= eps - 1e-12) out.push_back(r);
  return out;
}

}  // namespace detail

/// {r : |f^(r)| >= eps} for bounded f; at most eps^{-2} frequencies.
inline std::vector<std::uint64_t> large_spectrum(const FunctionTable& f, double eps) {
  detail::check_schema(eps > 0, "epsilon must be positive");
  detail::require_bounded(f, "large_spectrum");
  auto out = detail::threshold_set(fourier(f), eps);
  detail::check_internal(static_cast<double>(out.size()) <= 1.0 / (eps * eps) + 1e-9,
                         "large spectrum exceeds eps^-2");
  return out;
}

struct SpectralApprox {
  FunctionTable approximant;
  std::vector<std::uint64_t> frequencies;
  double l2_error;
  double q;
  double lq_error;
};

/// Truncates f conv g to the frequencies where both |f^| and |g^| are at
/// least eps/2 and measures the L^2 and L^q errors against the exact
/// convolution.
inline SpectralApprox spectral_conv_approx(const FunctionTable& f, const FunctionTable& g,
                                           double eps, double q = 4.0) {
  detail::check_same_space(f, g);
  detail::check_schema(eps > 0, "epsilon must be positive");
  detail::check_schema(q >= 1.0, "q must be at least 1");
  detail::require_bounded(f, "spectral_conv_approx");
  detail::require_bounded(g, "spectral_conv_approx");
  const Spectrum fh = fourier(f);
  const Spectrum gh = fourier(g);
  Spectrum keep{f.space(), std::vector<Complex>(f.size(), 0)};
  std::vector<std::uint64_t> freq;
  for (std::uint64_t r = 0; r < f.size(); ++r) {
    if (std::abs(fh[r]) >= eps / 2 - 1e-12 && std::abs(gh[r]) >= eps / 2 - 1e-12) {
      keep.coeffs[r] = fh[r] * std::conj(gh[r]);
      freq.push_back(r);
    }
  }
  FunctionTable approx = inverse_fourier(keep);
  const FunctionTable err = difference(conv(f, g), approx);
  const double l2 = lq_norm(err, 2.0);
  const double lq = lq_norm(err, q);
  detail::check_internal(l2 <= eps + 1e-9, "spectral approximation L2 error exceeds eps");
  detail::check_internal(lq <= 8.0 * std::pow(eps, 1.0 / q) + 1e-9,
                         "spectral approximation Lq error exceeds 8 eps^(1/q)");
  return SpectralApprox{std::move(approx), std::move(freq), l2, q, lq};
}

}  // namespace hofa
