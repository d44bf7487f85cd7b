// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// JSON encodings of the library types.

#pragma once

#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
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

namespace hofa::io {

using Json = nlohmann::json;

namespace detail {

using hofa::detail::check_schema;

template <class F>
auto guarded(const char* what, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

inline Json complex_array(const std::vector<Complex>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back({c.real(), c.imag()});
  return a;
}

inline std::vector<Complex> complex_vector(const Json& j) {
  check_schema(j.is_array(), "expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    check_schema(e.is_array() && e.size() == 2, "complex value must be [re, im]");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

// Row-major nested arrays with the given shape.
inline Json nest(std::span<const Residue> flat, std::span<const int> shape) {
  if (shape.empty()) return flat.empty() ? Json(0) : Json(flat[0]);
  const std::size_t n = static_cast<std::size_t>(shape[0]);
  const std::size_t inner = n ? flat.size() / n : 0;
  Json a = Json::array();
  for (std::size_t i = 0; i < n; ++i) a.push_back(nest(flat.subspan(i * inner, inner), shape.subspan(1)));
  return a;
}

inline void unnest(const Json& j, std::span<const int> shape, std::vector<Residue>& out) {
  if (shape.empty()) {
    check_schema(j.is_number_integer() && j.get<std::int64_t>() >= 0, "coefficient must be a residue");
    out.push_back(static_cast<Residue>(j.get<std::int64_t>()));
    return;
  }
  check_schema(j.is_array() && j.size() == static_cast<std::size_t>(shape[0]),
               "coefficient tensor has the wrong shape");
  for (const auto& e : j) unnest(e, shape.subspan(1), out);
}

inline std::vector<Residue> residues(const Json& j) {
  check_schema(j.is_array(), "expected an array of residues");
  std::vector<Residue> out;
  for (const auto& e : j) {
    check_schema(e.is_number_integer() && e.get<std::int64_t>() >= 0, "expected a residue");
    out.push_back(static_cast<Residue>(e.get<std::int64_t>()));
  }
  return out;
}

}  // namespace detail

// --- files -----------------------------------------------------------------

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  return detail::guarded("parse error", [&] { return Json::parse(in); });
}

/// Pretty JSON with sorted keys and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write " + path);
  out << text;
  if (!out) throw SchemaError("write failed for " + path);
}

inline void write_json(const std::string& path, const Json& j) { write_text(path, dump(j)); }

// --- space-core ---------------------------------------------------------------

inline Json to_json(const ProductSpace& s) { return {{"p", s.p()}, {"dims", s.dims()}}; }

inline ProductSpace space_from_json(const Json& j) {
  return detail::guarded("space", [&] {
    detail::check_schema(j.is_object() && j.contains("p") && j.contains("dims"),
                         "space needs \"p\" and \"dims\"");
    const auto p = j.at("p").get<std::int64_t>();
    detail::check_schema(p >= 2 && p <= kMaxPrime, "p out of range");
    return ProductSpace(static_cast<std::uint32_t>(p), j.at("dims").get<std::vector<int>>());
  });
}

inline Json to_json(const Group& g, Group::Element x) { return g.digits(x); }

inline Group::Element element_from_json(const Group& g, const Json& j) {
  const auto d = detail::residues(j);
  detail::check_schema(d.size() == static_cast<std::size_t>(g.dim()), "vector has wrong dimension");
  for (auto v : d) detail::check_schema(v < g.p(), "vector entry out of range");
  return g.from_digits(d);
}

inline Json to_json(const Coset& c) {
  Json basis = Json::array();
  for (auto b : c.basis()) basis.push_back(to_json(c.ambient(), b));
  return {{"basepoint", to_json(c.ambient(), c.basepoint())}, {"basis", basis}};
}

inline Coset coset_from_json(const Group& g, const Json& j) {
  return detail::guarded("coset", [&] {
    std::vector<Group::Element> basis;
    for (const auto& b : j.at("basis")) basis.push_back(element_from_json(g, b));
    return Coset(g, element_from_json(g, j.at("basepoint")), std::move(basis));
  });
}

inline Json to_json(const LinearMapFp& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.codomain_dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.domain_dim(); ++c) row.push_back(a.matrix().at(r, c));
    rows.push_back(row);
  }
  return {{"matrix", rows}, {"offset", a.offset()}};
}

// --- harmonic ---------------------------------------------------------------

inline Json to_json(const FunctionTable& f) {
  return {{"space", to_json(f.space())},
          {"values", detail::complex_array(f.values())},
          {"bounded", f.bounded()}};
}

inline FunctionTable table_from_json(const Json& j) {
  return detail::guarded("function table", [&] {
    FunctionTable f(space_from_json(j.at("space")), detail::complex_vector(j.at("values")));
    if (j.value("bounded", false)) f.mark_bounded();
    return f;
  });
}

inline Json to_json(const Spectrum& s) {
  return {{"space", to_json(s.space)}, {"coeffs", detail::complex_array(s.coeffs)}};
}

inline Spectrum spectrum_from_json(const Json& j) {
  return detail::guarded("spectrum", [&] {
    Spectrum s{space_from_json(j.at("space")), detail::complex_vector(j.at("coeffs"))};
    detail::check_schema(s.coeffs.size() == s.space.total_size(), "spectrum has wrong length");
    return s;
  });
}

// --- multiaffine ------------------------------------------------------------

inline Json to_json(const MultilinearForm& f) {
  const auto shape = f.shape();
  return {{"space", to_json(f.space())},
          {"support", f.support()},
          {"coeffs", detail::nest(f.coeffs(), shape)}};
}

inline MultilinearForm form_from_json(const ProductSpace& s, const Subset& support, const Json& c) {
  hofa::detail::check_subset(support, s.k());
  std::vector<int> shape;
  for (int i : support) shape.push_back(s.dims()[i]);
  std::vector<Residue> flat;
  detail::unnest(c, shape, flat);
  return MultilinearForm(s, support, std::move(flat));
}

inline MultilinearForm form_from_json(const Json& j) {
  return detail::guarded("form", [&] {
    const auto s = space_from_json(j.at("space"));
    return form_from_json(s, j.at("support").get<Subset>(), j.at("coeffs"));
  });
}

inline Json to_json(const MultiAffineMap& m) {
  Json parts = Json::array();
  for (const auto& [I, forms] : m.parts()) {
    Json cs = Json::array();
    for (const auto& f : forms) cs.push_back(detail::nest(f.coeffs(), f.shape()));
    parts.push_back({{"I", I}, {"coeffs", cs}});
  }
  return {{"space", to_json(m.space())}, {"h", m.h()}, {"parts", parts}};
}

inline MultiAffineMap map_from_json(const Json& j) {
  return detail::guarded("multiaffine map", [&] {
    const auto s = space_from_json(j.at("space"));
    const int h = j.at("h").get<int>();
    detail::check_schema(h >= 0, "h must be non-negative");
    MultiAffineMap m(s, h);
    for (const auto& part : j.at("parts")) {
      const auto I = part.at("I").get<Subset>();
      const auto& cs = part.at("coeffs");
      detail::check_schema(cs.is_array() && cs.size() == static_cast<std::size_t>(h),
                           "part needs one tensor per component");
      std::vector<MultilinearForm> forms;
      for (const auto& c : cs) forms.push_back(form_from_json(s, I, c));
      m.add_part(I, forms);
    }
    return m;
  });
}

inline Json to_json(const Variety& v) {
  Json j = to_json(v.map());
  j["target"] = v.target();
  return j;
}

inline Variety variety_from_json(const Json& j) {
  return detail::guarded("variety", [&] {
    return Variety(map_from_json(j), detail::residues(j.at("target")));
  });
}

// --- freiman ----------------------------------------------------------------

inline Json to_json(const PartialMap& phi) {
  Json entries = Json::array();
  for (auto x : phi.domain()) {
    const auto v = phi.value(x);
    entries.push_back({x, std::vector<Residue>(v.begin(), v.end())});
  }
  return {{"space", to_json(phi.space())}, {"h", phi.h()}, {"entries", entries}};
}

inline PartialMap partial_map_from_json(const Json& j) {
  return detail::guarded("partial map", [&] {
    PartialMap phi(space_from_json(j.at("space")), j.at("h").get<int>());
    for (const auto& e : j.at("entries")) {
      detail::check_schema(e.is_array() && e.size() == 2, "entry must be [index, [residues]]");
      const auto x = e[0].get<std::uint64_t>();
      detail::check_schema(!phi.contains(x), "duplicate entry " + std::to_string(x));
      phi.set(x, detail::residues(e[1]));
    }
    return phi;
  });
}

inline Json to_json(const Arrangement& q) {
  return {{"word", q.word}, {"lengths", q.lengths}, {"points", q.points}};
}

inline Json to_json(const TriArrangement& q) {
  return {{"word", q.word}, {"lengths", q.lengths}, {"points", q.points}};
}

inline Json to_json(const AffineOnCoset& a) {
  return {{"coset", to_json(a.coset)}, {"affine", to_json(a.map)}};
}

// --- polynomial -------------------------------------------------------------

inline Json to_json(const MonomialPoly& g) {
  Json terms = Json::array();
  for (const auto& [e, c] : g.terms()) terms.push_back({{"exps", e}, {"c", c}});
  return {{"p", g.p()}, {"n", g.n()}, {"terms", terms}};
}

inline MonomialPoly poly_from_json(const Json& j) {
  return detail::guarded("polynomial", [&] {
    const auto p = j.at("p").get<std::int64_t>();
    detail::check_schema(p >= 2 && p <= kMaxPrime, "p out of range");
    MonomialPoly g(static_cast<std::uint32_t>(p), j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
      const auto c = t.at("c").get<std::int64_t>();
      detail::check_schema(c >= 0 && c < p, "coefficient out of range");
      g.add_term(t.at("exps").get<std::vector<int>>(), static_cast<Residue>(c));
    }
    return g;
  });
}

inline Json to_json(const GroupFunctionH& f) {
  Json vals = Json::array();
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const auto v = f.value(x);
    vals.push_back(std::vector<Residue>(v.begin(), v.end()));
  }
  return {{"space", to_json(f.space())}, {"h", f.h()}, {"values", vals}};
}

inline GroupFunctionH group_function_from_json(const Json& j) {
  return detail::guarded("group function", [&] {
    const auto s = space_from_json(j.at("space"));
    const int h = j.at("h").get<int>();
    std::vector<Residue> flat;
    for (const auto& v : j.at("values")) {
      const auto r = detail::residues(v);
      detail::check_schema(r.size() == static_cast<std::size_t>(h), "value has wrong length");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return GroupFunctionH(s, h, std::move(flat));
  });
}

}  // namespace hofa::io
