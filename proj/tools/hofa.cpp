// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

// hofa: command-line front end.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hofa/hofa.hpp"
#include "hofa/oracle.hpp"

namespace {

using hofa::io::Json;
using hofa::lab::ResultRecord;

struct Options {
  std::string space_file, in_file, out_file, csv_file;
  std::uint64_t seed = 0;
  std::string mode;
  std::uint64_t samples = 0;
  std::uint64_t budget = 0;
  double tolerance = hofa::kDefaultTolerance;

  // Command-specific.
  std::string with_file, poly_file, words, kind, suite = "all", out_dir, check_dir;
  int k = 2, order = 2, d = 1, t = 1, h = 1, codim = 1, max_rank = 4;
  double density = 1.0, fraction = 0.0;
  std::uint64_t trials = 1, lengths_samples = 16;
  bool inverse = false, strict = false, unimodular = false;
};

Options opt;

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) {
      try {
        out.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw hofa::SchemaError("not an integer list: " + s);
      }
    }
  return out;
}

std::vector<std::vector<int>> parse_words(const std::string& s) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_ints(item));
  hofa::detail::check_schema(!out.empty(), "no words given");
  return out;
}

Json input() {
  hofa::detail::check_schema(!opt.in_file.empty(), "--in is required");
  return hofa::io::read_json(opt.in_file);
}

hofa::ProductSpace space_arg() {
  hofa::detail::check_schema(!opt.space_file.empty(), "--space is required");
  return hofa::io::space_from_json(hofa::io::read_json(opt.space_file));
}

/// Config of a run: the command path, the options that affect it, and the
/// hashes of the input files.
Json base_config(const std::string& command, const Json& extra = Json::object()) {
  Json c = {{"command", command}, {"seed", opt.seed}};
  for (const auto& [flag, path] : {std::pair{"in", opt.in_file}, std::pair{"space", opt.space_file},
                                   std::pair{"with", opt.with_file}, std::pair{"poly", opt.poly_file}})
    if (!path.empty())
      c[std::string(flag) + "_hash"] = hofa::lab::hex64(hofa::lab::config_hash(hofa::io::read_json(path)));
  c.update(extra);
  return c;
}

void emit_text(const std::string& text) {
  if (opt.out_file.empty())
    std::cout << text;
  else
    hofa::io::write_text(opt.out_file, text);
}

void emit(const Json& j) { emit_text(hofa::io::dump(j)); }

void emit(const ResultRecord& r) {
  emit(r.to_json());
  if (!opt.csv_file.empty()) hofa::io::write_text(opt.csv_file, hofa::lab::to_csv({r}));
}

ResultRecord record(const std::string& command, const Json& extra = Json::object()) {
  ResultRecord r;
  r.experiment = command;
  r.config = base_config(command, extra);
  return r;
}


// --- harmonic ---------------------------------------------------------------

void cmd_fourier() {
  const Json j = input();
  if (opt.inverse)
    emit(hofa::io::to_json(hofa::inverse_fourier(hofa::io::spectrum_from_json(j))));
  else
    emit(hofa::io::to_json(hofa::fourier(hofa::io::table_from_json(j))));
}

void cmd_conv() {
  const auto f = hofa::io::table_from_json(input());
  hofa::detail::check_schema(!opt.with_file.empty(), "--with is required");
  const auto g = hofa::io::table_from_json(hofa::io::read_json(opt.with_file));
  emit(hofa::io::to_json(hofa::conv(f, g)));
}

void cmd_uknorm() {
  const auto f = hofa::io::table_from_json(input());
  auto r = record("uknorm", {{"k", opt.k}});
  r.metrics["uk"] = hofa::uk_norm(f, opt.k);
  r.metrics["uk_power"] = hofa::uk_norm_power(f, opt.k);
  emit(r);
}

void cmd_boxnorm() {
  const auto f = hofa::io::table_from_json(input());
  auto r = record("boxnorm");
  r.metrics["box"] = hofa::box_norm(f);
  r.metrics["box_power"] = hofa::box_norm_power(f);
  emit(r);
}

// --- multiaffine ------------------------------------------------------------

void cmd_bias() {
  const Json j = input();
  auto r = record("bias");
  if (j.contains("support")) {
    r.metrics["bias"] = hofa::bias(hofa::io::form_from_json(j));
  } else {
    const auto b = hofa::bias(hofa::io::map_from_json(j));
    r.metrics["bias"] = b.real();
    r.metrics["bias_imag"] = b.imag();
    r.metrics["bias_modulus"] = std::abs(b);
  }
  emit(r);
}

void cmd_arank() {
  const auto f = hofa::io::form_from_json(input());
  auto r = record("arank", {{"tolerance", opt.tolerance}});
  const double a = hofa::analytic_rank(f, opt.tolerance);
  r.metrics["bias"] = hofa::bias(f);
  if (std::isinf(a))
    r.witnesses = {{"analytic_rank", "infinite"}};
  else
    r.metrics["analytic_rank"] = a;
  emit(r);
}

void cmd_prank() {
  const auto f = hofa::io::form_from_json(input());
  auto r = record("prank", {{"max_rank", opt.max_rank}});
  const auto res = hofa::partition_rank_search(f, opt.max_rank);
  r.metrics["found"] = res.has_value();
  if (res) {
    r.metrics["partition_rank"] = res->rank;
    r.metrics["verified"] = res->verified;
    Json terms = Json::array();
    for (const auto& t : res->terms)
      terms.push_back({{"I", t.I}, {"beta", hofa::io::to_json(t.beta)}, {"gamma", hofa::io::to_json(t.gamma)}});
    r.witnesses = {{"terms", terms}};
  }
  emit(r);
}

void cmd_qr() {
  const Json j = input();
  const auto v = hofa::io::variety_from_json(j);
  const auto& s = v.space();
  const auto c1 = j.contains("c1") ? hofa::io::coset_from_json(s.factor(0), j["c1"])
                                   : hofa::Coset::whole(s.factor(0));
  const auto c2 = j.contains("c2") ? hofa::io::coset_from_json(s.factor(1), j["c2"])
                                   : hofa::Coset::whole(s.factor(1));
  const auto rep = hofa::check_quasirandom(v.map(), v.target(), c1, c2);
  auto r = record("qr");
  r.metrics["empty"] = rep.empty;
  r.metrics["c1_size"] = static_cast<double>(rep.c1_size);
  r.metrics["c2_size"] = static_cast<double>(rep.c2_size);
  if (!rep.empty) {
    r.metrics["delta"] = rep.delta;
    r.metrics["x_failure"] = rep.x_failure;
    r.metrics["pair_failure"] = rep.pair_failure;
    r.metrics["eta_min"] = rep.eta_min;
  }
  emit(r);
}

// --- freiman ----------------------------------------------------------------

void cmd_freiman_verify() {
  const auto phi = hofa::io::partial_map_from_json(input());
  auto r = record("freiman verify", {{"order", opt.order}});
  const auto res = phi.space().k() == 1 ? hofa::is_freiman_hom(phi, opt.order)
                                        : hofa::is_multi_hom(phi, opt.order);
  r.metrics["ok"] = res.ok;
  if (!res.ok) r.witnesses = {{"tuple", res.witness}, {"direction", res.direction}};
  emit(r);
}

void cmd_freiman_extend() {
  const Json j = input();
  const auto phi = hofa::io::partial_map_from_json(j);
  hofa::detail::check_schema(phi.space().k() == 1, "extend needs a single-group map");
  const auto& g = phi.space().factor(0);
  const auto c = j.contains("coset") ? hofa::io::coset_from_json(g, j["coset"]) : hofa::Coset::whole(g);
  const auto ext = hofa::affine_extension(phi, c, opt.strict);
  auto r = record("freiman extend", {{"strict", opt.strict}});
  r.metrics["domain_size"] = static_cast<double>(phi.domain_size());
  r.metrics["coset_size"] = static_cast<double>(c.size());
  r.witnesses = {{"extension", hofa::io::to_json(ext)}};
  emit(r);
}

void cmd_freiman_census() {
  const auto phi = hofa::io::partial_map_from_json(input());
  const auto words = parse_words(opt.words);
  const std::uint64_t per = opt.samples ? opt.samples : 64;
  auto r = record("freiman census",
                  {{"words", words}, {"lengths_samples", opt.lengths_samples}, {"per_lengths", per}});
  const auto rep = hofa::respected_census(phi, words, opt.lengths_samples, per, opt.seed);
  r.metrics["with_data"] = static_cast<double>(rep.with_data);
  r.metrics["agreeing"] = static_cast<double>(rep.agreeing);
  Json strata = Json::array();
  for (const auto& st : rep.strata) {
    Json e = {{"lengths", st.lengths}, {"samples", st.samples}, {"with_data", st.with_data},
              {"agreeing", st.agreeing}};
    e["modal_value"] = st.modal_value ? Json(*st.modal_value) : Json("no data");
    strata.push_back(e);
  }
  if (rep.agree_fraction)
    r.metrics["agree_fraction"] = *rep.agree_fraction;
  r.witnesses = {{"strata", strata}, {"agree_fraction", rep.agree_fraction ? Json(*rep.agree_fraction) : Json("no data")}};
  emit(r);
}

void cmd_freiman_drc() {
  const auto phi = hofa::io::partial_map_from_json(input());
  auto r = record("freiman drc", {{"t", opt.t}, {"trials", opt.trials}});
  hofa::detail::check_schema(opt.trials >= 1, "--trials must be at least 1");
  if (opt.trials == 1) {
    const auto res = hofa::drc_filter(phi, opt.t, opt.seed);
    r.metrics["kept"] = static_cast<double>(res.kept.domain_size());
    r.metrics["domain_size"] = static_cast<double>(phi.domain_size());
    r.witnesses = {{"kept", hofa::io::to_json(res.kept)}, {"psi", hofa::io::to_json(res.psi)}};
  } else {
    const double n = static_cast<double>(opt.trials);
    const double size = static_cast<double>(std::max<std::uint64_t>(1, phi.domain_size()));
    double sum = 0, sumsq = 0;
    for (std::uint64_t i = 0; i < opt.trials; ++i) {
      const double rate =
          static_cast<double>(hofa::drc_filter(phi, opt.t, hofa::derive_seed(opt.seed, i)).kept.domain_size()) / size;
      sum += rate;
      sumsq += rate * rate;
    }
    const double mean = sum / n;
    r.metrics["kept_rate_mean"] = mean;
    r.metrics["kept_rate_std_error"] = std::sqrt(std::max(0.0, (sumsq - n * mean * mean) / (n - 1)) / n);
    r.metrics["expected"] = std::pow(static_cast<double>(phi.space().p()), -opt.t);
  }
  emit(r);
}

void cmd_freiman_inverse() {
  const auto phi = hofa::io::partial_map_from_json(input());
  const auto res = hofa::multiaffine_inverse_search(phi);
  auto r = record("freiman inverse-search");
  r.metrics["agreement"] = static_cast<double>(res.agreement);
  r.metrics["domain_size"] = static_cast<double>(phi.domain_size());
  r.witnesses = {{"map", hofa::io::to_json(res.map)}};
  emit(r);
}

// --- polynomial -------------------------------------------------------------

hofa::GroupFunctionH function_input(const Json& j) {
  if (j.contains("terms")) return hofa::io::poly_from_json(j).table();
  return hofa::io::group_function_from_json(j);
}

void cmd_poly_degree() {
  const auto f = function_input(input());
  auto r = record("poly degree-test", {{"d", opt.d}});
  const auto res = hofa::degree_test(f, opt.d);
  r.metrics["passes"] = res.ok;
  if (!res.ok) {
    const auto& g = f.group();
    Json shifts = Json::array();
    for (auto a : res.shifts) shifts.push_back(g.digits(a));
    r.witnesses = {{"x", g.digits(res.x)}, {"shifts", shifts}};
  }
  emit(r);
}

void cmd_poly_fraction() {
  const auto f = function_input(input());
  std::optional<bool> exhaustive;
  if (opt.mode == "exhaustive") exhaustive = true;
  else if (opt.mode == "sample") exhaustive = false;
  else hofa::detail::check_schema(opt.mode.empty(), "--mode must be exhaustive or sample");
  const std::uint64_t samples = opt.samples ? opt.samples : hofa::kDefaultSamples;
  auto r = record("poly approx-fraction", {{"d", opt.d}, {"mode", opt.mode}, {"samples", samples}});
  const auto res = hofa::approx_poly_fraction(f, opt.d, exhaustive, samples, opt.seed);
  r.metrics["fraction"] = res.fraction;
  r.metrics["exhaustive"] = res.exhaustive;
  r.metrics["vanishing"] = static_cast<double>(res.vanishing);
  r.metrics["total"] = static_cast<double>(res.total);
  if (res.witness) {
    const auto& g = f.group();
    Json shifts = Json::array();
    for (auto a : res.witness->second) shifts.push_back(g.digits(a));
    r.witnesses = {{"x", g.digits(res.witness->first)}, {"shifts", shifts}};
  }
  emit(r);
}

void cmd_poly_polarize() {
  const Json j = input();
  auto r = record("poly polarize", {{"k", opt.k}});
  if (j.contains("terms")) {
    const auto sigma = hofa::polarize(hofa::io::poly_from_json(j), opt.k);
    r.metrics["zero"] = sigma.is_zero();
    r.witnesses = {{"form", hofa::io::to_json(sigma)}};
  } else {
    const auto g = hofa::poly_from_symmetric(hofa::io::form_from_json(j), opt.k);
    r.metrics["zero"] = g.is_zero();
    r.witnesses = {{"poly", hofa::io::to_json(g)}};
  }
  emit(r);
}

void cmd_poly_correlate() {
  const auto f = hofa::io::table_from_json(input());
  if (!opt.poly_file.empty()) {
    const auto g = hofa::io::poly_from_json(hofa::io::read_json(opt.poly_file));
    auto r = record("poly correlate");
    r.metrics["correlation"] = hofa::phase_correlation(f, g);
    emit(r);
    return;
  }
  auto r = record("poly correlate", {{"d", opt.d}, {"tolerance", opt.tolerance}});
  const auto res = hofa::best_poly_correlation(f, opt.d, opt.tolerance);
  r.metrics["correlation"] = res.value;
  r.witnesses = {{"poly", hofa::io::to_json(res.poly)}};
  emit(r);
}

void cmd_poly_fit() {
  const auto f = function_input(input());
  auto r = record("poly fit", {{"d", opt.d}});
  const auto res = hofa::best_poly_agreement(f, opt.d);
  r.metrics["agreement"] = static_cast<double>(res.agreement);
  r.metrics["size"] = static_cast<double>(f.size());
  Json comps = Json::array();
  for (const auto& g : res.components) comps.push_back(hofa::io::to_json(g));
  r.witnesses = {{"components", comps}};
  emit(r);
}

// --- generators and oracles -------------------------------------------------

void cmd_gen() {
  const std::string& kind = opt.kind;
  if (kind == "table") {
    const auto s = space_arg();
    emit(hofa::io::to_json(opt.unimodular ? hofa::lab::random_unimodular_table(s, opt.seed)
                                          : hofa::lab::random_table(s, opt.seed)));
  } else if (kind == "multiaffine") {
    emit(hofa::io::to_json(hofa::lab::random_multiaffine(space_arg(), opt.h, opt.seed)));
  } else if (kind == "form") {
    const auto s = space_arg();
    hofa::SplitMix64 rng(opt.seed);
    hofa::Subset all(s.k());
    for (int i = 0; i < s.k(); ++i) all[i] = i;
    emit(hofa::io::to_json(hofa::lab::random_form(s, all, rng)));
  } else if (kind == "restriction") {
    const Json j = opt.in_file.empty() ? hofa::io::to_json(hofa::lab::random_multiaffine(space_arg(), opt.h, opt.seed))
                                       : input();
    emit(hofa::io::to_json(hofa::lab::random_restriction(hofa::io::map_from_json(j), opt.density,
                                                         hofa::derive_seed(opt.seed, 1))));
  } else if (kind == "corruption") {
    emit(hofa::io::to_json(hofa::lab::corrupt(hofa::io::partial_map_from_json(input()), opt.fraction, opt.seed)));
  } else if (kind == "variety") {
    emit(hofa::io::to_json(hofa::lab::random_variety(space_arg(), opt.codim, opt.seed)));
  } else if (kind == "poly") {
    const auto s = space_arg();
    hofa::detail::check_schema(s.k() == 1, "poly generation needs a single-group space");
    emit(hofa::io::to_json(hofa::lab::random_poly(s.p(), s.dims()[0], opt.d, opt.seed)));
  } else {
    throw hofa::SchemaError("unknown generator kind " + kind);
  }
}

void cmd_oracle() {
  std::vector<std::string> suites;
  if (opt.suite == "all")
    suites = hofa::oracle::suite_names();
  else
    suites = {opt.suite};
  if (!opt.check_dir.empty()) {
    auto r = record("oracle check", {{"suites", suites}, {"tolerance", opt.tolerance}});
    double failures = 0;
    Json report = Json::object();
    for (const auto& s : suites) {
      const auto golden = hofa::io::read_json((std::filesystem::path(opt.check_dir) / (s + ".json")).string());
      const auto d = hofa::oracle::check_golden(golden, opt.tolerance);
      report[s] = d ? Json(*d) : Json("ok");
      if (d) {
        ++failures;
        std::cerr << "golden mismatch in " << s << " at " << *d << "\n";
      }
    }
    r.metrics["failures"] = failures;
    r.witnesses = report;
    emit(r);
    if (failures > 0) throw hofa::InternalError("golden comparison failed");
    return;
  }
  hofa::detail::check_schema(!opt.out_dir.empty(), "--out-dir or --check is required");
  std::filesystem::create_directories(opt.out_dir);
  for (const auto& s : suites)
    hofa::io::write_json((std::filesystem::path(opt.out_dir) / (s + ".json")).string(),
                         hofa::oracle::golden_suite(s, opt.seed));
}

void write_witness(const hofa::PreconditionError& e) {
  if (e.witness().empty()) return;
  const Json w = {{"error", e.what()}, {"witness", Json::parse(e.witness(), nullptr, false)}};
  if (opt.out_file.empty())
    std::cerr << hofa::io::dump(w);
  else
    hofa::io::write_json(opt.out_file + ".witness.json", w);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hofa: finite-field higher-order Fourier analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--space", opt.space_file, "Space JSON file");
  app.add_option("--in", opt.in_file, "Input JSON file");
  app.add_option("--out", opt.out_file, "Output file (stdout when omitted)");
  app.add_option("--csv", opt.csv_file, "Also write the result record as CSV");
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("--mode", opt.mode, "exhaustive or sample");
  app.add_option("--samples", opt.samples, "Sample count for sampled modes");
  app.add_option("--budget", opt.budget, "Enumeration budget (default 2^24 or HOFA_BUDGET)");
  app.add_option("--tolerance", opt.tolerance, "Numerical tolerance");

  std::function<void()> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc, void (*fn)()) {
    auto* c = parent->add_subcommand(name, desc);
    c->callback([&action, fn] { action = fn; });
    return c;
  };

  auto* fourier = sub(&app, "fourier", "Fourier transform of a table (or inverse of a spectrum)", cmd_fourier);
  fourier->add_flag("--inverse", opt.inverse, "Input is a spectrum; output the table");
  auto* conv = sub(&app, "conv", "Convolution E_y f(x+y) conj g(y)", cmd_conv);
  conv->add_option("--with", opt.with_file, "Second table")->required();
  sub(&app, "uknorm", "Gowers U^k norm", cmd_uknorm)->add_option("--k", opt.k, "Order k");
  sub(&app, "boxnorm", "Box norm over the product space", cmd_boxnorm);
  sub(&app, "bias", "Bias of a form or a scalar multiaffine map", cmd_bias);
  sub(&app, "arank", "Analytic rank of a form", cmd_arank);
  sub(&app, "prank", "Partition rank by exhaustive search", cmd_prank)
      ->add_option("--max-rank", opt.max_rank, "Largest rank tried");
  sub(&app, "qr", "Quasirandomness of a biaffine variety", cmd_qr);

  auto* fr = app.add_subcommand("freiman", "Freiman homomorphism tools");
  fr->require_subcommand(1);
  sub(fr, "verify", "Check the (multi-)homomorphism property", cmd_freiman_verify)
      ->add_option("--order", opt.order, "Order m");
  sub(fr, "extend", "Unique affine extension from a dense subset", cmd_freiman_extend)
      ->add_flag("--strict", opt.strict, "Confirm uniqueness by an exhaustive scan");
  auto* census = sub(fr, "census", "Arrangement-value agreement census", cmd_freiman_census);
  census->add_option("--words", opt.words, "Direction words, e.g. \"1,0;0,1\"")->required();
  census->add_option("--lengths-samples", opt.lengths_samples, "Number of sampled lengths");
  auto* drc = sub(fr, "drc", "Dependent random choice filter", cmd_freiman_drc);
  drc->add_option("--t", opt.t, "Codimension t");
  drc->add_option("--trials", opt.trials, "Number of seeded trials");
  sub(fr, "inverse-search", "Best global multiaffine agreement", cmd_freiman_inverse);

  auto* poly = app.add_subcommand("poly", "Polynomial tools");
  poly->require_subcommand(1);
  sub(poly, "degree-test", "Degree at most d", cmd_poly_degree)->add_option("--d", opt.d, "Degree");
  sub(poly, "approx-fraction", "Fraction of vanishing derivatives", cmd_poly_fraction)
      ->add_option("--d", opt.d, "Degree");
  sub(poly, "polarize", "Polynomial to symmetric form, or back", cmd_poly_polarize)
      ->add_option("--k", opt.k, "Degree k");
  auto* corr = sub(poly, "correlate", "Phase correlation, or best over degree d", cmd_poly_correlate);
  corr->add_option("--poly", opt.poly_file, "Polynomial JSON");
  corr->add_option("--d", opt.d, "Degree for the exhaustive search");
  sub(poly, "fit", "Best polynomial agreement", cmd_poly_fit)->add_option("--d", opt.d, "Degree");

  auto* gen = sub(&app, "gen", "Seeded instance generators", cmd_gen);
  gen->add_option("kind", opt.kind, "table|form|multiaffine|restriction|corruption|variety|poly")->required();
  gen->add_option("--codomain", opt.h, "Codomain dimension h");
  gen->add_option("--codim", opt.codim, "Variety codimension");
  gen->add_option("--density", opt.density, "Restriction density");
  gen->add_option("--fraction", opt.fraction, "Corrupted fraction");
  gen->add_option("--d", opt.d, "Polynomial degree");
  gen->add_flag("--unimodular", opt.unimodular, "Unit-modulus table values");

  auto* orc = sub(&app, "oracle", "Write or check golden oracle files", cmd_oracle);
  orc->add_option("--suite", opt.suite, "Suite name or \"all\"");
  orc->add_option("--out-dir", opt.out_dir, "Directory for golden files");
  orc->add_option("--check", opt.check_dir, "Compare the library against goldens in this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (opt.budget) hofa::set_enumeration_budget(opt.budget);
    hofa::detail::check_schema(opt.tolerance >= 0, "--tolerance must be non-negative");
    if (action) action();
  } catch (const hofa::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    try {
      write_witness(e);
    } catch (const std::exception&) {
    }
    return e.exit_code();
  } catch (const hofa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "wall time: " << secs << " s\n";
  return 0;
}
