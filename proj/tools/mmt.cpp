// mmt: command-line front end for the B_{m,k} Master Theorem toolkit.
//
// Exit codes: 0 success / identity holds, 1 identity or cross-check
// failure, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "mmt/mmt.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int m = 3;
  int k = 2;
  bool k_given = false;
  std::uint32_t cap = 6;
  std::string matrix = "identity";
  std::optional<std::uint64_t> seed;
  std::string variant = "strict";
  std::string format = "text";
  std::string word;
};

mmt::SymMatrix load_matrix(const RunConfig& cfg) {
  if (cfg.matrix == "identity") return mmt::SymMatrix::identity(cfg.m);
  if (cfg.matrix == "ones") return mmt::SymMatrix::ones(cfg.m);
  if (cfg.matrix == "symbolic") return mmt::SymMatrix::symbolic(cfg.m);
  if (cfg.matrix == "zero") return mmt::SymMatrix::zero(cfg.m);
  if (cfg.matrix == "random") {
    if (!cfg.seed) throw usage_error("--matrix random requires --seed");
    return mmt::random_integer_matrix(cfg.m, *cfg.seed);
  }
  auto a = mmt::read_matrix_file(cfg.matrix);
  if (a.m() != cfg.m) {
    throw usage_error("matrix file has m=" + std::to_string(a.m()) + " but --m is " + std::to_string(cfg.m));
  }
  return a;
}

bool json_output(const RunConfig& cfg) { return cfg.format == "json"; }

int cmd_verify(const RunConfig& cfg) {
  mmt::AlgebraParams p(cfg.m, cfg.k);
  auto a = load_matrix(cfg);
  auto report = mmt::verify_master(a, p, cfg.cap);
  if (json_output(cfg)) {
    std::cout << mmt::to_json(report).dump(2) << "\n";
  } else {
    std::cout << "verify m=" << cfg.m << " k=" << cfg.k << " cap=" << cfg.cap << " mode=" << report.mode
              << " matrix=" << cfg.matrix << "\n";
    for (const auto& d : report.per_degree) {
      std::cout << "d=" << d.d << (d.ok ? " ok" : " FAIL") << " residual_terms=" << d.residual_terms << "\n";
    }
    if (report.first_failure) {
      const auto& f = *report.first_failure;
      std::cout << "first failure: d=" << f.d << " term " << f.monomial.to_string() << " coeff "
                << mmt::to_string(f.coeff) << "\n";
    }
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? kExitOk : kExitFailure;
}

int cmd_count(const RunConfig& cfg) {
  mmt::AlgebraParams p(cfg.m, cfg.k);
  auto variant = mmt::parse_variant(cfg.variant);
  const mmt::CountMethod methods[] = {mmt::CountMethod::dp, mmt::CountMethod::transfer, mmt::CountMethod::series};
  std::vector<mmt::CountTable> tables;
  for (auto method : methods) tables.push_back(mmt::count_admissible(p, cfg.cap, variant, method));
  bool agree = tables[0].values == tables[1].values && tables[0].values == tables[2].values;

  if (json_output(cfg)) {
    mmt::json out = {{"m", cfg.m}, {"k", cfg.k}, {"variant", cfg.variant}, {"len", cfg.cap}};
    out["tables"] = mmt::json::array();
    for (const auto& t : tables) out["tables"].push_back(mmt::to_json(t));
    out["agree"] = agree;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "count m=" << cfg.m << " k=" << cfg.k << " variant=" << cfg.variant << " len=" << cfg.cap << "\n";
    std::cout << "l\tdp\ttransfer\tseries\n";
    for (std::size_t l = 0; l <= cfg.cap; ++l) {
      const auto& a = tables[0].values[l];
      const auto& b = tables[1].values[l];
      const auto& c = tables[2].values[l];
      std::cout << l << "\t" << a << "\t" << b << "\t" << c << ((a == b && b == c) ? "" : "\tMISMATCH") << "\n";
    }
    std::cout << (agree ? "AGREE" : "MISMATCH") << "\n";
  }
  return agree ? kExitOk : kExitFailure;
}

int cmd_series(const RunConfig& cfg) {
  mmt::AlgebraParams p(cfg.m, cfg.k);
  auto variant = mmt::parse_variant(cfg.variant);
  auto result = mmt::f_series(p, cfg.cap, variant);
  bool symmetric = mmt::check_symmetry(result.lhs, cfg.m);
  auto den = mmt::f_denominator(p, cfg.cap, variant);
  if (json_output(cfg)) {
    mmt::json out = {{"m", cfg.m}, {"k", cfg.k}, {"variant", cfg.variant}, {"cap", cfg.cap}};
    out["denominator"] = mmt::to_json(den);
    out["lhs"] = mmt::to_json(result.lhs);
    out["rhs"] = mmt::to_json(result.rhs.poly());
    out["equal"] = result.equal;
    out["symmetric"] = symmetric;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "series m=" << cfg.m << " k=" << cfg.k << " variant=" << cfg.variant << " cap=" << cfg.cap << "\n";
    std::cout << "denominator: " << den.to_string() << "\n";
    std::cout << "lhs: " << result.lhs.to_string() << "\n";
    std::cout << "rhs: " << result.rhs.poly().to_string() << "\n";
    std::cout << "symmetric: " << (symmetric ? "true" : "false") << "\n";
    std::cout << (result.equal ? "EQUAL" : "DIFFERENT") << "\n";
  }
  return result.equal ? kExitOk : kExitFailure;
}

int cmd_normal_form(const RunConfig& cfg) {
  mmt::AlgebraParams p(cfg.m, cfg.k);
  mmt::Word w = mmt::parse_word(cfg.word);
  mmt::check_letters(w, p);
  auto nf = mmt::normal_form(w, p);
  if (json_output(cfg)) {
    std::cout << mmt::to_json(nf).dump(2) << "\n";
  } else {
    std::cout << "normal-form m=" << cfg.m << " k=" << cfg.k << " word=" << mmt::to_string(w) << "\n";
    for (const auto& [u, c] : nf.terms()) std::cout << (c > 0 ? "+" : "") << c << "\t" << mmt::to_string(u) << "\n";
  }
  return kExitOk;
}

int cmd_charpoly(const RunConfig& cfg) {
  auto a = load_matrix(cfg);
  auto coeffs = mmt::char_coeffs(mmt::scale_rows_by_t(a));
  std::optional<mmt::Poly> second;
  if (cfg.k_given) second = mmt::second_factor(a, mmt::AlgebraParams(cfg.m, cfg.k));
  if (json_output(cfg)) {
    mmt::json out = {{"m", cfg.m}, {"matrix", mmt::matrix_to_json(a)}};
    out["coeffs"] = mmt::json::array();
    for (const auto& c : coeffs) out["coeffs"].push_back(mmt::to_json(c));
    if (second) {
      out["k"] = cfg.k;
      out["second_factor"] = mmt::to_json(*second);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "charpoly of TA, m=" << cfg.m << " matrix=" << cfg.matrix << "\n";
    for (std::size_t r = 0; r < coeffs.size(); ++r) std::cout << "c_" << r << " = " << coeffs[r].to_string() << "\n";
    if (second) std::cout << "second factor (k=" << cfg.k << ") = " << second->to_string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the extended MacMahon Master Theorem on B_{m,k}"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_params = [&](CLI::App* sub, bool need_k) {
    sub->add_option("--m", cfg.m, "number of generators")->required()->check(CLI::Range(1, 255));
    auto* k = sub->add_option("--k", cfg.k, "relation degree, 2 <= k <= m")->check(CLI::Range(2, 255));
    if (need_k) k->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    return k;
  };
  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("--matrix", cfg.matrix, "identity | ones | zero | symbolic | random | path to JSON matrix file");
    sub->add_option("--seed", cfg.seed, "64-bit seed for --matrix random");
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap,--len", cfg.cap, "truncation degree / maximum word length")->check(CLI::Range(0, 64));
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", cfg.variant, "strict | weak")->check(CLI::IsMember({"strict", "weak"}));
  };

  auto* verify = app.add_subcommand("verify", "check the identity degree by degree");
  add_params(verify, true);
  add_cap(verify);
  add_matrix(verify);

  auto* count = app.add_subcommand("count", "admissible word counts by dp, transfer matrix and series inversion");
  add_params(count, true);
  add_cap(count);
  add_variant(count);

  auto* series = app.add_subcommand("series", "F_{m,k} against the reciprocal of its symmetric-function denominator");
  add_params(series, true);
  add_cap(series);
  add_variant(series);

  auto* nf = app.add_subcommand("normal-form", "reduce a word to the admissible basis");
  add_params(nf, true);
  nf->add_option("--word", cfg.word, "comma-separated letters, e.g. 3,2,1")->required();

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial coefficients of TA");
  auto* k_opt = add_params(charpoly, false);
  add_matrix(charpoly);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.k_given = k_opt->count() > 0;

  try {
    if (verify->parsed()) return cmd_verify(cfg);
    if (count->parsed()) return cmd_count(cfg);
    if (series->parsed()) return cmd_series(cfg);
    if (nf->parsed()) return cmd_normal_form(cfg);
    if (charpoly->parsed()) return cmd_charpoly(cfg);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mmt::matrix_file_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
