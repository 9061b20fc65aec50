#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <omp.h>
#include <random>

#include "ccs/report.hpp"

using namespace ccs;

namespace {

struct RunConfig {
  int lambda = 4;
  int degree = 6;
  long mc_samples = 100000;
  unsigned long long seed = 1;
  std::string format = "json";
  std::string out;
  double tolerance = 0.0;  // 0 = per-command default
};

double tol_or(const RunConfig& cfg, double dflt) {
  return cfg.tolerance > 0.0 ? cfg.tolerance : dflt;
}

Mat2 random_interior(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Mat2 z;
  for (int v = 0; v < 4; ++v) {
    double r = scale * std::sqrt(u(rng));
    double th = 2.0 * pi * u(rng);
    z.e[v] = cplx(r * std::cos(th), r * std::sin(th));
  }
  return z;
}

int emit(const Report& rep, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    rep.write(std::cout, cfg.format);
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) {
      std::cerr << "cannot open output file: " << cfg.out << "\n";
      return 2;
    }
    rep.write(os, cfg.format);
  }
  return rep.pass ? 0 : 1;
}

int cmd_kernel_check(const RunConfig& cfg) {
  double tol = tol_or(cfg, 1e-8);
  Report rep;
  rep.command = "kernel-check";
  rep.meta["lambda"] = cfg.lambda;
  rep.meta["tolerance"] = tol;
  std::mt19937_64 rng(cfg.seed);
  int max_deg = std::max(cfg.degree, 40);
  for (int pair = 0; pair < 5; ++pair) {
    CartanPoint z(random_interior(rng, 0.25));
    CartanPoint zp(random_interior(rng, 0.25));
    cplx exact = bergman_kernel(z, zp, cfg.lambda);
    for (int n = 0; n <= max_deg; n += 10) {
      double res = std::abs(kernel_partial_sum(z, zp, cfg.lambda, n) - exact);
      auto& row = rep.add_row();
      row["pair"] = pair;
      row["degree"] = n;
      row["residual"] = res;
      if (n == max_deg && res >= tol) rep.pass = false;
    }
  }
  return emit(rep, cfg);
}

int cmd_ortho_check(const RunConfig& cfg) {
  Report rep;
  rep.command = "ortho-check";
  rep.meta["lambda"] = cfg.lambda;
  rep.meta["seed"] = cfg.seed;
  auto basis = enumerate_basis(cfg.lambda, std::min(cfg.degree, 2));
  McOptions opt;
  opt.lambda = cfg.lambda;
  opt.samples = cfg.mc_samples;
  opt.seed = cfg.seed;
  McGram gram = mc_gram(basis, opt);
  double worst_dev = 0.0;
  for (int r = 0; r < gram.dim; ++r)
    for (int c = 0; c < gram.dim; ++c) {
      cplx want = r == c ? 1.0 : 0.0;
      double dev = std::abs(gram.value[r * gram.dim + c] - want);
      double se = gram.std_error[r * gram.dim + c];
      auto& row = rep.add_row();
      row["row"] = to_json(basis[r]);
      row["col"] = to_json(basis[c]);
      row["estimate"] = to_json(gram.value[r * gram.dim + c]);
      row["stderr"] = se;
      row["deviation"] = dev;
      if (dev > 3.0 * std::max(se, 1e-12)) rep.pass = false;
      worst_dev = std::max(worst_dev, dev);
    }
  rep.meta["max_deviation"] = worst_dev;
  rep.meta["accepted"] = gram.accepted;
  return emit(rep, cfg);
}

int cmd_casimir(const RunConfig& cfg) {
  double tol = tol_or(cfg, 1e-10);
  Report rep;
  rep.command = "casimir";
  rep.meta["lambda"] = cfg.lambda;
  double want = cfg.lambda * (cfg.lambda - 4.0);
  rep.meta["expected"] = want;
  for (const auto& idx : enumerate_basis(cfg.lambda, cfg.degree)) {
    double c2 = casimir2(idx);
    auto& row = rep.add_row();
    row["index"] = to_json(idx);
    row["casimir"] = c2;
    if (std::abs(c2 - want) > tol) rep.pass = false;
  }
  return emit(rep, cfg);
}

int cmd_generators_dump(const RunConfig& cfg) {
  Report rep;
  rep.command = "generators-dump";
  rep.meta["lambda"] = cfg.lambda;
  static const char* names[] = {"D",   "P0",  "P1",  "P2",  "P3",  "K0",
                                "K1",  "K2",  "K3",  "M01", "M02", "M03",
                                "M12", "M13", "M23", "Sa3", "Sb3"};
  for (const auto& idx : enumerate_basis(cfg.lambda, cfg.degree)) {
    for (const char* nm : names) {
      auto row_data =
          generator_matrix_elements(GeneratorName::parse(nm), idx);
      auto& row = rep.add_row();
      row["generator"] = nm;
      row["row"] = to_json(row_data);
    }
  }
  return emit(rep, cfg);
}

int cmd_fock_verify(const RunConfig& cfg) {
  double tol = tol_or(cfg, 1e-12);
  Report rep;
  rep.command = "fock-verify";
  rep.meta["lambda"] = cfg.lambda;
  auto basis = enumerate_basis(cfg.lambda, std::min(cfg.degree, 4));
  std::vector<FockVector> states;
  states.reserve(basis.size());
  for (const auto& idx : basis) states.push_back(compound_basis(idx));
  double worst_gram = 0.0, worst_constraint = 0.0;
  bool occ_ok = true;
  for (size_t r = 0; r < basis.size(); ++r) {
    for (size_t c = 0; c < basis.size(); ++c) {
      cplx want = r == c ? 1.0 : 0.0;
      worst_gram =
          std::max(worst_gram, std::abs(inner(states[r], states[c]) - want));
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        FockVector cv = apply(constraint_entry_8mode(i, j), states[r]);
        cv.accumulate(states[r], i == j ? -(cfg.lambda - 4.0) : 0.0);
        worst_constraint = std::max(worst_constraint, cv.norm());
      }
    occ_ok = occ_ok && occupancy_constraints(states[r], basis[r]).all_pass;
  }
  int parity = cfg.lambda % 2 == 0 ? 1 : -1;
  double worst_exchange = 0.0;
  for (size_t r = 0; r < basis.size(); ++r) {
    FockVector ex = exchange(states[r]);
    ex.accumulate(states[r], -static_cast<double>(parity));
    worst_exchange = std::max(worst_exchange, ex.norm());
  }
  auto& row = rep.add_row();
  row["states"] = basis.size();
  row["max_gram_deviation"] = worst_gram;
  row["max_constraint_residual"] = worst_constraint;
  row["occupancy_pass"] = occ_ok;
  row["exchange_parity"] = parity;
  row["max_exchange_residual"] = worst_exchange;
  rep.pass = worst_gram < tol && worst_constraint < tol && occ_ok &&
             worst_exchange < tol;
  return emit(rep, cfg);
}

int cmd_cs_expand(const RunConfig& cfg) {
  double tol = tol_or(cfg, 1e-10);
  Report rep;
  rep.command = "cs-expand";
  rep.meta["lambda"] = cfg.lambda;
  rep.meta["seed"] = cfg.seed;
  std::mt19937_64 rng(cfg.seed);
  CartanPoint z(random_interior(rng, 0.2));
  rep.meta["point"] = to_json(Polynomial::constant(0));  // replaced below
  json pt = json::array();
  for (int v = 0; v < 4; ++v) pt.push_back(to_json(z.Z.e[v]));
  rep.meta["point"] = pt;
  int cutoff = std::min(cfg.degree, 6);
  FockVector cs = exciton_cs(z, cfg.lambda, cutoff);
  double f = (Mat2::identity() - z.Z.adjoint() * z.Z).det().real();
  double pref = std::pow(f, 0.5 * cfg.lambda);
  double worst = 0.0;
  for (const auto& idx : enumerate_basis(cfg.lambda, cutoff)) {
    cplx want = pref * evaluate_at_matrix(basis_poly(idx), z.Z);
    cplx got = inner(compound_basis(idx), cs);
    auto& row = rep.add_row();
    row["index"] = to_json(idx);
    row["coefficient"] = to_json(got);
    row["closed_form"] = to_json(want);
    worst = std::max(worst, std::abs(got - want));
  }
  rep.meta["max_residual"] = worst;
  rep.pass = worst < tol;
  return emit(rep, cfg);
}

int cmd_symbols(const RunConfig& cfg) {
  double tol = tol_or(cfg, 1e-6);
  Report rep;
  rep.command = "symbols";
  rep.meta["lambda"] = cfg.lambda;
  rep.meta["seed"] = cfg.seed;
  std::mt19937_64 rng(cfg.seed);
  static const char* names[] = {"D",  "P0", "P1", "P2", "P3", "K0",
                                "K1", "K2", "K3", "M01", "M23",
                                "D2", "PP", "KK", "PK", "KP", "MM"};
  int max_deg = std::max(cfg.degree, 40);
  for (int p = 0; p < 5; ++p) {
    CartanPoint z(random_interior(rng, 0.2));
    for (const char* nm : names) {
      cplx closed = symbol(nm, z, cfg.lambda);
      cplx oracle = symbol_expansion_oracle(nm, z, cfg.lambda, max_deg);
      auto& row = rep.add_row();
      row["point"] = p;
      row["symbol"] = std::string(nm);
      row["closed_form"] = to_json(closed);
      row["oracle"] = to_json(oracle);
      double res = std::abs(closed - oracle);
      row["residual"] = res;
      if (res > tol) rep.pass = false;
    }
    cplx kp = symbol("KP", z, cfg.lambda);
    cplx pk = symbol("PK", z, cfg.lambda);
    cplx d = symbol("D", z, cfg.lambda);
    auto& row = rep.add_row();
    row["point"] = p;
    row["symbol"] = "KP-PK-8D";
    double res = std::abs(kp - pk - 8.0 * d);
    row["residual"] = res;
    if (res > 1e-9) rep.pass = false;
  }
  return emit(rep, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("CCS_THREADS"))
    if (int n = std::atoi(threads); n > 0) omp_set_num_threads(n);

  CLI::App app{"verification tools for the U(2,2) discrete-series library"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--lambda", cfg.lambda, "scale dimension (>= 2)");
  app.add_option("--degree", cfg.degree, "degree / expansion cutoff");
  app.add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sample count");
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--tolerance", cfg.tolerance, "override check tolerance");

  auto* kernel = app.add_subcommand("kernel-check", "kernel partial sums");
  auto* ortho = app.add_subcommand("ortho-check", "Monte Carlo Gram matrix");
  auto* casimir = app.add_subcommand("casimir", "quadratic Casimir sweep");
  auto* gdump = app.add_subcommand("generators-dump", "matrix element table");
  auto* fock = app.add_subcommand("fock-verify", "Fock-space invariants");
  auto* cs = app.add_subcommand("cs-expand", "coherent state expansion");
  auto* symbols = app.add_subcommand("symbols", "operator symbols vs oracle");
  // global flags may follow the subcommand
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cfg.lambda < 2) {
      std::cerr << "lambda must be >= 2\n";
      return 2;
    }
    if (kernel->parsed()) return cmd_kernel_check(cfg);
    if (ortho->parsed()) return cmd_ortho_check(cfg);
    if (casimir->parsed()) return cmd_casimir(cfg);
    if (gdump->parsed()) return cmd_generators_dump(cfg);
    if (fock->parsed()) return cmd_fock_verify(cfg);
    if (cs->parsed()) return cmd_cs_expand(cfg);
    if (symbols->parsed()) return cmd_symbols(cfg);
  } catch (const InvalidScaleDimension& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const InvalidIndex& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
