// Command-line front end: verdicts with rule traces, catalog listings and
// audits, the Onishchik-table identity sweep, and the root-system lemma
// harnesses. Exit codes: 0 evaluated, 1 input error, 2 invariant violation.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ckf/report.hpp"

namespace {

#ifndef CKF_DATA_DIR
#define CKF_DATA_DIR "data"
#endif

struct Loaded {
  ckf::Catalog catalog;
  ckf::TableOne table;
};

Loaded load_data(const std::string& dir) {
  return {ckf::Catalog::load_file(dir + "/catalog.dat"),
          ckf::TableOne::load_file(dir + "/table1.dat")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-system toolkit for standard-form verdicts"};
  app.require_subcommand(1);
  std::string data_dir = CKF_DATA_DIR;
  app.add_option("--data-dir", data_dir, "directory with the shipped data files");

  std::string verdict_file;
  auto* cmd_verdict = app.add_subcommand(
      "verdict", "classify triple specs from a file, with rule traces");
  cmd_verdict->add_option("file", verdict_file, "triple-spec input file")
      ->required();

  int max_n = 3;
  auto* cmd_table = app.add_subcommand(
      "verify-table1", "check d(g) = d(h) + d(l) for every table row");
  cmd_table->add_option("--max-n", max_n, "largest parameter value");

  int rank_cap = 4;
  int samples = 1000;
  std::uint64_t seed = 20240915;
  auto* cmd_lemmas = app.add_subcommand(
      "lemmas", "run the abstract root-system harnesses");
  cmd_lemmas->add_option("--rank-cap", rank_cap, "exhaustive up to this rank");
  cmd_lemmas->add_option("--samples", samples, "random samples per system");
  cmd_lemmas->add_option("--seed", seed, "PRNG seed");

  auto* cmd_audit = app.add_subcommand(
      "audit-catalog", "formula, Iwasawa, big-root and oracle agreement");

  auto* cmd_catalog = app.add_subcommand("catalog", "catalog inspection");
  auto* cmd_list = cmd_catalog->add_subcommand("list", "print all records");

  std::string sweep_family = "split-families";
  int max_param = 10;
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "regenerate a corollary's verdict list and diff it");
  cmd_sweep->add_option("--family", sweep_family,
                        "split-families | su-chain | so-chain | sp-chain");
  cmd_sweep->add_option("--max-param", max_param, "largest parameter");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_lemmas) {
      // No data files needed; pure root-system combinatorics.
      std::cout << ckf::lemmas_report(rank_cap, samples, seed).serialize();
      return 0;
    }
    Loaded data = load_data(data_dir);
    if (*cmd_verdict) {
      auto specs = ckf::load_triples_file(verdict_file, data.catalog);
      std::cout << ckf::verdict_report(verdict_file, specs, data.catalog,
                                       data.table)
                       .serialize();
      return 0;
    }
    if (*cmd_table) {
      ckf::RunReport r = ckf::table1_report(data.table, max_n);
      std::cout << r.serialize();
      for (const auto& [k, v] : r.meta)
        if (k == "failures" && v != "0") return 2;
      return 0;
    }
    if (*cmd_audit) {
      auto bigroots =
          ckf::load_bigroots_file(data_dir + "/bigroots.dat");
      ckf::AuditOutcome audit =
          ckf::audit_report(data.catalog, data.table, bigroots);
      std::cout << audit.report.serialize();
      return audit.all_ok ? 0 : 2;
    }
    if (*cmd_catalog && *cmd_list) {
      std::cout << ckf::catalog_list_report(data.catalog).serialize();
      return 0;
    }
    if (*cmd_sweep) {
      ckf::SweepReport rep = ckf::corollary_sweep(
          ckf::sweep_family_from_str(sweep_family), max_param, data.catalog,
          data.table);
      std::cout << ckf::sweep_run_report(rep).serialize();
      return 0;
    }
  } catch (const ckf::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const ckf::precondition_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
