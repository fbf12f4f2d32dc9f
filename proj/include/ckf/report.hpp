#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ckf/restriction.hpp"
#include "ckf/table_one.hpp"
#include "ckf/verdict.hpp"

namespace ckf {

// Line-structured, schema-versioned report. One `block` per result object;
// field values are single lines, so serialization round-trips losslessly.
struct ReportBlock {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;
  friend bool operator==(const ReportBlock&, const ReportBlock&) = default;
};

struct RunReport {
  std::string schema_version = "1";
  std::string command;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<ReportBlock> blocks;

  std::string serialize() const;
  static RunReport parse(const std::string& text);
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// Triple-spec input records (see data/examples.triples for the format).
std::vector<TripleSpec> parse_triples(const std::string& text,
                                      const Catalog& cat);
std::vector<TripleSpec> load_triples_file(const std::string& path,
                                          const Catalog& cat);

// Lemma harnesses over every indecomposable system of rank <= rank_cap.
struct LemmaHarnessResult {
  int systems = 0;
  long dominance_cases = 0, dominance_failures = 0;
  long sum_rule_pairs = 0, sum_rule_failures = 0;
  long cover_cases = 0, cover_failures = 0;
  long counterexamples() const {
    return dominance_failures + sum_rule_failures + cover_failures;
  }
};
LemmaHarnessResult run_lemma_harness(int rank_cap, int samples,
                                     std::uint64_t seed);

// Report builders shared by the CLI and the test suites.
RunReport verdict_report(const std::string& input_name,
                         const std::vector<TripleSpec>& specs,
                         const Catalog& cat, const TableOne& table);
RunReport table1_report(const TableOne& table, int max_n);
RunReport lemmas_report(int rank_cap, int samples, std::uint64_t seed);
RunReport sweep_run_report(const SweepReport& sweep);
RunReport catalog_list_report(const Catalog& cat);

struct AuditOutcome {
  RunReport report;
  bool all_ok = true;
};
// Catalog invariants, big-root table agreement, and oracle agreement for
// the shipped matrix models.
AuditOutcome audit_report(const Catalog& cat, const TableOne& table,
                          const std::vector<BigRootModel>& bigroots);

}  // namespace ckf
