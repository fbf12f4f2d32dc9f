#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckf/catalog.hpp"
#include "ckf/table_one.hpp"

namespace ckf {

enum class EmbeddingKind {
  table_one_identified,
  centralizer_witness,
  split_ambient_generic,
  declared_regular_proper,
  unspecified,
};
std::string embedding_kind_str(EmbeddingKind k);

struct EmbeddingDescriptor {
  EmbeddingKind kind = EmbeddingKind::unspecified;
  std::optional<QVec> witness;  // a-coordinates of g; centralizer_witness only
  int table_row = 0;            // table_one_identified only
  int table_n = 0;
  std::string notes;
};

// One subalgebra slot of a triple; either a named catalog group or the
// generic "some noncompact reductive subalgebra" placeholder.
struct SubalgebraSpec {
  bool generic_noncompact = false;
  GroupDesc desc;  // empty when generic
  EmbeddingDescriptor emb;
};

struct TripleSpec {
  RealFormDescriptor g;  // simple (or compact) ambient algebra
  SubalgebraSpec h;
  std::optional<SubalgebraSpec> l;
  std::string source;  // echo of the input record, for reports
};

enum class Outcome { AdmitsStandard, NoStandard, Unknown };
std::string outcome_str(Outcome o);

struct TraceStep {
  std::string rule;      // stable rule id, e.g. "R3-r-regular"
  std::string citation;  // theorem / corollary / table reference
  std::string values;    // the bound numbers the rule actually used
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::vector<TraceStep> trace;
};

struct DimCheck {
  bool holds = false;
  long dg = 0, dh = 0, dl = 0;
};
DimCheck dimension_condition(const RealFormDescriptor& g, const GroupDesc& h,
                             const GroupDesc& l);

// Validates a claimed proper real R-regular embedding h -> g as far as the
// restricted-root data allows: nonzero witness of the right dimension, the
// real-rank drop, and d(h) against the noncompact dimension of the
// centralizer cut out by the witness. Throws input_error on hard
// inconsistencies (zero witness, dimension mismatch, d too large).
struct RRegularCheck {
  bool ok = false;
  int rank_deficit = 0;
  long d_centralizer = 0;
  std::string detail;
};
RRegularCheck r_regular_check(const RealFormDescriptor& g, const GroupDesc& h,
                              const EmbeddingDescriptor& emb);

// The ordered rule chain; first hit wins:
//   R0 h compact, R1 identified Onishchik-table triple, R2 split ambient
//   not in the table, R3 proper real R-regular subalgebra, R4 failed
//   dimension identity (triple mode). Anything else is Unknown.
Verdict classify(const TripleSpec& spec, const Catalog& cat,
                 const TableOne& table);

// Corollary sweeps: regenerate a corollary's verdict list from the rules
// and diff it against the stated list.
enum class SweepFamily { split_families, su_chain, so_chain, sp_chain };
SweepFamily sweep_family_from_str(const std::string& s);
std::string sweep_family_str(SweepFamily f);

struct SweepEntry {
  std::string g_name;
  std::string h_name;        // the regenerated h, where applicable
  bool engine_no_standard = false;
  bool corollary_claims = false;
  bool in_corollary_scope = true;  // scoped corollaries are silent outside
  std::string status;              // "match" | "divergence" | "engine-extra"
};
struct SweepReport {
  SweepFamily family;
  int max_param = 0;
  std::vector<SweepEntry> entries;
  int divergences = 0;
};
SweepReport corollary_sweep(SweepFamily family, int max_param,
                            const Catalog& cat, const TableOne& table);

}  // namespace ckf
