#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckf/root_system.hpp"

namespace ckf {

enum class Family {
  sl_R,     // sl(n,R)
  sl_H,     // sl(n,H)
  su_pq,    // su(p,q), p <= q
  u_pq,     // u(p,q): su(p,q) plus its compact center (derived, reductive)
  so_pq,    // so(p,q), p <= q
  so_star,  // so*(2n)
  sp_R,     // sp(n,R)
  sp_pq,    // sp(p,q), p <= q
  g2_2,
  f4_4,
  e_split,  // e6(6), e7(7), e8(8); param p = 6,7,8
  compact,  // su(n), so(n), sp(n), u(1), g2, f4, e6, e7, e8
};

std::string family_str(Family f);
Family family_from_str(const std::string& s);

// Restricted-root data in coordinate-free form: the abstract type plus the
// multiplicity attached to each squared-length class (length^2 relative to
// the shortest root: 1, 2, 3 or 4).
struct SigmaInfo {
  RootType type;
  int rank = 0;
  std::vector<std::pair<int, int>> mult_by_ratio;  // sorted by ratio
  friend bool operator==(const SigmaInfo&, const SigmaInfo&) = default;
};

struct RealFormDescriptor {
  std::string name;  // canonical spelling, e.g. "su(2,4)", "sl(3,R)"
  Family family = Family::compact;
  int p = 0, q = 0;  // family parameters; q unused where meaningless
  long dim_g = 0;
  long dim_k = 0;
  int real_rank = 0;
  bool is_split = false;
  bool is_compact = false;
  std::optional<SigmaInfo> sigma;
};

inline long d_value(const RealFormDescriptor& rf) {
  return rf.dim_g - rf.dim_k;
}

// Canonical factor identity after parsing + canonicalization.
struct FactorName {
  Family family;
  int p = 0, q = 0;
  std::string canonical;
};

// Parses one factor name and applies the canonicalization table:
//   su(1,1) -> sl(2,R),  sp(1,R) -> sl(2,R),  sl(1,H) -> su(2),
//   su(q,p)/so(q,p)/sp(q,p)/u(q,p) -> sorted p <= q,
//   su(n,0) -> su(n), so(n,0) -> so(n), sp(n,0) -> sp(n).
// Rejected as non-simple or degenerate: so(1,1), so(2,2), so*(2), so*(4),
// sl(1,R), su(1), so(1), sp(0).
FactorName parse_factor_name(const std::string& name);

// Second, independent path: every descriptor field from (family, p, q).
RealFormDescriptor formula_descriptor(Family f, int p, int q);

// Raw d/dim formulas with no simplicity validation; the Onishchik-table
// identity checks need values at degenerate parameters such as so(2,2).
long d_formula_raw(Family f, long p, long q);
long dim_formula_raw(Family f, long p, long q);

// Product of simple/compact factors (h and l columns may be products).
struct GroupDesc {
  std::string name;
  std::vector<RealFormDescriptor> factors;
  long dim() const;
  long d() const;
  int real_rank() const;
  bool is_compact() const;
  // The unique noncompact factor, if there is exactly one.
  const RealFormDescriptor* noncompact_factor() const;
};

// Explicit restricted roots in R^{real_rank} "witness coordinates":
// the standard e-coordinates when the classical realization already has
// rank dimensions (B, C, BC, D, F4, E8), otherwise pairing values against
// the simple basis (A, G2, E6, E7).
struct SigmaRealization {
  std::vector<QVec> roots;
  std::map<QVec, int, LexLess> mult;
};
SigmaRealization sigma_witness_realization(const RealFormDescriptor& rf);

class Catalog {
public:
  static Catalog load_file(const std::string& path);
  static Catalog parse(const std::string& text);

  // Factor-level lookup; u(p,q) is derived from the su(p,q) formulas.
  const RealFormDescriptor& lookup(const std::string& name) const;
  GroupDesc lookup_group(const std::string& name) const;

  const std::map<std::string, RealFormDescriptor>& records() const {
    return records_;
  }

  std::vector<RealFormDescriptor> split_forms(int max_param) const;

  struct AuditLine {
    std::string record;
    std::string check;
    bool ok = false;
    std::string detail;
  };
  // Re-runs every record against the formula path and the Iwasawa identity.
  std::vector<AuditLine> audit() const;

private:
  std::map<std::string, RealFormDescriptor> records_;
  mutable std::map<std::string, RealFormDescriptor> derived_;  // u(p,q) cache
};

// The shipped record set (what tools/data-gen writes into catalog.dat).
std::vector<RealFormDescriptor> default_catalog_records();
std::string serialize_catalog(const std::vector<RealFormDescriptor>& records);

// Iwasawa bookkeeping for one descriptor: d = real_rank + sum of
// multiplicities over the positive restricted roots. Throws internal_error
// with the offending record on failure.
void check_iwasawa_identity(const RealFormDescriptor& rf);

// Coordinate-free comparison of computed restricted-root data (vectors with
// multiplicities) against a catalog record: canonical type, rank, and the
// per-length-class (root count, multiplicity) pairs must agree exactly.
bool restricted_classes_agree(const Classification& cls,
                              const std::vector<QVec>& vectors,
                              const std::map<QVec, int, LexLess>& mult,
                              int real_rank, const RealFormDescriptor& rf,
                              std::string* why = nullptr);

}  // namespace ckf
