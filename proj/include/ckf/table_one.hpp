#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckf/catalog.hpp"

namespace ckf {

// Linear parameter expression c*n + k with non-negative values.
struct ParamExpr {
  int coef = 0;
  int cons = 0;
  long at(int n) const { return static_cast<long>(coef) * n + cons; }
  bool depends_on_n() const { return coef != 0; }
  std::string str() const;
  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;
};

// One factor of a table column, e.g. su(2,2n) or sp(1) or u(1,n).
struct FactorPattern {
  Family family;
  std::vector<ParamExpr> params;
  std::string compact_name;  // set for parameterless compact factors
  std::string spell(int n) const;
  // (family, sorted params) at a concrete n; valid even at degenerate
  // parameters, since only d-arithmetic is done with it.
  std::pair<long, long> params_at(int n) const;
  long d_at(int n) const;
  std::string str() const;
  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

struct GroupPattern {
  std::vector<FactorPattern> factors;
  std::string spell(int n) const;
  long d_at(int n) const;
  std::string str() const;
  friend bool operator==(const GroupPattern&, const GroupPattern&) = default;
};

struct TableOneRow {
  int index = 0;
  GroupPattern g, h, l;
  bool parameterized = false;
  int duplicate_of = 0;  // earlier identical row, 0 if none
};

struct TableInstance {
  int row = 0;
  int n = 0;
  std::string g, h, l;
  long dg = 0, dh = 0, dl = 0;
  bool identity_holds() const { return dg == dh + dl; }
};

class TableOne {
public:
  static TableOne load_file(const std::string& path);
  static TableOne parse(const std::string& text);

  const std::vector<TableOneRow>& rows() const { return rows_; }
  const TableOneRow& row(int index) const;

  TableInstance instantiate(int row_index, int n) const;
  // All rows at all n <= max_n (rows without a parameter repeat verbatim).
  std::vector<TableInstance> instances(int max_n) const;

  // Does a simple noncompact form occur in the g column at some n? Returns
  // (row, n) of the first match in row order.
  std::optional<std::pair<int, int>> match_g(const RealFormDescriptor& g) const;
  // Does (g, h) occur as the first two columns of some row at some n?
  std::optional<std::pair<int, int>> match_pair(
      const RealFormDescriptor& g, const GroupDesc& h) const;

private:
  std::vector<TableOneRow> rows_;
};

FactorPattern parse_factor_pattern(const std::string& s);
GroupPattern parse_group_pattern(const std::string& s);

}  // namespace ckf
