#include "ckf/table_one.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ckf {

std::string ParamExpr::str() const {
  if (coef == 0) return std::to_string(cons);
  std::string s = coef == 1 ? "n" : std::to_string(coef) + "n";
  if (cons != 0) s += "+" + std::to_string(cons);
  return s;
}

std::string FactorPattern::spell(int n) const {
  if (!compact_name.empty() && params.empty()) return compact_name;
  std::string head;
  switch (family) {
    case Family::su_pq: head = "su"; break;
    case Family::u_pq: head = "u"; break;
    case Family::so_pq: head = "so"; break;
    case Family::sp_pq: head = "sp"; break;
    case Family::sl_R: return "sl(" + std::to_string(params[0].at(n)) + ",R)";
    case Family::sp_R: return "sp(" + std::to_string(params[0].at(n)) + ",R)";
    case Family::g2_2: return "g2(2)";
    case Family::f4_4: return "f4(4)";
    case Family::e_split:
      return "e" + std::to_string(params[0].at(n)) + "(" +
             std::to_string(params[0].at(n)) + ")";
    case Family::compact: return compact_name;
    default: throw internal_error("unsupported pattern family");
  }
  auto [p, q] = params_at(n);
  return head + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::pair<long, long> FactorPattern::params_at(int n) const {
  long p = params.empty() ? 0 : params[0].at(n);
  long q = params.size() > 1 ? params[1].at(n) : 0;
  if (p > q && params.size() > 1) std::swap(p, q);
  return {p, q};
}

long FactorPattern::d_at(int n) const {
  if (family == Family::compact) return 0;
  auto [p, q] = params_at(n);
  return d_formula_raw(family, p, q);
}

std::string FactorPattern::str() const {
  if (family == Family::compact) return compact_name;
  std::string head;
  switch (family) {
    case Family::su_pq: head = "su"; break;
    case Family::u_pq: head = "u"; break;
    case Family::so_pq: head = "so"; break;
    case Family::sp_pq: head = "sp"; break;
    case Family::g2_2: return "g2(2)";
    default: head = family_str(family); break;
  }
  std::string s = head + "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += params[i].str();
  }
  return s + ")";
}

std::string GroupPattern::spell(int n) const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].spell(n);
  }
  return s;
}

long GroupPattern::d_at(int n) const {
  long s = 0;
  for (const auto& f : factors) s += f.d_at(n);
  return s;
}

std::string GroupPattern::str() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].str();
  }
  return s;
}

namespace {

ParamExpr parse_param_expr(const std::string& s) {
  // Accepted forms: "k", "n", "kn" (k a positive integer).
  ParamExpr e;
  if (s.empty()) throw input_error("empty table parameter");
  if (s == "n") {
    e.coef = 1;
    return e;
  }
  size_t npos = s.find('n');
  if (npos == std::string::npos) {
    e.cons = std::stoi(s);
    return e;
  }
  if (npos != s.size() - 1)
    throw input_error("unsupported table parameter '" + s + "'");
  e.coef = std::stoi(s.substr(0, npos));
  return e;
}

}  // namespace

FactorPattern parse_factor_pattern(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  FactorPattern fp;
  auto open = s.find('(');
  if (open == std::string::npos)
    throw input_error("bad table factor '" + raw + "'");
  std::string head = s.substr(0, open);
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> args;
  std::istringstream is(inner);
  std::string tok;
  while (std::getline(is, tok, ',')) args.push_back(tok);

  bool all_const = true;
  std::vector<ParamExpr> exprs;
  for (const auto& a : args) {
    if (a == "R" || a == "H") continue;  // handled below
    exprs.push_back(parse_param_expr(a));
    if (exprs.back().depends_on_n()) all_const = false;
  }

  if (head == "su" && args.size() == 2) fp.family = Family::su_pq;
  else if (head == "u" && args.size() == 2) fp.family = Family::u_pq;
  else if (head == "so" && args.size() == 2) fp.family = Family::so_pq;
  else if (head == "sp" && args.size() == 2 && args[1] == "R") fp.family = Family::sp_R;
  else if (head == "sp" && args.size() == 2) fp.family = Family::sp_pq;
  else if (head == "g2" && args.size() == 1) fp.family = Family::g2_2;
  else if (head == "f4" && args.size() == 1) fp.family = Family::f4_4;
  else if ((head == "sp" || head == "so" || head == "su") && args.size() == 1 &&
           all_const) {
    fp.family = Family::compact;
    fp.compact_name = head + "(" + std::to_string(exprs[0].cons) + ")";
    return fp;
  } else if (head == "u" && args.size() == 1) {
    fp.family = Family::compact;
    fp.compact_name = "u(1)";
    return fp;
  } else {
    throw input_error("unsupported table factor '" + raw + "'");
  }
  fp.params = std::move(exprs);
  return fp;
}

GroupPattern parse_group_pattern(const std::string& s) {
  GroupPattern gp;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, 'x'))
    if (!part.empty()) gp.factors.push_back(parse_factor_pattern(part));
  if (gp.factors.empty()) throw input_error("empty table column");
  return gp;
}

TableOne TableOne::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "schema table-one 1")
    throw input_error("table data: missing or unsupported schema header");
  TableOne t;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    int idx;
    ls >> kw >> idx;
    if (kw != "row")
      throw input_error("table line " + std::to_string(lineno) +
                        ": expected 'row'");
    std::string rest;
    std::getline(ls, rest);
    std::vector<std::string> cols;
    std::istringstream cs(rest);
    std::string col;
    while (std::getline(cs, col, '|')) {
      std::string trimmed;
      for (char c : col)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
      if (!trimmed.empty()) cols.push_back(trimmed);
    }
    if (cols.size() != 3)
      throw input_error("table line " + std::to_string(lineno) +
                        ": expected three columns");
    TableOneRow row;
    row.index = idx;
    row.g = parse_group_pattern(cols[0]);
    row.h = parse_group_pattern(cols[1]);
    row.l = parse_group_pattern(cols[2]);
    for (const auto& gp : {row.g, row.h, row.l})
      for (const auto& f : gp.factors)
        for (const auto& e : f.params)
          if (e.depends_on_n()) row.parameterized = true;
    t.rows_.push_back(std::move(row));
  }
  if (t.rows_.size() != 14)
    throw input_error("table data: expected 14 rows, found " +
                      std::to_string(t.rows_.size()));
  // Verbatim duplicates are kept and flagged, never merged.
  for (size_t i = 0; i < t.rows_.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (t.rows_[i].g == t.rows_[j].g && t.rows_[i].h == t.rows_[j].h &&
          t.rows_[i].l == t.rows_[j].l) {
        t.rows_[i].duplicate_of = t.rows_[j].index;
        break;
      }
  // Load check: the decomposition identity at n = 1, 2, 3.
  for (const auto& row : t.rows_)
    for (int n = 1; n <= 3; ++n) {
      TableInstance inst = t.instantiate(row.index, n);
      if (!inst.identity_holds())
        throw internal_error("table row " + std::to_string(row.index) +
                             " fails d(g) = d(h) + d(l) at n = " +
                             std::to_string(n));
    }
  return t;
}

TableOne TableOne::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open table file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

const TableOneRow& TableOne::row(int index) const {
  for (const auto& r : rows_)
    if (r.index == index) return r;
  throw input_error("table row " + std::to_string(index) + " does not exist");
}

TableInstance TableOne::instantiate(int row_index, int n) const {
  if (n < 1) throw precondition_error("table parameter n must be >= 1");
  const TableOneRow& r = row(row_index);
  TableInstance inst;
  inst.row = row_index;
  inst.n = n;
  inst.g = r.g.spell(n);
  inst.h = r.h.spell(n);
  inst.l = r.l.spell(n);
  inst.dg = r.g.d_at(n);
  inst.dh = r.h.d_at(n);
  inst.dl = r.l.d_at(n);
  return inst;
}

std::vector<TableInstance> TableOne::instances(int max_n) const {
  std::vector<TableInstance> out;
  for (const auto& r : rows_)
    for (int n = 1; n <= max_n; ++n) out.push_back(instantiate(r.index, n));
  return out;
}

namespace {

// Concrete (family, p <= q) equality against a pattern factor at n.
bool factor_matches(const FactorPattern& fp, const RealFormDescriptor& rf,
                    int n) {
  if (fp.family == Family::compact)
    return rf.is_compact && fp.compact_name == rf.name;
  if (fp.family != rf.family) return false;
  auto [p, q] = fp.params_at(n);
  return p == rf.p && q == rf.q;
}

int solve_n_bound(const RealFormDescriptor& rf) {
  // Linear coefficients are >= 1, so no match is possible past max(p,q).
  return std::max(rf.p, rf.q) + 1;
}

}  // namespace

std::optional<std::pair<int, int>> TableOne::match_g(
    const RealFormDescriptor& g) const {
  for (const auto& r : rows_) {
    if (r.g.factors.size() != 1) continue;
    int bound = r.parameterized ? solve_n_bound(g) : 1;
    for (int n = 1; n <= bound; ++n)
      if (factor_matches(r.g.factors[0], g, n)) return {{r.index, n}};
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> TableOne::match_pair(
    const RealFormDescriptor& g, const GroupDesc& h) const {
  for (const auto& r : rows_) {
    if (r.g.factors.size() != 1) continue;
    int bound = r.parameterized ? solve_n_bound(g) : 1;
    for (int n = 1; n <= bound; ++n) {
      if (!factor_matches(r.g.factors[0], g, n)) continue;
      if (r.h.factors.size() != h.factors.size()) continue;
      // Both columns are canonically spelled; compare factor multisets.
      std::vector<std::string> want, have;
      for (const auto& f : r.h.factors) want.push_back(f.spell(n));
      for (const auto& f : h.factors) have.push_back(f.name);
      std::sort(want.begin(), want.end());
      std::sort(have.begin(), have.end());
      if (want == have) return {{r.index, n}};
    }
  }
  return std::nullopt;
}

}  // namespace ckf
