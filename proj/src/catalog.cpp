#include "ckf/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ckf {

std::string family_str(Family f) {
  switch (f) {
    case Family::sl_R: return "sl_R";
    case Family::sl_H: return "sl_H";
    case Family::su_pq: return "su_pq";
    case Family::u_pq: return "u_pq";
    case Family::so_pq: return "so_pq";
    case Family::so_star: return "so_star";
    case Family::sp_R: return "sp_R";
    case Family::sp_pq: return "sp_pq";
    case Family::g2_2: return "g2_2";
    case Family::f4_4: return "f4_4";
    case Family::e_split: return "e_split";
    case Family::compact: return "compact";
  }
  return "?";
}

Family family_from_str(const std::string& s) {
  static const std::map<std::string, Family> m = {
      {"sl_R", Family::sl_R},       {"sl_H", Family::sl_H},
      {"su_pq", Family::su_pq},     {"u_pq", Family::u_pq},
      {"so_pq", Family::so_pq},     {"so_star", Family::so_star},
      {"sp_R", Family::sp_R},       {"sp_pq", Family::sp_pq},
      {"g2_2", Family::g2_2},       {"f4_4", Family::f4_4},
      {"e_split", Family::e_split}, {"compact", Family::compact}};
  auto it = m.find(s);
  if (it == m.end()) throw input_error("unknown family '" + s + "'");
  return it->second;
}

namespace {

std::string pq_name(const std::string& head, int p, int q) {
  return head + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// Compact-form kinds are distinguished by the canonical name prefix.
enum class CompactKind { su, so, sp, u1, g2, f4, e6, e7, e8 };

CompactKind compact_kind(const std::string& name) {
  if (name == "u(1)") return CompactKind::u1;
  if (name == "g2") return CompactKind::g2;
  if (name == "f4") return CompactKind::f4;
  if (name == "e6") return CompactKind::e6;
  if (name == "e7") return CompactKind::e7;
  if (name == "e8") return CompactKind::e8;
  if (name.rfind("su(", 0) == 0) return CompactKind::su;
  if (name.rfind("so(", 0) == 0) return CompactKind::so;
  if (name.rfind("sp(", 0) == 0) return CompactKind::sp;
  throw input_error("unrecognized compact form '" + name + "'");
}

long compact_dim(CompactKind k, int n) {
  switch (k) {
    case CompactKind::su: return static_cast<long>(n) * n - 1;
    case CompactKind::so: return static_cast<long>(n) * (n - 1) / 2;
    case CompactKind::sp: return static_cast<long>(n) * (2 * n + 1);
    case CompactKind::u1: return 1;
    case CompactKind::g2: return 14;
    case CompactKind::f4: return 52;
    case CompactKind::e6: return 78;
    case CompactKind::e7: return 133;
    case CompactKind::e8: return 248;
  }
  return 0;
}

SigmaInfo sigma_info(RootType t, int rank,
                     std::vector<std::pair<int, int>> classes) {
  return SigmaInfo{t, rank, std::move(classes)};
}

}  // namespace

long dim_formula_raw(Family f, long p, long q) {
  long n = p + q;
  switch (f) {
    case Family::sl_R: return p * p - 1;
    case Family::sl_H: return 4 * p * p - 1;
    case Family::su_pq: return n * n - 1;
    case Family::u_pq: return n * n;
    case Family::so_pq: return n * (n - 1) / 2;
    case Family::so_star: return p * (2 * p - 1);
    case Family::sp_R: return p * (2 * p + 1);
    case Family::sp_pq: return n * (2 * n + 1);
    case Family::g2_2: return 14;
    case Family::f4_4: return 52;
    case Family::e_split: return p == 6 ? 78 : (p == 7 ? 133 : 248);
    case Family::compact: throw input_error("raw formulas: ambiguous compact");
  }
  return 0;
}

long d_formula_raw(Family f, long p, long q) {
  switch (f) {
    case Family::sl_R: return (p - 1) * (p + 2) / 2;
    case Family::sl_H: return (p - 1) * (2 * p + 1);
    case Family::su_pq: return 2 * p * q;
    case Family::u_pq: return 2 * p * q;
    case Family::so_pq: return p * q;
    case Family::so_star: return p * (p - 1);
    case Family::sp_R: return p * (p + 1);
    case Family::sp_pq: return 4 * p * q;
    case Family::g2_2: return 8;
    case Family::f4_4: return 28;
    case Family::e_split: return p == 6 ? 42 : (p == 7 ? 70 : 128);
    case Family::compact: return 0;
  }
  return 0;
}

RealFormDescriptor formula_descriptor(Family f, int p, int q) {
  RealFormDescriptor rf;
  rf.family = f;
  rf.p = p;
  rf.q = q;
  auto reject = [&](const std::string& why) {
    throw input_error(family_str(f) + "(" + std::to_string(p) + "," +
                      std::to_string(q) + "): " + why);
  };
  switch (f) {
    case Family::sl_R: {
      if (p < 2) reject("requires n >= 2");
      rf.name = "sl(" + std::to_string(p) + ",R)";
      rf.dim_g = static_cast<long>(p) * p - 1;
      rf.dim_k = static_cast<long>(p) * (p - 1) / 2;
      rf.real_rank = p - 1;
      rf.is_split = true;
      rf.sigma = sigma_info(RootType::A, p - 1, {{1, 1}});
      break;
    }
    case Family::sl_H: {
      if (p < 2) reject("requires n >= 2");
      rf.name = "sl(" + std::to_string(p) + ",H)";
      rf.dim_g = 4L * p * p - 1;
      rf.dim_k = static_cast<long>(p) * (2 * p + 1);
      rf.real_rank = p - 1;
      rf.sigma = sigma_info(RootType::A, p - 1, {{1, 4}});
      break;
    }
    case Family::su_pq: {
      if (p < 1 || q < p) reject("requires 1 <= p <= q");
      if (p == 1 && q == 1) reject("su(1,1) is canonicalized to sl(2,R)");
      rf.name = pq_name("su", p, q);
      rf.dim_g = static_cast<long>(p + q) * (p + q) - 1;
      rf.dim_k = static_cast<long>(p) * p + static_cast<long>(q) * q - 1;
      rf.real_rank = p;
      if (p < q) {
        std::vector<std::pair<int, int>> cls{{1, 2 * (q - p)}};
        if (p > 1) cls.push_back({2, 2});
        cls.push_back({4, 1});
        rf.sigma = sigma_info(RootType::BC, p, std::move(cls));
      } else {
        rf.sigma = sigma_info(RootType::C, p, {{1, 2}, {2, 1}});
      }
      break;
    }
    case Family::u_pq: {
      if (p < 1 || q < p) reject("requires 1 <= p <= q");
      rf.name = pq_name("u", p, q);
      rf.dim_g = static_cast<long>(p + q) * (p + q);
      rf.dim_k = static_cast<long>(p) * p + static_cast<long>(q) * q;
      rf.real_rank = p;
      if (p == 1 && q == 1) {
        rf.sigma = sigma_info(RootType::A, 1, {{1, 1}});
      } else if (p < q) {
        std::vector<std::pair<int, int>> cls{{1, 2 * (q - p)}};
        if (p > 1) cls.push_back({2, 2});
        cls.push_back({4, 1});
        rf.sigma = sigma_info(RootType::BC, p, std::move(cls));
      } else {
        rf.sigma = sigma_info(RootType::C, p, {{1, 2}, {2, 1}});
      }
      break;
    }
    case Family::so_pq: {
      if (p < 1 || q < p) reject("requires 1 <= p <= q");
      if (p + q < 3) reject("so(1,1) is abelian, not simple");
      if (p == 2 && q == 2) reject("so(2,2) is not simple");
      rf.name = pq_name("so", p, q);
      long n = p + q;
      rf.dim_g = n * (n - 1) / 2;
      rf.dim_k = (static_cast<long>(p) * (p - 1) + static_cast<long>(q) * (q - 1)) / 2;
      rf.real_rank = p;
      rf.is_split = (q == p) || (q == p + 1);
      if (p == q) {
        rf.sigma = sigma_info(RootType::D, p, {{1, 1}});
      } else if (p == 1) {
        rf.sigma = sigma_info(RootType::A, 1, {{1, q - p}});
      } else {
        rf.sigma = sigma_info(RootType::B, p, {{1, q - p}, {2, 1}});
      }
      break;
    }
    case Family::so_star: {
      if (p < 3) reject("so*(2n) requires n >= 3 (smaller cases not simple)");
      rf.name = "so*(" + std::to_string(2 * p) + ")";
      rf.dim_g = static_cast<long>(p) * (2 * p - 1);
      rf.dim_k = static_cast<long>(p) * p;
      int m = p / 2;
      rf.real_rank = m;
      if (p % 2 == 0) {
        rf.sigma = sigma_info(RootType::C, m, {{1, 4}, {2, 1}});
      } else if (m == 1) {
        rf.sigma = sigma_info(RootType::BC, 1, {{1, 4}, {4, 1}});
      } else {
        rf.sigma = sigma_info(RootType::BC, m, {{1, 4}, {2, 4}, {4, 1}});
      }
      break;
    }
    case Family::sp_R: {
      if (p < 2) reject("sp(1,R) is canonicalized to sl(2,R)");
      rf.name = "sp(" + std::to_string(p) + ",R)";
      rf.dim_g = static_cast<long>(p) * (2 * p + 1);
      rf.dim_k = static_cast<long>(p) * p;
      rf.real_rank = p;
      rf.is_split = true;
      rf.sigma = sigma_info(RootType::C, p, {{1, 1}, {2, 1}});
      break;
    }
    case Family::sp_pq: {
      if (p < 1 || q < p) reject("requires 1 <= p <= q");
      rf.name = pq_name("sp", p, q);
      long n = p + q;
      rf.dim_g = n * (2 * n + 1);
      rf.dim_k = static_cast<long>(p) * (2 * p + 1) + static_cast<long>(q) * (2 * q + 1);
      rf.real_rank = p;
      if (p == q && p == 1) {
        rf.sigma = sigma_info(RootType::A, 1, {{1, 3}});
      } else if (p == q) {
        rf.sigma = sigma_info(RootType::C, p, {{1, 4}, {2, 3}});
      } else if (p == 1) {
        rf.sigma = sigma_info(RootType::BC, 1, {{1, 4 * (q - p)}, {4, 3}});
      } else {
        rf.sigma =
            sigma_info(RootType::BC, p, {{1, 4 * (q - p)}, {2, 4}, {4, 3}});
      }
      break;
    }
    case Family::g2_2: {
      rf.name = "g2(2)";
      rf.dim_g = 14;
      rf.dim_k = 6;
      rf.real_rank = 2;
      rf.is_split = true;
      rf.sigma = sigma_info(RootType::G, 2, {{1, 1}, {3, 1}});
      break;
    }
    case Family::f4_4: {
      rf.name = "f4(4)";
      rf.dim_g = 52;
      rf.dim_k = 24;
      rf.real_rank = 4;
      rf.is_split = true;
      rf.sigma = sigma_info(RootType::F, 4, {{1, 1}, {2, 1}});
      break;
    }
    case Family::e_split: {
      if (p < 6 || p > 8) reject("split E forms have rank 6, 7 or 8");
      rf.name = "e" + std::to_string(p) + "(" + std::to_string(p) + ")";
      rf.dim_g = p == 6 ? 78 : (p == 7 ? 133 : 248);
      rf.dim_k = p == 6 ? 36 : (p == 7 ? 63 : 120);
      rf.real_rank = p;
      rf.is_split = true;
      rf.sigma = sigma_info(RootType::E, p, {{1, 1}});
      break;
    }
    case Family::compact:
      throw input_error(
          "formula_descriptor: compact forms are built from their names");
  }
  rf.is_compact = (rf.dim_g == rf.dim_k);
  return rf;
}

namespace {

RealFormDescriptor compact_descriptor(const std::string& canonical) {
  CompactKind k = compact_kind(canonical);
  int n = 0;
  if (k == CompactKind::su || k == CompactKind::so || k == CompactKind::sp) {
    auto open = canonical.find('(');
    n = std::stoi(canonical.substr(open + 1,
                                   canonical.find(')') - open - 1));
  }
  RealFormDescriptor rf;
  rf.name = canonical;
  rf.family = Family::compact;
  rf.p = n;
  rf.dim_g = rf.dim_k = compact_dim(k, n);
  rf.is_compact = true;
  if (rf.dim_g == 0) throw input_error(canonical + ": trivial algebra");
  return rf;
}

}  // namespace

FactorName parse_factor_name(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw input_error("empty algebra name");

  auto open = s.find('(');
  std::string head = open == std::string::npos ? s : s.substr(0, open);
  std::vector<std::string> args;
  if (open != std::string::npos) {
    if (s.back() != ')') throw input_error("unbalanced name '" + raw + "'");
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) args.push_back(tok);
    if (args.empty()) throw input_error("no parameters in '" + raw + "'");
  }
  auto as_int = [&](const std::string& t) {
    for (char c : t)
      if (!isdigit(static_cast<unsigned char>(c)))
        throw input_error("bad parameter '" + t + "' in '" + raw + "'");
    return std::stoi(t);
  };
  auto make = [&](Family f, int p, int q) {
    FactorName fn;
    fn.family = f;
    fn.p = p;
    fn.q = q;
    fn.canonical = f == Family::compact
                       ? std::string()
                       : formula_descriptor(f, p, q).name;
    return fn;
  };
  auto make_compact = [&](const std::string& canonical) {
    FactorName fn;
    fn.family = Family::compact;
    fn.canonical = canonical;
    RealFormDescriptor rf = compact_descriptor(canonical);
    fn.p = rf.p;
    return fn;
  };

  if (head == "sl") {
    if (args.size() != 2) throw input_error("'" + raw + "': expected sl(n,R) or sl(n,H)");
    int n = as_int(args[0]);
    if (args[1] == "R") {
      if (n < 2) throw input_error("sl(n,R) requires n >= 2");
      return make(Family::sl_R, n, 0);
    }
    if (args[1] == "H") {
      if (n == 1) return make_compact("su(2)");  // sl(1,H) = sp(1)
      return make(Family::sl_H, n, 0);
    }
    throw input_error("'" + raw + "': second parameter must be R or H");
  }
  if (head == "su" || head == "u" || head == "so" || head == "sp") {
    if (args.size() == 1) {
      int n = as_int(args[0]);
      if (head == "u") {
        if (n != 1) throw input_error("compact unitary factor must be u(1)");
        return make_compact("u(1)");
      }
      if (head == "su" && n < 2) throw input_error("su(1) is trivial");
      if (head == "so" && n < 2) throw input_error("so(1) is trivial");
      if (head == "sp" && n < 1) throw input_error("sp(0) is trivial");
      return make_compact(head + "(" + std::to_string(n) + ")");
    }
    if (args.size() != 2)
      throw input_error("'" + raw + "': expected one or two parameters");
    if (head == "sp" && args[1] == "R") {
      int n = as_int(args[0]);
      if (n < 1) throw input_error("sp(0,R) is trivial");
      if (n == 1) return make(Family::sl_R, 2, 0);  // sp(1,R) = sl(2,R)
      return make(Family::sp_R, n, 0);
    }
    int p = as_int(args[0]), q = as_int(args[1]);
    if (p > q) std::swap(p, q);
    if (p == 0) {
      if (q == 0) throw input_error("'" + raw + "' is trivial");
      return parse_factor_name(head + "(" + std::to_string(q) + ")");
    }
    if (head == "su" && p == 1 && q == 1) return make(Family::sl_R, 2, 0);
    Family f = head == "su"  ? Family::su_pq
               : head == "u" ? Family::u_pq
               : head == "so" ? Family::so_pq
                              : Family::sp_pq;
    return make(f, p, q);
  }
  if (head == "so*") {
    if (args.size() != 1) throw input_error("'" + raw + "': expected so*(2n)");
    int m = as_int(args[0]);
    if (m % 2 != 0) throw input_error("so*(m) requires even m");
    return make(Family::so_star, m / 2, 0);
  }
  if (head == "g2") {
    if (args.empty()) return make_compact("g2");
    if (args.size() == 1 && as_int(args[0]) == 2) return make(Family::g2_2, 0, 0);
  }
  if (head == "f4") {
    if (args.empty()) return make_compact("f4");
    if (args.size() == 1 && as_int(args[0]) == 4) return make(Family::f4_4, 0, 0);
  }
  if (head == "e6" || head == "e7" || head == "e8") {
    int rank = head[1] - '0';
    if (args.empty()) return make_compact(head);
    if (args.size() == 1 && as_int(args[0]) == rank)
      return make(Family::e_split, rank, 0);
  }
  throw input_error("unrecognized algebra name '" + raw + "'");
}

long GroupDesc::dim() const {
  long s = 0;
  for (const auto& f : factors) s += f.dim_g;
  return s;
}

long GroupDesc::d() const {
  long s = 0;
  for (const auto& f : factors) s += d_value(f);
  return s;
}

int GroupDesc::real_rank() const {
  int s = 0;
  for (const auto& f : factors) s += f.real_rank;
  return s;
}

bool GroupDesc::is_compact() const { return d() == 0; }

const RealFormDescriptor* GroupDesc::noncompact_factor() const {
  const RealFormDescriptor* found = nullptr;
  for (const auto& f : factors) {
    if (f.is_compact) continue;
    if (found) return nullptr;
    found = &f;
  }
  return found;
}

SigmaRealization sigma_witness_realization(const RealFormDescriptor& rf) {
  if (!rf.sigma)
    throw precondition_error(rf.name + " has no restricted-root data");
  const SigmaInfo& si = *rf.sigma;
  const RootSystem& rs = build_root_system(si.type, si.rank);
  // Smallest squared length, for ratio classes.
  Rat min_len;
  bool first = true;
  for (const auto& r : rs.roots) {
    Rat l = dot(r, r);
    if (first || l < min_len) min_len = l;
    first = false;
  }
  auto mult_of = [&](const QVec& root) {
    Rat ratio = dot(root, root) / min_len;
    for (const auto& [cls, m] : si.mult_by_ratio)
      if (Rat(cls) == ratio) return m;
    throw internal_error(rf.name + ": no multiplicity for length class " +
                         ratio.str());
  };
  SigmaRealization out;
  bool rank_dim = rs.ambient == si.rank;
  for (const auto& r : rs.roots) {
    QVec v;
    if (rank_dim) {
      v = r;
    } else {
      v.reserve(rs.simple.size());
      for (const auto& s : rs.simple) v.push_back(dot(r, s));
    }
    out.mult[v] = mult_of(r);
    out.roots.push_back(std::move(v));
  }
  std::sort(out.roots.begin(), out.roots.end(), LexLess{});
  return out;
}

void check_iwasawa_identity(const RealFormDescriptor& rf) {
  if (!rf.sigma) {
    if (!rf.is_compact)
      throw internal_error(rf.name + ": noncompact record without sigma data");
    return;
  }
  const SigmaInfo& si = *rf.sigma;
  const RootSystem& rs = build_root_system(si.type, si.rank);
  Rat min_len;
  bool first = true;
  for (const auto& r : rs.roots) {
    Rat l = dot(r, r);
    if (first || l < min_len) min_len = l;
    first = false;
  }
  long mult_sum = 0;
  for (const auto& r : rs.positive) {
    Rat ratio = dot(r, r) / min_len;
    bool found = false;
    for (const auto& [cls, m] : si.mult_by_ratio)
      if (Rat(cls) == ratio) {
        mult_sum += m;
        found = true;
        break;
      }
    if (!found)
      throw internal_error(rf.name + ": multiplicity missing for class " +
                           ratio.str());
  }
  long d = d_value(rf);
  if (d != rf.real_rank + mult_sum)
    throw internal_error(
        rf.name + ": Iwasawa identity fails: d = " + std::to_string(d) +
        ", real rank + multiplicity sum = " +
        std::to_string(rf.real_rank + mult_sum));
  if (rf.is_split) {
    for (const auto& [cls, m] : si.mult_by_ratio)
      if (m != 1)
        throw internal_error(rf.name +
                             ": split form with multiplicity > 1");
    if (rf.dim_k != mult_sum)
      throw internal_error(rf.name + ": split form with nonzero m_0");
  }
  if (rf.is_compact != (d == 0))
    throw internal_error(rf.name + ": compact flag disagrees with d");
}

std::vector<RealFormDescriptor> default_catalog_records() {
  std::vector<RealFormDescriptor> out;
  auto add = [&](Family f, int p, int q) {
    out.push_back(formula_descriptor(f, p, q));
  };
  for (int n = 2; n <= 12; ++n) add(Family::sl_R, n, 0);
  for (int n = 2; n <= 6; ++n) add(Family::sl_H, n, 0);
  for (int p = 1; p <= 12; ++p)
    for (int q = p; q <= 12; ++q) {
      if (p == 1 && q == 1) continue;
      add(Family::su_pq, p, q);
    }
  for (int p = 1; p <= 13; ++p)
    for (int q = p; q <= 13; ++q) {
      if (p + q < 3 || (p == 2 && q == 2)) continue;
      add(Family::so_pq, p, q);
    }
  for (int n = 3; n <= 8; ++n) add(Family::so_star, n, 0);
  for (int n = 2; n <= 12; ++n) add(Family::sp_R, n, 0);
  for (int p = 1; p <= 10; ++p)
    for (int q = p; q <= 10; ++q) add(Family::sp_pq, p, q);
  add(Family::g2_2, 0, 0);
  add(Family::f4_4, 0, 0);
  for (int r = 6; r <= 8; ++r) add(Family::e_split, r, 0);
  // Compact forms used as product factors and compact-h inputs.
  for (int n = 2; n <= 16; ++n)
    out.push_back(compact_descriptor("su(" + std::to_string(n) + ")"));
  for (int n = 2; n <= 16; ++n)
    out.push_back(compact_descriptor("so(" + std::to_string(n) + ")"));
  for (int n = 1; n <= 10; ++n)
    out.push_back(compact_descriptor("sp(" + std::to_string(n) + ")"));
  out.push_back(compact_descriptor("u(1)"));
  out.push_back(compact_descriptor("g2"));
  out.push_back(compact_descriptor("f4"));
  out.push_back(compact_descriptor("e6"));
  out.push_back(compact_descriptor("e7"));
  out.push_back(compact_descriptor("e8"));
  return out;
}

std::string serialize_catalog(const std::vector<RealFormDescriptor>& records) {
  std::ostringstream os;
  os << "schema real-form-catalog 1\n";
  for (const auto& rf : records) {
    os << "record " << rf.name << "\n";
    os << "family " << family_str(rf.family) << "\n";
    os << "params " << rf.p << " " << rf.q << "\n";
    os << "dim_g " << rf.dim_g << "\n";
    os << "dim_k " << rf.dim_k << "\n";
    os << "real_rank " << rf.real_rank << "\n";
    os << "is_split " << (rf.is_split ? "true" : "false") << "\n";
    os << "is_compact " << (rf.is_compact ? "true" : "false") << "\n";
    if (rf.sigma) {
      os << "sigma " << root_type_str(rf.sigma->type) << " "
         << rf.sigma->rank << " classes";
      for (const auto& [ratio, m] : rf.sigma->mult_by_ratio)
        os << " " << ratio << ":" << m;
      os << "\n";
    } else {
      os << "sigma none\n";
    }
    os << "end\n";
  }
  return os.str();
}

Catalog Catalog::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "schema real-form-catalog 1")
    throw input_error("catalog data: missing or unsupported schema header");
  Catalog cat;
  RealFormDescriptor cur;
  bool in_record = false;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    auto bad = [&](const std::string& why) {
      throw input_error("catalog line " + std::to_string(lineno) + ": " + why);
    };
    if (tok == "record") {
      if (in_record) bad("nested record");
      cur = RealFormDescriptor{};
      if (!(ls >> cur.name)) bad("record without name");
      in_record = true;
    } else if (!in_record) {
      bad("field outside record");
    } else if (tok == "family") {
      std::string f;
      ls >> f;
      cur.family = family_from_str(f);
    } else if (tok == "params") {
      ls >> cur.p >> cur.q;
    } else if (tok == "dim_g") {
      ls >> cur.dim_g;
    } else if (tok == "dim_k") {
      ls >> cur.dim_k;
    } else if (tok == "real_rank") {
      ls >> cur.real_rank;
    } else if (tok == "is_split") {
      std::string b;
      ls >> b;
      cur.is_split = b == "true";
    } else if (tok == "is_compact") {
      std::string b;
      ls >> b;
      cur.is_compact = b == "true";
    } else if (tok == "sigma") {
      std::string t;
      ls >> t;
      if (t != "none") {
        SigmaInfo si;
        si.type = root_type_from_letters(t);
        std::string kw;
        if (!(ls >> si.rank >> kw) || kw != "classes")
          bad("malformed sigma line");
        std::string pair;
        while (ls >> pair) {
          auto colon = pair.find(':');
          if (colon == std::string::npos) bad("malformed sigma class");
          si.mult_by_ratio.push_back({std::stoi(pair.substr(0, colon)),
                                      std::stoi(pair.substr(colon + 1))});
        }
        cur.sigma = std::move(si);
      }
    } else if (tok == "end") {
      // Audit at load: the record must agree with the formula path field by
      // field, and satisfy the Iwasawa identity exactly.
      RealFormDescriptor ref;
      if (cur.family == Family::compact) {
        ref = compact_descriptor(cur.name);
      } else {
        ref = formula_descriptor(cur.family, cur.p, cur.q);
      }
      if (ref.name != cur.name || ref.dim_g != cur.dim_g ||
          ref.dim_k != cur.dim_k || ref.real_rank != cur.real_rank ||
          ref.is_split != cur.is_split || ref.is_compact != cur.is_compact ||
          !(ref.sigma == cur.sigma))
        throw internal_error("catalog record " + cur.name +
                             " disagrees with the formula path");
      check_iwasawa_identity(cur);
      if (!cat.records_.emplace(cur.name, cur).second)
        throw input_error("duplicate catalog record " + cur.name);
      in_record = false;
    } else {
      bad("unknown field '" + tok + "'");
    }
  }
  if (in_record) throw input_error("catalog data: unterminated record");
  if (cat.records_.empty()) throw input_error("catalog data: no records");
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open catalog file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

const RealFormDescriptor& Catalog::lookup(const std::string& name) const {
  FactorName fn = parse_factor_name(name);
  if (fn.family == Family::u_pq) {
    // Reductive wrapper su(p,q) + compact center; derived, not a file record.
    auto it = derived_.find(fn.canonical);
    if (it == derived_.end())
      it = derived_.emplace(fn.canonical, formula_descriptor(Family::u_pq, fn.p, fn.q))
               .first;
    return it->second;
  }
  auto it = records_.find(fn.canonical);
  if (it == records_.end())
    throw input_error("'" + fn.canonical + "' is not in the shipped catalog");
  return it->second;
}

GroupDesc Catalog::lookup_group(const std::string& name) const {
  GroupDesc g;
  std::string part;
  std::istringstream is(name);
  std::vector<std::string> parts;
  while (std::getline(is, part, 'x'))
    if (!part.empty()) parts.push_back(part);
  if (parts.empty()) throw input_error("empty group name");
  for (const auto& piece : parts) g.factors.push_back(lookup(piece));
  for (size_t i = 0; i < g.factors.size(); ++i) {
    if (i) g.name += "x";
    g.name += g.factors[i].name;
  }
  return g;
}

std::vector<RealFormDescriptor> Catalog::split_forms(int max_param) const {
  if (max_param < 2) throw precondition_error("split_forms: max_param >= 2");
  std::vector<RealFormDescriptor> out;
  for (const auto& [name, rf] : records_) {
    if (!rf.is_split) continue;
    int growth = 0;
    switch (rf.family) {
      case Family::sl_R:
      case Family::sp_R: growth = rf.p; break;
      case Family::so_pq: growth = rf.p; break;  // so(n,n) or so(n,n+1)
      default: growth = 0; break;  // exceptional split forms: flags
    }
    if (growth <= max_param) out.push_back(rf);
  }
  return out;
}

bool restricted_classes_agree(const Classification& cls,
                              const std::vector<QVec>& vectors,
                              const std::map<QVec, int, LexLess>& mult,
                              int real_rank, const RealFormDescriptor& rf,
                              std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!rf.sigma) return fail(rf.name + ": record carries no sigma data");
  if (real_rank != rf.real_rank)
    return fail("real rank: computed " + std::to_string(real_rank) +
                ", catalog " + std::to_string(rf.real_rank));
  auto oc = canonical_type(cls.type, cls.rank);
  auto cc = canonical_type(rf.sigma->type, rf.sigma->rank);
  if (oc != cc)
    return fail("sigma type: computed " +
                root_type_name(oc.first, oc.second) + ", catalog " +
                root_type_name(cc.first, cc.second));

  auto classes_of = [](const std::vector<QVec>& vs,
                       auto mult_of) -> std::map<Rat, std::pair<int, int>> {
    Rat min_len;
    bool first = true;
    for (const auto& v : vs) {
      Rat l = dot(v, v);
      if (first || l < min_len) min_len = l;
      first = false;
    }
    std::map<Rat, std::pair<int, int>> out;
    for (const auto& v : vs) {
      Rat ratio = dot(v, v) / min_len;
      auto& [count, m] = out[ratio];
      ++count;
      int mv = mult_of(v);
      if (m != 0 && m != mv)
        throw internal_error("unequal multiplicities inside a length class");
      m = mv;
    }
    return out;
  };

  std::map<Rat, std::pair<int, int>> computed, expected;
  try {
    computed = classes_of(vectors, [&](const QVec& v) { return mult.at(v); });
  } catch (const internal_error& e) {
    return fail(e.what());
  }
  const RootSystem& rs = build_root_system(rf.sigma->type, rf.sigma->rank);
  expected = classes_of(rs.roots, [&](const QVec& v) {
    Rat min_len;
    bool first = true;
    for (const auto& r : rs.roots) {
      Rat l = dot(r, r);
      if (first || l < min_len) min_len = l;
      first = false;
    }
    Rat ratio = dot(v, v) / min_len;
    for (const auto& [cls_ratio, m] : rf.sigma->mult_by_ratio)
      if (Rat(cls_ratio) == ratio) return m;
    throw internal_error(rf.name + ": multiplicity missing for class " +
                         ratio.str());
  });
  if (computed != expected) {
    std::ostringstream os;
    os << "length classes differ:";
    for (const auto& [r, cm] : computed)
      os << " computed[" << r.str() << "]=" << cm.first << "x" << cm.second;
    for (const auto& [r, cm] : expected)
      os << " catalog[" << r.str() << "]=" << cm.first << "x" << cm.second;
    return fail(os.str());
  }
  if (why) *why = "exact agreement";
  return true;
}

std::vector<Catalog::AuditLine> Catalog::audit() const {
  std::vector<AuditLine> lines;
  for (const auto& [name, rf] : records_) {
    AuditLine a{name, "formula+iwasawa", true, ""};
    try {
      RealFormDescriptor ref = rf.family == Family::compact
                                   ? compact_descriptor(rf.name)
                                   : formula_descriptor(rf.family, rf.p, rf.q);
      if (!(ref.sigma == rf.sigma) || ref.dim_g != rf.dim_g ||
          ref.dim_k != rf.dim_k || ref.real_rank != rf.real_rank)
        throw internal_error(name + ": formula mismatch");
      check_iwasawa_identity(rf);
      a.detail = "d=" + std::to_string(d_value(rf));
    } catch (const std::exception& e) {
      a.ok = false;
      a.detail = e.what();
    }
    lines.push_back(std::move(a));
  }
  return lines;
}

}  // namespace ckf
