#include "ckf/root_system.hpp"

#include <algorithm>
#include <mutex>

namespace ckf {

char root_type_letter(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
    case RootType::E: return 'E';
    case RootType::F: return 'F';
    case RootType::G: return 'G';
    case RootType::BC: return ' ';
  }
  return '?';
}

std::string root_type_str(RootType t) {
  return t == RootType::BC ? "BC" : std::string(1, root_type_letter(t));
}

std::string root_type_name(RootType t, int rank) {
  return root_type_str(t) + std::to_string(rank);
}

RootType root_type_from_letters(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "E") return RootType::E;
  if (s == "F") return RootType::F;
  if (s == "G") return RootType::G;
  if (s == "BC") return RootType::BC;
  throw input_error("unknown root-system type '" + s + "'");
}

bool valid_type_rank(RootType type, int rank) {
  switch (type) {
    case RootType::A: return rank >= 1;
    case RootType::B: return rank >= 2;
    case RootType::C: return rank >= 2;
    case RootType::D: return rank >= 3;
    case RootType::E: return rank >= 6 && rank <= 8;
    case RootType::F: return rank == 4;
    case RootType::G: return rank == 2;
    case RootType::BC: return rank >= 1;
  }
  return false;
}

namespace {

QVec unit(int dim, int i, Rat c = Rat(1)) {
  QVec v(static_cast<size_t>(dim));
  v[static_cast<size_t>(i)] = c;
  return v;
}

void add_with_negatives(std::vector<QVec>& out, const QVec& v) {
  out.push_back(v);
  out.push_back(vneg(v));
}

// Roots e_i - e_j (all i != j) in R^{n+1}.
std::vector<QVec> roots_a(int n) {
  std::vector<QVec> r;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      QVec v(static_cast<size_t>(n) + 1);
      v[static_cast<size_t>(i)] = Rat(1);
      v[static_cast<size_t>(j)] = Rat(-1);
      r.push_back(std::move(v));
    }
  return r;
}

std::vector<QVec> roots_bcd(int n, bool shorts, bool longs) {
  std::vector<QVec> r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          QVec v(static_cast<size_t>(n));
          v[static_cast<size_t>(i)] = Rat(si);
          v[static_cast<size_t>(j)] = Rat(sj);
          r.push_back(std::move(v));
        }
  if (shorts)
    for (int i = 0; i < n; ++i) add_with_negatives(r, unit(n, i));
  if (longs)
    for (int i = 0; i < n; ++i) add_with_negatives(r, unit(n, i, Rat(2)));
  return r;
}

std::vector<QVec> roots_e8() {
  std::vector<QVec> r;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          QVec v(8);
          v[static_cast<size_t>(i)] = Rat(si);
          v[static_cast<size_t>(j)] = Rat(sj);
          r.push_back(std::move(v));
        }
  // Half-sums with an even number of minus signs.
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
    QVec v(8);
    for (int i = 0; i < 8; ++i)
      v[static_cast<size_t>(i)] = (mask >> i) & 1 ? Rat(-1, 2) : Rat(1, 2);
    r.push_back(std::move(v));
  }
  return r;
}

std::vector<QVec> roots_f4() {
  std::vector<QVec> r = roots_bcd(4, true, false);
  for (int mask = 0; mask < 16; ++mask) {
    QVec v(4);
    for (int i = 0; i < 4; ++i)
      v[static_cast<size_t>(i)] = (mask >> i) & 1 ? Rat(-1, 2) : Rat(1, 2);
    r.push_back(std::move(v));
  }
  return r;
}

// Traceless coordinates in R^3.
std::vector<QVec> roots_g2() {
  std::vector<QVec> r;
  int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& p : perm) {
    QVec v(3);
    v[static_cast<size_t>(p[0])] = Rat(1);
    v[static_cast<size_t>(p[1])] = Rat(-1);
    r.push_back(std::move(v));
  }
  for (int i = 0; i < 3; ++i) {
    QVec v(3, Rat(-1));
    v[static_cast<size_t>(i)] = Rat(2);
    add_with_negatives(r, v);
  }
  return r;
}

std::vector<QVec> simple_a(int n) {
  std::vector<QVec> s;
  for (int i = 0; i < n; ++i) {
    QVec v(static_cast<size_t>(n) + 1);
    v[static_cast<size_t>(i)] = Rat(1);
    v[static_cast<size_t>(i) + 1] = Rat(-1);
    s.push_back(std::move(v));
  }
  return s;
}

std::vector<QVec> simple_chain(int n) {  // e_i - e_{i+1}, i < n
  std::vector<QVec> s;
  for (int i = 0; i + 1 < n; ++i) {
    QVec v(static_cast<size_t>(n));
    v[static_cast<size_t>(i)] = Rat(1);
    v[static_cast<size_t>(i) + 1] = Rat(-1);
    s.push_back(std::move(v));
  }
  return s;
}

}  // namespace

const QVec& RootSystem::simple_coords(const QVec& root) const {
  auto it = coords_.find(root);
  if (it == coords_.end())
    throw precondition_error("vector is not a root of " + name());
  return it->second;
}

bool RootSystem::orthogonal_to_span(const QVec& v) const {
  for (const auto& s : simple)
    if (!dot(s, v).is_zero()) return false;
  return true;
}

void RootSystem::finalize() {
  std::sort(roots.begin(), roots.end(), LexLess{});
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  root_set_ = std::set<QVec, LexLess>(roots.begin(), roots.end());

  for (const auto& r : roots) {
    if (vzero(r)) throw internal_error(name() + ": zero vector stored as root");
    if (!contains(vneg(r)))
      throw internal_error(name() + ": not closed under negation");
  }
  // Reflection closure, the defining axiom.
  for (const auto& a : roots) {
    Rat aa = dot(a, a);
    for (const auto& b : roots) {
      QVec refl = vsub(b, vscale(Rat(2) * dot(b, a) / aa, a));
      if (!contains(refl))
        throw internal_error(name() + ": not closed under reflections");
    }
  }
  bool has_double = false;
  for (const auto& r : roots)
    if (contains(vscale(Rat(2), r))) has_double = true;
  reduced = !has_double;
  if (reduced != (type != RootType::BC))
    throw internal_error(name() + ": reduced flag mismatch");

  // Simple-basis coordinates split roots into positives and negatives.
  for (const auto& r : roots) {
    auto c = coordinates_in(simple, r);
    if (!c) throw internal_error(name() + ": root outside simple span");
    coords_.emplace(r, std::move(*c));
  }
  positive.clear();
  for (const auto& r : roots) {
    const QVec& c = coords_.at(r);
    bool nonneg = true, nonpos = true;
    for (const auto& x : c) {
      if (x.sign() < 0) nonneg = false;
      if (x.sign() > 0) nonpos = false;
    }
    if (nonneg == nonpos)
      throw internal_error(name() + ": mixed-sign simple coordinates");
    if (nonneg) positive.push_back(r);
  }
  if (2 * positive.size() != roots.size())
    throw internal_error(name() + ": positive set is not half the system");

  // Indecomposability = connected Dynkin graph.
  std::vector<int> comp(simple.size(), -1);
  std::vector<size_t> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    size_t i = stack.back();
    stack.pop_back();
    for (size_t j = 0; j < simple.size(); ++j)
      if (comp[j] < 0 && !dot(simple[i], simple[j]).is_zero()) {
        comp[j] = 0;
        stack.push_back(j);
      }
  }
  for (int c : comp)
    if (c < 0) throw internal_error(name() + ": decomposable simple basis");

  // Unique positive root whose difference with every positive root has
  // non-negative simple coordinates.
  const QVec* best = nullptr;
  for (const auto& cand : positive) {
    bool dominates = true;
    for (const auto& other : positive) {
      QVec diff = vsub(coords_.at(cand), coords_.at(other));
      for (const auto& x : diff)
        if (x.sign() < 0) {
          dominates = false;
          break;
        }
      if (!dominates) break;
    }
    if (dominates) {
      if (best) throw internal_error(name() + ": highest root not unique");
      best = &cand;
    }
  }
  if (!best) throw internal_error(name() + ": no highest root");
  highest_ = *best;

  // Fundamental coweights via the Gram matrix of the simple basis.
  size_t n = simple.size();
  QMat gram(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) gram[i][j] = dot(simple[i], simple[j]);
  coweights_.clear();
  for (size_t i = 0; i < n; ++i) {
    QVec rhs(n);
    rhs[i] = Rat(1);
    auto c = solve(gram, rhs);
    if (!c) throw internal_error(name() + ": singular Gram matrix");
    QVec w(static_cast<size_t>(ambient));
    for (size_t k = 0; k < n; ++k) w = vadd(w, vscale((*c)[k], simple[k]));
    coweights_.push_back(std::move(w));
  }
}

const RootSystem& build_root_system(RootType type, int rank) {
  static std::map<std::pair<RootType, int>, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  if (!valid_type_rank(type, rank))
    throw input_error("invalid root-system type/rank pair " +
                      root_type_name(type, rank));

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  switch (type) {
    case RootType::A:
      rs.ambient = rank + 1;
      rs.roots = roots_a(rank);
      rs.simple = simple_a(rank);
      break;
    case RootType::B:
      rs.ambient = rank;
      rs.roots = roots_bcd(rank, true, false);
      rs.simple = simple_chain(rank);
      rs.simple.push_back(unit(rank, rank - 1));
      break;
    case RootType::C:
      rs.ambient = rank;
      rs.roots = roots_bcd(rank, false, true);
      rs.simple = simple_chain(rank);
      rs.simple.push_back(unit(rank, rank - 1, Rat(2)));
      break;
    case RootType::D: {
      rs.ambient = rank;
      rs.roots = roots_bcd(rank, false, false);
      rs.simple = simple_chain(rank);
      QVec v(static_cast<size_t>(rank));
      v[static_cast<size_t>(rank) - 2] = Rat(1);
      v[static_cast<size_t>(rank) - 1] = Rat(1);
      rs.simple.push_back(std::move(v));
      break;
    }
    case RootType::E: {
      rs.ambient = 8;
      std::vector<QVec> e8 = roots_e8();
      if (rank == 8) {
        rs.roots = e8;
      } else if (rank == 7) {
        // Roots orthogonal to e7 + e8.
        QVec w(8);
        w[6] = Rat(1);
        w[7] = Rat(1);
        for (const auto& r : e8)
          if (dot(r, w).is_zero()) rs.roots.push_back(r);
      } else {
        // Roots orthogonal to e7 + e8 and to e6 + e8.
        QVec w1(8), w2(8);
        w1[6] = Rat(1);
        w1[7] = Rat(1);
        w2[5] = Rat(1);
        w2[7] = Rat(1);
        for (const auto& r : e8)
          if (dot(r, w1).is_zero() && dot(r, w2).is_zero())
            rs.roots.push_back(r);
      }
      QVec a1(8);
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      for (int i = 1; i <= 6; ++i) a1[static_cast<size_t>(i)] = Rat(-1, 2);
      QVec a2(8);
      a2[0] = Rat(1);
      a2[1] = Rat(1);
      rs.simple = {a1, a2};
      for (int i = 0; i + 1 < rank - 1; ++i) {
        QVec v(8);
        v[static_cast<size_t>(i)] = Rat(-1);
        v[static_cast<size_t>(i) + 1] = Rat(1);
        rs.simple.push_back(std::move(v));
      }
      break;
    }
    case RootType::F: {
      rs.ambient = 4;
      rs.roots = roots_f4();
      QVec a4(4, Rat(-1, 2));
      a4[0] = Rat(1, 2);
      rs.simple = {vsub(unit(4, 1), unit(4, 2)), vsub(unit(4, 2), unit(4, 3)),
                   unit(4, 3), a4};
      break;
    }
    case RootType::G: {
      rs.ambient = 3;
      rs.roots = roots_g2();
      QVec a2(3);
      a2[0] = Rat(-2);
      a2[1] = Rat(1);
      a2[2] = Rat(1);
      rs.simple = {vsub(unit(3, 0), unit(3, 1)), a2};
      break;
    }
    case RootType::BC:
      rs.ambient = rank;
      rs.roots = roots_bcd(rank, true, true);
      rs.simple = simple_chain(rank);
      rs.simple.push_back(unit(rank, rank - 1));
      break;
  }
  rs.finalize();
  return cache.emplace(key, std::move(rs)).first->second;
}

std::vector<const RootSystem*> systems_up_to_rank(int cap) {
  if (cap < 1 || cap > 4)
    throw precondition_error(
        "exhaustive enumeration is supported for rank caps 1..4");
  std::vector<const RootSystem*> out;
  auto add = [&](RootType t, int r) {
    if (r <= cap) out.push_back(&build_root_system(t, r));
  };
  for (int r = 1; r <= 4; ++r) add(RootType::A, r);
  for (int r = 2; r <= 4; ++r) add(RootType::B, r);
  for (int r = 2; r <= 4; ++r) add(RootType::C, r);
  add(RootType::D, 4);  // D2 decomposable, D3 = A3
  add(RootType::G, 2);
  add(RootType::F, 4);
  for (int r = 1; r <= 4; ++r) add(RootType::BC, r);
  return out;
}

bool dominance_check(const RootSystem& rs, const QVec& a) {
  for (const auto& s : rs.simple) {
    int sg = dot(s, a).sign();
    if (sg == 0)
      throw precondition_error(
          "chamber vector lies on the wall of a simple root");
    if (sg < 0)
      throw precondition_error(
          "chamber vector is outside the positive Weyl chamber");
  }
  const QVec& beta = rs.highest_root();
  Rat beta_val = dot(beta, a);
  for (const auto& alpha : rs.positive) {
    if (alpha == beta) continue;
    if (!(dot(alpha, a) < beta_val)) return false;
  }
  return true;
}

bool sum_rule_check(const RootSystem& rs, const QVec& g1, const QVec& g2) {
  if (!rs.contains(g1) || !rs.contains(g2))
    throw precondition_error("sum_rule_check arguments must be roots");
  QVec sum = vadd(g1, g2);
  if (vzero(sum))
    throw precondition_error("sum_rule_check: pair sums to zero");
  if (dot(g1, g2).sign() >= 0) return true;  // hypothesis empty
  return rs.contains(sum);
}

bool cover_check(const RootSystem& rs, const QVec& x, const QVec& h) {
  if (vzero(x) || rs.orthogonal_to_span(x))
    throw precondition_error("cover_check: X vanishes on the root span");
  if (vzero(h) || rs.orthogonal_to_span(h))
    throw precondition_error("cover_check: H vanishes on the root span");
  for (const auto& r : rs.roots)
    if (!dot(r, x).is_zero() && !dot(r, h).is_zero()) return false;
  return true;
}

std::pair<RootType, int> canonical_type(RootType t, int rank) {
  if ((t == RootType::B || t == RootType::C) && rank == 1)
    return {RootType::A, 1};
  if (t == RootType::C && rank == 2) return {RootType::B, 2};
  if (t == RootType::D && rank == 3) return {RootType::A, 3};
  return {t, rank};
}

Rat squared_length(const QVec& v, const QMat* dual_metric) {
  if (!dual_metric) return dot(v, v);
  QVec mv(v.size());
  for (size_t i = 0; i < v.size(); ++i) mv[i] = dot((*dual_metric)[i], v);
  return dot(v, mv);
}

Classification classify_root_vectors(const std::vector<QVec>& vectors,
                                     const QMat* dual_metric) {
  if (vectors.empty())
    throw precondition_error("classify_root_vectors: empty set");
  std::set<QVec, LexLess> set(vectors.begin(), vectors.end());
  for (const auto& v : set) {
    if (vzero(v)) throw internal_error("classification: zero vector");
    if (!set.count(vneg(v)))
      throw internal_error("classification: set not negation-closed");
  }
  Classification cls;
  cls.rank = span_rank(std::vector<QVec>(set.begin(), set.end()));

  std::map<Rat, int> by_len;
  Rat min_len;
  bool first = true;
  for (const auto& v : set) {
    Rat l = squared_length(v, dual_metric);
    ++by_len[l];
    if (first || l < min_len) min_len = l;
    first = false;
  }
  for (const auto& [len, count] : by_len)
    cls.classes.push_back({len / min_len, count});

  cls.reduced = true;
  for (const auto& v : set)
    if (set.count(vscale(Rat(2), v))) cls.reduced = false;

  int total = static_cast<int>(set.size());
  int r = cls.rank;
  auto fail = [&]() -> Classification& {
    throw internal_error("unrecognized root-system shape: rank " +
                         std::to_string(r) + ", " + std::to_string(total) +
                         " roots, " + std::to_string(cls.classes.size()) +
                         " length classes");
  };

  if (!cls.reduced) {
    if (total != 2 * r * r + 2 * r) fail();
    cls.type = RootType::BC;
    return cls;
  }
  if (cls.classes.size() == 1) {
    if (total == r * (r + 1)) {
      cls.type = RootType::A;
    } else if (r >= 4 && total == 2 * r * (r - 1)) {
      cls.type = RootType::D;
    } else if ((r == 6 && total == 72) || (r == 7 && total == 126) ||
               (r == 8 && total == 240)) {
      cls.type = RootType::E;
    } else {
      fail();
    }
    return cls;
  }
  if (cls.classes.size() == 2 && cls.classes[1].ratio == Rat(3)) {
    if (r != 2 || total != 12) fail();
    cls.type = RootType::G;
    return cls;
  }
  if (cls.classes.size() == 2 && cls.classes[1].ratio == Rat(2)) {
    if (r == 4 && total == 48) {
      cls.type = RootType::F;
      return cls;
    }
    if (total != 2 * r * r) fail();
    int short_count = cls.classes[0].root_count;
    if (r == 2) {
      cls.type = RootType::B;  // B2 and C2 coincide; B is the canonical label
    } else if (short_count == 2 * r) {
      cls.type = RootType::B;
    } else if (short_count == 2 * r * (r - 1)) {
      cls.type = RootType::C;
    } else {
      fail();
    }
    return cls;
  }
  fail();
  return cls;  // unreachable
}

}  // namespace ckf
