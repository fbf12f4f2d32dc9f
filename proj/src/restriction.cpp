#include "ckf/restriction.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ckf {

BigRoot sigma_image(const BigRoot& r) { return {vneg(r.t_part), r.a_part}; }
BigRoot negate(const BigRoot& r) { return {vneg(r.t_part), vneg(r.a_part)}; }

bool bigroot_positive(const BigRoot& r) {
  int s = lex_sign(r.a_part);
  if (s != 0) return s > 0;
  return lex_sign(r.t_part) > 0;
}

void validate_model(const BigRootModel& m) {
  if (m.roots.empty())
    throw internal_error("big-root model '" + m.name + "' is empty");
  std::set<BigRoot, BigRootLess> set(m.roots.begin(), m.roots.end());
  if (set.size() != m.roots.size())
    throw internal_error("big-root model '" + m.name + "' has duplicates");
  for (const auto& r : m.roots) {
    if (static_cast<int>(r.t_part.size()) != m.t_dim ||
        static_cast<int>(r.a_part.size()) != m.a_dim)
      throw internal_error("big-root model '" + m.name +
                           "': coordinate dimension mismatch");
    if (vzero(r.t_part) && vzero(r.a_part))
      throw internal_error("big-root model '" + m.name + "': zero root");
    if (!set.count(negate(r)))
      throw internal_error("big-root model '" + m.name +
                           "': not closed under negation");
    if (!set.count(sigma_image(r)))
      throw internal_error("big-root model '" + m.name +
                           "': not closed under conjugation");
  }
}

RestrictedSigma restrict_model(const BigRootModel& m) {
  if (m.roots.empty())
    throw precondition_error("restrict_model: empty big-root set");
  RestrictedSigma out;
  for (const auto& r : m.roots) {
    if (vzero(r.a_part)) {
      ++out.delta_m_count;
      continue;
    }
    ++out.mult[r.a_part];
  }
  for (const auto& [v, k] : out.mult) out.vectors.push_back(v);
  out.real_rank = span_rank(out.vectors);
  out.cls = classify_root_vectors(out.vectors);
  return out;
}

RootPartition partition_by(const BigRootModel& m, const QVec& x) {
  if (static_cast<int>(x.size()) != m.t_dim)
    throw input_error("partition_by: X has dimension " +
                      std::to_string(x.size()) + ", model t-dimension is " +
                      std::to_string(m.t_dim));
  RootPartition p;
  p.x = x;
  p.degenerate = vzero(x);
  for (const auto& r : m.roots) {
    if (!bigroot_positive(r)) continue;
    if (vzero(r.a_part)) {
      p.delta_m.push_back(r);
      continue;
    }
    int s = p.degenerate ? 0 : dot(r.t_part, x).sign();
    if (s > 0)
      p.delta_p.push_back(r);
    else if (s < 0)
      p.delta_n.push_back(r);
    else
      p.delta_0.push_back(r);
  }
  return p;
}

int z_dim(const RootPartition& p) {
  return static_cast<int>(p.delta_p.size() + p.delta_n.size());
}

bool sigma_swap_check(const RootPartition& p) {
  if (p.delta_p.size() != p.delta_n.size()) return false;
  std::set<BigRoot, BigRootLess> n_set(p.delta_n.begin(), p.delta_n.end());
  for (const auto& r : p.delta_p)
    if (!n_set.count(sigma_image(r))) return false;
  return true;
}

namespace {

QVec tvec(int dim) { return QVec(static_cast<size_t>(dim)); }

struct Weight {
  QVec t, a;
};

std::vector<BigRoot> difference_roots(const std::vector<Weight>& w) {
  std::vector<BigRoot> roots;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j) {
      if (i == j) continue;
      roots.push_back({vsub(w[i].t, w[j].t), vsub(w[i].a, w[j].a)});
    }
  return roots;
}

// +-w_a +- w_b (a < b) and +-2 w_a: type-C roots from a weight list.
std::vector<BigRoot> symplectic_roots(const std::vector<Weight>& w) {
  std::vector<BigRoot> roots;
  auto push = [&](const QVec& t, const QVec& a) {
    roots.push_back({t, a});
    roots.push_back({vneg(t), vneg(a)});
  };
  for (size_t i = 0; i < w.size(); ++i) {
    push(vscale(Rat(2), w[i].t), vscale(Rat(2), w[i].a));
    for (size_t j = i + 1; j < w.size(); ++j) {
      push(vadd(w[i].t, w[j].t), vadd(w[i].a, w[j].a));
      push(vsub(w[i].t, w[j].t), vsub(w[i].a, w[j].a));
    }
  }
  return roots;
}

// +-g_i +- g_j (i < j), plus +-g_i when `odd`: type-B/D roots.
std::vector<BigRoot> orthogonal_roots(const std::vector<Weight>& w,
                                      bool odd) {
  std::vector<BigRoot> roots;
  auto push = [&](const QVec& t, const QVec& a) {
    roots.push_back({t, a});
    roots.push_back({vneg(t), vneg(a)});
  };
  for (size_t i = 0; i < w.size(); ++i) {
    if (odd) push(w[i].t, w[i].a);
    for (size_t j = i + 1; j < w.size(); ++j) {
      push(vadd(w[i].t, w[j].t), vadd(w[i].a, w[j].a));
      push(vsub(w[i].t, w[j].t), vsub(w[i].a, w[j].a));
    }
  }
  return roots;
}

void finish(BigRootModel& m) {
  std::sort(m.roots.begin(), m.roots.end(), BigRootLess{});
  validate_model(m);
}

}  // namespace

BigRootModel bigroots_su(int p, int q) {
  if (p < 1 || p > q || p + q > 6 || (p == 1 && q == 1))
    throw input_error("bigroots_su: unsupported parameters");
  int n = p + q;
  int t_dim = q - 1;
  BigRootModel m;
  m.name = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  m.t_dim = t_dim;
  m.a_dim = p;

  // Functionals of the diagonal t-parameters (s_1..s_p, r_1..r_{q-p}) on the
  // free coordinates; the trace-zero constraint eliminates the last one.
  std::vector<QVec> s_fun(static_cast<size_t>(p));
  std::vector<QVec> r_fun(static_cast<size_t>(q - p));
  if (p < q) {
    for (int i = 0; i < p; ++i) {
      s_fun[static_cast<size_t>(i)] = tvec(t_dim);
      s_fun[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
    }
    for (int mm = 0; mm + 1 < q - p; ++mm) {
      r_fun[static_cast<size_t>(mm)] = tvec(t_dim);
      r_fun[static_cast<size_t>(mm)][static_cast<size_t>(p + mm)] = Rat(1);
    }
    QVec last = tvec(t_dim);
    for (int i = 0; i < p; ++i) last[static_cast<size_t>(i)] = Rat(-2);
    for (int mm = 0; mm + 1 < q - p; ++mm)
      last[static_cast<size_t>(p + mm)] = Rat(-1);
    r_fun[static_cast<size_t>(q - p - 1)] = std::move(last);
  } else {
    for (int i = 0; i + 1 < p; ++i) {
      s_fun[static_cast<size_t>(i)] = tvec(t_dim);
      s_fun[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
    }
    s_fun[static_cast<size_t>(p) - 1] = QVec(static_cast<size_t>(t_dim), Rat(-1));
  }

  std::vector<Weight> w(static_cast<size_t>(n));
  for (int i = 0; i < p; ++i) {
    QVec a = QVec(static_cast<size_t>(p));
    a[static_cast<size_t>(i)] = Rat(1);
    w[static_cast<size_t>(i)] = {s_fun[static_cast<size_t>(i)], a};
    w[static_cast<size_t>(n - 1 - i)] = {s_fun[static_cast<size_t>(i)],
                                         vneg(a)};
  }
  for (int mm = 0; mm < q - p; ++mm)
    w[static_cast<size_t>(p + mm)] = {r_fun[static_cast<size_t>(mm)],
                                      QVec(static_cast<size_t>(p))};
  m.roots = difference_roots(w);
  finish(m);
  return m;
}

BigRootModel bigroots_so(int p, int q) {
  if (p < 1 || p > q || p + q > 7 || (p + q) < 3 || (p == q && p == 1) ||
      (p == 2 && q == 2))
    throw input_error("bigroots_so: unsupported parameters");
  int n = p + q;
  int ell = n / 2;
  int t_dim = ell - p;
  BigRootModel m;
  m.name = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
  m.t_dim = t_dim;
  m.a_dim = p;
  std::vector<Weight> w;
  for (int i = 0; i < p; ++i) {
    QVec a(static_cast<size_t>(p));
    a[static_cast<size_t>(i)] = Rat(1);
    w.push_back({tvec(t_dim), a});
  }
  for (int mm = 0; mm < t_dim; ++mm) {
    QVec t = tvec(t_dim);
    t[static_cast<size_t>(mm)] = Rat(1);
    w.push_back({t, QVec(static_cast<size_t>(p))});
  }
  m.roots = orthogonal_roots(w, n % 2 == 1);
  finish(m);
  return m;
}

BigRootModel bigroots_sl_r(int n) {
  if (n < 2 || n > 5) throw input_error("bigroots_sl_r: unsupported size");
  BigRootModel m;
  m.name = "sl(" + std::to_string(n) + ",R)";
  m.t_dim = 0;
  m.a_dim = n;
  std::vector<Weight> w;
  for (int i = 0; i < n; ++i) {
    QVec a(static_cast<size_t>(n));
    a[static_cast<size_t>(i)] = Rat(1);
    w.push_back({QVec{}, a});
  }
  m.roots = difference_roots(w);
  finish(m);
  return m;
}

BigRootModel bigroots_sp_r(int n) {
  if (n < 1 || n > 4) throw input_error("bigroots_sp_r: unsupported size");
  BigRootModel m;
  m.name = "sp(" + std::to_string(n) + ",R)";
  m.t_dim = 0;
  m.a_dim = n;
  std::vector<Weight> w;
  for (int i = 0; i < n; ++i) {
    QVec a(static_cast<size_t>(n));
    a[static_cast<size_t>(i)] = Rat(1);
    w.push_back({QVec{}, a});
  }
  m.roots = symplectic_roots(w);
  finish(m);
  return m;
}

BigRootModel bigroots_sp(int p, int q) {
  if (p < 1 || p > q || p + q > 4)
    throw input_error("bigroots_sp: unsupported parameters");
  // Two complex coordinates per hyperbolic pair; their half-difference spans
  // the sp(1) factor of m_0 attached to that pair.
  BigRootModel m;
  m.name = "sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
  m.t_dim = q;
  m.a_dim = p;
  std::vector<Weight> w;
  for (int i = 0; i < p; ++i) {
    QVec a(static_cast<size_t>(p));
    a[static_cast<size_t>(i)] = Rat(1);
    QVec u = tvec(m.t_dim);
    u[static_cast<size_t>(i)] = Rat(1);
    w.push_back({u, a});
    w.push_back({vneg(u), a});
  }
  for (int mm = 0; mm < q - p; ++mm) {
    QVec t = tvec(m.t_dim);
    t[static_cast<size_t>(p + mm)] = Rat(1);
    w.push_back({t, QVec(static_cast<size_t>(p))});
  }
  m.roots = symplectic_roots(w);
  finish(m);
  return m;
}

std::vector<std::string> shipped_bigroot_models() {
  return {"su(1,2)", "su(1,3)", "su(1,4)", "su(2,2)", "su(2,3)",
          "sl(2,R)", "sl(3,R)", "sl(4,R)", "so(2,3)", "so(2,4)",
          "so(2,5)", "sp(2,R)", "sp(1,1)", "sp(1,2)"};
}

BigRootModel bigroot_model_by_name(const std::string& name) {
  auto nums = [&](size_t open) {
    size_t comma = name.find(',', open);
    size_t close = name.find(')', open);
    int a = std::stoi(name.substr(open + 1, comma - open - 1));
    int b = std::stoi(name.substr(comma + 1, close - comma - 1));
    return std::make_pair(a, b);
  };
  if (name.rfind("su(", 0) == 0) {
    auto [p, q] = nums(2);
    return bigroots_su(p, q);
  }
  if (name.rfind("so(", 0) == 0) {
    auto [p, q] = nums(2);
    return bigroots_so(p, q);
  }
  if (name.rfind("sl(", 0) == 0)
    return bigroots_sl_r(std::stoi(name.substr(3, name.find(',') - 3)));
  if (name.rfind("sp(", 0) == 0) {
    size_t comma = name.find(',');
    std::string second = name.substr(comma + 1, name.find(')') - comma - 1);
    int first = std::stoi(name.substr(3, comma - 3));
    if (second == "R") return bigroots_sp_r(first);
    return bigroots_sp(first, std::stoi(second));
  }
  throw input_error("no big-root model named '" + name + "'");
}

std::string serialize_bigroots(const std::vector<BigRootModel>& models) {
  std::ostringstream os;
  os << "schema big-roots 1\n";
  for (const auto& m : models) {
    os << "model " << m.name << " t_dim " << m.t_dim << " a_dim " << m.a_dim
       << "\n";
    for (const auto& r : m.roots) {
      os << "root";
      for (const auto& x : r.t_part) os << " " << x.str();
      os << " |";
      for (const auto& x : r.a_part) os << " " << x.str();
      os << "\n";
    }
    os << "end\n";
  }
  return os.str();
}

std::vector<BigRootModel> parse_bigroots(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "schema big-roots 1")
    throw input_error("big-roots data: missing or unsupported schema header");
  std::vector<BigRootModel> models;
  BigRootModel cur;
  bool in_model = false;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    auto bad = [&](const std::string& why) {
      throw input_error("big-roots data line " + std::to_string(lineno) +
                        ": " + why);
    };
    if (tok == "model") {
      if (in_model) bad("nested model");
      std::string td, ad;
      cur = BigRootModel{};
      if (!(ls >> cur.name >> td >> cur.t_dim >> ad >> cur.a_dim) ||
          td != "t_dim" || ad != "a_dim")
        bad("malformed model header");
      in_model = true;
    } else if (tok == "root") {
      if (!in_model) bad("root outside model");
      BigRoot r;
      std::string x;
      bool after_bar = false;
      while (ls >> x) {
        if (x == "|") {
          after_bar = true;
          continue;
        }
        (after_bar ? r.a_part : r.t_part).push_back(Rat::parse(x));
      }
      if (!after_bar) bad("root line missing '|'");
      cur.roots.push_back(std::move(r));
    } else if (tok == "end") {
      if (!in_model) bad("stray end");
      validate_model(cur);
      models.push_back(std::move(cur));
      in_model = false;
    } else {
      bad("unknown directive '" + tok + "'");
    }
  }
  if (in_model) throw input_error("big-roots data: unterminated model");
  return models;
}

std::vector<BigRootModel> load_bigroots_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open big-roots file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  auto models = parse_bigroots(ss.str());
  // The file is data; the constructors are the second path. They must agree
  // exactly, table by table.
  for (const auto& m : models) {
    BigRootModel ref = bigroot_model_by_name(m.name);
    if (ref.t_dim != m.t_dim || ref.a_dim != m.a_dim ||
        !(ref.roots == m.roots))
      throw internal_error("big-root table for " + m.name +
                           " disagrees with its constructor");
  }
  return models;
}

}  // namespace ckf
