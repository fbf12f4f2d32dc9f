#include "ckf/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace ckf {

namespace {

CMat unit_matrix(int n, int i, int j, CRat c) {
  CMat m(n);
  m.at(i, j) = c;
  return m;
}

const CRat I_UNIT{Rat(0), Rat(1)};

// Basis of u(p,q) = { A : A* S + S A = 0 }, S = diag(I_p, -I_q).
std::vector<CMat> u_pq_basis(int p, int q) {
  int n = p + q;
  auto eta = [&](int i) { return i < p ? 1 : -1; };
  std::vector<CMat> b;
  for (int k = 0; k < n; ++k) b.push_back(unit_matrix(n, k, k, I_UNIT));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat s(eta(i) * eta(j));
      CMat a(n);
      a.at(i, j) = CRat(Rat(1));
      a.at(j, i) = CRat(-s);
      b.push_back(a);
      CMat c(n);
      c.at(i, j) = I_UNIT;
      c.at(j, i) = CRat(Rat(0), s);
      b.push_back(c);
    }
  return b;
}

CMat diag_signature(int p, int q) {
  CMat s(p + q);
  for (int i = 0; i < p + q; ++i)
    s.at(i, i) = CRat(Rat(i < p ? 1 : -1));
  return s;
}

}  // namespace

CMat MatrixModel::theta(const CMat& x) const {
  if (theta_is_neg_transpose) {
    CMat t = x.conj_transpose();
    return t.scaled(CRat(Rat(-1)));
  }
  return involution_conjugator * x * involution_conjugator;
}

MatrixModel realize(Family f, int p, int q) {
  MatrixModel m;
  m.family = f;
  m.p = p;
  m.q = q;
  switch (f) {
    case Family::su_pq: {
      if (p < 1 || q < p || p + q > 8)
        throw input_error("realize su(p,q): needs 1 <= p <= q, p+q <= 8");
      int n = p + q;
      m.name = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
      m.ambient = n;
      auto eta = [&](int i) { return i < p ? 1 : -1; };
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Rat s(eta(i) * eta(j));
          CMat a(n);
          a.at(i, j) = CRat(Rat(1));
          a.at(j, i) = CRat(-s);
          m.basis.push_back(a);
          CMat c(n);
          c.at(i, j) = I_UNIT;
          c.at(j, i) = CRat(Rat(0), s);
          m.basis.push_back(c);
        }
      for (int k = 0; k + 1 < n; ++k) {
        CMat d(n);
        d.at(k, k) = I_UNIT;
        d.at(k + 1, k + 1) = CRat(Rat(0), Rat(-1));
        m.basis.push_back(d);
      }
      m.involution_conjugator = diag_signature(p, q);
      for (int i = 0; i < p; ++i) {
        CMat a(n);
        a.at(i, p + i) = CRat(Rat(1));
        a.at(p + i, i) = CRat(Rat(1));
        m.a_candidates.push_back(a);
      }
      break;
    }
    case Family::so_pq: {
      if (p < 1 || q < p || p + q > 8 || p + q < 3)
        throw input_error("realize so(p,q): needs 1 <= p <= q, 3 <= p+q <= 8");
      int n = p + q;
      m.name = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
      m.ambient = n;
      auto eta = [&](int i) { return i < p ? 1 : -1; };
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          CMat a(n);
          a.at(i, j) = CRat(Rat(1));
          a.at(j, i) = CRat(Rat(-eta(i) * eta(j)));
          m.basis.push_back(a);
        }
      m.involution_conjugator = diag_signature(p, q);
      for (int i = 0; i < p; ++i) {
        CMat a(n);
        a.at(i, p + i) = CRat(Rat(1));
        a.at(p + i, i) = CRat(Rat(1));
        m.a_candidates.push_back(a);
      }
      break;
    }
    case Family::sl_R: {
      if (p < 2 || p > 8) throw input_error("realize sl(n,R): needs 2 <= n <= 8");
      int n = p;
      m.name = "sl(" + std::to_string(n) + ",R)";
      m.ambient = n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) m.basis.push_back(unit_matrix(n, i, j, CRat(Rat(1))));
      for (int k = 0; k + 1 < n; ++k) {
        CMat d(n);
        d.at(k, k) = CRat(Rat(1));
        d.at(k + 1, k + 1) = CRat(Rat(-1));
        m.basis.push_back(d);
      }
      m.theta_is_neg_transpose = true;
      for (int k = 0; k + 1 < n; ++k) {
        CMat d(n);
        d.at(k, k) = CRat(Rat(1));
        d.at(k + 1, k + 1) = CRat(Rat(-1));
        m.a_candidates.push_back(d);
      }
      break;
    }
    case Family::sp_R: {
      if (p < 1 || 2 * p > 8)
        throw input_error("realize sp(n,R): needs 1 <= n <= 4");
      int n = p;
      m.name = "sp(" + std::to_string(n) + ",R)";
      m.ambient = 2 * n;
      // Blocks [[A, B], [C, -A^T]] with B, C symmetric.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          CMat a(2 * n);
          a.at(i, j) = CRat(Rat(1));
          a.at(n + j, n + i) = CRat(Rat(-1));
          m.basis.push_back(a);
        }
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          CMat b(2 * n);
          b.at(i, n + j) = CRat(Rat(1));
          b.at(j, n + i) = CRat(Rat(1));
          m.basis.push_back(b);
          CMat c(2 * n);
          c.at(n + i, j) = CRat(Rat(1));
          c.at(n + j, i) = CRat(Rat(1));
          m.basis.push_back(c);
        }
      m.theta_is_neg_transpose = true;
      for (int k = 0; k < n; ++k) {
        CMat d(2 * n);
        d.at(k, k) = CRat(Rat(1));
        d.at(n + k, n + k) = CRat(Rat(-1));
        m.a_candidates.push_back(d);
      }
      break;
    }
    case Family::sp_pq: {
      if (p < 1 || q < p || 2 * (p + q) > 8)
        throw input_error("realize sp(p,q): needs 1 <= p <= q, p+q <= 4");
      int n = p + q;
      m.name = "sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
      m.ambient = 2 * n;
      // Quaternionic matrices A + Bj as [[A, B], [-conj B, conj A]];
      // A in u(p,q), S B symmetric for S = diag(I_p, -I_q).
      auto embed = [&](const CMat& a, const CMat& b) {
        CMat x(2 * n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            x.at(i, j) = a.at(i, j);
            x.at(i, n + j) = b.at(i, j);
            x.at(n + i, j) = -b.at(i, j).conj();
            x.at(n + i, n + j) = a.at(i, j).conj();
          }
        return x;
      };
      CMat zero(n);
      for (const auto& a : u_pq_basis(p, q)) m.basis.push_back(embed(a, zero));
      auto eta = [&](int i) { return Rat(i < p ? 1 : -1); };
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          for (int re : {1, 0}) {
            // B = S C with C symmetric, i.e. SB symmetric.
            CRat c = re ? CRat(Rat(1)) : I_UNIT;
            CMat b(n);
            b.at(i, j) = b.at(i, j) + c * CRat(eta(i));
            b.at(j, i) = b.at(j, i) + c * CRat(eta(j));
            if (i == j) b.at(i, i) = c * CRat(eta(i));
            m.basis.push_back(embed(zero, b));
          }
      CMat shat(2 * n);
      for (int i = 0; i < n; ++i) {
        shat.at(i, i) = CRat(eta(i));
        shat.at(n + i, n + i) = CRat(eta(i));
      }
      m.involution_conjugator = shat;
      for (int i = 0; i < p; ++i) {
        CMat a(n);
        a.at(i, p + i) = CRat(Rat(1));
        a.at(p + i, i) = CRat(Rat(1));
        m.a_candidates.push_back(embed(a, zero));
      }
      break;
    }
    default:
      throw input_error("realize: unsupported family " + family_str(f));
  }
  return m;
}

MatrixModel realize_by_name(const std::string& name) {
  FactorName fn = parse_factor_name(name);
  return realize(fn.family, fn.p, fn.q);
}

std::vector<std::string> audit_model_names() {
  return {"su(1,2)", "su(2,2)", "so(2,3)", "sl(3,R)", "sp(2,R)", "sp(1,1)"};
}

namespace {

// Coordinates of x in the model basis; the basis is independent by
// construction, so failure means x is outside the algebra.
QVec model_coords(const MatrixModel& m, const CMat& x,
                  const QMat& flat_columns) {
  auto sol = solve(flat_columns, x.flatten());
  if (!sol)
    throw internal_error(m.name + ": matrix outside the spanned algebra");
  return *sol;
}

QMat basis_columns(const MatrixModel& m) {
  size_t rows = m.basis[0].flatten().size();
  QMat cols(rows, QVec(m.basis.size()));
  for (size_t j = 0; j < m.basis.size(); ++j) {
    QVec f = m.basis[j].flatten();
    for (size_t i = 0; i < rows; ++i) cols[i][j] = f[i];
  }
  return cols;
}

CMat from_coords(const MatrixModel& m, const QVec& c) {
  CMat x(m.ambient);
  for (size_t j = 0; j < m.basis.size(); ++j) {
    if (c[j].is_zero()) continue;
    x = x + m.basis[j].scaled(CRat(c[j]));
  }
  return x;
}

}  // namespace

CartanSplit cartan_split(MatrixModel& m) {
  if (m.basis.empty()) throw precondition_error("empty matrix model");
  QMat cols = basis_columns(m);
  size_t dim = m.basis.size();
  // Check linear independence of the basis.
  if (mat_rank(cols) != static_cast<int>(dim))
    throw internal_error(m.name + ": basis is linearly dependent");

  QMat theta_mat(dim, QVec(dim));
  for (size_t j = 0; j < dim; ++j) {
    QVec c = model_coords(m, m.theta(m.basis[j]), cols);
    for (size_t i = 0; i < dim; ++i) theta_mat[i][j] = c[i];
  }
  // Bracket closure spot check on theta's algebra-hood is covered by the
  // coordinate solves above; they throw if any image leaves the span.
  QMat t_minus = theta_mat, t_plus = theta_mat;
  for (size_t i = 0; i < dim; ++i) {
    t_minus[i][i] -= Rat(1);
    t_plus[i][i] += Rat(1);
  }
  CartanSplit cs;
  cs.dim_k = static_cast<int>(nullspace(t_minus).size());
  cs.dim_p = static_cast<int>(nullspace(t_plus).size());
  if (cs.dim_k + cs.dim_p != static_cast<int>(dim))
    throw internal_error(m.name + ": involution is not a split involution");
  m.theta_fixed_dim = cs.dim_k;
  return cs;
}

namespace {

// Eigenvalue scan grid: integers and half-integers; completeness is proved
// afterwards by dimension count, so a miss cannot pass silently.
std::vector<Rat> eigen_candidates() {
  std::vector<Rat> c;
  for (int z = -16; z <= 16; ++z) c.push_back(Rat(z, 2));
  return c;
}

struct Subspace {
  std::vector<QVec> basis;  // coordinate vectors in g
  QVec label;               // eigenvalues collected so far
};

}  // namespace

OracleResult restricted_spectrum(const MatrixModel& model) {
  MatrixModel m = model;
  OracleResult out;
  CartanSplit cs = cartan_split(m);
  out.dim_g = static_cast<int>(m.basis.size());
  out.dim_k = cs.dim_k;
  out.dim_p = cs.dim_p;

  QMat cols = basis_columns(m);
  size_t dim = m.basis.size();

  // p as coordinate subspace.
  QMat theta_mat(dim, QVec(dim));
  for (size_t j = 0; j < dim; ++j) {
    QVec c = model_coords(m, m.theta(m.basis[j]), cols);
    for (size_t i = 0; i < dim; ++i) theta_mat[i][j] = c[i];
  }
  QMat t_plus = theta_mat;
  for (size_t i = 0; i < dim; ++i) t_plus[i][i] += Rat(1);
  std::vector<QVec> p_basis = nullspace(t_plus);

  // Greedy maximal abelian subspace from the documented candidates,
  // then certify maximality against the centralizer of a in p.
  std::vector<CMat> a_mats;
  std::vector<QVec> a_coords;
  auto try_add = [&](const CMat& cand, const QVec& coords) {
    for (const auto& prev : a_mats)
      if (!bracket(prev, cand).is_zero()) return;
    std::vector<QVec> probe = a_coords;
    probe.push_back(coords);
    if (span_rank(probe) != static_cast<int>(probe.size())) return;
    a_mats.push_back(cand);
    a_coords.push_back(coords);
  };
  for (const auto& cand : m.a_candidates)
    try_add(cand, model_coords(m, cand, cols));
  if (a_mats.empty() && !p_basis.empty())
    try_add(from_coords(m, p_basis[0]), p_basis[0]);
  for (;;) {
    if (a_mats.empty()) break;  // compact case: p = 0
    // z_p(a): vectors of p killed by every ad(a_i).
    QMat sys(dim * a_mats.size(), QVec(p_basis.size()));
    for (size_t k = 0; k < a_mats.size(); ++k)
      for (size_t j = 0; j < p_basis.size(); ++j) {
        QVec br = model_coords(
            m, bracket(a_mats[k], from_coords(m, p_basis[j])), cols);
        for (size_t r = 0; r < dim; ++r) sys[k * dim + r][j] = br[r];
      }
    std::vector<QVec> z_in_p = nullspace(sys);
    if (static_cast<int>(z_in_p.size()) == static_cast<int>(a_mats.size()))
      break;  // z_p(a) = a: maximal
    // Extend by any centralizer element outside span(a).
    bool extended = false;
    for (const auto& zc : z_in_p) {
      QVec g_coords(dim);
      for (size_t j = 0; j < p_basis.size(); ++j)
        for (size_t r = 0; r < dim; ++r)
          g_coords[r] += zc[j] * p_basis[j][r];
      std::vector<QVec> probe = a_coords;
      probe.push_back(g_coords);
      if (span_rank(probe) == static_cast<int>(probe.size())) {
        try_add(from_coords(m, g_coords), g_coords);
        extended = true;
        break;
      }
    }
    if (!extended)
      throw internal_error(m.name + ": maximal abelian search stalled");
  }
  out.real_rank = static_cast<int>(a_mats.size());

  // Adjoint matrices of the a-basis.
  std::vector<QMat> ad_mats;
  for (const auto& am : a_mats) {
    QMat ad(dim, QVec(dim));
    for (size_t j = 0; j < dim; ++j) {
      QVec c = model_coords(m, bracket(am, m.basis[j]), cols);
      for (size_t i = 0; i < dim; ++i) ad[i][j] = c[i];
    }
    ad_mats.push_back(std::move(ad));
  }

  // Joint eigenspace refinement, one generator at a time.
  std::vector<Subspace> spaces(1);
  for (size_t i = 0; i < dim; ++i) {
    QVec e(dim);
    e[i] = Rat(1);
    spaces[0].basis.push_back(std::move(e));
  }
  const std::vector<Rat> grid = eigen_candidates();
  for (const auto& ad : ad_mats) {
    std::vector<Subspace> next;
    for (auto& sp : spaces) {
      size_t sd = sp.basis.size();
      // ad restricted to the subspace (consistent because a is abelian).
      QMat restr(sd, QVec(sd));
      for (size_t j = 0; j < sd; ++j) {
        QVec img(dim);
        for (size_t r = 0; r < dim; ++r) {
          Rat s;
          for (size_t c2 = 0; c2 < dim; ++c2) s += ad[r][c2] * sp.basis[j][c2];
          img[r] = s;
        }
        auto coords = coordinates_in(sp.basis, img);
        if (!coords)
          throw internal_error(m.name + ": adjoint does not preserve the "
                                        "joint eigenspace");
        for (size_t i2 = 0; i2 < sd; ++i2) restr[i2][j] = (*coords)[i2];
      }
      size_t found = 0;
      for (const Rat& lam : grid) {
        QMat shifted = restr;
        for (size_t i2 = 0; i2 < sd; ++i2) shifted[i2][i2] -= lam;
        std::vector<QVec> ker = nullspace(shifted);
        if (ker.empty()) continue;
        Subspace child;
        child.label = sp.label;
        child.label.push_back(lam);
        for (const auto& kv : ker) {
          QVec v(dim);
          for (size_t j = 0; j < sd; ++j)
            for (size_t r = 0; r < dim; ++r) v[r] += kv[j] * sp.basis[j][r];
          child.basis.push_back(std::move(v));
        }
        found += child.basis.size();
        next.push_back(std::move(child));
      }
      if (found != sd)
        throw internal_error(
            m.name + ": eigenvalue scan incomplete; either the model or the "
                     "candidate grid is wrong");
    }
    spaces = std::move(next);
  }

  for (const auto& sp : spaces) {
    if (vzero(sp.label)) {
      out.m0_dim = static_cast<int>(sp.basis.size()) - out.real_rank;
      continue;
    }
    out.sigma_vectors.push_back(sp.label);
    out.mult[sp.label] = static_cast<int>(sp.basis.size());
  }
  std::sort(out.sigma_vectors.begin(), out.sigma_vectors.end(), LexLess{});
  if (out.m0_dim < 0)
    throw internal_error(m.name + ": zero eigenspace smaller than a");

  // Iwasawa bookkeeping, re-derived from the spectrum.
  long pos_mult = 0;
  for (const auto& v : out.sigma_vectors)
    if (lex_sign(v) > 0) pos_mult += out.mult.at(v);
  if (out.dim_p != out.real_rank + pos_mult)
    throw internal_error(m.name + ": dim p != dim a + sum of positive "
                                  "multiplicities");
  out.cls = classify_root_vectors(out.sigma_vectors);
  return out;
}

bool oracle_agrees_with_catalog(const OracleResult& o,
                                const RealFormDescriptor& rf,
                                std::string* why) {
  if (o.dim_p != d_value(rf)) {
    if (why)
      *why = "d: oracle " + std::to_string(o.dim_p) + ", catalog " +
             std::to_string(d_value(rf));
    return false;
  }
  return restricted_classes_agree(o.cls, o.sigma_vectors, o.mult, o.real_rank,
                                  rf, why);
}

}  // namespace ckf
