#include "ckf/linalg.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ckf {

Rat Rat::parse(std::string_view s) {
  auto parse_int = [](std::string_view t) -> std::int64_t {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
      throw std::runtime_error("Rat: bad literal '" + std::string(t) + "'");
    return v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Rat::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec vadd(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vsub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vneg(const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVec vscale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vzero(const QVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

int lex_cmp(const QVec& a, const QVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

int lex_sign(const QVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return x.sign();
  return 0;
}

std::string vec_str(const QVec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && m[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int mat_rank(QMat m) { return static_cast<int>(rref(m).size()); }

std::vector<QVec> nullspace(const QMat& m) {
  if (m.empty()) return {};
  QMat a = m;
  std::vector<int> pivots = rref(a);
  size_t cols = m[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<QVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols);
    v[f] = Rat(1);
    for (size_t k = 0; k < pivots.size(); ++k)
      v[static_cast<size_t>(pivots[k])] = -a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  if (m.empty()) return QVec{};
  size_t cols = m[0].size();
  QMat aug = m;
  for (size_t i = 0; i < m.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots = rref(aug);
  // Inconsistent iff some pivot lands in the appended column.
  for (int p : pivots)
    if (static_cast<size_t>(p) == cols) return std::nullopt;
  QVec x(cols);
  for (size_t k = 0; k < pivots.size(); ++k)
    x[static_cast<size_t>(pivots[k])] = aug[k][cols];
  return x;
}

int span_rank(const std::vector<QVec>& vs) {
  if (vs.empty()) return 0;
  return mat_rank(vs);
}

std::optional<QVec> coordinates_in(const std::vector<QVec>& basis,
                                   const QVec& v) {
  if (basis.empty()) return vzero(v) ? std::optional<QVec>(QVec{}) : std::nullopt;
  size_t dim = basis[0].size();
  QMat m(dim, QVec(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m[i][j] = basis[j][i];
  return solve(m, v);
}

bool CMat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

CMat operator+(const CMat& a, const CMat& b) {
  CMat r(a.n_);
  for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

CMat operator-(const CMat& a, const CMat& b) {
  CMat r(a.n_);
  for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

CMat operator*(const CMat& a, const CMat& b) {
  CMat r(a.n_);
  int n = a.n_;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const CRat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

CMat CMat::scaled(const CRat& c) const {
  CMat r(n_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

CMat CMat::conj_transpose() const {
  CMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i).conj();
  return r;
}

CMat CMat::transpose() const {
  CMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

CMat CMat::conj() const {
  CMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).conj();
  return r;
}

QVec CMat::flatten() const {
  QVec v;
  v.reserve(e_.size() * 2);
  for (const auto& x : e_) v.push_back(x.re);
  for (const auto& x : e_) v.push_back(x.im);
  return v;
}

CMat bracket(const CMat& a, const CMat& b) { return a * b - b * a; }

}  // namespace ckf
