#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckf/rational.hpp"

namespace ckf {

using QVec = std::vector<Rat>;

Rat dot(const QVec& a, const QVec& b);
QVec vadd(const QVec& a, const QVec& b);
QVec vsub(const QVec& a, const QVec& b);
QVec vneg(const QVec& a);
QVec vscale(const Rat& c, const QVec& a);
bool vzero(const QVec& a);

// Three-way lexicographic compare; the canonical ordering everywhere.
int lex_cmp(const QVec& a, const QVec& b);
struct LexLess {
  bool operator()(const QVec& a, const QVec& b) const {
    return lex_cmp(a, b) < 0;
  }
};
// Sign of the first nonzero coordinate (0 for the zero vector).
int lex_sign(const QVec& a);

std::string vec_str(const QVec& a);

// Dense rational matrix, stored by rows.
using QMat = std::vector<QVec>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(QMat& m);
int mat_rank(QMat m);
// Kernel of m (as a map Q^cols -> Q^rows): basis of { x : m x = 0 }.
std::vector<QVec> nullspace(const QMat& m);
// One solution of m x = b, if consistent.
std::optional<QVec> solve(const QMat& m, const QVec& b);
// Rank of the span of a set of vectors.
int span_rank(const std::vector<QVec>& vs);
// Coordinates of v in the (independent) list `basis`, if v lies in its span.
std::optional<QVec> coordinates_in(const std::vector<QVec>& basis,
                                   const QVec& v);

// Gaussian rational, enough complex arithmetic for the matrix models.
struct CRat {
  Rat re, im;
  CRat() = default;
  CRat(Rat r) : re(r) {}
  CRat(Rat r, Rat i) : re(r), im(i) {}
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  friend CRat operator+(const CRat& a, const CRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CRat operator-(const CRat& a, const CRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRat conj() const { return {re, -im}; }
  CRat operator-() const { return {-re, -im}; }
  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Square complex-rational matrix.
class CMat {
public:
  CMat() = default;
  explicit CMat(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
  int size() const { return n_; }
  CRat& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const CRat& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * n_ + j];
  }
  bool is_zero() const;
  friend CMat operator+(const CMat& a, const CMat& b);
  friend CMat operator-(const CMat& a, const CMat& b);
  friend CMat operator*(const CMat& a, const CMat& b);
  CMat scaled(const CRat& c) const;
  CMat conj_transpose() const;
  CMat transpose() const;
  CMat conj() const;
  friend bool operator==(const CMat& a, const CMat& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  // Real coordinates (re parts then im parts), for solving over Q.
  QVec flatten() const;

private:
  int n_ = 0;
  std::vector<CRat> e_;
};

CMat bracket(const CMat& a, const CMat& b);

}  // namespace ckf
