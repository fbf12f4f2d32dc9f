#pragma once

#include <map>
#include <string>
#include <vector>

#include "ckf/root_system.hpp"

namespace ckf {

// A root of the complexified algebra relative to the Cartan subalgebra
// t + a, stored as the pair of real functionals (alpha|_{it}, alpha|_a).
// Conjugation with respect to the real form acts as t_part -> -t_part.
struct BigRoot {
  QVec t_part;
  QVec a_part;
  friend bool operator==(const BigRoot& x, const BigRoot& y) {
    return x.t_part == y.t_part && x.a_part == y.a_part;
  }
};
struct BigRootLess {
  bool operator()(const BigRoot& x, const BigRoot& y) const {
    int c = lex_cmp(x.a_part, y.a_part);
    if (c != 0) return c < 0;
    return lex_cmp(x.t_part, y.t_part) < 0;
  }
};

BigRoot sigma_image(const BigRoot& r);  // (t, a) -> (-t, a)
BigRoot negate(const BigRoot& r);

// Positivity is lexicographic on (a_part, t_part), so the a_part dominates
// and the induced positive restricted system is the lex-positive half of
// the a-parts by construction.
bool bigroot_positive(const BigRoot& r);

struct BigRootModel {
  std::string name;
  int t_dim = 0;
  int a_dim = 0;
  std::vector<BigRoot> roots;  // full system, negation- and sigma-closed
};

// Throws internal_error if the set is empty, has a zero element, or is not
// closed under negation and conjugation.
void validate_model(const BigRootModel& m);

// The restricted system pr(Delta) \ {0} with multiplicities; roots with zero
// a_part are counted separately (they span the root part of m_0).
struct RestrictedSigma {
  std::vector<QVec> vectors;        // sorted, negation-closed
  std::map<QVec, int, LexLess> mult;
  int real_rank = 0;                // rank of the span of Sigma
  int delta_m_count = 0;            // big roots restricting to zero
  Classification cls;
};

RestrictedSigma restrict_model(const BigRootModel& m);

// The X-induced partition of the positive big roots: a_part = 0 goes to
// delta_m; the rest split by the sign of the t_part pairing with X.
struct RootPartition {
  std::vector<BigRoot> delta_m;
  std::vector<BigRoot> delta_0;
  std::vector<BigRoot> delta_p;
  std::vector<BigRoot> delta_n;
  QVec x;
  bool degenerate = false;  // X = 0 (including t_dim = 0 models)
};

RootPartition partition_by(const BigRootModel& m, const QVec& x);

// |delta_p| + |delta_n|; even whenever the model is sigma-stable.
int z_dim(const RootPartition& p);

// Whether conjugation carries delta_p bijectively onto delta_n.
bool sigma_swap_check(const RootPartition& p);

// Shipped explicit models. Parameters are the ones exercised by the tests;
// out-of-range requests are rejected rather than extrapolated.
BigRootModel bigroots_su(int p, int q);    // p <= q, p+q <= 6
BigRootModel bigroots_so(int p, int q);    // p <= q, p+q <= 7
BigRootModel bigroots_sl_r(int n);         // n <= 5
BigRootModel bigroots_sp_r(int n);         // n <= 4
BigRootModel bigroots_sp(int p, int q);    // p <= q, p+q <= 4
BigRootModel bigroot_model_by_name(const std::string& name);
std::vector<std::string> shipped_bigroot_models();

// Data-file round trip (see data/bigroots.dat). Loading validates closure
// invariants and exact agreement with the in-code constructors.
std::string serialize_bigroots(const std::vector<BigRootModel>& models);
std::vector<BigRootModel> parse_bigroots(const std::string& text);
std::vector<BigRootModel> load_bigroots_file(const std::string& path);

}  // namespace ckf
