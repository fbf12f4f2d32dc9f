#pragma once

#include <string>
#include <vector>

#include "ckf/catalog.hpp"
#include "ckf/linalg.hpp"
#include "ckf/root_system.hpp"

namespace ckf {

// A small real form in its defining representation: an exact rational basis
// plus the Cartan involution and the documented hyperbolic generators that
// seed the maximal abelian subspace search.
struct MatrixModel {
  std::string name;
  Family family = Family::compact;
  int p = 0, q = 0;
  int ambient = 0;              // complex matrix size
  std::vector<CMat> basis;      // R-basis of the algebra
  std::vector<CMat> a_candidates;
  int theta_fixed_dim = 0;      // dim k, filled in by cartan_split
  CMat involution_conjugator;   // J (or S-hat); empty for transpose forms
  bool theta_is_neg_transpose = false;

  CMat theta(const CMat& x) const;
};

// Families su_pq, so_pq, sl_R, sp_R, sp_pq at defining size <= 8.
MatrixModel realize(Family f, int p, int q);
MatrixModel realize_by_name(const std::string& name);
// The models every audit runs: su(1,2), su(2,2), so(2,3), sl(3,R),
// sp(2,R), sp(1,1).
std::vector<std::string> audit_model_names();

struct CartanSplit {
  int dim_k = 0;
  int dim_p = 0;
};
// Splits the basis by the involution; also verifies that theta is an
// involutive automorphism of the spanned algebra.
CartanSplit cartan_split(MatrixModel& m);

struct OracleResult {
  int dim_g = 0, dim_k = 0, dim_p = 0;
  int real_rank = 0;
  int m0_dim = 0;
  std::vector<QVec> sigma_vectors;       // labels in a*-coordinates
  std::map<QVec, int, LexLess> mult;
  Classification cls;
};

// Finds a maximal abelian subspace of p (greedy over the candidates, then
// certified maximal by an exact centralizer computation), simultaneously
// diagonalizes its adjoint action over Q, and classifies the spectrum.
OracleResult restricted_spectrum(const MatrixModel& m);

// Exact agreement with a catalog record: canonical type, rank, per-class
// root counts and multiplicities, real rank and d. On failure `why` gets a
// one-line description.
bool oracle_agrees_with_catalog(const OracleResult& o,
                                const RealFormDescriptor& rf,
                                std::string* why = nullptr);

}  // namespace ckf
