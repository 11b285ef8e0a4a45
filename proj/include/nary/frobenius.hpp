#pragma once

#include <optional>

#include "nary/structure.hpp"

namespace nary {

// Doubled space V + V* (2m odd generators, V* at indices m..2m-1) with the
// pairing (e_i, e*_j) = (e*_j, e_i) = delta_ij, and the extension mu^T of an
// n-ary product on V:
//   mu^T = mu on V,  mu^T(a_1..a_{n-1}, b*)(c) = -b*(mu(a_1..a_{n-1}, c)),
// zero with two or more dual arguments.
struct TStarExtension {
  SpacePtr base;
  SpacePtr doubled;
  NaryStructure mu;
  NaryStructure mu_t;   // derived structure of the extension potential
  Potential potential;  // in S^{n+1}(V + V*)
  bool invariants_ok = false;
};

// NotPureOdd. Any commutative mu on a pure odd V is accepted.
TStarExtension t_star_extension(const NaryStructure& mu);
TStarExtension t_star_extension(const Potential& mu);

// The form phi on pure odd V must be an element of S^2V, i.e. an ordinary
// skew matrix (SymmetryViolation otherwise). It may be degenerate.
void require_form(const Matrix& phi, std::size_t m);

struct QFCertificate {
  bool pass = true;
  std::optional<Tuple> witness;
  Scalar residual = 0;
  std::size_t phi_rank = 0;
  bool odd_arity_warning = false;
};

// sum over cyclic shifts of (sign) phi(a_1, mu(a_2..a_{n+1})) = 0 on every
// basis (n+1)-tuple. OddArity for odd n unless allow_odd is set, in which case
// the raw check runs and the warning flag is raised.
QFCertificate check_quasi_frobenius(const NaryStructure& mu, const Matrix& phi, bool allow_odd = false);

struct GraphResult {
  bool subalgebra = false;   // pairing criterion (mu^T(b..), b') = 0
  bool membership = false;   // mu^T(b..) lies in span(b) directly
  bool isotropic = false;    // B_phi is isotropic
  std::optional<Tuple> witness;
};

// B_phi = span{e_i + sum_j phi(i,j) e*_j}. OddArity for odd n.
GraphResult graph_subalgebra_test(const TStarExtension& ext, const Matrix& phi);

}  // namespace nary
