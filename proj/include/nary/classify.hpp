#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "nary/derived.hpp"
#include "nary/hodge.hpp"

namespace nary {

// S^2V <-> so(V) on a pure odd space with identity form. The sign convention
// is w = sum_{a<b} A(a,b) e_a e_b, which makes the matrix of ad w = [w,-]
// equal to A: ad(e_a e_b) sends e_b to e_a and e_a to -e_b.
Element skew_to_element(const SpacePtr& space, const Matrix& A);  // NotSkew
Matrix element_to_skew(const Element& w);                          // WrongDegree

// Matrix of ad w computed from the bracket; column c holds [w, e_c].
Matrix adjoint_matrix(const Element& w);

struct CanonicalForm {
  // a_1 >= ... >= a_k >= 0 for odd m; for even m the last parameter may be
  // negative, with |a_k| <= a_{k-1}.
  std::vector<double> params;
  Eigen::MatrixXd Q;        // orthogonal, det +1
  Eigen::MatrixXd reduced;  // diag(J_{a_1}, ..., J_{a_k} [, 0])
  double residual = 0;      // max row sum of |Q reduced Q^T - A|
};

// J_a = [[0, a], [-a, 0]] blocks. NotSkew when A + A^T exceeds 1e-12,
// ConvergenceFailure when the Schur step fails or the residual exceeds 1e-9.
CanonicalForm canonical_form(const Eigen::MatrixXd& A, double tolerance = 1e-9);

Eigen::MatrixXd to_eigen(const Matrix& m);

// v = sum_j params[j] e_{2j-1} e_{2j}.
Element canonical_element(const SpacePtr& space, const std::vector<Scalar>& params);

// Potential *(v) of arity m - deg(v) - 1; v must be homogeneous.
Potential star_potential(const HodgeContext& ctx, const Element& v);
// *(v) for v in S^2V (WrongDegree otherwise), arity m - 3.
Potential build_m3_algebra(const HodgeContext& ctx, const Element& v);

enum class IdealStatus { NotSimple, SimpleCertified, SimpleProbabilistic, Inconclusive };
std::string_view to_string(IdealStatus status);

struct IdealOptions {
  unsigned rounds = 64;
  std::uint64_t seed = 0x5eed;
};

struct IdealReport {
  IdealStatus status = IdealStatus::Inconclusive;
  bool found = false;
  std::vector<Vector> basis;  // reduced echelon basis of the ideal
  std::string method;         // kernel, image, meataxe, commutant
};

// Searches for a proper ideal W (s(V,...,V,W) in W). Stages: the kernel
// {v : s(v,...) = 0}, the image s(V,...,V), random kernels spun under the
// multiplication operators, and rational eigenspaces of symmetric elements of
// the commutant. Simplicity is certified when every multiplication operator
// is skew for a positive definite form and the symmetric commutant is the
// scalars. NotPureOdd.
IdealReport find_ideal(const NaryStructure& s, const IdealOptions& opt = {});

// True iff W is invariant under every s(e_I, -).
bool is_ideal(const NaryStructure& s, const std::vector<Vector>& basis);

struct ClassifyRecord {
  std::size_t m = 0;
  std::size_t rank = 0;  // rank of v as a skew matrix
  CanonicalForm canonical;
  bool simple = false;  // rank > 2
  IdealReport ideal;
  bool ideal_agrees = false;
  bool filippov = false;
  bool sh_jacobi = false;
};

// DimensionTooSmall for m <= 4.
ClassifyRecord classify_m3(const HodgeContext& ctx, const Element& v, const IdealOptions& opt = {},
                           const VerifyOptions& vopt = {});

// Image of an element under the algebra automorphism induced by phi
// (e_i -> sum_j phi(j,i) e_j).
Element transform(const Matrix& phi, const Element& x);

struct IsoResult {
  bool isomorphic = false;
  bool morphism_verified = false;  // phi([w,v]) = [phi w, phi v] on sample pairs
};

// NotOrthogonal unless phi^T G phi = G and det phi = 1.
IsoResult isomorphic_via(const Potential& mu1, const Potential& mu2, const Matrix& phi);

// Basis of {w in S^2V : [w, mu] = 0}, in reduced echelon form over the
// monomial basis of S^2V.
std::vector<Element> ider(const Element& mu);

// (I - S)(I + S)^{-1}: a rational rotation for skew S.
Matrix cayley(const Matrix& S);

}  // namespace nary
