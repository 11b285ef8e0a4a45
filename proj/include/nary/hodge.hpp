#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nary/element.hpp"
#include "nary/matrix.hpp"

namespace nary {

// Pure odd space with identity form and top form L = e_1...e_m.
class HodgeContext {
 public:
  // NotHodgeContext unless the space is pure odd with identity gram.
  explicit HodgeContext(SpacePtr space);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_->dim(); }
  const Element& top_form() const noexcept { return top_; }

  // Degree-p monomials in Monomial order.
  const std::vector<Monomial>& basis(std::size_t p) const { return basis_[p]; }
  // Position of a monomial inside basis(degree).
  std::size_t position(const Monomial& m) const { return position_[m.mask()]; }

  Vector coords(const Element& v, std::size_t p) const;
  Element element(const Vector& coords, std::size_t p) const;

 private:
  SpacePtr space_;
  Element top_;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::size_t> position_;
};

// *(x_1...x_p) = [x_1,[...[x_p, L]...]], extended linearly.
Element star(const HodgeContext& ctx, const Element& v);

// <v,w> L = (-1)^{p(p-1)/2} v_p * (*w_p) summed over degrees p.
Scalar inner_product(const HodgeContext& ctx, const Element& v, const Element& w);

// d v = [mu, v].
Element apply_differential(const HodgeContext& ctx, const Element& mu, const Element& v);
// delta = sum_k (-1)^{k(1-k)/2} * d_k *, with mu_k the component of mu in
// S^{k+2}V.
Element apply_codifferential(const HodgeContext& ctx, const Element& mu, const Element& v);

// Linear operator on S*V split into blocks S^p -> S^q.
struct GradedOperator {
  std::size_t m = 0;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> blocks;

  // C(m,q) x C(m,p) block, zero when absent.
  Matrix block(std::size_t p, std::size_t q) const;
  // Whole operator on S*V, basis ordered by degree then Monomial order.
  Matrix full() const;
};

// Matrices of d and delta. NotLInfinity when d^2 != 0.
GradedOperator differential(const HodgeContext& ctx, const Element& mu);
GradedOperator codifferential(const HodgeContext& ctx, const Element& mu);

struct HodgeDegree {
  std::size_t p = 0;
  std::size_t dim = 0;
  std::size_t rank_d = 0;      // rank of d on S^p
  std::size_t rank_delta = 0;  // rank of delta on S^p
  // Only for homogeneous mu, where the Laplacian preserves degree.
  std::optional<std::size_t> ker_laplacian;
  std::optional<std::size_t> cohomology;
};

struct HodgeTotals {
  std::size_t dim = 0;
  std::size_t im_d = 0;
  std::size_t im_delta = 0;
  std::size_t ker_laplacian = 0;
  std::size_t cohomology = 0;
};

struct HodgeReport {
  bool homogeneous = true;
  std::vector<HodgeDegree> degrees;
  HodgeTotals total;
  GradedOperator d;
  GradedOperator delta;
  bool dimension_count_ok = false;  // dim Im d + dim Im delta + dim Ker L = 2^m
  bool direct_sum_ok = false;       // the three subspaces together span S*V
  bool kostant_ok = false;          // Ker L = Ker d intersect Ker delta
  bool cohomology_ok = false;       // dim Ker L = dim H in every bundle
  bool disjoint_ok = false;         // d delta x = 0 => delta x = 0 and vice versa
  std::vector<Element> harmonic;    // reduced echelon basis of Ker L
};

// Exact decomposition of S*V. Homogeneous mu is handled degree by degree
// (SizeGuard above m = 14); otherwise on the whole space (SizeGuard above
// m = 8). NotLInfinity when d^2 != 0.
HodgeReport hodge_decomposition(const HodgeContext& ctx, const Element& mu);

}  // namespace nary
