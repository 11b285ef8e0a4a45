#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nary/element.hpp"
#include "nary/tuples.hpp"

namespace nary {

// Derived potential. Homogeneous mode: mu in S^{n+1}V defining an n-ary
// product. Family mode: mu = sum_k mu_k with mu_k in S^{k+1}V, one layer per
// arity k >= 0; the total element must be odd.
class Potential {
 public:
  // DegreeMismatch unless mu is zero or homogeneous of degree arity + 1;
  // InvalidArgument for arity 0.
  static Potential homogeneous(Element mu, std::size_t arity);
  // Splits mu by degree. DegreeMismatch on a constant term; NotOdd unless
  // every term is odd.
  static Potential family(Element mu);
  // layers[k] must be zero or homogeneous of degree k + 1.
  static Potential family(const std::vector<Element>& layers);

  bool is_family() const noexcept { return family_; }
  const SpacePtr& space() const noexcept { return mu_.space(); }
  const Element& element() const noexcept { return mu_; }
  // Homogeneous mode: n. Family mode: highest layer index.
  std::size_t arity() const noexcept { return arity_; }
  // Component in S^{k+1}V.
  Element layer(std::size_t k) const { return mu_.homogeneous_part(k + 1); }

 private:
  Potential(Element mu, std::size_t arity, bool family) : mu_(std::move(mu)), arity_(arity), family_(family) {}

  Element mu_;
  std::size_t arity_;
  bool family_;
};

// n-ary product V^n -> V given by structure constants. Symmetric mode keeps
// one entry per ascending tuple and expands other orderings with the Koszul
// sign of the sort (odd repeats give 0). Explicit mode stores every tuple as
// given; absent tuples are 0.
class NaryStructure {
 public:
  enum class Mode { Symmetric, Explicit };
  using Table = std::map<Tuple, Vector>;

  NaryStructure(SpacePtr space, std::size_t arity, Mode mode = Mode::Symmetric);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t arity() const noexcept { return arity_; }
  Mode mode() const noexcept { return mode_; }
  const Table& table() const noexcept { return table_; }
  bool is_zero() const noexcept { return table_.empty(); }

  // Symmetric mode: the tuple is sorted first and the value rescaled by the
  // sort sign; InvalidArgument if a nonzero value is given on a tuple with a
  // repeated odd generator.
  void set(Tuple args, const Vector& value);

  Vector evaluate(const Tuple& args) const;
  // Multilinear extension to arbitrary vectors of V.
  Vector evaluate(const std::vector<Vector>& args) const;

  friend bool operator==(const NaryStructure& a, const NaryStructure& b);

 private:
  SpacePtr space_;
  std::size_t arity_;
  Mode mode_;
  Table table_;
};

// {e_1,...,e_n} = [e_1,[...,[e_n, mu]...]] on every ascending tuple.
NaryStructure derive_structure(const Element& mu, std::size_t arity);
// Homogeneous mode only (InvalidArgument otherwise).
NaryStructure derive_structure(const Potential& mu);
// One structure per layer k = 0..arity of a family potential.
std::vector<NaryStructure> derive_layers(const Potential& mu);

// Inverse of derive_structure. Checks commutativity and invariance first
// (NotCommutative / NotInvariant with the witness tuple in the message) and
// requires a nondegenerate form (Degenerate).
Potential potential_from_structure(const NaryStructure& s);

}  // namespace nary
