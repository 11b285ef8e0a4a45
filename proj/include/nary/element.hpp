#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nary/scalar.hpp"
#include "nary/superspace.hpp"

namespace nary {

using Index = std::uint16_t;

// A monomial of S*V: ascending generator indices, repeats only for even
// generators. Ordered by degree, then lexicographically.
class Monomial {
 public:
  Monomial() = default;
  // Caller guarantees the canonical shape.
  explicit Monomial(std::vector<Index> ascending) : idx_(std::move(ascending)) {}

  static Monomial from_mask(std::uint64_t mask);

  const std::vector<Index>& indices() const noexcept { return idx_; }
  std::size_t degree() const noexcept { return idx_.size(); }
  bool is_unit() const noexcept { return idx_.empty(); }

  // Pure odd spaces with m <= 64 only.
  std::uint64_t mask() const;

  // Number of odd factors mod 2.
  int parity(const Superspace& space) const;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.idx_.size() != b.idx_.size()) return a.idx_.size() <=> b.idx_.size();
    return a.idx_ <=> b.idx_;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Index> idx_;
};

// Sorts an ordered word of generators into a monomial, tracking the Koszul
// sign of the odd transpositions. Sign 0 when an odd generator repeats.
std::pair<Monomial, int> canonicalize(std::vector<Index> word, const Superspace& space);

// e_a * e_b for canonical monomials.
std::pair<Monomial, int> monomial_product(const Monomial& a, const Monomial& b, const Superspace& space);

// Sparse element of S*V. No zero coefficients are stored; iteration order is
// the Monomial order, so output is deterministic.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit Element(SpacePtr space) : space_(std::move(space)) {}

  static Element scalar(SpacePtr space, const Scalar& c);
  static Element generator(SpacePtr space, std::size_t i, const Scalar& c = 1);
  static Element monomial(SpacePtr space, Monomial mono, const Scalar& c = 1);
  // Product of generators in the given order (0-based indices).
  static Element word(SpacePtr space, std::vector<Index> word, const Scalar& c = 1);
  // Linear element sum_i coords[i] e_i.
  static Element linear(SpacePtr space, const Vector& coords);

  const SpacePtr& space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const;
  // Throws DegreeCapExceeded when the space has even generators and the
  // monomial exceeds the cap.
  void add(const Monomial& m, const Scalar& c);

  std::optional<std::size_t> min_degree() const;
  std::optional<std::size_t> max_degree() const;
  // True for zero and for elements living in a single S^p V.
  bool is_homogeneous() const;
  // Parity when every term has the same parity; nullopt for mixed or zero.
  std::optional<int> parity() const;
  bool is_odd() const { return parity() == 1; }
  Element homogeneous_part(std::size_t degree) const;
  // Degree >= 1 part (drops the constant term).
  Element positive_part() const;
  // Coordinates of a degree <= 1 element in the basis e_1..e_m (constant
  // term ignored).
  Vector linear_coords() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Scalar(-1); }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b);

 private:
  SpacePtr space_;
  Terms terms_;
};

// Supercommutative product of S*V.
Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

}  // namespace nary
