#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "nary/matrix.hpp"

namespace nary {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline int bit(Parity p) { return p == Parity::Odd ? 1 : 0; }

// A Z2-graded space V with a chosen basis e_1..e_m and an even bilinear form
// (e_i, e_j) = gram(i, j) satisfying (a,b) = -(-1)^{|a||b|}(b,a).
// Indices are 0-based here; external formats are 1-based.
class Superspace {
 public:
  // Throws SymmetryViolation or MixedParityEntry. A max_degree of 0 selects
  // the default cap 2m.
  Superspace(std::vector<Parity> parity, Matrix gram, std::size_t max_degree = 0);

  static std::shared_ptr<const Superspace> make(std::vector<Parity> parity, Matrix gram,
                                                std::size_t max_degree = 0);
  // Pure odd space with identity form: the orthonormal setting used by the
  // star operator and the classification.
  static std::shared_ptr<const Superspace> odd_euclidean(std::size_t dim);

  std::size_t dim() const noexcept { return parity_.size(); }
  Parity parity(std::size_t i) const { return parity_[i]; }
  const std::vector<Parity>& parities() const noexcept { return parity_; }
  const Matrix& gram() const noexcept { return gram_; }
  const Scalar& form(std::size_t i, std::size_t j) const { return gram_(i, j); }

  bool nondegenerate() const noexcept { return nondegenerate_; }
  bool pure_odd() const noexcept { return odd_count_ == parity_.size(); }
  bool pure_even() const noexcept { return odd_count_ == 0; }
  bool has_even() const noexcept { return odd_count_ < parity_.size(); }
  bool identity_gram() const;

  // Maximum polynomial degree accepted for elements; only enforced when even
  // generators are present (S*V is then infinite-dimensional).
  std::size_t max_degree() const noexcept { return max_degree_; }

  friend bool operator==(const Superspace& a, const Superspace& b);

 private:
  std::vector<Parity> parity_;
  Matrix gram_;
  std::size_t odd_count_ = 0;
  bool nondegenerate_ = false;
  std::size_t max_degree_ = 0;
};

using SpacePtr = std::shared_ptr<const Superspace>;

// Sylvester criterion on leading principal minors. Pure odd spaces only
// (NotPureOdd otherwise).
bool is_positive_definite(const Superspace& space);

// Same object or equal by value; throws SpaceMismatch otherwise.
void require_same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace nary
