#include "nary/superspace.hpp"

#include <string>

#include "nary/error.hpp"

namespace nary {

Superspace::Superspace(std::vector<Parity> parity, Matrix gram, std::size_t max_degree)
    : parity_(std::move(parity)), gram_(std::move(gram)) {
  const std::size_t m = parity_.size();
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "superspace dimension must be positive");
  if (gram_.rows() != m || gram_.cols() != m) {
    throw Error(ErrorKind::InvalidArgument, "gram matrix must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto where = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (parity_[i] != parity_[j]) {
        if (gram_(i, j) != 0) throw Error(ErrorKind::MixedParityEntry, "nonzero even-odd entry at " + where);
        continue;
      }
      const bool both_odd = parity_[i] == Parity::Odd;
      const Scalar expected = both_odd ? gram_(j, i) : Scalar(-gram_(j, i));
      if (gram_(i, j) != expected) {
        throw Error(ErrorKind::SymmetryViolation,
                    std::string(both_odd ? "odd-odd entries must be symmetric" : "even-even entries must be skew") +
                        " at " + where);
      }
    }
  }
  for (auto p : parity_) odd_count_ += p == Parity::Odd ? 1 : 0;
  nondegenerate_ = rank(gram_) == m;
  max_degree_ = max_degree == 0 ? 2 * m : max_degree;
}

SpacePtr Superspace::make(std::vector<Parity> parity, Matrix gram, std::size_t max_degree) {
  return std::make_shared<const Superspace>(std::move(parity), std::move(gram), max_degree);
}

SpacePtr Superspace::odd_euclidean(std::size_t dim) {
  return make(std::vector<Parity>(dim, Parity::Odd), Matrix::identity(dim));
}

bool Superspace::identity_gram() const { return gram_ == Matrix::identity(dim()); }

bool operator==(const Superspace& a, const Superspace& b) {
  return a.parity_ == b.parity_ && a.gram_ == b.gram_;
}

bool is_positive_definite(const Superspace& space) {
  if (!space.pure_odd()) throw Error(ErrorKind::NotPureOdd, "positive definiteness needs a pure odd space");
  const std::size_t m = space.dim();
  for (std::size_t k = 1; k <= m; ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = space.form(i, j);
    }
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorKind::SpaceMismatch, "operands live in different superspaces");
}

}  // namespace nary
