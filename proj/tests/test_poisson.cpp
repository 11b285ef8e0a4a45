#include <doctest.h>

#include "nary/error.hpp"
#include "nary/poisson.hpp"
#include "support.hpp"

using namespace nary;
using namespace testing_support;

namespace {

SpacePtr mixed_space() {
  // e1,e2 even with a symplectic pair; e3,e4,e5 odd with a symmetric form.
  Matrix g(5, 5);
  g(0, 1) = 1;
  g(1, 0) = -1;
  g(2, 2) = 1;
  g(3, 4) = 2;
  g(4, 3) = 2;
  g(2, 3) = Scalar(1, 2);
  g(3, 2) = Scalar(1, 2);
  return Superspace::make({Parity::Even, Parity::Even, Parity::Odd, Parity::Odd, Parity::Odd}, g, 12);
}

// Random element of the given parity built from words of length <= 3.
Element random_of_parity(const SpacePtr& space, int parity) {
  Element e(space);
  for (int t = 0; t < 4; ++t) {
    std::vector<Index> w;
    const long len = uniform(0, 3);
    for (long k = 0; k < len; ++k) w.push_back(static_cast<Index>(uniform(0, static_cast<long>(space->dim()) - 1)));
    int p = 0;
    for (auto i : w) p ^= bit(space->parity(i));
    if (p != parity) continue;
    e += Element::word(space, w, nonzero_rational());
  }
  return e;
}

Scalar sign(int exponent) { return exponent % 2 ? Scalar(-1) : Scalar(1); }

}  // namespace

TEST_CASE("bracket on generators is the form") {
  const auto space = mixed_space();
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(poisson_bracket(Element::generator(space, i), Element::generator(space, j)) ==
            Element::scalar(space, space->form(i, j)));
    }
  }
}

TEST_CASE("closed form matches the dense derivative oracle") {
  for (std::size_t m = 1; m <= 6; ++m) {
    Matrix g(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) g(i, j) = g(j, i) = small_rational();
    }
    const auto space = Superspace::make(std::vector<Parity>(m, Parity::Odd), g);
    for (int trial = 0; trial < 15; ++trial) {
      const Element a = random_homogeneous(space, static_cast<std::size_t>(uniform(0, m))) +
                        random_homogeneous(space, static_cast<std::size_t>(uniform(0, m)));
      const Element b = random_homogeneous(space, static_cast<std::size_t>(uniform(0, m)));
      CHECK(poisson_bracket(a, b) == dense_bracket(a, b));
    }
  }
}

TEST_CASE("closed form matches the recursive oracle on a mixed space") {
  const auto space = mixed_space();
  for (int trial = 0; trial < 60; ++trial) {
    const Element a = random_of_parity(space, trial % 2);
    const Element b = random_of_parity(space, (trial / 2) % 2);
    CHECK(poisson_bracket(a, b) == bracket_recursive_oracle(a, b));
  }
}

TEST_CASE("graded antisymmetry, Leibniz and Jacobi") {
  const auto space = mixed_space();
  for (int trial = 0; trial < 40; ++trial) {
    const int pa = static_cast<int>(uniform(0, 1));
    const int pb = static_cast<int>(uniform(0, 1));
    const int pc = static_cast<int>(uniform(0, 1));
    const Element a = random_of_parity(space, pa);
    const Element b = random_of_parity(space, pb);
    const Element c = random_of_parity(space, pc);
    CHECK(poisson_bracket(a, b) == -sign(pa * pb) * poisson_bracket(b, a));
    CHECK(poisson_bracket(a, b * c) == poisson_bracket(a, b) * c + sign(pa * pb) * (b * poisson_bracket(a, c)));
    CHECK(poisson_bracket(a, poisson_bracket(b, c)) ==
          poisson_bracket(poisson_bracket(a, b), c) + sign(pa * pb) * poisson_bracket(b, poisson_bracket(a, c)));
  }
}

TEST_CASE("nested bracket folds from the right") {
  const auto space = Superspace::odd_euclidean(3);
  const Element top = mono(space, {1, 2, 3});
  CHECK(nested_bracket({gen(space, 1)}, top) == mono(space, {2, 3}));
  CHECK(nested_bracket({gen(space, 2)}, top) == -mono(space, {1, 3}));
  CHECK(nested_bracket({gen(space, 1), gen(space, 2)}, top) == -gen(space, 3));
  CHECK(nested_bracket({}, top) == top);
}

TEST_CASE("mismatched spaces are rejected") {
  const auto a = Superspace::odd_euclidean(3);
  const auto b = Superspace::odd_euclidean(4);
  CHECK_THROWS_AS(poisson_bracket(gen(a, 1), gen(b, 1)), Error);
}
