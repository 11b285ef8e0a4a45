#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "nary/element.hpp"
#include "nary/matrix.hpp"
#include "nary/structure.hpp"
#include "nary/tuples.hpp"

// Test-side helpers: a deterministic RNG and a dense Grassmann oracle that
// shares no code with the engine's product or bracket.
namespace testing_support {

using nary::Element;
using nary::Index;
using nary::Matrix;
using nary::Monomial;
using nary::Scalar;
using nary::SpacePtr;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Scalar small_rational() {
  const long num = uniform(-4, 4);
  const long den = uniform(1, 3);
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline Scalar nonzero_rational() {
  Scalar s = small_rational();
  while (s == 0) s = small_rational();
  return s;
}

// Random element of S^p V on a pure odd space with roughly density * C(m,p) terms.
inline Element random_homogeneous(const SpacePtr& space, std::size_t p, double density = 0.5) {
  const std::size_t m = space->dim();
  Element e(space);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != p) continue;
    if (std::uniform_real_distribution<double>(0, 1)(rng()) > density) continue;
    e.add(Monomial::from_mask(mask), nonzero_rational());
  }
  return e;
}

inline Matrix random_skew(std::size_t m) {
  Matrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      a(i, j) = small_rational();
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

// Coefficient vector indexed by bitmask; pure odd spaces only.
struct Dense {
  std::size_t m = 0;
  std::vector<Scalar> c;

  explicit Dense(std::size_t dim) : m(dim), c(std::size_t{1} << dim) {}

  static Dense from(const Element& e) {
    Dense d(e.space()->dim());
    for (const auto& [mono, coeff] : e.terms()) {
      std::uint64_t mask = 0;
      for (auto i : mono.indices()) mask |= std::uint64_t{1} << i;
      d.c[mask] = coeff;
    }
    return d;
  }

  Element to(const SpacePtr& space) const {
    Element e(space);
    for (std::uint64_t mask = 0; mask < c.size(); ++mask) {
      if (c[mask] != 0) e.add(Monomial::from_mask(mask), c[mask]);
    }
    return e;
  }
};

// Sign of e_a e_b by explicit pair counting.
inline int dense_sign(std::uint64_t a, std::uint64_t b) {
  int s = 1;
  for (int i = 0; i < 64; ++i) {
    if (!((a >> i) & 1)) continue;
    for (int j = 0; j < i; ++j) {
      if ((b >> j) & 1) s = -s;
    }
  }
  return s;
}

inline Dense dense_mul(const Dense& x, const Dense& y) {
  Dense out(x.m);
  for (std::uint64_t a = 0; a < x.c.size(); ++a) {
    if (x.c[a] == 0) continue;
    for (std::uint64_t b = 0; b < y.c.size(); ++b) {
      if (y.c[b] == 0 || (a & b)) continue;
      out.c[a | b] += dense_sign(a, b) * x.c[a] * y.c[b];
    }
  }
  return out;
}

// d/de_j acting from the left.
inline Dense left_derivative(const Dense& x, std::size_t j) {
  Dense out(x.m);
  const std::uint64_t bit = std::uint64_t{1} << j;
  for (std::uint64_t a = 0; a < x.c.size(); ++a) {
    if (!(a & bit) || x.c[a] == 0) continue;
    const int s = (std::popcount(a & (bit - 1)) % 2) ? -1 : 1;
    out.c[a ^ bit] += s * x.c[a];
  }
  return out;
}

// d/de_i acting from the right.
inline Dense right_derivative(const Dense& x, std::size_t i) {
  Dense out(x.m);
  const std::uint64_t bit = std::uint64_t{1} << i;
  for (std::uint64_t a = 0; a < x.c.size(); ++a) {
    if (!(a & bit) || x.c[a] == 0) continue;
    const int s = (std::popcount(a >> (i + 1)) % 2) ? -1 : 1;
    out.c[a ^ bit] += s * x.c[a];
  }
  return out;
}

// [u,w] = sum_ij G_ij (u d<-_i)(d->_j w).
inline Element dense_bracket(const Element& u, const Element& w) {
  const SpacePtr& space = u.space();
  const std::size_t m = space->dim();
  const Dense du = Dense::from(u);
  const Dense dw = Dense::from(w);
  Dense out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Dense r = right_derivative(du, i);
    for (std::size_t j = 0; j < m; ++j) {
      if (space->form(i, j) == 0) continue;
      const Dense p = dense_mul(r, left_derivative(dw, j));
      for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] += space->form(i, j) * p.c[k];
    }
  }
  return out.to(space);
}

inline Element dense_nested(const std::vector<Element>& args, Element target) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) target = dense_bracket(*it, target);
  return target;
}

inline Element gen(const SpacePtr& space, std::size_t one_based, const Scalar& c = 1) {
  return Element::generator(space, one_based - 1, c);
}

inline Element mono(const SpacePtr& space, std::vector<Index> one_based, const Scalar& c = 1) {
  for (auto& i : one_based) --i;
  return Element::word(space, std::move(one_based), c);
}

inline nary::NaryStructure random_commutative(const SpacePtr& space, std::size_t n) {
  nary::NaryStructure s(space, n);
  for (const auto& t : nary::ascending_tuples(*space, n)) {
    if (uniform(0, 1)) continue;
    nary::Vector v(space->dim());
    for (auto& x : v) x = uniform(0, 2) ? Scalar(0) : small_rational();
    s.set(t, v);
  }
  return s;
}

// Cyclic sum on pure odd V: each rotation of n+1 odd arguments costs (-1)^n.
inline Scalar cyclic_sum(const nary::NaryStructure& mu, const Matrix& phi, const nary::Tuple& t) {
  const std::size_t n = mu.arity();
  Scalar total = 0;
  for (std::size_t s = 0; s <= n; ++s) {
    nary::Tuple rest;
    for (std::size_t k = 1; k <= n; ++k) rest.push_back(t[(s + k) % (n + 1)]);
    const nary::Vector v = mu.evaluate(rest);
    Scalar term = 0;
    for (std::size_t j = 0; j < v.size(); ++j) term += phi(t[s], j) * v[j];
    total += ((n * s) % 2 ? -1 : 1) * term;
  }
  return total;
}

inline bool oracle_pass(const nary::NaryStructure& mu, const Matrix& phi) {
  for (const auto& t : nary::all_tuples(mu.space()->dim(), mu.arity() + 1)) {
    if (cyclic_sum(mu, phi, t) != 0) return false;
  }
  return true;
}

inline Matrix skew_from(const nary::Vector& x, std::size_t m) {
  Matrix phi(m, m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      phi(i, j) = x[k];
      phi(j, i) = -x[k];
      ++k;
    }
  }
  return phi;
}

// A random element of the space of quasi-Frobenius forms, found by solving the
// linear cyclic-sum conditions with the oracle.
inline Matrix random_solution(const nary::NaryStructure& mu) {
  const std::size_t m = mu.space()->dim();
  const std::size_t k = m * (m - 1) / 2;
  std::vector<nary::Vector> rows;
  for (const auto& t : nary::all_tuples(m, mu.arity() + 1)) {
    nary::Vector row(k);
    for (std::size_t c = 0; c < k; ++c) {
      nary::Vector unit(k);
      unit[c] = 1;
      row[c] = cyclic_sum(mu, skew_from(unit, m), t);
    }
    rows.push_back(row);
  }
  const auto ns = nary::nullspace(Matrix::from_rows(rows, k));
  nary::Vector x(k);
  for (const auto& v : ns) {
    const Scalar c = small_rational();
    for (std::size_t i = 0; i < k; ++i) x[i] += c * v[i];
  }
  return skew_from(x, m);
}

}  // namespace testing_support
