#include "nary/derived.hpp"

#include <algorithm>

#include "nary/error.hpp"
#include "nary/parallel.hpp"
#include "nary/poisson.hpp"

namespace nary {

namespace {

// Evaluates residual(tuple) for every tuple; nullopt means the identity holds.
template <class F>
Report run_check(const std::vector<Tuple>& tuples, const VerifyOptions& opt, F&& residual) {
  auto results = parallel_collect<Element>(tuples.size(), opt.threads, !opt.exhaustive,
                                           [&](std::size_t i) { return residual(tuples[i]); });
  Report r;
  r.checked = tuples.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    Violation v{tuples[i], std::move(*results[i])};
    if (r.pass) {
      r.pass = false;
      r.witness = v;
      if (!opt.exhaustive) break;
    }
    r.violations.push_back(std::move(v));
  }
  return r;
}

std::optional<Element> nonzero(Element e) {
  if (e.is_zero()) return std::nullopt;
  return e;
}

Vector basis_vector(std::size_t m, std::size_t i) {
  Vector v(m);
  v[i] = 1;
  return v;
}

Scalar pairing(const Superspace& space, std::size_t i, const Vector& v) {
  Scalar s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0 && space.form(i, j) != 0) s += space.form(i, j) * v[j];
  }
  return s;
}

void require_degree(const Element& e, std::size_t degree, const char* what) {
  if (!e.is_zero() && !(e.is_homogeneous() && *e.min_degree() == degree)) {
    throw Error(ErrorKind::WrongDegree, std::string(what) + " must lie in S^" + std::to_string(degree) + "V");
  }
}

std::vector<Tuple> checking_tuples(const NaryStructure& s, std::size_t n) {
  return s.mode() == NaryStructure::Mode::Symmetric ? ascending_tuples(*s.space(), n)
                                                    : all_tuples(s.space()->dim(), n);
}

}  // namespace

Report check_commutative(const NaryStructure& s, const VerifyOptions& opt) {
  // Symmetric tables satisfy the identity by construction.
  if (s.mode() == NaryStructure::Mode::Symmetric || s.arity() < 2) return Report{};
  const SpacePtr& space = s.space();
  return run_check(all_tuples(space->dim(), s.arity()), opt, [&](const Tuple& t) -> std::optional<Element> {
    const Vector base = s.evaluate(t);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      Tuple swapped = t;
      std::swap(swapped[i], swapped[i + 1]);
      Vector other = s.evaluate(swapped);
      const bool odd = space->parity(t[i]) == Parity::Odd && space->parity(t[i + 1]) == Parity::Odd;
      Vector diff(space->dim());
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = odd ? Scalar(base[k] + other[k]) : Scalar(base[k] - other[k]);
      if (!is_zero(diff)) return Element::linear(space, diff);
    }
    return std::nullopt;
  });
}

Report check_invariant(const NaryStructure& s, const VerifyOptions& opt) {
  const std::size_t n = s.arity();
  if (n == 0) return Report{};
  const SpacePtr& space = s.space();
  const std::size_t m = space->dim();
  std::vector<Tuple> tuples;
  if (s.mode() == NaryStructure::Mode::Explicit) {
    tuples = all_tuples(m, n + 1);
  } else {
    for (std::size_t a0 = 0; a0 < m; ++a0) {
      for (std::size_t a1 = 0; a1 < m; ++a1) {
        for (const auto& rest : ascending_tuples(*space, n - 1)) {
          Tuple t{static_cast<Index>(a0), static_cast<Index>(a1)};
          t.insert(t.end(), rest.begin(), rest.end());
          tuples.push_back(std::move(t));
        }
      }
    }
    std::sort(tuples.begin(), tuples.end());
  }
  return run_check(tuples, opt, [&](const Tuple& t) -> std::optional<Element> {
    const Tuple lhs_args(t.begin() + 1, t.end());
    Tuple rhs_args = lhs_args;
    rhs_args[0] = t[0];
    const Scalar lhs = pairing(*space, t[0], s.evaluate(lhs_args));
    Scalar rhs = pairing(*space, t[1], s.evaluate(rhs_args));
    if (space->parity(t[0]) == Parity::Odd && space->parity(t[1]) == Parity::Odd) rhs = -rhs;
    if (lhs == rhs) return std::nullopt;
    return Element::scalar(space, lhs - rhs);
  });
}

LInfinityReport check_l_infinity(const Element& mu) {
  if (!mu.is_zero() && !mu.is_odd()) throw Error(ErrorKind::NotOdd, "potential must be odd");
  LInfinityReport r{true, poisson_bracket(mu, mu), Element(mu.space())};
  r.obstruction = r.square.positive_part();
  r.is_l_infinity = r.obstruction.is_zero();
  return r;
}

LInfinityReport check_l_infinity(const Potential& mu) { return check_l_infinity(mu.element()); }

Report check_nary_jacobi(const NaryStructure& s, const VerifyOptions& opt) {
  const std::size_t n = s.arity();
  if (n == 0) return Report{};
  const SpacePtr& space = s.space();
  const std::size_t m = space->dim();
  const std::size_t len = 2 * n - 1;
  const auto splits = unshuffles(len, n);
  return run_check(checking_tuples(s, len), opt, [&](const Tuple& t) -> std::optional<Element> {
    Vector total(m);
    for (const auto& u : splits) {
      Tuple inner;
      for (auto p : u.first) inner.push_back(t[p]);
      const Vector v = s.evaluate(inner);
      if (is_zero(v)) continue;
      std::vector<std::size_t> order = u.first;
      order.insert(order.end(), u.second.begin(), u.second.end());
      const int sign = koszul_sign(t, order, *space);
      std::vector<Vector> outer{v};
      for (auto p : u.second) outer.push_back(basis_vector(m, t[p]));
      const Vector w = s.evaluate(outer);
      for (std::size_t k = 0; k < m; ++k) {
        if (w[k] != 0) total[k] += sign > 0 ? w[k] : Scalar(-w[k]);
      }
    }
    if (is_zero(total)) return std::nullopt;
    return Element::linear(space, total);
  });
}

Report check_generalized_jacobi(const Potential& mu, const VerifyOptions& opt) {
  const SpacePtr& space = mu.space();
  const std::size_t top = mu.arity();
  std::vector<Element> layers;
  for (std::size_t k = 0; k <= top + 1; ++k) layers.push_back(mu.layer(k));
  const std::size_t max_n = top == 0 ? 0 : 2 * top - 1;

  Report total;
  for (std::size_t len = 0; len <= max_n; ++len) {
    std::vector<std::vector<Unshuffle>> splits(len + 1);
    for (std::size_t k = 0; k <= len; ++k) splits[k] = unshuffles(len, k);
    Report r = run_check(ascending_tuples(*space, len), opt, [&](const Tuple& t) -> std::optional<Element> {
      const auto gens = generators_of(space, t);
      Element sum(space);
      for (std::size_t k = 0; k <= len; ++k) {
        const std::size_t l = len - k;
        if (k + 1 >= layers.size() || layers[k + 1].is_zero() || layers[l].is_zero()) continue;
        for (const auto& u : splits[k]) {
          std::vector<Element> inner_args;
          for (auto p : u.second) inner_args.push_back(gens[p]);
          Element inner = nested_bracket(inner_args, layers[l]);
          if (inner.is_zero()) continue;
          std::vector<Element> outer_args;
          for (auto p : u.first) outer_args.push_back(gens[p]);
          outer_args.push_back(std::move(inner));
          Element term = nested_bracket(outer_args, layers[k + 1]);
          std::vector<std::size_t> order = u.first;
          order.insert(order.end(), u.second.begin(), u.second.end());
          if (koszul_sign(t, order, *space) < 0) term *= Scalar(-1);
          sum += term;
        }
      }
      return nonzero(std::move(sum));
    });
    total.checked += r.checked;
    if (!r.pass) {
      if (total.pass) {
        total.pass = false;
        total.witness = r.witness;
      }
      if (!opt.exhaustive) return total;
      for (auto& v : r.violations) total.violations.push_back(std::move(v));
    }
  }
  return total;
}

Report check_filippov(const Potential& mu, const VerifyOptions& opt) {
  if (mu.is_family()) throw Error(ErrorKind::InvalidArgument, "Filippov check needs a homogeneous potential");
  const SpacePtr& space = mu.space();
  if (!space->pure_odd()) throw Error(ErrorKind::NotPureOdd, "Filippov check needs a pure odd space");
  const Element& m = mu.element();
  return run_check(ascending_tuples(*space, mu.arity() - 1), opt, [&](const Tuple& t) {
    return nonzero(poisson_bracket(nested_bracket(generators_of(space, t), m), m));
  });
}

Report check_jordan(const Potential& A, const VerifyOptions& opt) {
  const SpacePtr& space = A.space();
  if (!space->pure_even()) throw Error(ErrorKind::NotPureEven, "Jordan check needs a pure even space");
  const Element& a = A.element();
  require_degree(a, 3, "A");
  const std::size_t m = space->dim();
  std::vector<Element> ax;
  for (std::size_t i = 0; i < m; ++i) ax.push_back(poisson_bracket(Element::generator(space, i), a));
  // T(x,y,z) = [A_x, [[y, A_z], A]]
  auto T = [&](Index x, Index y, Index z) {
    const Element inner = poisson_bracket(poisson_bracket(Element::generator(space, y), ax[z]), a);
    return poisson_bracket(ax[x], inner);
  };
  return run_check(ascending_tuples(*space, 3), opt, [&](const Tuple& t) {
    Tuple p = t;
    Element sum(space);
    do {
      sum += T(p[0], p[1], p[2]);
    } while (std::next_permutation(p.begin(), p.end()));
    return nonzero(std::move(sum));
  });
}

Report check_associative(const Potential& mu, const VerifyOptions& opt) {
  const SpacePtr& space = mu.space();
  if (!space->pure_even()) throw Error(ErrorKind::NotPureEven, "associativity check needs a pure even space");
  const Element& e = mu.element();
  require_degree(e, 3, "potential");
  std::vector<Element> mu_e;
  for (std::size_t i = 0; i < space->dim(); ++i) mu_e.push_back(poisson_bracket(Element::generator(space, i), e));
  return run_check(ascending_tuples(*space, 2), opt,
                   [&](const Tuple& t) { return nonzero(poisson_bracket(mu_e[t[0]], mu_e[t[1]])); });
}

Report check_derivation(const Element& w, const Potential& mu) {
  require_same_space(w.space(), mu.space());
  require_degree(w, 2, "w");
  Report r;
  r.checked = 1;
  Element res = poisson_bracket(w, mu.element());
  if (!res.is_zero()) {
    r.pass = false;
    r.witness = Violation{{}, res};
  }
  return r;
}

}  // namespace nary
