// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "nary/classify.hpp"
#include "nary/derived.hpp"
#include "nary/frobenius.hpp"
#include "nary/hodge.hpp"
#include "nary/poisson.hpp"
#include "nary/tuples.hpp"
#include "support.hpp"

using namespace nary;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string show(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    out << (first ? "" : " + ") << format_scalar(c) << "*[";
    for (std::size_t k = 0; k < m.indices().size(); ++k) out << (k ? "," : "") << m.indices()[k] + 1;
    out << "]";
    first = false;
  }
  return out.str();
}

Scalar sign(std::size_t e) { return e % 2 ? Scalar(-1) : Scalar(1); }

Element top(const SpacePtr& space) {
  return Element::monomial(space, Monomial::from_mask((std::uint64_t{1} << space->dim()) - 1));
}

std::vector<Element> monomials(const HodgeContext& ctx) {
  std::vector<Element> out;
  for (std::size_t p = 0; p <= ctx.dim(); ++p) {
    for (const auto& m : ctx.basis(p)) out.push_back(Element::monomial(ctx.space(), m));
  }
  return out;
}

Outcome c1() {
  const auto space = Superspace::odd_euclidean(5);
  const Element mu = mono(space, {3, 4, 5}) + mono(space, {1, 2, 5});
  const Element expected = mono(space, {1, 2, 3, 4}, -2);
  const LInfinityReport r = check_l_infinity(mu);
  const Element oracle = dense_bracket(mu, mu).positive_part();
  return {r.obstruction == expected, "expected " + show(expected) + ", engine " + show(r.obstruction) +
                                         ", dense oracle " + show(oracle)};
}

// Jacobiator at a tuple computed with dense nested brackets and subset masks.
Element jacobiator_oracle(const Element& mu, const std::vector<Element>& a, std::size_t n) {
  const std::size_t len = a.size();
  Element total(mu.space());
  for (std::uint32_t s = 0; s < (1U << len); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != n) continue;
    std::vector<Element> inner, outer;
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < len; ++k) {
      if ((s >> k) & 1) {
        inner.push_back(a[k]);
        order.push_back(k);
      }
    }
    for (std::size_t k = 0; k < len; ++k) {
      if (!((s >> k) & 1)) {
        outer.push_back(a[k]);
        order.push_back(k);
      }
    }
    int inv = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) inv += order[i] > order[j];
    }
    std::vector<Element> args{dense_nested(inner, mu)};
    args.insert(args.end(), outer.begin(), outer.end());
    total += sign(static_cast<std::size_t>(inv)) * dense_nested(args, mu);
  }
  return total;
}

Outcome c2() {
  const auto space = Superspace::odd_euclidean(6);
  const Element mu = mono(space, {3, 4, 5, 6}) + mono(space, {1, 2, 5, 6});
  const Report r = check_nary_jacobi(derive_structure(mu, 3), {true, 1});
  const Tuple target{0, 1, 2, 3, 4};
  Element engine(space);
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.tuple == target) {
      engine = v.residual;
      found = true;
    }
  }
  const Element expected = gen(space, 5, -2);
  std::vector<Element> a;
  for (std::size_t i = 1; i <= 5; ++i) a.push_back(gen(space, i));
  const Element oracle = jacobiator_oracle(mu, a, 3);
  return {!r.pass && found && engine == expected && oracle == expected,
          "expected " + show(expected) + ", engine " + show(engine) + ", dense oracle " + show(oracle)};
}

Outcome c3() {
  std::size_t checked = 0;
  for (std::size_t m = 2; m <= 8; ++m) {
    const HodgeContext ctx(Superspace::odd_euclidean(m));
    const Scalar s = sign(m * (m - 1) / 2);
    for (const auto& e : monomials(ctx)) {
      if (!(star(ctx, star(ctx, e)) == s * e)) return {false, "fails at m=" + std::to_string(m) + " on " + show(e)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " monomials, m=2..8"};
}

Outcome c4() {
  std::size_t checked = 0;
  for (std::size_t m = 1; m <= 7; ++m) {
    const HodgeContext ctx(Superspace::odd_euclidean(m));
    const auto mons = monomials(ctx);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      for (std::size_t j = 0; j < mons.size(); ++j) {
        if (inner_product(ctx, mons[i], mons[j]) != (i == j ? 1 : 0)) {
          return {false, "fails on " + show(mons[i]) + ", " + show(mons[j])};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " pairs, m=1..7"};
}

Outcome c5() {
  const HodgeContext ctx(Superspace::odd_euclidean(5));
  const Scalar s = -sign(5 * 4 / 2);
  const auto mons = monomials(ctx);
  std::size_t checked = 0;
  for (const Element& mu : {star(ctx, mono(ctx.space(), {1, 2})), top(ctx.space())}) {
    for (const auto& v : mons) {
      const Element dv = apply_differential(ctx, mu, v);
      for (const auto& w : mons) {
        if (inner_product(ctx, dv, w) != s * inner_product(ctx, v, apply_codifferential(ctx, mu, w))) {
          return {false, "fails for mu=" + show(mu) + " on " + show(v) + ", " + show(w)};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " pairs for *(e1e2) and L"};
}

Outcome c6() {
  const HodgeContext ctx(Superspace::odd_euclidean(5));
  std::ostringstream d;
  bool ok = true;
  for (const Element& mu : {Element(ctx.space()), star(ctx, mono(ctx.space(), {1, 2})), top(ctx.space())}) {
    const HodgeReport r = hodge_decomposition(ctx, mu);
    bool degrees_ok = true;
    for (const auto& deg : r.degrees) degrees_ok = degrees_ok && deg.ker_laplacian && deg.ker_laplacian == deg.cohomology;
    const bool total = r.total.im_d + r.total.im_delta + r.total.ker_laplacian == 32;
    ok = ok && total && r.direct_sum_ok && r.kostant_ok && r.cohomology_ok && degrees_ok;
    d << "[" << r.total.im_d << "+" << r.total.im_delta << "+" << r.total.ker_laplacian << "] ";
  }
  return {ok, "Im d + Im delta + Ker L per potential: " + d.str()};
}

Outcome c7() {
  std::ostringstream d;
  bool ok = true;
  for (std::size_t m = 5; m <= 7; ++m) {
    const HodgeContext ctx(Superspace::odd_euclidean(m));
    const auto& s = ctx.space();
    const std::vector<std::pair<Potential, bool>> cases{
        {Potential::homogeneous(Element(s), m - 3), true},
        {star_potential(ctx, Element::scalar(s, 1)), true},
        {star_potential(ctx, gen(s, 1)), true},
        {star_potential(ctx, mono(s, {1, 2})), true},
        {star_potential(ctx, mono(s, {1, 2}) + mono(s, {3, 4})), false},
    };
    for (const auto& [p, expect] : cases) {
      const bool got = check_filippov(p).pass;
      if (got != expect) {
        ok = false;
        d << "m=" << m << " arity " << p.arity() << " got " << got << "; ";
      }
    }
  }
  return {ok, ok ? "15 potentials as tabulated for m=5,6,7" : d.str()};
}

Outcome c8() {
  std::size_t count = 0;
  std::ostringstream d;
  bool ok = true;
  for (std::size_t m = 5; m <= 9; ++m) {
    const HodgeContext ctx(Superspace::odd_euclidean(m));
    std::vector<std::vector<Scalar>> grid{{}};
    for (std::size_t k = 0; k < m / 2; ++k) {
      std::vector<std::vector<Scalar>> next;
      for (const auto& g : grid) {
        for (long a = 2; a >= 0; --a) {
          if (!g.empty() && g.back() < a) continue;
          auto h = g;
          h.emplace_back(a);
          next.push_back(h);
        }
      }
      grid = next;
    }
    for (const auto& params : grid) {
      const Element v = canonical_element(ctx.space(), params);
      const std::size_t rk = rank(element_to_skew(v));
      const bool expect = !((m == 5 && rk == 4) || (m == 6 && (rk == 4 || rk == 6)));
      const bool got = check_nary_jacobi(derive_structure(build_m3_algebra(ctx, v))).pass;
      ++count;
      if (got != expect) {
        ok = false;
        d << "m=" << m << " rank " << rk << " got " << got << "; ";
      }
    }
  }
  return {ok, ok ? std::to_string(count) + " canonical potentials, m=5..9, grid {0,1,2}" : d.str()};
}

Outcome c9() {
  const HodgeContext ctx(Superspace::odd_euclidean(5));
  const IdealReport r2 = find_ideal(derive_structure(build_m3_algebra(ctx, mono(ctx.space(), {1, 2}))));
  const bool mu2 = r2.status == IdealStatus::NotSimple &&
                   same_span(r2.basis, {Vector{1, 0, 0, 0, 0}, Vector{0, 1, 0, 0, 0}}, 5);
  const IdealReport r3 =
      find_ideal(derive_structure(build_m3_algebra(ctx, mono(ctx.space(), {1, 2}) + mono(ctx.space(), {3, 4}))));
  const bool mu3 = r3.status == IdealStatus::SimpleCertified;
  std::size_t agree = 0;
  std::size_t total = 0;
  for (std::size_t m = 5; m <= 7; ++m) {
    const HodgeContext c(Superspace::odd_euclidean(m));
    std::vector<std::vector<Scalar>> grid{{}};
    for (std::size_t k = 0; k < m / 2; ++k) {
      std::vector<std::vector<Scalar>> next;
      for (const auto& g : grid) {
        for (long a = 2; a >= 0; --a) {
          if (g.empty() || g.back() >= a) {
            auto h = g;
            h.emplace_back(a);
            next.push_back(h);
          }
        }
      }
      grid = next;
    }
    for (const auto& params : grid) {
      const Element v = canonical_element(c.space(), params);
      const std::size_t rk = rank(element_to_skew(v));
      const IdealReport r = find_ideal(derive_structure(build_m3_algebra(c, v)));
      const bool simple = r.status == IdealStatus::SimpleCertified;
      const bool not_simple = r.status == IdealStatus::NotSimple;
      agree += (rk > 2 ? simple : not_simple) ? 1 : 0;
      ++total;
    }
  }
  return {mu2 && mu3 && agree == total, std::string("mu2 ideal span(e1,e2): ") + (mu2 ? "yes" : "no") +
                                            ", mu3 simple: " + (mu3 ? "yes" : "no") + ", grid agreement " +
                                            std::to_string(agree) + "/" + std::to_string(total)};
}

Outcome c10() {
  std::size_t ok = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = static_cast<std::size_t>(uniform(2, 5));
    const std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<long>(m) - 1));
    SpacePtr space = Superspace::odd_euclidean(m);
    if (t % 2) {
      Matrix g(m, m);
      do {
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = i; j < m; ++j) g(i, j) = g(j, i) = small_rational();
        }
      } while (determinant(g) == 0);
      space = Superspace::make(std::vector<Parity>(m, Parity::Odd), g);
    }
    Element mu = random_homogeneous(space, n + 1);
    const Potential p = Potential::homogeneous(mu, n);
    const Potential back = potential_from_structure(derive_structure(p));
    ok += (back.element() == mu && back.arity() == n) ? 1 : 0;
  }
  return {ok == 200, std::to_string(ok) + "/200 potentials recovered"};
}

Outcome c11() {
  std::size_t agree = 0;
  std::size_t passes = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = static_cast<std::size_t>(2 + t % 3);
    const auto space = Superspace::odd_euclidean(m);
    const NaryStructure mu = random_commutative(space, 2);
    const Matrix phi = t % 2 ? random_solution(mu) : random_skew(m);
    const bool qf = check_quasi_frobenius(mu, phi).pass;
    const bool graph = graph_subalgebra_test(t_star_extension(mu), phi).subalgebra;
    agree += qf == graph ? 1 : 0;
    passes += qf ? 1 : 0;
  }
  return {agree == 100, std::to_string(agree) + "/100 verdicts agree (" + std::to_string(passes) + " quasi-Frobenius)"};
}

Outcome c12() {
  std::size_t checked = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    const HodgeContext ctx(Superspace::odd_euclidean(m));
    const auto mons = monomials(ctx);
    for (const auto& a : mons) {
      for (const auto& b : mons) {
        if (!(poisson_bracket(a, b) == bracket_recursive_oracle(a, b))) return {false, "fails on " + show(a) + ", " + show(b)};
        ++checked;
      }
    }
  }
  Matrix g(4, 4);
  g(0, 1) = 1;
  g(1, 0) = -1;
  g(2, 2) = 1;
  g(3, 3) = 2;
  const auto mixed = Superspace::make({Parity::Even, Parity::Even, Parity::Odd, Parity::Odd}, g, 8);
  std::vector<Element> mons{Element::scalar(mixed, 1)};
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<Index> w(len, 0);
    while (true) {
      const Element e = Element::word(mixed, w);
      if (!e.is_zero() && std::is_sorted(w.begin(), w.end())) mons.push_back(e);
      std::size_t k = 0;
      while (k < len && ++w[k] == 4) w[k++] = 0;
      if (k == len) break;
    }
  }
  for (const auto& a : mons) {
    for (const auto& b : mons) {
      if (!(poisson_bracket(a, b) == bracket_recursive_oracle(a, b))) return {false, "fails on " + show(a) + ", " + show(b)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " monomial pairs, pure odd m<=4 and a mixed-parity m=4"};
}

Outcome c13() {
  const HodgeContext ctx(Superspace::odd_euclidean(5));
  std::size_t ok = 0;
  for (int t = 0; t < 50; ++t) {
    const Element mu = random_homogeneous(ctx.space(), 3, t % 5 == 0 ? 0.15 : 0.4);
    auto flat = [](const std::vector<Element>& es) {
      std::vector<Vector> out;
      for (const auto& w : es) {
        const Matrix a = element_to_skew(w);
        Vector v;
        for (std::size_t i = 0; i < 5; ++i) {
          for (std::size_t j = 0; j < 5; ++j) v.push_back(a(i, j));
        }
        out.push_back(v);
      }
      return out;
    };
    ok += same_span(flat(ider(mu)), flat(ider(star(ctx, mu))), 25) ? 1 : 0;
  }
  return {ok == 50, std::to_string(ok) + "/50 subspaces equal"};
}

Outcome c14() {
  std::size_t ok = 0;
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = static_cast<std::size_t>(2 + t % 9);
    const Matrix a = random_skew(m);
    const CanonicalForm c = canonical_form(to_eigen(a));
    const Eigen::MatrixXd rec = c.Q * c.reduced * c.Q.transpose();
    const double residual = (rec - to_eigen(a)).cwiseAbs().rowwise().sum().maxCoeff();
    worst = std::max(worst, residual);
    bool order = c.params.size() == m / 2;
    for (std::size_t k = 0; order && k + 1 < c.params.size(); ++k) order = c.params[k] + 1e-9 >= std::abs(c.params[k + 1]);
    for (std::size_t k = 0; order && k + 1 < c.params.size(); ++k) order = c.params[k] >= -1e-9;
    if (order && m % 2 == 1 && !c.params.empty()) order = c.params.back() >= -1e-9;
    const bool rotation = std::abs(c.Q.determinant() - 1) < 1e-9 &&
                          (c.Q.transpose() * c.Q - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-9;
    ok += (residual <= 1e-9 && order && rotation) ? 1 : 0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  return {ok == 100, std::to_string(ok) + "/100 round trips, worst residual " + buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"m=5 obstruction [mu3,mu3]", c1},
      {"m=6 Jacobi failure on (e1..e5)", c2},
      {"star involution", c3},
      {"inner product orthonormality", c4},
      {"d/delta adjointness", c5},
      {"Hodge decomposition certificate", c6},
      {"Filippov table", c7},
      {"SH Jacobi table", c8},
      {"simplicity via find_ideal", c9},
      {"structure/potential bijection", c10},
      {"quasi-Frobenius vs graph subalgebra", c11},
      {"bracket oracle equivalence", c12},
      {"IDer duality", c13},
      {"canonical form round trip", c14},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("criterion %2zu %s  %s: %s (%.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
