#include "nary/poisson.hpp"

#include <bit>

#include "nary/kernels.hpp"

namespace nary {

namespace {

// Nonzero gram entries, row by row.
struct GramRows {
  std::vector<std::vector<std::pair<Index, Scalar>>> rows;

  explicit GramRows(const Superspace& space) : rows(space.dim()) {
    for (std::size_t i = 0; i < space.dim(); ++i) {
      for (std::size_t j = 0; j < space.dim(); ++j) {
        if (space.form(i, j) != 0) rows[i].emplace_back(static_cast<Index>(j), space.form(i, j));
      }
    }
  }
};

void bracket_masks(std::uint64_t mu, std::uint64_t mw, const Scalar& c, const GramRows& g, Element& out) {
  for (std::uint64_t rest_u = mu; rest_u; rest_u &= rest_u - 1) {
    const int i = std::countr_zero(rest_u);
    const std::uint64_t bi = std::uint64_t{1} << i;
    // Odd factors after x_i in u.
    const int eps = (std::popcount(mu & ~((bi << 1) - 1)) & 1) ? -1 : 1;
    const std::uint64_t u_rest = mu ^ bi;
    for (const auto& [j, gij] : g.rows[static_cast<std::size_t>(i)]) {
      const std::uint64_t bj = std::uint64_t{1} << j;
      if (!(mw & bj)) continue;
      const int delta = (std::popcount(mw & (bj - 1)) & 1) ? -1 : 1;
      const std::uint64_t w_rest = mw ^ bj;
      const int s = kernels::blade_sign(u_rest, w_rest);
      if (s == 0) continue;
      Scalar coeff = c * gij;
      if (eps * delta * s < 0) coeff = -coeff;
      out.add(Monomial::from_mask(u_rest | w_rest), coeff);
    }
  }
}

std::vector<Index> drop(const std::vector<Index>& v, std::size_t pos) {
  std::vector<Index> r;
  r.reserve(v.size() - 1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != pos) r.push_back(v[k]);
  }
  return r;
}

void bracket_monomials(const Monomial& u, const Monomial& w, const Scalar& c, const Superspace& space,
                       const GramRows& g, Element& out) {
  const auto& x = u.indices();
  const auto& y = w.indices();
  std::vector<int> odd_after(x.size() + 1, 0);
  for (std::size_t k = x.size(); k-- > 0;) odd_after[k] = odd_after[k + 1] + bit(space.parity(x[k]));
  std::vector<int> odd_before(y.size() + 1, 0);
  for (std::size_t k = 0; k < y.size(); ++k) odd_before[k + 1] = odd_before[k] + bit(space.parity(y[k]));

  for (std::size_t i = 0; i < x.size(); ++i) {
    const int eps = (bit(space.parity(x[i])) * odd_after[i + 1]) & 1 ? -1 : 1;
    const Monomial u_rest(drop(x, i));
    for (const auto& [yj, gij] : g.rows[x[i]]) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] != yj) continue;
        const int delta = (bit(space.parity(y[j])) * odd_before[j]) & 1 ? -1 : 1;
        auto [m, s] = monomial_product(u_rest, Monomial(drop(y, j)), space);
        if (s == 0) continue;
        Scalar coeff = c * gij;
        if (eps * delta * s < 0) coeff = -coeff;
        out.add(m, coeff);
      }
    }
  }
}

int word_parity(const std::vector<Index>& w, const Superspace& space) {
  int p = 0;
  for (auto i : w) p ^= bit(space.parity(i));
  return p;
}

Element word_bracket(const std::vector<Index>& u, const std::vector<Index>& w, const SpacePtr& space) {
  if (u.empty() || w.empty()) return Element(space);
  if (u.size() == 1 && w.size() == 1) return Element::scalar(space, space->form(u[0], w[0]));
  if (w.size() >= 2) {
    const std::vector<Index> w1{w[0]};
    const std::vector<Index> w2(w.begin() + 1, w.end());
    Element first = word_bracket(u, w1, space) * Element::word(space, w2);
    Element second = Element::word(space, w1) * word_bracket(u, w2, space);
    if (word_parity(u, *space) & word_parity(w1, *space)) second *= Scalar(-1);
    return first + second;
  }
  Element swapped = word_bracket(w, u, space);
  // [u,w] = -(-1)^{|u||w|} [w,u]
  if (!(word_parity(u, *space) & word_parity(w, *space))) swapped *= Scalar(-1);
  return swapped;
}

}  // namespace

Element poisson_bracket(const Element& a, const Element& b) {
  require_same_space(a.space(), b.space());
  const Superspace& space = *a.space();
  Element out(a.space());
  if (a.is_zero() || b.is_zero()) return out;
  const GramRows g(space);
  const bool masks = space.pure_odd() && space.dim() <= 64;
  for (const auto& [u, cu] : a.terms()) {
    if (u.is_unit()) continue;
    const std::uint64_t mu = masks ? u.mask() : 0;
    for (const auto& [w, cw] : b.terms()) {
      if (w.is_unit()) continue;
      const Scalar c = cu * cw;
      if (masks) {
        bracket_masks(mu, w.mask(), c, g, out);
      } else {
        bracket_monomials(u, w, c, space, g, out);
      }
    }
  }
  return out;
}

Element bracket_recursive_oracle(const Element& a, const Element& b) {
  require_same_space(a.space(), b.space());
  Element out(a.space());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [w, cw] : b.terms()) {
      out += word_bracket(u.indices(), w.indices(), a.space()) * Scalar(cu * cw);
    }
  }
  return out;
}

Element nested_bracket(const std::vector<Element>& args, const Element& target) {
  Element acc = target;
  for (auto it = args.rbegin(); it != args.rend(); ++it) acc = poisson_bracket(*it, acc);
  return acc;
}

}  // namespace nary
