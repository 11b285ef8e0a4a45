#include "nary/tuples.hpp"

#include <algorithm>

namespace nary {

namespace {

void ascending_rec(const Superspace& space, std::size_t n, Index start, Tuple& cur, std::vector<Tuple>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < space.dim(); ++i) {
    cur.push_back(static_cast<Index>(i));
    const Index next = static_cast<Index>(space.parity(i) == Parity::Odd ? i + 1 : i);
    ascending_rec(space, n, next, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Tuple> ascending_tuples(const Superspace& space, std::size_t n) {
  std::vector<Tuple> out;
  Tuple cur;
  cur.reserve(n);
  ascending_rec(space, n, 0, cur, out);
  return out;
}

std::vector<Tuple> all_tuples(std::size_t m, std::size_t n) {
  std::vector<Tuple> out;
  if (m == 0 && n > 0) return out;
  Tuple cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++cur[k] < m) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

int koszul_sign(const Tuple& args, const std::vector<std::size_t>& order, const Superspace& space) {
  int sign = 1;
  for (std::size_t x = 0; x < order.size(); ++x) {
    if (space.parity(args[order[x]]) != Parity::Odd) continue;
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      if (order[y] < order[x] && space.parity(args[order[y]]) == Parity::Odd) sign = -sign;
    }
  }
  return sign;
}

std::vector<Unshuffle> unshuffles(std::size_t n, std::size_t k) {
  std::vector<Unshuffle> out;
  if (k > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  // prev_permutation over a sorted-descending mask yields subsets in
  // lexicographic order of their first block.
  do {
    Unshuffle u;
    for (std::size_t i = 0; i < n; ++i) (pick[i] ? u.first : u.second).push_back(i);
    out.push_back(std::move(u));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<Element> generators_of(const SpacePtr& space, const Tuple& tuple) {
  std::vector<Element> out;
  out.reserve(tuple.size());
  for (auto i : tuple) out.push_back(Element::generator(space, i));
  return out;
}

}  // namespace nary
