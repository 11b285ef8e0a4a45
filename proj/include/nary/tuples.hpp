#pragma once

#include <cstddef>
#include <vector>

#include "nary/element.hpp"

namespace nary {

using Tuple = std::vector<Index>;

// Non-decreasing index tuples of length n; odd generators appear at most
// once. Lexicographic order.
std::vector<Tuple> ascending_tuples(const Superspace& space, std::size_t n);

// All m^n tuples in lexicographic order.
std::vector<Tuple> all_tuples(std::size_t m, std::size_t n);

// Koszul sign (+1/-1) of reordering the arguments into args[order[0]],
// args[order[1]], ...; only odd-odd transpositions contribute.
int koszul_sign(const Tuple& args, const std::vector<std::size_t>& order, const Superspace& space);

// Splits positions 0..n-1 into an ascending first block of size k and its
// ascending complement.
struct Unshuffle {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};
std::vector<Unshuffle> unshuffles(std::size_t n, std::size_t k);

std::vector<Element> generators_of(const SpacePtr& space, const Tuple& tuple);

}  // namespace nary
