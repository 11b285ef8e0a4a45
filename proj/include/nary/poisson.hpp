#pragma once

#include <vector>

#include "nary/element.hpp"

namespace nary {

// Poisson bracket on S*V extending [e_i, e_j] = G[i][j] as a biderivation.
// On monomials u = x_1...x_p, w = y_1...y_q:
//   [u, w] = sum_{i,j} eps_i delta_j G[x_i][y_j] (u without x_i)(w without y_j)
// with eps_i the sign of moving x_i to the right end of u and delta_j the
// sign of moving y_j to the front of w.
Element poisson_bracket(const Element& a, const Element& b);

// Independent reference: expands both arguments into words and applies the
// generator rule, the right Leibniz rule and graded antisymmetry literally.
// Exponential; meant for testing.
Element bracket_recursive_oracle(const Element& a, const Element& b);

// [a_1, [a_2, ..., [a_s, target]...]].
Element nested_bracket(const std::vector<Element>& args, const Element& target);

}  // namespace nary
