#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nary/structure.hpp"

namespace nary {

struct VerifyOptions {
  // Collect every violation instead of stopping at the first.
  bool exhaustive = false;
  unsigned threads = 1;
};

struct Violation {
  Tuple tuple;  // 0-based generator indices
  Element residual;
};

// Outcome of an identity check. witness is the lexicographically first
// failing tuple; violations is filled only in exhaustive mode.
struct Report {
  bool pass = true;
  std::optional<Violation> witness;
  std::vector<Violation> violations;
  std::size_t checked = 0;
};

// {..,a_i,a_{i+1},..} = (-1)^{|a_i||a_{i+1}|} {..,a_{i+1},a_i,..}.
Report check_commutative(const NaryStructure& s, const VerifyOptions& opt = {});

// (a_0,{a_1,...,a_n}) = (-1)^{|a_0||a_1|} (a_1,{a_0,a_2,...,a_n}).
Report check_invariant(const NaryStructure& s, const VerifyOptions& opt = {});

struct LInfinityReport {
  bool is_l_infinity = true;
  Element square;       // [mu, mu]
  Element obstruction;  // degree >= 1 part of [mu, mu]
};

// Passes iff [mu, mu] is a constant. NotOdd unless mu is odd.
LInfinityReport check_l_infinity(const Element& mu);
LInfinityReport check_l_infinity(const Potential& mu);

// Sum over unshuffles (I,J), |I| = n, of (-1)^{(I,J)} {{a_I}, a_J} on basis
// tuples of length 2n-1. Symmetric structures are checked on ascending tuples,
// explicit ones on all tuples. The residual is an element of V.
Report check_nary_jacobi(const NaryStructure& s, const VerifyOptions& opt = {});

// Generalized Jacobi identities of the family mu_k, evaluated through the
// layer maps mu~_s(a_1..a_s) = [a_1,[...[a_s, mu_s]]]:
//   sum_{k+l=N} sum_{(J^k, I^l)} (-1)^{(J,I)} mu~_{k+1}(a_J, mu~_l(a_I)) = 0.
// The witness tuple has length N.
Report check_generalized_jacobi(const Potential& mu, const VerifyOptions& opt = {});

// [mu_{a_1..a_{n-1}}, mu] = 0 on ascending (n-1)-tuples. NotPureOdd.
Report check_filippov(const Potential& mu, const VerifyOptions& opt = {});

// [A_x, A_{[A_x,x]}] = 0 with A_x = [x, A], fully polarized: for i <= j <= k
// the sum of T(x,y,z) = [A_x, [[y, A_z], A]] over the distinct orderings of
// (e_i, e_j, e_k) must vanish. NotPureEven, WrongDegree.
Report check_jordan(const Potential& A, const VerifyOptions& opt = {});

// [mu_{e_i}, mu_{e_j}] = 0 for i <= j. NotPureEven, WrongDegree.
Report check_associative(const Potential& mu, const VerifyOptions& opt = {});

// [w, mu] = 0 for w in S^2 V (WrongDegree otherwise). The residual tuple is
// empty.
Report check_derivation(const Element& w, const Potential& mu);

}  // namespace nary
