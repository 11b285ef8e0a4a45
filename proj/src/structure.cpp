#include "nary/structure.hpp"

#include <string>

#include "nary/derived.hpp"
#include "nary/error.hpp"
#include "nary/poisson.hpp"

namespace nary {

namespace {

std::string tuple_text(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + ")";
}

bool homogeneous_of_degree(const Element& e, std::size_t degree) {
  return e.is_zero() || (e.is_homogeneous() && *e.min_degree() == degree);
}

}  // namespace

Potential Potential::homogeneous(Element mu, std::size_t arity) {
  if (arity == 0) throw Error(ErrorKind::InvalidArgument, "homogeneous potentials need arity >= 1");
  if (!homogeneous_of_degree(mu, arity + 1)) {
    throw Error(ErrorKind::DegreeMismatch, "potential is not homogeneous of degree " + std::to_string(arity + 1));
  }
  return Potential(std::move(mu), arity, false);
}

Potential Potential::family(Element mu) {
  if (mu.coefficient(Monomial()) != 0) throw Error(ErrorKind::DegreeMismatch, "family potential has a constant term");
  if (!mu.is_zero() && !mu.is_odd()) throw Error(ErrorKind::NotOdd, "family potential must be odd");
  const std::size_t arity = mu.is_zero() ? 0 : *mu.max_degree() - 1;
  return Potential(std::move(mu), arity, true);
}

Potential Potential::family(const std::vector<Element>& layers) {
  if (layers.empty()) throw Error(ErrorKind::InvalidArgument, "family potential needs at least one layer");
  Element total(layers.front().space());
  for (std::size_t k = 0; k < layers.size(); ++k) {
    if (!homogeneous_of_degree(layers[k], k + 1)) {
      throw Error(ErrorKind::DegreeMismatch, "layer " + std::to_string(k) + " is not in S^" + std::to_string(k + 1));
    }
    total += layers[k];
  }
  return family(std::move(total));
}

NaryStructure::NaryStructure(SpacePtr space, std::size_t arity, Mode mode)
    : space_(std::move(space)), arity_(arity), mode_(mode) {}

void NaryStructure::set(Tuple args, const Vector& value) {
  if (args.size() != arity_) throw Error(ErrorKind::InvalidArgument, "tuple length differs from arity");
  if (value.size() != space_->dim()) throw Error(ErrorKind::InvalidArgument, "value has wrong dimension");
  for (auto i : args) {
    if (i >= space_->dim()) throw Error(ErrorKind::InvalidArgument, "index out of range");
  }
  Vector v = value;
  if (mode_ == Mode::Symmetric) {
    auto [mono, sign] = canonicalize(std::move(args), *space_);
    if (sign == 0) {
      if (!nary::is_zero(value)) {
        throw Error(ErrorKind::InvalidArgument, "nonzero value on a repeated odd argument");
      }
      return;
    }
    args = mono.indices();
    if (sign < 0) {
      for (auto& x : v) x = -x;
    }
  }
  if (nary::is_zero(v)) {
    table_.erase(args);
  } else {
    table_[args] = std::move(v);
  }
}

Vector NaryStructure::evaluate(const Tuple& args) const {
  if (args.size() != arity_) throw Error(ErrorKind::InvalidArgument, "tuple length differs from arity");
  if (mode_ == Mode::Explicit) {
    const auto it = table_.find(args);
    return it == table_.end() ? Vector(space_->dim()) : it->second;
  }
  auto [mono, sign] = canonicalize(args, *space_);
  if (sign == 0) return Vector(space_->dim());
  const auto it = table_.find(mono.indices());
  if (it == table_.end()) return Vector(space_->dim());
  Vector v = it->second;
  if (sign < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

namespace {

void expand(const NaryStructure& s, const std::vector<Vector>& args, std::size_t pos, Tuple& cur,
            const Scalar& coeff, Vector& out) {
  if (pos == args.size()) {
    const Vector v = s.evaluate(cur);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) out[k] += coeff * v[k];
    }
    return;
  }
  for (std::size_t i = 0; i < args[pos].size(); ++i) {
    if (args[pos][i] == 0) continue;
    cur[pos] = static_cast<Index>(i);
    expand(s, args, pos + 1, cur, coeff * args[pos][i], out);
  }
}

}  // namespace

Vector NaryStructure::evaluate(const std::vector<Vector>& args) const {
  if (args.size() != arity_) throw Error(ErrorKind::InvalidArgument, "argument count differs from arity");
  Vector out(space_->dim());
  Tuple cur(arity_);
  expand(*this, args, 0, cur, Scalar(1), out);
  return out;
}

bool operator==(const NaryStructure& a, const NaryStructure& b) {
  if (a.arity_ != b.arity_) return false;
  if (a.space_ != b.space_ && !(*a.space_ == *b.space_)) return false;
  if (a.mode_ == NaryStructure::Mode::Symmetric && b.mode_ == NaryStructure::Mode::Symmetric) {
    return a.table_ == b.table_;
  }
  for (const auto& t : all_tuples(a.space_->dim(), a.arity_)) {
    if (a.evaluate(t) != b.evaluate(t)) return false;
  }
  return true;
}

namespace {

// Fills positions pos..0 of an ascending tuple whose entries above pos are
// already fixed; `inner` is the bracket of mu with those entries.
void derive_rec(const Element& inner, std::size_t pos, std::size_t bound, Tuple& cur, NaryStructure& out) {
  if (inner.is_zero()) return;
  const SpacePtr& space = inner.space();
  for (std::size_t i = 0; i <= bound && i < space->dim(); ++i) {
    if (pos + 1 < cur.size() && i == cur[pos + 1] && space->parity(i) == Parity::Odd) continue;
    cur[pos] = static_cast<Index>(i);
    Element next = poisson_bracket(Element::generator(space, i), inner);
    if (pos == 0) {
      if (!next.is_zero()) out.set(cur, next.linear_coords());
    } else {
      derive_rec(next, pos - 1, i, cur, out);
    }
  }
}

}  // namespace

NaryStructure derive_structure(const Element& mu, std::size_t arity) {
  if (!homogeneous_of_degree(mu, arity + 1)) {
    throw Error(ErrorKind::DegreeMismatch, "potential degree differs from arity + 1");
  }
  NaryStructure out(mu.space(), arity);
  if (mu.is_zero()) return out;
  if (arity == 0) {
    out.set({}, mu.linear_coords());
    return out;
  }
  Tuple cur(arity);
  derive_rec(mu, arity - 1, mu.space()->dim(), cur, out);
  return out;
}

NaryStructure derive_structure(const Potential& mu) {
  if (mu.is_family()) throw Error(ErrorKind::InvalidArgument, "family potential: derive each layer separately");
  return derive_structure(mu.element(), mu.arity());
}

std::vector<NaryStructure> derive_layers(const Potential& mu) {
  std::vector<NaryStructure> out;
  if (!mu.is_family()) {
    out.push_back(derive_structure(mu));
    return out;
  }
  for (std::size_t k = 0; k <= mu.arity(); ++k) out.push_back(derive_structure(mu.layer(k), k));
  return out;
}

Potential potential_from_structure(const NaryStructure& s) {
  const SpacePtr& space = s.space();
  if (!space->nondegenerate()) throw Error(ErrorKind::Degenerate, "form is degenerate");
  if (s.arity() == 0) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  const Report comm = check_commutative(s);
  if (!comm.pass) throw Error(ErrorKind::NotCommutative, "violated at " + tuple_text(comm.witness->tuple));
  const Report inv = check_invariant(s);
  if (!inv.pass) throw Error(ErrorKind::NotInvariant, "violated at " + tuple_text(inv.witness->tuple));

  // Dual basis f_i with [f_i, e_k] = delta_ik.
  const Matrix ginv = *inverse(space->gram());
  std::vector<Vector> f_coords;
  std::vector<Element> f;
  for (std::size_t i = 0; i < space->dim(); ++i) {
    f_coords.push_back(ginv.row(i));
    f.push_back(Element::linear(space, f_coords.back()));
  }

  Element mu(space);
  for (const auto& m : ascending_tuples(*space, s.arity() + 1)) {
    std::vector<Vector> args;
    for (std::size_t k = 1; k < m.size(); ++k) args.push_back(f_coords[m[k]]);
    const Scalar numerator = s.evaluate(args)[m[0]];
    if (numerator == 0) continue;
    std::vector<Element> fs;
    for (auto i : m) fs.push_back(f[i]);
    const Monomial mono(m);
    const Element kappa = nested_bracket(fs, Element::monomial(space, mono));
    mu.add(mono, numerator / kappa.coefficient(Monomial()));
  }
  Potential out = Potential::homogeneous(std::move(mu), s.arity());
  if (!(derive_structure(out) == s)) throw Error(ErrorKind::NotInvariant, "structure is not derived from a potential");
  return out;
}

}  // namespace nary
