#include "nary/element.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "nary/error.hpp"
#include "nary/kernels.hpp"

namespace nary {

Monomial Monomial::from_mask(std::uint64_t mask) {
  std::vector<Index> idx;
  idx.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    idx.push_back(static_cast<Index>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return Monomial(std::move(idx));
}

std::uint64_t Monomial::mask() const {
  std::uint64_t m = 0;
  for (auto i : idx_) m |= std::uint64_t{1} << i;
  return m;
}

int Monomial::parity(const Superspace& space) const {
  int p = 0;
  for (auto i : idx_) p ^= bit(space.parity(i));
  return p;
}

std::pair<Monomial, int> canonicalize(std::vector<Index> word, const Superspace& space) {
  int sign = 1;
  // Insertion sort; swapping two odd generators flips the sign.
  for (std::size_t i = 1; i < word.size(); ++i) {
    for (std::size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
      if (space.parity(word[j]) == Parity::Odd && space.parity(word[j - 1]) == Parity::Odd) sign = -sign;
      std::swap(word[j - 1], word[j]);
    }
  }
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] == word[i - 1] && space.parity(word[i]) == Parity::Odd) return {Monomial(), 0};
  }
  return {Monomial(std::move(word)), sign};
}

std::pair<Monomial, int> monomial_product(const Monomial& a, const Monomial& b, const Superspace& space) {
  const auto& x = a.indices();
  const auto& y = b.indices();
  std::vector<Index> out;
  out.reserve(x.size() + y.size());
  int sign = 1;
  std::size_t i = 0;
  std::size_t j = 0;
  // odd_left = number of odd factors of a not yet emitted.
  std::size_t odd_left = 0;
  for (auto k : x) odd_left += bit(space.parity(k));
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i] <= y[j])) {
      if (j < y.size() && x[i] == y[j] && space.parity(x[i]) == Parity::Odd) return {Monomial(), 0};
      odd_left -= bit(space.parity(x[i]));
      out.push_back(x[i++]);
    } else {
      if (space.parity(y[j]) == Parity::Odd && (odd_left & 1U)) sign = -sign;
      out.push_back(y[j++]);
    }
  }
  return {Monomial(std::move(out)), sign};
}

Element Element::scalar(SpacePtr space, const Scalar& c) {
  Element e(std::move(space));
  e.add(Monomial(), c);
  return e;
}

Element Element::generator(SpacePtr space, std::size_t i, const Scalar& c) {
  if (i >= space->dim()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  Element e(std::move(space));
  e.add(Monomial({static_cast<Index>(i)}), c);
  return e;
}

Element Element::monomial(SpacePtr space, Monomial mono, const Scalar& c) {
  Element e(std::move(space));
  e.add(mono, c);
  return e;
}

Element Element::word(SpacePtr space, std::vector<Index> w, const Scalar& c) {
  for (auto i : w) {
    if (i >= space->dim()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  }
  auto [mono, sign] = canonicalize(std::move(w), *space);
  Element e(std::move(space));
  if (sign != 0) e.add(mono, c * sign);
  return e;
}

Element Element::linear(SpacePtr space, const Vector& coords) {
  Element e(space);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) e.add(Monomial({static_cast<Index>(i)}), coords[i]);
  }
  return e;
}

Scalar Element::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  if (space_->has_even() && m.degree() > space_->max_degree()) {
    throw Error(ErrorKind::DegreeCapExceeded,
                "degree " + std::to_string(m.degree()) + " exceeds cap " + std::to_string(space_->max_degree()));
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::size_t> Element::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

std::optional<std::size_t> Element::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

bool Element::is_homogeneous() const { return terms_.empty() || *min_degree() == *max_degree(); }

std::optional<int> Element::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    const int q = m.parity(*space_);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p;
}

Element Element::homogeneous_part(std::size_t degree) const {
  Element out(space_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Element Element::positive_part() const {
  Element out(space_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > 0) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Vector Element::linear_coords() const {
  Vector v(space_->dim());
  for (const auto& [m, c] : terms_) {
    if (m.degree() == 1) v[m.indices()[0]] = c;
    if (m.degree() > 1) throw Error(ErrorKind::WrongDegree, "expected an element of degree <= 1");
  }
  return v;
}

Element& Element::operator+=(const Element& other) {
  require_same_space(space_, other.space_);
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_space(space_, other.space_);
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (a.space_ != b.space_ && !(*a.space_ == *b.space_)) return false;
  return a.terms_ == b.terms_;
}

namespace {

Element multiply_pure_odd(const Element& a, const Element& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<std::uint64_t> lhs(n);
  std::vector<std::uint64_t> rhs(n);
  std::vector<const Scalar*> lc(n);
  std::vector<const Scalar*> rc(n);
  std::size_t k = 0;
  for (const auto& [ma, ca] : a.terms()) {
    const std::uint64_t mask_a = ma.mask();
    for (const auto& [mb, cb] : b.terms()) {
      lhs[k] = mask_a;
      rhs[k] = mb.mask();
      lc[k] = &ca;
      rc[k] = &cb;
      ++k;
    }
  }
  std::vector<std::uint64_t> mask(n);
  std::vector<std::int8_t> sign(n);
  kernels::blade_product(lhs, rhs, mask, sign);
  Element out(a.space());
  for (std::size_t i = 0; i < n; ++i) {
    if (sign[i] == 0) continue;
    Scalar c = *lc[i] * *rc[i];
    if (sign[i] < 0) c = -c;
    out.add(Monomial::from_mask(mask[i]), c);
  }
  return out;
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  require_same_space(a.space(), b.space());
  const Superspace& space = *a.space();
  if (a.is_zero() || b.is_zero()) return Element(a.space());
  if (space.pure_odd() && space.dim() <= 64) return multiply_pure_odd(a, b);
  Element out(a.space());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [m, s] = monomial_product(ma, mb, space);
      if (s != 0) out.add(m, s > 0 ? Scalar(ca * cb) : Scalar(-(ca * cb)));
    }
  }
  return out;
}

}  // namespace nary
