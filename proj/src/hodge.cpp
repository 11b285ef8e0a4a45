#include "nary/hodge.hpp"

#include <algorithm>
#include <bit>

#include "nary/error.hpp"
#include "nary/poisson.hpp"
#include "nary/tuples.hpp"

namespace nary {

namespace {

constexpr std::size_t kMaxContextDim = 20;
constexpr std::size_t kMaxHomogeneousDim = 14;
constexpr std::size_t kMaxFullDim = 8;

std::size_t binomial(std::size_t n, long k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) r = r * (n - i + 1) / i;
  return r;
}

bool in_range(long p, std::size_t m) { return p >= 0 && static_cast<std::size_t>(p) <= m; }

int layer_sign(long k) {
  // (-1)^{k(1-k)/2}; k(1-k) is always even.
  const long e = k * (1 - k) / 2;
  return (e % 2 == 0) ? 1 : -1;
}

Matrix hstack(const std::vector<Vector>& columns, std::size_t rows) { return Matrix::from_columns(columns, rows); }

Matrix vstack(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

}  // namespace

HodgeContext::HodgeContext(SpacePtr space) : space_(std::move(space)), top_(space_) {
  if (!space_->pure_odd() || !space_->identity_gram()) {
    throw Error(ErrorKind::NotHodgeContext, "needs a pure odd space with identity gram");
  }
  const std::size_t m = space_->dim();
  if (m > kMaxContextDim) throw Error(ErrorKind::SizeGuard, "dimension too large for the Hodge context");
  std::vector<Index> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<Index>(i);
  top_ = Element::monomial(space_, Monomial(all));
  basis_.resize(m + 1);
  position_.resize(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    basis_[static_cast<std::size_t>(std::popcount(mask))].push_back(Monomial::from_mask(mask));
  }
  for (auto& b : basis_) {
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i) position_[b[i].mask()] = i;
  }
}

Vector HodgeContext::coords(const Element& v, std::size_t p) const {
  Vector out(basis_[p].size());
  for (const auto& [mono, c] : v.terms()) {
    if (mono.degree() == p) out[position(mono)] = c;
  }
  return out;
}

Element HodgeContext::element(const Vector& coords, std::size_t p) const {
  Element out(space_);
  for (std::size_t i = 0; i < coords.size(); ++i) out.add(basis_[p][i], coords[i]);
  return out;
}

Element star(const HodgeContext& ctx, const Element& v) {
  require_same_space(ctx.space(), v.space());
  Element out(ctx.space());
  for (const auto& [mono, c] : v.terms()) {
    out += nested_bracket(generators_of(ctx.space(), mono.indices()), ctx.top_form()) * c;
  }
  return out;
}

Scalar inner_product(const HodgeContext& ctx, const Element& v, const Element& w) {
  Scalar total = 0;
  const Monomial top = ctx.top_form().terms().begin()->first;
  for (std::size_t p = 0; p <= ctx.dim(); ++p) {
    const Element vp = v.homogeneous_part(p);
    const Element wp = w.homogeneous_part(p);
    if (vp.is_zero() || wp.is_zero()) continue;
    const Scalar c = (vp * star(ctx, wp)).coefficient(top);
    total += ((p * (p - 1) / 2) % 2 == 0) ? c : Scalar(-c);
  }
  return total;
}

Element apply_differential(const HodgeContext& ctx, const Element& mu, const Element& v) {
  require_same_space(ctx.space(), mu.space());
  return poisson_bracket(mu, v);
}

Element apply_codifferential(const HodgeContext& ctx, const Element& mu, const Element& v) {
  require_same_space(ctx.space(), mu.space());
  Element out(ctx.space());
  if (mu.is_zero() || v.is_zero()) return out;
  const Element sv = star(ctx, v);
  for (std::size_t q = *mu.min_degree(); q <= *mu.max_degree(); ++q) {
    const Element mu_k = mu.homogeneous_part(q);
    if (mu_k.is_zero()) continue;
    Element term = star(ctx, poisson_bracket(mu_k, sv));
    if (layer_sign(static_cast<long>(q) - 2) < 0) term *= Scalar(-1);
    out += term;
  }
  return out;
}

Matrix GradedOperator::block(std::size_t p, std::size_t q) const {
  const auto it = blocks.find({p, q});
  if (it != blocks.end()) return it->second;
  return Matrix(binomial(m, static_cast<long>(q)), binomial(m, static_cast<long>(p)));
}

Matrix GradedOperator::full() const {
  std::vector<std::size_t> offset(m + 2, 0);
  for (std::size_t p = 0; p <= m; ++p) offset[p + 1] = offset[p] + binomial(m, static_cast<long>(p));
  Matrix out(offset[m + 1], offset[m + 1]);
  for (const auto& [key, block] : blocks) {
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        if (block(r, c) != 0) out(offset[key.second] + r, offset[key.first] + c) = block(r, c);
  }
  return out;
}

namespace {

template <class F>
GradedOperator assemble(const HodgeContext& ctx, F&& apply, bool check_square) {
  GradedOperator op;
  op.m = ctx.dim();
  for (std::size_t p = 0; p <= ctx.dim(); ++p) {
    const auto& basis = ctx.basis(p);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Element img = apply(Element::monomial(ctx.space(), basis[j]));
      if (check_square && !apply(img).is_zero()) {
        throw Error(ErrorKind::NotLInfinity, "d^2 does not vanish");
      }
      for (const auto& [mono, c] : img.terms()) {
        const std::size_t q = mono.degree();
        auto it = op.blocks.find({p, q});
        if (it == op.blocks.end()) {
          it = op.blocks.emplace(std::make_pair(p, q), Matrix(ctx.basis(q).size(), basis.size())).first;
        }
        it->second(ctx.position(mono), j) = c;
      }
    }
  }
  return op;
}

}  // namespace

GradedOperator differential(const HodgeContext& ctx, const Element& mu) {
  return assemble(ctx, [&](const Element& v) { return apply_differential(ctx, mu, v); }, true);
}

GradedOperator codifferential(const HodgeContext& ctx, const Element& mu) {
  return assemble(ctx, [&](const Element& v) { return apply_codifferential(ctx, mu, v); }, true);
}

namespace {

struct Bundle {
  std::size_t dim;
  Matrix d_in, d_out, delta_in, delta_out;  // maps into / out of the bundle
};

struct BundleResult {
  std::size_t im_d, im_delta, cohomology;
  std::vector<Vector> harmonic;
  bool count_ok, direct_ok, kostant_ok, cohomology_ok, disjoint_ok;
};

BundleResult analyse(const Bundle& b) {
  BundleResult r{};
  const auto im_d = column_space(b.d_in);
  const auto im_delta = column_space(b.delta_in);
  const Matrix laplacian = b.d_in * b.delta_out + b.delta_in * b.d_out;
  r.harmonic = reduced_basis(nullspace(laplacian), b.dim);
  r.im_d = im_d.size();
  r.im_delta = im_delta.size();

  r.count_ok = r.im_d + r.im_delta + r.harmonic.size() == b.dim;
  std::vector<Vector> all = im_d;
  all.insert(all.end(), im_delta.begin(), im_delta.end());
  all.insert(all.end(), r.harmonic.begin(), r.harmonic.end());
  r.direct_ok = r.count_ok && (all.empty() ? b.dim == 0 : rank(hstack(all, b.dim)) == b.dim);

  const auto ker_both = nullspace(vstack(b.d_out, b.delta_out));
  r.kostant_ok = same_span(ker_both, r.harmonic, b.dim);

  const std::size_t rank_d_out = rank(b.d_out);
  r.cohomology = b.dim - rank_d_out - r.im_d;
  r.cohomology_ok = r.cohomology == r.harmonic.size();

  r.disjoint_ok = rank(b.d_in * b.delta_out) == rank(b.delta_out) && rank(b.delta_in * b.d_out) == rank_d_out;
  return r;
}

}  // namespace

HodgeReport hodge_decomposition(const HodgeContext& ctx, const Element& mu) {
  require_same_space(ctx.space(), mu.space());
  const std::size_t m = ctx.dim();
  HodgeReport rep;
  rep.homogeneous = mu.is_homogeneous();
  if (m > (rep.homogeneous ? kMaxHomogeneousDim : kMaxFullDim)) {
    throw Error(ErrorKind::SizeGuard, "dimension above the Hodge size guard");
  }
  rep.d = differential(ctx, mu);
  rep.delta = codifferential(ctx, mu);
  rep.total.dim = std::size_t{1} << m;
  rep.dimension_count_ok = rep.direct_sum_ok = rep.kostant_ok = rep.cohomology_ok = rep.disjoint_ok = true;

  auto merge = [&](const BundleResult& r) {
    rep.total.im_d += r.im_d;
    rep.total.im_delta += r.im_delta;
    rep.total.ker_laplacian += r.harmonic.size();
    rep.total.cohomology += r.cohomology;
    rep.dimension_count_ok = rep.dimension_count_ok && r.count_ok;
    rep.direct_sum_ok = rep.direct_sum_ok && r.direct_ok;
    rep.kostant_ok = rep.kostant_ok && r.kostant_ok;
    rep.cohomology_ok = rep.cohomology_ok && r.cohomology_ok;
    rep.disjoint_ok = rep.disjoint_ok && r.disjoint_ok;
  };

  if (rep.homogeneous) {
    const long shift = mu.is_zero() ? 0 : static_cast<long>(*mu.min_degree()) - 2;
    for (std::size_t p = 0; p <= m; ++p) {
      const long lp = static_cast<long>(p);
      auto blk = [&](const GradedOperator& op, long src, long dst) {
        if (!in_range(src, m) || !in_range(dst, m)) return Matrix(binomial(m, dst), binomial(m, src));
        return op.block(static_cast<std::size_t>(src), static_cast<std::size_t>(dst));
      };
      Bundle b{binomial(m, lp), blk(rep.d, lp - shift, lp), blk(rep.d, lp, lp + shift),
               blk(rep.delta, lp + shift, lp), blk(rep.delta, lp, lp - shift)};
      const BundleResult r = analyse(b);
      merge(r);
      HodgeDegree deg;
      deg.p = p;
      deg.dim = b.dim;
      deg.rank_d = rank(b.d_out);
      deg.rank_delta = rank(b.delta_out);
      deg.ker_laplacian = r.harmonic.size();
      deg.cohomology = r.cohomology;
      rep.degrees.push_back(deg);
      for (const auto& h : r.harmonic) rep.harmonic.push_back(ctx.element(h, p));
    }
    return rep;
  }

  const Matrix d = rep.d.full();
  const Matrix delta = rep.delta.full();
  const BundleResult r = analyse(Bundle{rep.total.dim, d, d, delta, delta});
  merge(r);
  for (std::size_t p = 0; p <= m; ++p) {
    HodgeDegree deg;
    deg.p = p;
    deg.dim = binomial(m, static_cast<long>(p));
    Matrix dp(0, deg.dim);
    Matrix deltap(0, deg.dim);
    for (std::size_t q = 0; q <= m; ++q) {
      dp = vstack(dp, rep.d.block(p, q));
      deltap = vstack(deltap, rep.delta.block(p, q));
    }
    deg.rank_d = rank(dp);
    deg.rank_delta = rank(deltap);
    rep.degrees.push_back(deg);
  }
  std::size_t offset = 0;
  std::vector<std::size_t> starts;
  for (std::size_t p = 0; p <= m; ++p) {
    starts.push_back(offset);
    offset += binomial(m, static_cast<long>(p));
  }
  for (const auto& h : r.harmonic) {
    Element e(ctx.space());
    for (std::size_t p = 0; p <= m; ++p) {
      Vector part(h.begin() + static_cast<std::ptrdiff_t>(starts[p]),
                  h.begin() + static_cast<std::ptrdiff_t>(starts[p] + binomial(m, static_cast<long>(p))));
      e += ctx.element(part, p);
    }
    rep.harmonic.push_back(std::move(e));
  }
  return rep;
}

}  // namespace nary
