#include "nary/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "nary/error.hpp"
#include "nary/poisson.hpp"

namespace nary {

namespace {

void require_orthonormal_odd(const Superspace& space) {
  if (!space.pure_odd() || !space.identity_gram()) {
    throw Error(ErrorKind::NotHodgeContext, "needs a pure odd space with identity gram");
  }
}

Matrix vstack_all(const std::vector<Matrix>& ms, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : ms) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = m(r, c);
    r0 += m.rows();
  }
  return out;
}

}  // namespace

Element skew_to_element(const SpacePtr& space, const Matrix& A) {
  require_orthonormal_odd(*space);
  if (A.rows() != space->dim() || !A.is_skew()) throw Error(ErrorKind::NotSkew, "matrix is not skew-symmetric");
  Element w(space);
  for (std::size_t a = 0; a < A.rows(); ++a) {
    for (std::size_t b = a + 1; b < A.cols(); ++b) {
      if (A(a, b) != 0) w.add(Monomial({static_cast<Index>(a), static_cast<Index>(b)}), A(a, b));
    }
  }
  return w;
}

Matrix adjoint_matrix(const Element& w) {
  const SpacePtr& space = w.space();
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < space->dim(); ++c) {
    cols.push_back(poisson_bracket(w, Element::generator(space, c)).linear_coords());
  }
  return Matrix::from_columns(cols, space->dim());
}

Matrix element_to_skew(const Element& w) {
  require_orthonormal_odd(*w.space());
  if (!w.is_zero() && !(w.is_homogeneous() && *w.min_degree() == 2)) {
    throw Error(ErrorKind::WrongDegree, "expected an element of S^2V");
  }
  return adjoint_matrix(w);
}

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).get_d();
  return out;
}

CanonicalForm canonical_form(const Eigen::MatrixXd& A, double tolerance) {
  using Eigen::Index;
  const Index n = A.rows();
  if (A.cols() != n) throw Error(ErrorKind::NotSkew, "matrix is not square");
  if (n > 0 && (A + A.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorKind::NotSkew, "matrix is not skew-symmetric within 1e-12");
  }
  CanonicalForm out;
  out.Q = Eigen::MatrixXd::Identity(n, n);
  out.reduced = Eigen::MatrixXd::Zero(n, n);
  out.params.assign(static_cast<std::size_t>(n / 2), 0.0);
  if (n == 0) return out;

  const Eigen::MatrixXd S = (A - A.transpose()) / 2;
  Eigen::RealSchur<Eigen::MatrixXd> schur(S);
  if (schur.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "real Schur decomposition failed");
  const Eigen::MatrixXd& U = schur.matrixU();
  const Eigen::MatrixXd& T = schur.matrixT();

  struct Block {
    double a;
    Eigen::VectorXd u, v;
  };
  std::vector<Block> blocks;
  std::vector<Eigen::VectorXd> zeros;
  for (Index i = 0; i < n;) {
    if (i + 1 < n && T(i + 1, i) != 0.0) {
      const double a = (T(i, i + 1) - T(i + 1, i)) / 2;
      if (std::abs(a) < 1e-12) {
        zeros.push_back(U.col(i));
        zeros.push_back(U.col(i + 1));
      } else if (a > 0) {
        blocks.push_back({a, U.col(i), U.col(i + 1)});
      } else {
        blocks.push_back({-a, U.col(i + 1), U.col(i)});
      }
      i += 2;
    } else {
      zeros.push_back(U.col(i));
      i += 1;
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.a > y.a; });
  for (std::size_t z = 0; z + 1 < zeros.size(); z += 2) blocks.push_back({0.0, zeros[z], zeros[z + 1]});

  Index col = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out.Q.col(col) = blocks[b].u;
    out.Q.col(col + 1) = blocks[b].v;
    out.params[b] = blocks[b].a;
    col += 2;
  }
  if (zeros.size() % 2 == 1) out.Q.col(col) = zeros.back();

  if (out.Q.determinant() < 0) {
    if (n % 2 == 1) {
      out.Q.col(n - 1) *= -1;
    } else {
      out.Q.col(n - 1) *= -1;
      out.params.back() = -out.params.back();
    }
  }
  for (std::size_t b = 0; b < out.params.size(); ++b) {
    const Index i = static_cast<Index>(2 * b);
    out.reduced(i, i + 1) = out.params[b];
    out.reduced(i + 1, i) = -out.params[b];
  }
  out.residual = (out.Q * out.reduced * out.Q.transpose() - A).cwiseAbs().rowwise().sum().maxCoeff();
  if (!(out.residual <= tolerance)) {
    throw Error(ErrorKind::ConvergenceFailure, "reconstruction residual " + std::to_string(out.residual) + " above tolerance");
  }
  return out;
}

Element canonical_element(const SpacePtr& space, const std::vector<Scalar>& params) {
  if (2 * params.size() > space->dim()) throw Error(ErrorKind::InvalidArgument, "too many block parameters");
  Element v(space);
  for (std::size_t j = 0; j < params.size(); ++j) {
    v.add(Monomial({static_cast<Index>(2 * j), static_cast<Index>(2 * j + 1)}), params[j]);
  }
  return v;
}

Potential star_potential(const HodgeContext& ctx, const Element& v) {
  if (!v.is_homogeneous()) throw Error(ErrorKind::WrongDegree, "v must be homogeneous");
  const std::size_t p = v.is_zero() ? 2 : *v.min_degree();
  if (p + 1 >= ctx.dim()) throw Error(ErrorKind::WrongDegree, "*(v) would have arity < 1");
  return Potential::homogeneous(star(ctx, v), ctx.dim() - p - 1);
}

Potential build_m3_algebra(const HodgeContext& ctx, const Element& v) {
  if (!v.is_zero() && !(v.is_homogeneous() && *v.min_degree() == 2)) {
    throw Error(ErrorKind::WrongDegree, "v must lie in S^2V");
  }
  if (ctx.dim() < 4) throw Error(ErrorKind::DimensionTooSmall, "needs m >= 4");
  return Potential::homogeneous(star(ctx, v), ctx.dim() - 3);
}

std::string_view to_string(IdealStatus status) {
  switch (status) {
    case IdealStatus::NotSimple: return "not_simple";
    case IdealStatus::SimpleCertified: return "simple_certified";
    case IdealStatus::SimpleProbabilistic: return "simple_probabilistic";
    case IdealStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Basis of the span of the operators s(e_I, -), flattened row-major.
std::vector<Matrix> multiplication_operators(const NaryStructure& s) {
  const std::size_t m = s.space()->dim();
  const std::size_t n = s.arity();
  if (n == 0) return {};
  const auto tuples = s.mode() == NaryStructure::Mode::Symmetric ? ascending_tuples(*s.space(), n - 1)
                                                                   : all_tuples(m, n - 1);
  std::vector<Vector> flat;
  for (const auto& t : tuples) {
    Tuple args = t;
    args.push_back(0);
    Vector f(m * m);
    bool any = false;
    for (std::size_t c = 0; c < m; ++c) {
      args.back() = static_cast<Index>(c);
      const Vector col = s.evaluate(args);
      for (std::size_t r = 0; r < m; ++r) {
        if (col[r] != 0) {
          f[r * m + c] = col[r];
          any = true;
        }
      }
    }
    if (any) flat.push_back(std::move(f));
  }
  std::vector<Matrix> ops;
  for (const auto& f : reduced_basis(flat, m * m)) {
    Matrix x(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) x(r, c) = f[r * m + c];
    ops.push_back(std::move(x));
  }
  return ops;
}

bool invariant_under(const std::vector<Matrix>& ops, const std::vector<Vector>& basis, std::size_t m) {
  const std::size_t d = basis.size();
  for (const auto& x : ops) {
    std::vector<Vector> ext = basis;
    for (const auto& b : basis) ext.push_back(x * b);
    if (rank(Matrix::from_columns(ext, m)) != d) return false;
  }
  return true;
}

std::vector<Vector> spin(const std::vector<Matrix>& ops, const Vector& seed, std::size_t m) {
  std::vector<Vector> basis = reduced_basis({seed}, m);
  std::vector<Vector> queue = basis;
  while (!queue.empty() && basis.size() < m) {
    const Vector v = queue.back();
    queue.pop_back();
    for (const auto& x : ops) {
      Vector img = x * v;
      if (is_zero(img)) continue;
      std::vector<Vector> ext = basis;
      ext.push_back(img);
      auto next = reduced_basis(ext, m);
      if (next.size() > basis.size()) {
        basis = std::move(next);
        queue.push_back(std::move(img));
      }
    }
  }
  return basis;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const Matrix am = a * mk;
    Scalar tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

std::vector<mpz_class> divisors(mpz_class x) {
  x = abs(x);
  std::vector<mpz_class> out;
  if (x > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      if (d * d != x) out.push_back(x / d);
    }
  }
  return out;
}

std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly) {
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (low < poly.size() && poly[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (low + 1 >= poly.size()) return roots;
  mpz_class l = 1;
  for (const auto& c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ip;
  for (const auto& c : poly) ip.push_back(c.get_num() * (l / c.get_den()));
  const auto ps = divisors(ip[low]);
  const auto qs = divisors(ip.back());
  auto eval = [&](const Scalar& x) {
    Scalar acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
  };
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      for (int sgn : {1, -1}) {
        Scalar x(p * sgn, q);
        x.canonicalize();
        if (x != 0 && std::find(roots.begin(), roots.end(), x) == roots.end() && eval(x) == 0) roots.push_back(x);
      }
    }
  }
  return roots;
}

// Elements Y = G^{-1} S (S symmetric) commuting with every operator.
std::vector<Matrix> self_adjoint_commutant(const std::vector<Matrix>& ops, const Matrix& gram) {
  const std::size_t m = gram.rows();
  const Matrix ginv = *inverse(gram);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) slots.emplace_back(i, j);
  std::vector<Matrix> ys;
  for (const auto& [i, j] : slots) {
    Matrix s(m, m);
    s(i, j) = 1;
    s(j, i) = 1;
    ys.push_back(ginv * s);
  }
  Matrix system(ops.size() * m * m, slots.size());
  for (std::size_t u = 0; u < slots.size(); ++u) {
    std::size_t r = 0;
    for (const auto& x : ops) {
      const Matrix comm = ys[u] * x - x * ys[u];
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) system(r++, u) = comm(a, b);
    }
  }
  std::vector<Matrix> out;
  for (const auto& k : nullspace(system)) {
    Matrix y(m, m);
    for (std::size_t u = 0; u < slots.size(); ++u) {
      if (k[u] == 0) continue;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) y(a, b) += k[u] * ys[u](a, b);
    }
    out.push_back(std::move(y));
  }
  return out;
}

IdealReport found(std::vector<Vector> basis, std::size_t m, std::string method) {
  IdealReport r;
  r.status = IdealStatus::NotSimple;
  r.found = true;
  r.basis = reduced_basis(basis, m);
  r.method = std::move(method);
  return r;
}

}  // namespace

bool is_ideal(const NaryStructure& s, const std::vector<Vector>& basis) {
  return invariant_under(multiplication_operators(s), reduced_basis(basis, s.space()->dim()), s.space()->dim());
}

IdealReport find_ideal(const NaryStructure& s, const IdealOptions& opt) {
  const Superspace& space = *s.space();
  if (!space.pure_odd()) throw Error(ErrorKind::NotPureOdd, "ideal search needs a pure odd space");
  const std::size_t m = space.dim();
  if (m <= 1) {
    IdealReport r;
    r.status = IdealStatus::SimpleCertified;
    r.method = "dimension";
    return r;
  }
  const auto ops = multiplication_operators(s);
  if (ops.empty()) {
    Vector e1(m);
    e1[0] = 1;
    return found({e1}, m, "kernel");
  }

  const auto kernel = nullspace(vstack_all(ops, m));
  if (!kernel.empty() && kernel.size() < m) return found(kernel, m, "kernel");

  std::vector<Vector> columns;
  for (const auto& x : ops)
    for (std::size_t c = 0; c < m; ++c) columns.push_back(x.column(c));
  const auto image = reduced_basis(columns, m);
  if (image.size() < m) return found(image, m, "image");

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
  for (unsigned round = 0; round < opt.rounds; ++round) {
    Matrix theta(m, m);
    for (const auto& x : ops) {
      const int c = coeff(rng);
      if (c != 0) theta = theta + x * Scalar(c);
    }
    for (int extra = 0; extra < 2; ++extra) {
      const int c = coeff(rng);
      if (c != 0) theta = theta + ops[pick(rng)] * ops[pick(rng)] * Scalar(c);
    }
    for (const auto& v : nullspace(theta)) {
      auto w = spin(ops, v, m);
      if (w.size() < m) return found(std::move(w), m, "meataxe");
    }
  }

  bool certifiable = is_positive_definite(space);
  const Matrix& g = space.gram();
  for (const auto& x : ops) certifiable = certifiable && (x.transpose() * g + g * x).is_zero();
  IdealReport r;
  if (!certifiable) {
    r.status = opt.rounds == 0 ? IdealStatus::Inconclusive : IdealStatus::SimpleProbabilistic;
    r.method = "meataxe";
    return r;
  }
  const auto comm = self_adjoint_commutant(ops, g);
  if (comm.size() <= 1) {
    r.status = IdealStatus::SimpleCertified;
    r.method = "commutant";
    return r;
  }
  // A self-adjoint non-scalar commutant element: its eigenspaces are ideals.
  for (const auto& y : comm) {
    for (const auto& lambda : rational_roots(characteristic_polynomial(y))) {
      const auto w = nullspace(y - Matrix::identity(m) * lambda);
      if (!w.empty() && w.size() < m) return found(w, m, "commutant");
    }
  }
  r.status = IdealStatus::NotSimple;
  r.method = "commutant";
  return r;
}

ClassifyRecord classify_m3(const HodgeContext& ctx, const Element& v, const IdealOptions& opt,
                           const VerifyOptions& vopt) {
  if (ctx.dim() <= 4) throw Error(ErrorKind::DimensionTooSmall, "classification needs m > 4");
  ClassifyRecord rec;
  rec.m = ctx.dim();
  const Matrix a = element_to_skew(v);
  rec.rank = rank(a);
  rec.canonical = canonical_form(to_eigen(a));
  rec.simple = rec.rank > 2;
  const Potential mu = build_m3_algebra(ctx, v);
  const NaryStructure s = derive_structure(mu);
  rec.ideal = find_ideal(s, opt);
  const bool ideal_simple =
      rec.ideal.status == IdealStatus::SimpleCertified || rec.ideal.status == IdealStatus::SimpleProbabilistic;
  rec.ideal_agrees = rec.simple == ideal_simple;
  rec.filippov = check_filippov(mu, vopt).pass;
  rec.sh_jacobi = check_nary_jacobi(s, vopt).pass;
  return rec;
}

Element transform(const Matrix& phi, const Element& x) {
  const SpacePtr& space = x.space();
  std::vector<Element> images;
  for (std::size_t i = 0; i < space->dim(); ++i) images.push_back(Element::linear(space, phi.column(i)));
  Element out(space);
  for (const auto& [mono, c] : x.terms()) {
    Element term = Element::scalar(space, c);
    for (auto i : mono.indices()) term = term * images[i];
    out += term;
  }
  return out;
}

IsoResult isomorphic_via(const Potential& mu1, const Potential& mu2, const Matrix& phi) {
  require_same_space(mu1.space(), mu2.space());
  const SpacePtr& space = mu1.space();
  const Matrix& g = space->gram();
  if (phi.rows() != space->dim() || phi.cols() != space->dim() || !(phi.transpose() * g * phi == g) ||
      determinant(phi) != 1) {
    throw Error(ErrorKind::NotOrthogonal, "phi must preserve the form and have determinant 1");
  }
  IsoResult r;
  r.isomorphic = transform(phi, mu1.element()) == mu2.element();
  std::vector<Element> samples;
  for (std::size_t i = 0; i < space->dim(); ++i) samples.push_back(Element::generator(space, i));
  for (const auto& t : ascending_tuples(*space, 2)) samples.push_back(Element::monomial(space, Monomial(t)));
  samples.push_back(mu1.element());
  r.morphism_verified = true;
  for (std::size_t i = 0; i < samples.size() && r.morphism_verified; ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const Element lhs = transform(phi, poisson_bracket(samples[i], samples[j]));
      const Element rhs = poisson_bracket(transform(phi, samples[i]), transform(phi, samples[j]));
      if (!(lhs == rhs)) {
        r.morphism_verified = false;
        break;
      }
    }
  }
  return r;
}

std::vector<Element> ider(const Element& mu) {
  const SpacePtr& space = mu.space();
  const auto basis = ascending_tuples(*space, 2);
  std::vector<Element> images;
  std::map<Monomial, std::size_t> rows;
  for (const auto& t : basis) {
    images.push_back(poisson_bracket(Element::monomial(space, Monomial(t)), mu));
    for (const auto& [mono, c] : images.back().terms()) rows.emplace(mono, rows.size());
  }
  Matrix a(rows.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [mono, c] : images[j].terms()) a(rows[mono], j) = c;
  }
  std::vector<Element> out;
  for (const auto& k : reduced_basis(nullspace(a), basis.size())) {
    Element w(space);
    for (std::size_t j = 0; j < basis.size(); ++j) w.add(Monomial(basis[j]), k[j]);
    out.push_back(std::move(w));
  }
  return out;
}

Matrix cayley(const Matrix& S) {
  const Matrix id = Matrix::identity(S.rows());
  const auto inv = inverse(id + S);
  if (!inv) throw Error(ErrorKind::InvalidArgument, "I + S is singular");
  return (id - S) * *inv;
}

}  // namespace nary
