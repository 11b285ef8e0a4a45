#include "nary/frobenius.hpp"

#include "nary/derived.hpp"
#include "nary/error.hpp"

namespace nary {

namespace {

SpacePtr doubled_space(std::size_t m) {
  Matrix g(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    g(i, m + i) = 1;
    g(m + i, i) = 1;
  }
  return Superspace::make(std::vector<Parity>(2 * m, Parity::Odd), g);
}

Scalar pair(const Superspace& space, const Vector& x, const Vector& y) {
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0 && space.form(i, j) != 0) s += x[i] * space.form(i, j) * y[j];
    }
  }
  return s;
}

std::vector<Vector> graph_basis(const Matrix& phi) {
  const std::size_t m = phi.rows();
  std::vector<Vector> b;
  for (std::size_t i = 0; i < m; ++i) {
    Vector v(2 * m);
    v[i] = 1;
    for (std::size_t j = 0; j < m; ++j) v[m + j] = phi(i, j);
    b.push_back(std::move(v));
  }
  return b;
}

}  // namespace

TStarExtension t_star_extension(const NaryStructure& mu) {
  const SpacePtr& base = mu.space();
  if (!base->pure_odd()) throw Error(ErrorKind::NotPureOdd, "T*-extension needs a pure odd space");
  const std::size_t m = base->dim();
  const std::size_t n = mu.arity();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  if (!check_commutative(mu).pass) throw Error(ErrorKind::NotCommutative, "product is not graded commutative");
  const SpacePtr doubled = doubled_space(m);

  NaryStructure table(doubled, n);
  for (const auto& t : all_tuples(m, n)) {
    const Vector v = mu.evaluate(t);
    if (is_zero(v)) continue;
    Vector w(2 * m);
    std::copy(v.begin(), v.end(), w.begin());
    table.set(t, w);
  }
  for (const auto& a : all_tuples(m, n - 1)) {
    for (std::size_t b = 0; b < m; ++b) {
      Vector w(2 * m);
      Tuple args = a;
      args.push_back(0);
      for (std::size_t c = 0; c < m; ++c) {
        args.back() = static_cast<Index>(c);
        w[m + c] = -mu.evaluate(args)[b];
      }
      if (is_zero(w)) continue;
      Tuple key = a;
      key.push_back(static_cast<Index>(m + b));
      table.set(key, w);
    }
  }

  Potential potential = potential_from_structure(table);
  NaryStructure mu_t = derive_structure(potential);

  bool ok = true;
  for (const auto& t : all_tuples(2 * m, n)) {
    std::size_t duals = 0;
    for (auto i : t) duals += i >= m;
    const Vector got = mu_t.evaluate(t);
    Vector expect(2 * m);
    if (duals == 0) {
      const Vector v = mu.evaluate(t);
      std::copy(v.begin(), v.end(), expect.begin());
    } else if (duals == 1 && t.back() >= m) {
      Tuple args(t.begin(), t.end() - 1);
      args.push_back(0);
      for (std::size_t c = 0; c < m; ++c) {
        args.back() = static_cast<Index>(c);
        expect[m + c] = -mu.evaluate(args)[t.back() - m];
      }
    } else if (duals == 1) {
      continue;  // covered by the commutativity of the table
    }
    if (got != expect) {
      ok = false;
      break;
    }
  }
  return TStarExtension{base, doubled, mu, std::move(mu_t), std::move(potential), ok};
}

TStarExtension t_star_extension(const Potential& mu) { return t_star_extension(derive_structure(mu)); }

void require_form(const Matrix& phi, std::size_t m) {
  if (phi.rows() != m || phi.cols() != m) throw Error(ErrorKind::InvalidArgument, "phi has wrong shape");
  if (!phi.is_skew()) {
    throw Error(ErrorKind::SymmetryViolation, "phi must be skew as a matrix (an element of S^2V on odd V)");
  }
}

QFCertificate check_quasi_frobenius(const NaryStructure& mu, const Matrix& phi, bool allow_odd) {
  const SpacePtr& space = mu.space();
  if (!space->pure_odd()) throw Error(ErrorKind::NotPureOdd, "quasi-Frobenius check needs a pure odd space");
  const std::size_t m = space->dim();
  const std::size_t n = mu.arity();
  require_form(phi, m);
  QFCertificate cert;
  if (n % 2 == 1) {
    if (!allow_odd) throw Error(ErrorKind::OddArity, "quasi-Frobenius equivalence needs even arity");
    cert.odd_arity_warning = true;
  }
  cert.phi_rank = rank(phi);
  for (const auto& t : all_tuples(m, n + 1)) {
    Scalar total = 0;
    for (std::size_t shift = 0; shift <= n; ++shift) {
      std::vector<std::size_t> order;
      for (std::size_t k = 0; k <= n; ++k) order.push_back((k + shift) % (n + 1));
      Tuple rest;
      for (std::size_t k = 1; k <= n; ++k) rest.push_back(t[order[k]]);
      const Vector v = mu.evaluate(rest);
      Scalar term = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (v[j] != 0) term += phi(t[order[0]], j) * v[j];
      }
      if (term == 0) continue;
      total += koszul_sign(t, order, *space) > 0 ? term : Scalar(-term);
    }
    if (total != 0) {
      cert.pass = false;
      cert.witness = t;
      cert.residual = total;
      return cert;
    }
  }
  return cert;
}

GraphResult graph_subalgebra_test(const TStarExtension& ext, const Matrix& phi) {
  const std::size_t m = ext.base->dim();
  const std::size_t n = ext.mu.arity();
  require_form(phi, m);
  if (n % 2 == 1) throw Error(ErrorKind::OddArity, "graph test needs even arity");
  const auto b = graph_basis(phi);
  const Superspace& d = *ext.doubled;
  GraphResult r;
  r.isotropic = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r.isotropic = r.isotropic && pair(d, b[i], b[j]) == 0;

  r.subalgebra = true;
  r.membership = true;
  for (const auto& t : all_tuples(m, n)) {
    std::vector<Vector> args;
    for (auto i : t) args.push_back(b[i]);
    const Vector img = ext.mu_t.evaluate(args);
    for (std::size_t k = 0; k < m && r.subalgebra; ++k) {
      if (pair(d, img, b[k]) != 0) {
        r.subalgebra = false;
        Tuple w = t;
        w.push_back(static_cast<Index>(k));
        r.witness = w;
      }
    }
    std::vector<Vector> ext_basis = b;
    ext_basis.push_back(img);
    if (rank(Matrix::from_columns(ext_basis, 2 * m)) != m) r.membership = false;
  }
  return r;
}

}  // namespace nary
