#include "nary/io.hpp"

#include "nary/error.hpp"

namespace nary::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

std::size_t index_from_json(const json& j, std::size_t dim, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer index");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) fail(path, "index out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

Tuple tuple_from_json(const json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of indices");
  Tuple t;
  for (std::size_t k = 0; k < j.size(); ++k) {
    t.push_back(static_cast<Index>(index_from_json(j[k], dim, path + "/" + std::to_string(k))));
  }
  return t;
}

}  // namespace

Scalar scalar_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(path, "expected a \"p/q\" string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json scalar_to_json(const Scalar& s) { return format_scalar(s); }

SpacePtr superspace_from_json(const json& j, const std::string& path, std::size_t max_degree) {
  const json& dim_j = field(j, "dim", path);
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) fail(path + "/dim", "expected a positive integer");
  const auto dim = static_cast<std::size_t>(dim_j.get<long long>());
  std::vector<Parity> parity(dim, Parity::Odd);
  if (j.contains("parity")) {
    const json& par = j["parity"];
    if (!par.is_array() || par.size() != dim) fail(path + "/parity", "expected " + std::to_string(dim) + " entries");
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string p = par[i].is_string() ? par[i].get<std::string>() : "";
      if (p == "even") {
        parity[i] = Parity::Even;
      } else if (p != "odd") {
        fail(path + "/parity/" + std::to_string(i), "expected \"odd\" or \"even\"");
      }
    }
  }
  Matrix gram = Matrix::identity(dim);
  if (j.contains("gram")) {
    gram = matrix_from_json(j["gram"], path + "/gram");
    if (gram.rows() != dim || gram.cols() != dim) fail(path + "/gram", "expected a dim x dim matrix");
  }
  return Superspace::make(std::move(parity), std::move(gram), max_degree);
}

json superspace_to_json(const Superspace& space) {
  json par = json::array();
  for (auto p : space.parities()) par.push_back(p == Parity::Odd ? "odd" : "even");
  return {{"dim", space.dim()}, {"parity", par}, {"gram", matrix_to_json(space.gram())}};
}

Element element_from_json(const json& j, const SpacePtr& space, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of terms");
  Element e(space);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    const Tuple t = tuple_from_json(field(j[k], "monomial", p), space->dim(), p + "/monomial");
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i] < t[i - 1]) fail(p + "/monomial", "indices must be ascending");
      if (t[i] == t[i - 1] && space->parity(t[i]) == Parity::Odd) {
        fail(p + "/monomial", "odd generator repeated");
      }
    }
    e.add(Monomial(t), scalar_from_json(field(j[k], "coeff", p), p + "/coeff"));
  }
  return e;
}

json element_to_json(const Element& e) {
  json out = json::array();
  for (const auto& [mono, c] : e.terms()) {
    json idx = json::array();
    for (auto i : mono.indices()) idx.push_back(i + 1);
    out.push_back({{"monomial", idx}, {"coeff", format_scalar(c)}});
  }
  return out;
}

Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string p = path + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) fail(p, "rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], p + "/" + std::to_string(c));
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Potential potential_from_json(const json& j, const SpacePtr& space, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("linf")) {
    const json& layers = j["linf"];
    if (!layers.is_array() || layers.empty()) fail(path + "/linf", "expected a non-empty array of elements");
    std::vector<Element> es;
    for (std::size_t k = 0; k < layers.size(); ++k) {
      es.push_back(element_from_json(layers[k], space, path + "/linf/" + std::to_string(k)));
    }
    return Potential::family(es);
  }
  const json& a = field(j, "arity", path);
  if (!a.is_number_integer() || a.get<long long>() < 1) fail(path + "/arity", "expected an integer >= 1");
  return Potential::homogeneous(element_from_json(field(j, "element", path), space, path + "/element"),
                                static_cast<std::size_t>(a.get<long long>()));
}

json potential_to_json(const Potential& p) {
  if (!p.is_family()) return {{"arity", p.arity()}, {"element", element_to_json(p.element())}};
  json layers = json::array();
  for (std::size_t k = 0; k <= p.arity(); ++k) layers.push_back(element_to_json(p.layer(k)));
  return {{"linf", layers}};
}

NaryStructure structure_from_json(const json& j, const SpacePtr& space, const std::string& path) {
  const json& a = field(j, "arity", path);
  if (!a.is_number_integer() || a.get<long long>() < 0) fail(path + "/arity", "expected a non-negative integer");
  const auto n = static_cast<std::size_t>(a.get<long long>());
  auto mode = NaryStructure::Mode::Explicit;
  if (j.contains("expand")) {
    const std::string e = j["expand"].is_string() ? j["expand"].get<std::string>() : "";
    if (e == "commutative") {
      mode = NaryStructure::Mode::Symmetric;
    } else if (e != "none") {
      fail(path + "/expand", "expected \"commutative\" or \"none\"");
    }
  }
  NaryStructure s(space, n, mode);
  const json& cs = field(j, "constants", path);
  if (!cs.is_array()) fail(path + "/constants", "expected an array");
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const std::string p = path + "/constants/" + std::to_string(k);
    const Tuple t = tuple_from_json(field(cs[k], "args", p), space->dim(), p + "/args");
    if (t.size() != n) fail(p + "/args", "expected " + std::to_string(n) + " arguments");
    const Element v = element_from_json(field(cs[k], "value", p), space, p + "/value");
    if (!v.is_zero() && !(v.is_homogeneous() && *v.min_degree() == 1)) fail(p + "/value", "value must lie in V");
    try {
      s.set(t, v.linear_coords());
    } catch (const Error& e) {
      fail(p, e.what());
    }
  }
  return s;
}

json structure_to_json(const NaryStructure& s) {
  json cs = json::array();
  for (const auto& [t, v] : s.table()) {
    cs.push_back({{"args", tuple_to_json(t)}, {"value", element_to_json(Element::linear(s.space(), v))}});
  }
  return {{"arity", s.arity()},
          {"expand", s.mode() == NaryStructure::Mode::Symmetric ? "commutative" : "none"},
          {"constants", cs}};
}

json tuple_to_json(const Tuple& t) {
  json out = json::array();
  for (auto i : t) out.push_back(i + 1);
  return out;
}

json report_to_json(const Report& r) {
  json out = {{"pass", r.pass}, {"checked", r.checked}, {"witness", nullptr}, {"residual", nullptr}};
  if (r.witness) {
    out["witness"] = tuple_to_json(r.witness->tuple);
    out["residual"] = element_to_json(r.witness->residual);
  }
  if (!r.violations.empty()) {
    json vs = json::array();
    for (const auto& v : r.violations) {
      vs.push_back({{"witness", tuple_to_json(v.tuple)}, {"residual", element_to_json(v.residual)}});
    }
    out["violations"] = vs;
  }
  return out;
}

json l_infinity_to_json(const LInfinityReport& r) {
  return {{"pass", r.is_l_infinity},
          {"witness", nullptr},
          {"square", element_to_json(r.square)},
          {"residual", r.is_l_infinity ? json(nullptr) : element_to_json(r.obstruction)}};
}

json hodge_to_json(const HodgeReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back({{"p", d.p},
                       {"dim", d.dim},
                       {"rank_d", d.rank_d},
                       {"rank_delta", d.rank_delta},
                       {"ker_laplacian", d.ker_laplacian ? json(*d.ker_laplacian) : json(nullptr)},
                       {"cohomology", d.cohomology ? json(*d.cohomology) : json(nullptr)}});
  }
  json harmonic = json::array();
  for (const auto& h : r.harmonic) harmonic.push_back(element_to_json(h));
  return {{"degrees", degrees},
          {"homogeneous", r.homogeneous},
          {"direct_sum_ok", r.direct_sum_ok && r.dimension_count_ok},
          {"kostant_ok", r.kostant_ok},
          {"cohomology_ok", r.cohomology_ok},
          {"disjoint_ok", r.disjoint_ok},
          {"total",
           {{"dim", r.total.dim},
            {"im_d", r.total.im_d},
            {"im_delta", r.total.im_delta},
            {"ker_laplacian", r.total.ker_laplacian},
            {"cohomology", r.total.cohomology}}},
          {"harmonic", harmonic}};
}

json canonical_to_json(const CanonicalForm& c) {
  return {{"params", c.params}, {"residual", c.residual}, {"approx", true}};
}

json ideal_to_json(const IdealReport& r) {
  json basis = json::array();
  for (const auto& v : r.basis) {
    json row = json::array();
    for (const auto& x : v) row.push_back(format_scalar(x));
    basis.push_back(row);
  }
  return {{"status", std::string(to_string(r.status))}, {"found", r.found}, {"method", r.method}, {"basis", basis}};
}

json classify_to_json(const ClassifyRecord& r) {
  return {{"m", r.m},
          {"rank", r.rank},
          {"canonical", canonical_to_json(r.canonical)},
          {"simple", r.simple},
          {"ideal", ideal_to_json(r.ideal)},
          {"ideal_agrees", r.ideal_agrees},
          {"filippov", r.filippov},
          {"sh_jacobi", r.sh_jacobi}};
}

json certificate_to_json(const QFCertificate& c, const std::optional<GraphResult>& g) {
  json out = {{"pass", c.pass},
              {"witness", c.witness ? tuple_to_json(*c.witness) : json(nullptr)},
              {"residual", c.pass ? json(nullptr) : json(format_scalar(c.residual))},
              {"phi_rank", c.phi_rank},
              {"odd_arity_warning", c.odd_arity_warning}};
  if (g) {
    out["graph"] = {{"subalgebra", g->subalgebra},
                    {"membership", g->membership},
                    {"isotropic", g->isotropic},
                    {"witness", g->witness ? tuple_to_json(*g->witness) : json(nullptr)}};
  }
  return out;
}

}  // namespace nary::io
