#include <doctest.h>

#include "nary/error.hpp"
#include "nary/io.hpp"
#include "support.hpp"

using namespace nary;
using namespace testing_support;
using io::json;

namespace {

SpacePtr mixed() {
  Matrix g(3, 3);
  g(0, 1) = Scalar(1, 2);
  g(1, 0) = Scalar(-1, 2);
  g(2, 2) = 3;
  return Superspace::make({Parity::Even, Parity::Even, Parity::Odd}, g, 6);
}

std::string parse_message(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("scalars are exact strings") {
  CHECK(io::scalar_to_json(Scalar(-3, 4)) == "-3/4");
  CHECK(io::scalar_from_json("10/4", "/x") == Scalar(5, 2));
  CHECK(io::scalar_from_json(7, "/x") == 7);
  CHECK(parse_message([] { io::scalar_from_json(0.5, "/x"); }).find("/x") != std::string::npos);
}

TEST_CASE("superspace round trip and defaults") {
  const auto s = mixed();
  const json j = io::superspace_to_json(*s);
  CHECK(j["parity"] == json({"even", "even", "odd"}));
  CHECK(*io::superspace_from_json(j, "/space") == *s);
  const auto d = io::superspace_from_json(json{{"dim", 3}}, "/space");
  CHECK(d->pure_odd());
  CHECK(d->identity_gram());
  CHECK(parse_message([] { io::superspace_from_json(json{{"dim", 2}, {"gram", {{"1"}}}}, "/space"); }).find("/space/gram") !=
        std::string::npos);
  CHECK(parse_message([] { io::superspace_from_json(json{{"dim", 2}, {"parity", {"odd", "weird"}}}, "/space"); })
            .find("/space/parity/1") != std::string::npos);
}

TEST_CASE("elements use one-based ascending monomials") {
  const auto s = mixed();
  const Element e = gen(s, 1) * gen(s, 1) * gen(s, 3) * Scalar(2, 3) - gen(s, 2) + Element::scalar(s, 5);
  const json j = io::element_to_json(e);
  CHECK(io::element_from_json(j, s, "/e") == e);
  CHECK(j[0]["monomial"] == json::array());
  const json unsorted = json::parse(R"([{"monomial": [3, 1], "coeff": "1"}])");
  CHECK(parse_message([&] { io::element_from_json(unsorted, s, "/e"); }).find("/e/0/monomial") != std::string::npos);
  const json repeat = json::parse(R"([{"monomial": [3, 3], "coeff": "1"}])");
  CHECK(parse_message([&] { io::element_from_json(repeat, s, "/e"); }).find("repeated") != std::string::npos);
  const json range = json::parse(R"([{"monomial": [4], "coeff": "1"}])");
  CHECK(parse_message([&] { io::element_from_json(range, s, "/e"); }).find("out of range") != std::string::npos);
  const json even_repeat = json::parse(R"([{"monomial": [1, 1], "coeff": "1"}])");
  CHECK(io::element_from_json(even_repeat, s, "/e") == gen(s, 1) * gen(s, 1));
}

TEST_CASE("potentials and structures round trip") {
  const auto s = Superspace::odd_euclidean(5);
  for (int t = 0; t < 10; ++t) {
    const Potential p = Potential::homogeneous(random_homogeneous(s, 3), 2);
    const json j = io::potential_to_json(p);
    const Potential q = io::potential_from_json(j, s, "/p");
    CHECK(q.element() == p.element());
    CHECK(q.arity() == 2);
    const NaryStructure st = derive_structure(p);
    CHECK(io::structure_from_json(io::structure_to_json(st), s, "/s") == st);
  }
  const Potential f = Potential::family(mono(s, {1, 2, 3, 4, 5}) + mono(s, {3, 4, 5}) + gen(s, 1));
  const Potential g = io::potential_from_json(io::potential_to_json(f), s, "/p");
  CHECK(g.is_family());
  CHECK(g.element() == f.element());
}

TEST_CASE("explicit structures keep exactly the listed tuples") {
  const auto s = Superspace::odd_euclidean(2);
  const json j = json::parse(R"({"arity": 2, "constants": [{"args": [1, 2], "value": [{"monomial": [2], "coeff": "1"}]}]})");
  const NaryStructure e = io::structure_from_json(j, s, "/s");
  CHECK(e.mode() == NaryStructure::Mode::Explicit);
  CHECK(is_zero(e.evaluate(Tuple{1, 0})));
  json c = j;
  c["expand"] = "commutative";
  const NaryStructure sym = io::structure_from_json(c, s, "/s");
  CHECK(sym.evaluate(Tuple{1, 0}) == Vector{0, -1});
  json bad = j;
  bad["constants"][0]["args"] = {1};
  CHECK(parse_message([&] { io::structure_from_json(bad, s, "/s"); }).find("/s/constants/0/args") != std::string::npos);
}

TEST_CASE("reports carry one-based witnesses") {
  const auto s = Superspace::odd_euclidean(3);
  Report r;
  r.pass = false;
  r.checked = 4;
  r.witness = Violation{{0, 2}, gen(s, 2, -2)};
  const json j = io::report_to_json(r);
  CHECK(j["witness"] == json({1, 3}));
  CHECK(j["residual"][0]["coeff"] == "-2");
  CHECK(io::report_to_json(Report{})["witness"].is_null());
}
