#include "nary/scalar.hpp"

#include <cctype>

#include "nary/error.hpp"

namespace nary {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::MixedParityEntry: return "MixedParityEntry";
    case ErrorKind::NotPureOdd: return "NotPureOdd";
    case ErrorKind::NotPureEven: return "NotPureEven";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::NotHodgeContext: return "NotHodgeContext";
    case ErrorKind::NotLInfinity: return "NotLInfinity";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::OddArity: return "OddArity";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::ParseError, "malformed scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace nary
