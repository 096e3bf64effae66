#include "radon/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "radon/chebyshev.hpp"

namespace radon {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::obrechkoff: return "obrechkoff";
    case Scheme::u_zeros: return "u-zeros";
    case Scheme::equidistant: return "equidistant";
    case Scheme::chebyshev: return "chebyshev";
    case Scheme::custom: return "custom";
  }
  return "custom";
}

Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw NodeValidationError(NodeValidationError::Violation::bad_argument,
                            "unknown parity '" + std::string(text) + "'");
}

Scheme parse_scheme(std::string_view text) {
  for (Scheme s : {Scheme::obrechkoff, Scheme::u_zeros, Scheme::equidistant, Scheme::chebyshev,
                   Scheme::custom})
    if (text == to_string(s)) return s;
  throw NodeValidationError(NodeValidationError::Violation::bad_argument,
                            "unknown scheme '" + std::string(text) + "'");
}

int degree_for(std::size_t count, Parity parity) {
  const int k = static_cast<int>(count);
  return parity == Parity::even ? 2 * (k - 1) : 2 * k - 1;
}

std::string to_string(NodeValidationError::Violation v) {
  using V = NodeValidationError::Violation;
  switch (v) {
    case V::empty: return "empty";
    case V::out_of_range: return "out_of_range";
    case V::duplicate: return "duplicate";
    case V::symmetric_pair: return "symmetric_pair";
    case V::zero_in_odd: return "zero_in_odd";
    case V::u_zero_t0: return "u_zero_t0";
    case V::wrong_count: return "wrong_count";
    case V::bad_argument: return "bad_argument";
  }
  return "bad_argument";
}

NodeValidationError::NodeValidationError(Violation v, const std::string& detail)
    : std::invalid_argument("node validation failed [" + to_string(v) + "]: " + detail),
      violation_(v) {}

namespace {

using Violation = NodeValidationError::Violation;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_m(int m, int min_m, const char* who) {
  if (m < min_m)
    throw NodeValidationError(Violation::bad_argument,
                              std::string(who) + ": m must be >= " + std::to_string(min_m));
}

}  // namespace

bool check_asymmetric(std::span<const double> values, double tol) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] + values[j]) <= tol) return false;
  return true;
}

void validate_nodes(std::span<const double> values, Parity parity, double tol) {
  if (values.empty()) throw NodeValidationError(Violation::empty, "no nodes given");
  for (double t : values)
    if (!std::isfinite(t) || !(std::abs(t) < 1.0))
      throw NodeValidationError(Violation::out_of_range, "node " + fmt(t) + " not in (-1, 1)");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) <= tol)
        throw NodeValidationError(Violation::duplicate,
                                  "nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                      " coincide at " + fmt(values[i]));
  if (parity == Parity::odd)
    for (double t : values)
      if (std::abs(t) <= tol)
        throw NodeValidationError(Violation::zero_in_odd,
                                  "node " + fmt(t) + " is zero; odd degree needs nonzero nodes");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] + values[j]) <= tol)
        throw NodeValidationError(Violation::symmetric_pair,
                                  "nodes " + fmt(values[i]) + " and " + fmt(values[j]) +
                                      " form a symmetric pair");
}

NodeSet::NodeSet(std::vector<double> values, Parity parity, Scheme scheme)
    : values_(std::move(values)), parity_(parity), scheme_(scheme) {
  validate_nodes(values_, parity_);
}

NodeSet nodes_obrechkoff(int m) {
  require_m(m, 0, "nodes_obrechkoff");
  const double lower = std::cos(std::numbers::pi / (2 * m + 1));
  std::vector<double> t;
  for (int k = 0; k <= m; ++k) t.push_back(lower + (k + 1) * (1.0 - lower) / (m + 2));
  return NodeSet(std::move(t), Parity::even, Scheme::obrechkoff);
}

NodeSet nodes_u_zeros_even(int m, double t0) {
  require_m(m, 0, "nodes_u_zeros_even");
  if (!(std::abs(t0) < 1.0))
    throw NodeValidationError(Violation::out_of_range, "t0 = " + fmt(t0) + " not in (-1, 1)");
  if (std::abs(eval_u(2 * m, t0)) <= kNodeTolerance)
    throw NodeValidationError(Violation::u_zero_t0,
                              "t0 = " + fmt(t0) + " is a zero of U_" + std::to_string(2 * m));
  std::vector<double> t{t0};
  for (int j = 1; j <= m; ++j) t.push_back(std::cos(2.0 * j * std::numbers::pi / (2 * m + 1)));
  return NodeSet(std::move(t), Parity::even, Scheme::u_zeros);
}

NodeSet nodes_u_zeros_odd(int m) {
  require_m(m, 1, "nodes_u_zeros_odd");
  std::vector<double> t;
  for (int j = 1; j <= m; ++j) t.push_back(std::cos(2.0 * j * std::numbers::pi / (2 * m + 1)));
  return NodeSet(std::move(t), Parity::odd, Scheme::u_zeros);
}

NodeSet nodes_equidistant(int m) {
  require_m(m, 0, "nodes_equidistant");
  std::vector<double> t;
  for (int k = 0; k <= m; ++k) t.push_back(static_cast<double>(k + 1) / (m + 2));
  return NodeSet(std::move(t), Parity::even, Scheme::equidistant);
}

NodeSet nodes_chebyshev(int m) {
  require_m(m, 0, "nodes_chebyshev");
  std::vector<double> t;
  for (int k = 0; k <= m; ++k) t.push_back(std::cos((k + 1) * std::numbers::pi / (2 * m + 4)));
  return NodeSet(std::move(t), Parity::even, Scheme::chebyshev);
}

NodeSet make_nodes(Scheme scheme, int degree, double t0) {
  if (degree < 0) throw NodeValidationError(Violation::bad_argument, "degree must be >= 0");
  const int m = half_degree(degree);
  if (degree % 2 == 0) {
    const int half = degree / 2;
    switch (scheme) {
      case Scheme::obrechkoff: return nodes_obrechkoff(half);
      case Scheme::u_zeros: return nodes_u_zeros_even(half, t0);
      case Scheme::equidistant: return nodes_equidistant(half);
      case Scheme::chebyshev: return nodes_chebyshev(half);
      case Scheme::custom: break;
    }
    throw NodeValidationError(Violation::bad_argument, "custom nodes must be supplied explicitly");
  }

  const int count = m;
  std::vector<double> t;
  switch (scheme) {
    case Scheme::u_zeros: return nodes_u_zeros_odd(m);
    case Scheme::equidistant:
      for (int k = 0; k < count; ++k) t.push_back(static_cast<double>(k + 1) / (count + 1));
      break;
    case Scheme::chebyshev:
      for (int k = 0; k < count; ++k)
        t.push_back(std::cos((k + 1) * std::numbers::pi / (2 * count + 2)));
      break;
    case Scheme::obrechkoff: {
      const double lower = std::cos(std::numbers::pi / (degree + 1));
      for (int k = 0; k < count; ++k) t.push_back(lower + (k + 1) * (1.0 - lower) / (count + 1));
      break;
    }
    case Scheme::custom:
      throw NodeValidationError(Violation::bad_argument, "custom nodes must be supplied explicitly");
  }
  return NodeSet(std::move(t), Parity::odd, scheme);
}

double eta(int i, int m) { return std::cos(i * std::numbers::pi / (2 * m + 1)); }

double u_zero_identity_even(int m, int j, int k) {
  const double t = eta(2 * k, m);
  return eval_u(2 * m - 2 * j, t) + eval_u(2 * j - 1, t);
}

double u_zero_identity_odd(int m, int j, int k) {
  const double t = eta(2 * k - 1, m);
  return eval_u(2 * m - 2 * j, t) - eval_u(2 * j - 1, t);
}

}  // namespace radon
