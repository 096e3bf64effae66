#pragma once

// Radial node sets t_0..t_K-1 for the parallel chords in every direction.
//
// Degree n = 2m uses K = m+1 nodes, degree n = 2m-1 uses K = m nodes; in both
// cases there are 2m+1 equidistant directions. A valid set is distinct,
// inside (-1, 1), asymmetric (never both t and -t), and for odd n avoids 0.

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace radon {

enum class Parity { even, odd };
enum class Scheme { obrechkoff, u_zeros, equidistant, chebyshev, custom };

std::string to_string(Parity p);
std::string to_string(Scheme s);
Parity parse_parity(std::string_view text);
Scheme parse_scheme(std::string_view text);

inline Parity parity_of_degree(int degree) { return degree % 2 == 0 ? Parity::even : Parity::odd; }

/// m = floor((n+1)/2): the 2m+1 directions are 2*j*pi/(2m+1).
inline int half_degree(int degree) { return (degree + 1) / 2; }
inline int node_count(int degree) { return degree / 2 + 1; }
inline int angle_count(int degree) { return 2 * half_degree(degree) + 1; }

/// Degree implied by a node count and parity.
int degree_for(std::size_t count, Parity parity);

inline constexpr double kNodeTolerance = 1e-10;

class NodeValidationError : public std::invalid_argument {
 public:
  enum class Violation {
    empty,
    out_of_range,
    duplicate,
    symmetric_pair,
    zero_in_odd,
    u_zero_t0,
    wrong_count,
    bad_argument
  };

  NodeValidationError(Violation v, const std::string& detail);
  Violation violation() const { return violation_; }

 private:
  Violation violation_;
};

std::string to_string(NodeValidationError::Violation v);

class NodeSet {
 public:
  /// Validates against the parity-appropriate invariants; throws NodeValidationError.
  NodeSet(std::vector<double> values, Parity parity, Scheme scheme);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  Parity parity() const { return parity_; }
  Scheme scheme() const { return scheme_; }
  /// Degree n this set serves: 2(K-1) for even parity, 2K-1 for odd.
  int degree() const { return degree_for(values_.size(), parity_); }
  /// Block count m (directions are 2m+1).
  int m() const { return half_degree(degree()); }

 private:
  std::vector<double> values_;
  Parity parity_;
  Scheme scheme_;
};

/// True iff no two entries (at different positions) sum to within tol of 0.
/// A single 0 is allowed; two zeros are not.
bool check_asymmetric(std::span<const double> values, double tol = kNodeTolerance);

/// Throws NodeValidationError naming the first violated condition.
void validate_nodes(std::span<const double> values, Parity parity, double tol = kNodeTolerance);

/// m+1 equidistant points in (cos(pi/(2m+1)), 1): t_k = L + (k+1)(1-L)/(m+2).
NodeSet nodes_obrechkoff(int m);
/// {t0} together with the zeros cos(2j*pi/(2m+1)), j = 1..m, of U_2m.
NodeSet nodes_u_zeros_even(int m, double t0);
/// cos(2j*pi/(2m+1)), j = 1..m, for degree 2m-1.
NodeSet nodes_u_zeros_odd(int m);
/// t_k = (k+1)/(m+2), k = 0..m.
NodeSet nodes_equidistant(int m);
/// t_k = cos((k+1)*pi/(2m+4)), k = 0..m.
NodeSet nodes_chebyshev(int m);

inline constexpr double kDefaultUZerosT0 = 0.97;

/// Node set of `scheme` for degree n. For odd n the non-u-zeros schemes use
/// the same construction generalised by node count K:
///   equidistant (k+1)/(K+1), chebyshev cos((k+1)pi/(2K+2)),
///   obrechkoff L + (k+1)(1-L)/(K+1) with L = cos(pi/(n+1)).
NodeSet make_nodes(Scheme scheme, int degree, double t0 = kDefaultUZerosT0);

/// eta_{i,2m} = cos(i*pi/(2m+1)); the even i give the zeros of U_2m.
double eta(int i, int m);

/// U_{2m-2j}(eta_{2k,2m}) + U_{2j-1}(eta_{2k,2m}); zero for 1 <= j <= m-1, 1 <= k <= m.
/// Lets the odd rows of X_j be traded for even ones at the U_2m zeros.
double u_zero_identity_even(int m, int j, int k);
/// U_{2m-2j}(eta_{2k-1,2m}) - U_{2j-1}(eta_{2k-1,2m}); zero on the same range.
double u_zero_identity_odd(int m, int j, int k);

}  // namespace radon
