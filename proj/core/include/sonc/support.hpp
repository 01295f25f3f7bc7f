#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sonc {

/// Raised for malformed or semantically invalid instance input.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point alpha in R^n used as the exponent of e^{<x, alpha>}.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::vector<double> coords) : coords_(std::move(coords)) {}
  Exponent(std::initializer_list<double> coords) : coords_(coords) {}

  static Exponent zero(std::size_t n) { return Exponent(std::vector<double>(n, 0.0)); }

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  bool is_zero() const;
  /// True when every coordinate is a nonnegative integer.
  bool is_lattice_point() const;

  double dot(std::span<const double> x) const;

  friend Exponent operator-(const Exponent& a, const Exponent& b);
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;

  std::string to_string() const;

 private:
  std::vector<double> coords_;
};

enum class InstanceKind { Polynomial, Exponential };

std::string_view to_string(InstanceKind kind);

struct Term {
  Exponent exponent;
  double coefficient = 0.0;
};

/// f(x) = sum_alpha c_alpha e^{<x, alpha>}. Polynomials are read on the
/// positive orthant through y_i = e^{x_i}.
///
/// Terms are kept in insertion order; exponents are pairwise distinct and no
/// coefficient is zero.
class ExponentialSum {
 public:
  ExponentialSum(std::size_t n, InstanceKind kind);

  /// Throws InstanceError on dimension mismatch, duplicate exponent, or a
  /// non-lattice exponent in a polynomial. Zero coefficients are ignored.
  void add_term(Exponent exponent, double coefficient);

  std::size_t dim() const { return n_; }
  InstanceKind kind() const { return kind_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool contains(const Exponent& e) const;
  /// Coefficient of e, or 0 when e is not in the support.
  double coefficient(const Exponent& e) const;
  double constant_term() const { return coefficient(Exponent::zero(n_)); }

  std::vector<Exponent> support() const;

  /// Copy of this sum with the constant term replaced by `value` (dropped when 0).
  ExponentialSum with_constant(double value) const;
  /// Copy of this sum with `t` added to the constant term.
  ExponentialSum shifted(double t) const;

 private:
  std::size_t n_;
  InstanceKind kind_;
  std::vector<Term> terms_;
  std::map<Exponent, std::size_t> index_;
};

/// Parse the JSON instance format
///   {"n": <int>, "kind": "polynomial"|"exponential",
///    "terms": [{"exp": [<num>,...], "coef": <num>}, ...]}
ExponentialSum parse_instance(std::string_view text);
ExponentialSum load_instance(const std::string& path);
std::string instance_to_json(const ExponentialSum& f);

struct SignDecomposition {
  std::vector<Exponent> a_plus;   // c_alpha > 0
  std::vector<Exponent> a_minus;  // c_beta < 0
  std::map<Exponent, bool> vertex_flags;

  bool is_vertex(const Exponent& e) const;
  bool in_plus(const Exponent& e) const;
};

/// Throws InstanceError when f is empty or has no positive term.
SignDecomposition sign_split(const ExponentialSum& f);

/// True iff alpha is not in the convex hull of points \ {alpha}.
bool is_vertex(std::span<const Exponent> points, const Exponent& alpha);

struct VertexViolation {
  Exponent exponent;
  double coefficient;
};

/// Every vertex of conv(supp f) carrying a negative coefficient.
std::vector<VertexViolation> validate_vertex_condition(const ExponentialSum& f);

/// Termwise sum of c_alpha * exp(<x, alpha>).
double evaluate(const ExponentialSum& f, std::span<const double> x);

}  // namespace sonc
