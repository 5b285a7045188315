#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eacp/rational.hpp"

namespace eacp {

/// Dense univariate polynomial with rational coefficients, stored low degree
/// first with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// The monomial x.
  static Polynomial x();

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const {
    return coeffs_;
  }
  [[nodiscard]] Rational coefficient(std::size_t k) const;
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] double evaluate(double x) const;

  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] Polynomial monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  [[nodiscard]] std::vector<mpz_class> primitive_integer_form() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) {
    return a *= b;
  }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form in the given variable, e.g. "2*u^2 - u + 1/2".
  [[nodiscard]] std::string to_string(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial square_free_part(const Polynomial& p);

/// Interpolating polynomial through (xs[i], ys[i]); xs distinct.
Polynomial interpolate(const std::vector<Rational>& xs,
                       const std::vector<Rational>& ys);

/// Distinct rational roots in increasing order. p must be nonzero.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Open interval (lo, hi) containing exactly one real root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Sturm-sequence isolation of the distinct real roots of p, each refined to
/// width at most `max_width`. Endpoints are never roots. p must be nonzero.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p,
                                             const Rational& max_width);

/// Number of distinct real roots of p in (lo, hi], via Sturm's theorem.
std::size_t count_real_roots(const Polynomial& p, const Rational& lo,
                             const Rational& hi);

}  // namespace eacp
