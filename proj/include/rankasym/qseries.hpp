#pragma once

// Truncated bivariate series: power series in q whose coefficients are
// Laurent polynomials in zeta with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rankasym::qseries {

/// Sparse Laurent polynomial in zeta. Never stores a zero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers promote to constant polynomials
  static LaurentPoly monomial(int exponent, const mpz_class& coeff = 1);

  const mpz_class& operator[](int exponent) const;
  void add_term(int exponent, const mpz_class& coeff);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;
  const std::map<int, mpz_class>& terms() const noexcept { return coeffs_; }
  int min_exponent() const;
  int max_exponent() const;

  /// Value at zeta = 1.
  mpz_class coefficient_sum() const;
  /// zeta -> zeta^{-1}.
  LaurentPoly reflected() const;
  /// Multiply by zeta^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// "m1:c1 m2:c2 ..." with ascending exponents; empty for zero.
  std::string to_string() const;

 private:
  std::map<int, mpz_class> coeffs_;
};

/// Power series in q truncated at an explicit order N: terms q^0 .. q^N are
/// known, everything above is unknown. Arithmetic between series of
/// different orders returns the smaller order.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);
  BivariateSeries(int order, std::vector<LaurentPoly> terms);

  static BivariateSeries one(int order);
  /// sum_{k} coeffs[k] q^k, zeta-free.
  static BivariateSeries from_q_coefficients(int order, const std::vector<long>& coeffs);

  int order() const noexcept { return order_; }
  /// Throws DomainError for n outside [0, order].
  const LaurentPoly& operator[](int n) const;
  LaurentPoly& at(int n);

  /// zeta -> zeta^{-1} in every coefficient.
  BivariateSeries reflected() const;

  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);
  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

  /// One line per q-power: `n: m1:c1 m2:c2 ...`, exponents ascending.
  void dump(std::ostream& out) const;

 private:
  int order_;
  std::vector<LaurentPoly> terms_;
};

/// Cauchy product truncated at min(a.order(), b.order()).
BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b);

/// b with a * b = 1 up to a.order(). Throws NotInvertible unless the constant
/// term is the Laurent polynomial 1.
BivariateSeries series_invert(const BivariateSeries& a);

/// prod_{k=1}^{order} (1 - q^k), exact to the given order.
BivariateSeries q_pochhammer(int order);

/// sum_n N(m, n) zeta^m q^n up to q^order, built from the bilateral sum
/// (1 - zeta) sum_k (-1)^k q^{k(3k+1)/2} / (1 - zeta q^k) times 1/(q)_inf.
/// Throws CapExceeded when order > series_cap.
BivariateSeries rank_generating_expansion(int order, int series_cap = 1000);

}  // namespace rankasym::qseries
