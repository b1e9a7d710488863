#pragma once

// Exact Laurent polynomials in q with half-integer exponents, quantum
// integers/binomials, and tau-graded dimensions.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace moykit::qpoly {

/// Integer-coefficient Laurent polynomial in q^{1/2}.
///
/// Exponents are stored doubled: the key 3 stands for q^{3/2}. Zero
/// coefficients are never stored, so equality is structural.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers convert implicitly

  /// c * q^{doubled_exp / 2}
  static LaurentPoly monomial(std::int64_t doubled_exp, const mpz_class& c = 1);
  /// c * q^{exp}
  static LaurentPoly q_power(std::int64_t exp, const mpz_class& c = 1) {
    return monomial(2 * exp, c);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of q^{doubled_exp/2}.
  mpz_class coeff(std::int64_t doubled_exp) const;
  std::int64_t min_doubled_exp() const;  // requires !is_zero()
  std::int64_t max_doubled_exp() const;  // requires !is_zero()

  void add_term(std::int64_t doubled_exp, const mpz_class& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  /// Multiply by q^{doubled_shift/2}.
  LaurentPoly shifted(std::int64_t doubled_shift) const;
  LaurentPoly scaled(const mpz_class& c) const;

  /// Value at q = 1.
  mpz_class at_one() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Human-readable form, descending exponents, e.g. "q^2 + 1 + q^-2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// q -> q^{-1}
LaurentPoly bar(const LaurentPoly& p);

/// Exact division; throws Error(arithmetic) when den does not divide num.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// [j] = (q^j - q^-j)/(q - q^-1); [0] = 0.
LaurentPoly qint(int j);
LaurentPoly qfactorial(int j);
/// Balanced quantum binomial; 0 when k < 0 or k > j.
LaurentPoly qbinom(int j, int k);
/// q^{-mn} * sum over partitions in the m x n box of q^{2|lambda|}.
LaurentPoly qbinom_via_partitions(int m, int n);

/// Element of Z[q, q^-1][tau]/(tau^2 - 1).
struct GradedDim {
  LaurentPoly even;
  LaurentPoly odd;

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  friend bool operator==(const GradedDim&, const GradedDim&) = default;
};

/// even + sign * odd
LaurentPoly specialize_tau(const GradedDim& g, int sign);

/// Sorted [numerator, denominator, coefficient] triples, exponent reduced
/// to lowest terms (denominator 1 or 2).
struct SerializedTerm {
  std::int64_t num;
  std::int64_t den;
  mpz_class coeff;
};
std::vector<SerializedTerm> serialize_terms(const LaurentPoly& p);

}  // namespace moykit::qpoly
