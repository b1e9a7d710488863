#pragma once

// Partitions and symmetric polynomials written in elementary symmetric
// generators of one or more alphabets.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/qpoly.hpp"

namespace moykit::symfunc {

/// Non-increasing parts; trailing zeros allowed on input, stripped on output.
using Partition = std::vector<int>;

Partition normalized(Partition p);
bool is_partition(const Partition& p);
int weight(const Partition& p);
Partition conjugate(const Partition& p);
/// Complement inside the m x n box, as an m-part partition (zeros stripped).
Partition complement(const Partition& p, int m, int n);
/// All partitions with at most m parts and parts at most n.
std::vector<Partition> enumerate_box(int m, int n);

struct Alphabet {
  std::string name;
  int size = 0;
};

/// Polynomial ring in E_{i,j}, 1 <= j <= size_i, deg E_{i,j} = 2j.
class AlphabetRing {
 public:
  explicit AlphabetRing(std::vector<Alphabet> alphabets);

  const std::vector<Alphabet>& alphabets() const { return alphabets_; }
  int num_generators() const { return static_cast<int>(gen_degree_.size()); }
  /// Doubled degree of generator g.
  int generator_degree(int g) const { return gen_degree_[g]; }
  bool has(const std::string& name) const;
  int index_of(const std::string& name) const;  // throws if missing
  int size_of(const std::string& name) const;
  /// Generator index of E_{name, j}, 1 <= j <= size.
  int generator(const std::string& name, int j) const;
  std::string generator_name(int g) const;

 private:
  std::vector<Alphabet> alphabets_;
  std::vector<int> offset_;
  std::vector<int> gen_degree_;
  std::vector<int> gen_alphabet_;
};

using RingPtr = std::shared_ptr<const AlphabetRing>;
RingPtr make_ring(std::vector<Alphabet> alphabets);

/// Exponent vector over the generators of a ring.
using Exponents = std::vector<int>;

class SymPoly {
 public:
  using Terms = std::map<Exponents, mpq_class>;

  explicit SymPoly(RingPtr ring) : ring_(std::move(ring)) {}
  static SymPoly constant(RingPtr ring, const mpq_class& c);
  static SymPoly generator(RingPtr ring, int g);
  /// E_{name,j}; 1 for j = 0 and 0 outside 0..size.
  static SymPoly elem(RingPtr ring, const std::string& name, int j);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Common doubled degree; nullopt if inhomogeneous or zero.
  std::optional<int> degree() const;
  int monomial_degree(const Exponents& e) const;

  void add_term(const Exponents& e, const mpq_class& c);
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly operator-() const;
  SymPoly scaled(const mpq_class& c) const;
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b);

  /// Formal partial derivative in generator g.
  SymPoly derivative(int g) const;
  /// Constant term.
  mpq_class constant_term() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  Terms terms_;
};

SymPoly multiply(const SymPoly& a, const SymPoly& b);
SymPoly power(const SymPoly& a, int k);

/// Substitute every generator g of p's ring by images[g] (all in one ring).
SymPoly compose(const SymPoly& p, const std::vector<SymPoly>& images, const RingPtr& target);
/// Rename E_{from,j} to E_{to,j} inside the same ring; sizes must agree.
SymPoly substitute_alphabet(const SymPoly& p, const std::string& from, const std::string& to);
/// Re-express p in a ring containing all of p's alphabets (by name).
SymPoly embed(const SymPoly& p, const RingPtr& target);
/// Quotient with verified zero remainder; throws Error(arithmetic) otherwise.
SymPoly exact_divide(const SymPoly& num, const SymPoly& den);

// Symmetric functions of one alphabet, as polynomials in its E-generators.
SymPoly elem(const RingPtr& ring, const std::string& alphabet, int k);
SymPoly complete(const RingPtr& ring, const std::string& alphabet, int k);
SymPoly power_sum(const RingPtr& ring, const std::string& alphabet, int k);

/// Elementary symmetric polynomial e_k of the union of several alphabets.
SymPoly elem_of_union(const RingPtr& ring, const std::vector<std::string>& alphabets, int k);

/// Checks d p_{m,l} / d X_j = (-1)^{j+1} l h_{m,l-j}.
bool power_derivative_check(int m, int l, int j);

/// Jacobi-Trudi; zero when the partition has more than `size` nonzero parts.
SymPoly schur(const RingPtr& ring, const std::string& alphabet, const Partition& lambda);
/// Determinant of h_j(-X) = (-1)^j X_j; requires lambda_1 <= size.
SymPoly schur_negative(const RingPtr& ring, const std::string& alphabet, const Partition& lambda);

/// Sylvester operator applied to S_lambda(X) S_mu(-Y), |X| = m, |Y| = n.
int sylvester(int m, int n, const Partition& lambda, const Partition& mu);

/// Graded dimension of Sym(X)/(h_{N+1-m}, ..., h_N), |X| = m.
qpoly::GradedDim grassmannian_dim(int m, int N);
/// Trace of S_lambda S_mu in the quotient, normalized so Tr(S_top) = 1.
int grassmannian_trace(int m, int N, const Partition& lambda, const Partition& mu);

/// All exponent vectors of doubled degree d over the ring's generators,
/// in graded lex order.
std::vector<Exponents> monomials_of_degree(const AlphabetRing& ring, int d);

}  // namespace moykit::symfunc
