#include "core/qpoly.hpp"

#include <numeric>
#include <sstream>

#include "core/error.hpp"

namespace moykit::qpoly {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentPoly LaurentPoly::monomial(std::int64_t doubled_exp, const mpz_class& c) {
  LaurentPoly p;
  p.add_term(doubled_exp, c);
  return p;
}

bool LaurentPoly::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

mpz_class LaurentPoly::coeff(std::int64_t doubled_exp) const {
  auto it = terms_.find(doubled_exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::int64_t LaurentPoly::min_doubled_exp() const {
  if (terms_.empty()) throw Error(ErrorCode::domain, "degree of zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_doubled_exp() const {
  if (terms_.empty()) throw Error(ErrorCode::domain, "degree of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(std::int64_t doubled_exp, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(doubled_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::shifted(std::int64_t doubled_shift) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + doubled_shift, c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
  return r;
}

mpz_class LaurentPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->second;
    const std::int64_t e = it->first;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "q";
    if (e % 2 != 0)
      os << "^(" << e << "/2)";
    else if (e != 2)
      os << "^" << e / 2;
  }
  return os.str();
}

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::arithmetic, "division by zero polynomial");
  LaurentPoly rem = num;
  LaurentPoly quot;
  const std::int64_t dtop = den.max_doubled_exp();
  const mpz_class dlead = den.coeff(dtop);
  const std::int64_t qlow = num.is_zero() ? 0 : num.min_doubled_exp() - den.min_doubled_exp();
  while (!rem.is_zero()) {
    const std::int64_t rtop = rem.max_doubled_exp();
    const std::int64_t e = rtop - dtop;
    if (e < qlow) throw Error(ErrorCode::arithmetic, "polynomial division is not exact");
    const mpz_class rc = rem.coeff(rtop);
    if (!mpz_divisible_p(rc.get_mpz_t(), dlead.get_mpz_t()))
      throw Error(ErrorCode::arithmetic, "polynomial division is not exact over Z");
    const mpz_class c = rc / dlead;
    quot.add_term(e, c);
    rem -= den.shifted(e).scaled(c);
  }
  return quot;
}

LaurentPoly qint(int j) {
  if (j < 0) return -qint(-j);
  LaurentPoly r;
  for (int i = 0; i < j; ++i) r.add_term(2 * (j - 1 - 2 * i), 1);
  return r;
}

LaurentPoly qfactorial(int j) {
  LaurentPoly r(1);
  for (int i = 2; i <= j; ++i) r *= qint(i);
  return r;
}

LaurentPoly qbinom(int j, int k) {
  if (j < 0 || k < 0 || k > j) return {};
  return exact_divide(qfactorial(j), qfactorial(k) * qfactorial(j - k));
}

namespace {

// Number of partitions of each size fitting in a rows x cols box.
std::vector<mpz_class> box_size_counts(int rows, int cols) {
  // counts[r][s]: partitions with at most r parts, parts <= current cols bound.
  // Built by adding one column height at a time (Gaussian binomial recursion).
  std::vector<std::vector<mpz_class>> table(rows + 1, std::vector<mpz_class>(1, 1));
  for (int c = 1; c <= cols; ++c) {
    std::vector<std::vector<mpz_class>> next(rows + 1);
    next[0] = {1};
    for (int r = 1; r <= rows; ++r) {
      // Partitions in r x c box: either fewer than r parts (r-1 x c box)
      // or exactly r parts, remove first column -> r x (c-1) box, size + r.
      const auto& a = next[r - 1];
      const auto& b = table[r];
      std::vector<mpz_class> v(std::max(a.size(), b.size() + r), 0);
      for (std::size_t s = 0; s < a.size(); ++s) v[s] += a[s];
      for (std::size_t s = 0; s < b.size(); ++s) v[s + r] += b[s];
      next[r] = std::move(v);
    }
    table = std::move(next);
  }
  return table[rows];
}

}  // namespace

LaurentPoly qbinom_via_partitions(int m, int n) {
  if (m < 0 || n < 0) return {};
  const auto counts = box_size_counts(m, n);
  LaurentPoly r;
  for (std::size_t s = 0; s < counts.size(); ++s)
    r.add_term(2 * (2 * static_cast<std::int64_t>(s) - static_cast<std::int64_t>(m) * n), counts[s]);
  return r;
}

LaurentPoly specialize_tau(const GradedDim& g, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::invalid_argument, "tau sign must be +1 or -1");
  return sign == 1 ? g.even + g.odd : g.even - g.odd;
}

std::vector<SerializedTerm> serialize_terms(const LaurentPoly& p) {
  std::vector<SerializedTerm> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 == 0)
      out.push_back({e / 2, 1, c});
    else
      out.push_back({e, 2, c});
  }
  return out;
}

}  // namespace moykit::qpoly
