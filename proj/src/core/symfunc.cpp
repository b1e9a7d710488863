#include "core/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "core/error.hpp"
#include "core/linalg.hpp"

namespace moykit::symfunc {

// ---------------------------------------------------------------- partitions

Partition normalized(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

namespace {

void require_partition(const Partition& p) {
  if (!is_partition(p)) throw Error(ErrorCode::invalid_argument, "not a partition");
}

bool in_box(const Partition& p, int m, int n) {
  const Partition q = normalized(p);
  return static_cast<int>(q.size()) <= m && (q.empty() || q.front() <= n);
}

void require_in_box(const Partition& p, int m, int n) {
  require_partition(p);
  if (!in_box(p, m, n)) throw Error(ErrorCode::domain, "partition outside the box");
}

}  // namespace

Partition conjugate(const Partition& p) {
  require_partition(p);
  const Partition q = normalized(p);
  Partition out;
  if (q.empty()) return out;
  for (int i = 1; i <= q.front(); ++i)
    out.push_back(static_cast<int>(std::count_if(q.begin(), q.end(), [i](int x) { return x >= i; })));
  return out;
}

Partition complement(const Partition& p, int m, int n) {
  require_in_box(p, m, n);
  Partition q = normalized(p);
  q.resize(m, 0);
  Partition out(m);
  for (int i = 0; i < m; ++i) out[i] = n - q[m - 1 - i];
  return normalized(out);
}

namespace {

void enumerate_rec(int parts_left, int max_part, Partition& cur, std::vector<Partition>& out) {
  out.push_back(cur);
  if (parts_left == 0) return;
  for (int v = 1; v <= max_part; ++v) {
    cur.push_back(v);
    enumerate_rec(parts_left - 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_box(int m, int n) {
  if (m < 0 || n < 0) throw Error(ErrorCode::invalid_argument, "negative box size");
  std::vector<Partition> out;
  Partition cur;
  enumerate_rec(m, n, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return weight(a) < weight(b);
  });
  return out;
}

// ---------------------------------------------------------------- rings

AlphabetRing::AlphabetRing(std::vector<Alphabet> alphabets) : alphabets_(std::move(alphabets)) {
  for (std::size_t i = 0; i < alphabets_.size(); ++i) {
    if (alphabets_[i].size < 0) throw Error(ErrorCode::invalid_argument, "negative alphabet size");
    for (std::size_t k = 0; k < i; ++k)
      if (alphabets_[k].name == alphabets_[i].name)
        throw Error(ErrorCode::invalid_argument, "duplicate alphabet " + alphabets_[i].name);
    offset_.push_back(static_cast<int>(gen_degree_.size()));
    for (int j = 1; j <= alphabets_[i].size; ++j) {
      gen_degree_.push_back(2 * j);
      gen_alphabet_.push_back(static_cast<int>(i));
    }
  }
}

bool AlphabetRing::has(const std::string& name) const {
  return std::any_of(alphabets_.begin(), alphabets_.end(), [&](const Alphabet& a) { return a.name == name; });
}

int AlphabetRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < alphabets_.size(); ++i)
    if (alphabets_[i].name == name) return static_cast<int>(i);
  throw Error(ErrorCode::invalid_argument, "unknown alphabet " + name);
}

int AlphabetRing::size_of(const std::string& name) const { return alphabets_[index_of(name)].size; }

int AlphabetRing::generator(const std::string& name, int j) const {
  const int i = index_of(name);
  if (j < 1 || j > alphabets_[i].size) throw Error(ErrorCode::invalid_argument, "generator index out of range");
  return offset_[i] + j - 1;
}

std::string AlphabetRing::generator_name(int g) const {
  const int a = gen_alphabet_[g];
  return alphabets_[a].name + "_" + std::to_string(g - offset_[a] + 1);
}

RingPtr make_ring(std::vector<Alphabet> alphabets) {
  return std::make_shared<const AlphabetRing>(std::move(alphabets));
}

// ---------------------------------------------------------------- SymPoly

SymPoly SymPoly::constant(RingPtr ring, const mpq_class& c) {
  SymPoly p(ring);
  p.add_term(Exponents(ring->num_generators(), 0), c);
  return p;
}

SymPoly SymPoly::generator(RingPtr ring, int g) {
  SymPoly p(ring);
  Exponents e(ring->num_generators(), 0);
  e.at(g) = 1;
  p.add_term(e, 1);
  return p;
}

SymPoly SymPoly::elem(RingPtr ring, const std::string& name, int j) {
  const int size = ring->size_of(name);
  if (j == 0) return constant(ring, 1);
  if (j < 0 || j > size) return SymPoly(ring);
  return generator(ring, ring->generator(name, j));
}

int SymPoly::monomial_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t g = 0; g < e.size(); ++g) d += e[g] * ring_->generator_degree(static_cast<int>(g));
  return d;
}

std::optional<int> SymPoly::degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    const int k = monomial_degree(e);
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d;
}

void SymPoly::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_same_ring(const SymPoly& a, const SymPoly& b) {
  if (a.ring() != b.ring() && a.ring()->alphabets().size() != 0 && b.ring()->alphabets().size() != 0) {
    const auto& x = a.ring()->alphabets();
    const auto& y = b.ring()->alphabets();
    const bool same = x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin(), [](const Alphabet& p, const Alphabet& q) {
                        return p.name == q.name && p.size == q.size;
                      });
    if (!same) throw Error(ErrorCode::invalid_argument, "symmetric polynomials live in different rings");
  }
}

}  // namespace

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  require_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly SymPoly::operator-() const { return scaled(-1); }

SymPoly SymPoly::scaled(const mpq_class& c) const {
  SymPoly r(ring_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
  return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  require_same_ring(a, b);
  SymPoly r(a.ring_);
  const std::size_t n = a.ring_->num_generators();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t g = 0; g < n; ++g) e[g] = ea[g] + eb[g];
      r.add_term(e, ca * cb);
    }
  return r;
}

bool operator==(const SymPoly& a, const SymPoly& b) {
  require_same_ring(a, b);
  return a.terms_ == b.terms_;
}

SymPoly SymPoly::derivative(int g) const {
  SymPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[g] == 0) continue;
    Exponents f = e;
    --f[g];
    r.add_term(f, c * e[g]);
  }
  return r;
}

mpq_class SymPoly::constant_term() const {
  auto it = terms_.find(Exponents(ring_->num_generators(), 0));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpq_class c = it->second;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    c = abs(c);
    bool any = false;
    std::ostringstream mono;
    for (std::size_t g = 0; g < it->first.size(); ++g) {
      if (it->first[g] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << ring_->generator_name(static_cast<int>(g));
      if (it->first[g] > 1) mono << "^" << it->first[g];
    }
    if (!any)
      os << c.get_str();
    else if (c == 1)
      os << mono.str();
    else
      os << c.get_str() << "*" << mono.str();
  }
  return os.str();
}

SymPoly multiply(const SymPoly& a, const SymPoly& b) { return a * b; }

SymPoly power(const SymPoly& a, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "negative power");
  SymPoly r = SymPoly::constant(a.ring(), 1);
  SymPoly base = a;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

SymPoly compose(const SymPoly& p, const std::vector<SymPoly>& images, const RingPtr& target) {
  const int n = p.ring()->num_generators();
  if (static_cast<int>(images.size()) != n) throw Error(ErrorCode::invalid_argument, "compose: wrong number of images");
  std::vector<std::vector<SymPoly>> powers(n);
  auto pw = [&](int g, int k) -> const SymPoly& {
    auto& v = powers[g];
    if (v.empty()) v.push_back(SymPoly::constant(target, 1));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * images[g]);
    return v[k];
  };
  SymPoly r(target);
  for (const auto& [e, c] : p.terms()) {
    SymPoly t = SymPoly::constant(target, c);
    for (int g = 0; g < n; ++g)
      if (e[g]) t = t * pw(g, e[g]);
    r += t;
  }
  return r;
}

SymPoly substitute_alphabet(const SymPoly& p, const std::string& from, const std::string& to) {
  const auto& ring = *p.ring();
  const int m = ring.size_of(from);
  if (ring.size_of(to) != m) throw Error(ErrorCode::invalid_argument, "substitute_alphabet: size mismatch");
  std::vector<SymPoly> images;
  for (int g = 0; g < ring.num_generators(); ++g) images.push_back(SymPoly::generator(p.ring(), g));
  for (int j = 1; j <= m; ++j) images[ring.generator(from, j)] = SymPoly::generator(p.ring(), ring.generator(to, j));
  return compose(p, images, p.ring());
}

SymPoly embed(const SymPoly& p, const RingPtr& target) {
  const auto& src = *p.ring();
  std::vector<int> where(src.num_generators());
  for (const auto& a : src.alphabets()) {
    if (target->size_of(a.name) != a.size) throw Error(ErrorCode::invalid_argument, "embed: size mismatch for " + a.name);
    for (int j = 1; j <= a.size; ++j) where[src.generator(a.name, j)] = target->generator(a.name, j);
  }
  SymPoly r(target);
  Exponents f(target->num_generators(), 0);
  for (const auto& [e, c] : p.terms()) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t g = 0; g < e.size(); ++g) f[where[g]] = e[g];
    r.add_term(f, c);
  }
  return r;
}

SymPoly exact_divide(const SymPoly& num, const SymPoly& den) {
  require_same_ring(num, den);
  if (den.is_zero()) throw Error(ErrorCode::arithmetic, "division by zero polynomial");
  const auto& [dlead_e, dlead_c] = *den.terms().rbegin();
  const std::size_t n = dlead_e.size();
  SymPoly rem = num;
  SymPoly quot(num.ring());
  Exponents e(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    for (std::size_t g = 0; g < n; ++g) {
      e[g] = re[g] - dlead_e[g];
      if (e[g] < 0) throw Error(ErrorCode::arithmetic, "polynomial division is not exact");
    }
    const mpq_class c = rc / dlead_c;
    SymPoly t(num.ring());
    t.add_term(e, c);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

// ---------------------------------------------------------------- h, p, e

namespace {

RingPtr single_ring(int m) {
  static std::mutex mu;
  static std::unordered_map<int, RingPtr> rings;
  std::lock_guard<std::mutex> lock(mu);
  auto& r = rings[m];
  if (!r) r = make_ring({{"X", m}});
  return r;
}

// Memoized h_k and p_k of one alphabet of size m, in the ring {X: m}.
class Memo {
 public:
  const SymPoly& complete(int m, int k) { return get(h_, m, k, true); }
  const SymPoly& power(int m, int k) { return get(p_, m, k, false); }

 private:
  using Table = std::map<std::pair<int, int>, SymPoly>;

  const SymPoly& get(Table& t, int m, int k, bool is_h) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = t.find({m, k});
      if (it != t.end()) return it->second;
    }
    SymPoly v = is_h ? compute_h(m, k) : compute_p(m, k);
    std::lock_guard<std::mutex> lock(mu_);
    return t.try_emplace({m, k}, std::move(v)).first->second;
  }

  SymPoly compute_h(int m, int k) {
    const RingPtr ring = single_ring(m);
    if (k < 0) return SymPoly(ring);
    if (k == 0) return SymPoly::constant(ring, 1);
    SymPoly r(ring);
    for (int i = 1; i <= std::min(k, m); ++i) {
      SymPoly t = SymPoly::elem(ring, "X", i) * complete(m, k - i);
      if (i % 2 == 1)
        r += t;
      else
        r -= t;
    }
    return r;
  }

  SymPoly compute_p(int m, int k) {
    const RingPtr ring = single_ring(m);
    if (k < 0) return SymPoly(ring);
    if (k == 0) return SymPoly::constant(ring, m);
    SymPoly r(ring);
    for (int i = 1; i <= std::min(k - 1, m); ++i) {
      SymPoly t = SymPoly::elem(ring, "X", i) * power(m, k - i);
      if (i % 2 == 1)
        r += t;
      else
        r -= t;
    }
    if (k <= m) {
      SymPoly t = SymPoly::elem(ring, "X", k).scaled(k);
      if (k % 2 == 1)
        r += t;
      else
        r -= t;
    }
    return r;
  }

  std::mutex mu_;
  Table h_, p_;
};

Memo& memo() {
  static Memo m;
  return m;
}

// Move a polynomial of the single-alphabet ring {X: m} onto `alphabet`.
SymPoly relocate(const SymPoly& p, const RingPtr& ring, const std::string& alphabet) {
  const int m = ring->size_of(alphabet);
  const int base = m > 0 ? ring->generator(alphabet, 1) : 0;
  SymPoly r(ring);
  Exponents f(ring->num_generators(), 0);
  for (const auto& [e, c] : p.terms()) {
    std::fill(f.begin(), f.end(), 0);
    for (int j = 0; j < m; ++j) f[base + j] = e[j];
    r.add_term(f, c);
  }
  return r;
}

}  // namespace

SymPoly elem(const RingPtr& ring, const std::string& alphabet, int k) { return SymPoly::elem(ring, alphabet, k); }

SymPoly complete(const RingPtr& ring, const std::string& alphabet, int k) {
  const int m = ring->size_of(alphabet);
  return relocate(memo().complete(m, k), ring, alphabet);
}

SymPoly power_sum(const RingPtr& ring, const std::string& alphabet, int k) {
  const int m = ring->size_of(alphabet);
  return relocate(memo().power(m, k), ring, alphabet);
}

SymPoly elem_of_union(const RingPtr& ring, const std::vector<std::string>& alphabets, int k) {
  // Coefficients of prod_i (sum_j E_{i,j} t^j), truncated at t^k.
  if (k < 0) return SymPoly(ring);
  std::vector<SymPoly> series{SymPoly::constant(ring, 1)};
  for (const auto& a : alphabets) {
    const int m = ring->size_of(a);
    std::vector<SymPoly> next(std::min<std::size_t>(series.size() + m, k + 1), SymPoly(ring));
    for (std::size_t s = 0; s < series.size(); ++s)
      for (int j = 0; j <= m && s + j < next.size(); ++j) next[s + j] += series[s] * SymPoly::elem(ring, a, j);
    series = std::move(next);
  }
  return k < static_cast<int>(series.size()) ? series[k] : SymPoly(ring);
}

bool power_derivative_check(int m, int l, int j) {
  if (j < 1 || j > m) throw Error(ErrorCode::invalid_argument, "derivative index out of range");
  const RingPtr ring = single_ring(m);
  const SymPoly lhs = power_sum(ring, "X", l).derivative(ring->generator("X", j));
  SymPoly rhs = complete(ring, "X", l - j).scaled(l);
  if (j % 2 == 0) rhs = -rhs;
  return lhs == rhs;
}

// ---------------------------------------------------------------- Schur

namespace {

SymPoly determinant(const std::vector<std::vector<SymPoly>>& M, const RingPtr& ring) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return SymPoly::constant(ring, 1);
  if (n > 20) throw Error(ErrorCode::domain, "determinant too large");
  std::vector<std::optional<SymPoly>> dp(std::size_t(1) << n);
  dp[0] = SymPoly::constant(ring, 1);
  for (unsigned mask = 0; mask < dp.size(); ++mask) {
    if (!dp[mask] || dp[mask]->is_zero()) continue;
    const int row = __builtin_popcount(mask);
    if (row == n) continue;
    for (int c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      if (M[row][c].is_zero()) continue;
      SymPoly t = *dp[mask] * M[row][c];
      if (__builtin_popcount(mask >> (c + 1)) % 2) t = -t;
      auto& slot = dp[mask | (1u << c)];
      if (slot)
        *slot += t;
      else
        slot = std::move(t);
    }
  }
  const auto& full = dp.back();
  return full ? *full : SymPoly(ring);
}

}  // namespace

SymPoly schur(const RingPtr& ring, const std::string& alphabet, const Partition& lambda) {
  require_partition(lambda);
  const Partition p = normalized(lambda);
  const int m = ring->size_of(alphabet);
  const int n = static_cast<int>(p.size());
  if (n > m) return SymPoly(ring);
  std::vector<std::vector<SymPoly>> M(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i].push_back(complete(ring, alphabet, p[i] - i + j));
  return determinant(M, ring);
}

SymPoly schur_negative(const RingPtr& ring, const std::string& alphabet, const Partition& lambda) {
  require_partition(lambda);
  const Partition p = normalized(lambda);
  const int m = ring->size_of(alphabet);
  if (!p.empty() && p.front() > m) throw Error(ErrorCode::domain, "schur_negative: first part exceeds alphabet size");
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<SymPoly>> M(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = p[i] - i + j;
      SymPoly e = SymPoly::elem(ring, alphabet, k);
      M[i].push_back(k % 2 ? -e : e);
    }
  return determinant(M, ring);
}

// ---------------------------------------------------------------- Sylvester

namespace {

// Dense polynomial in explicit variables z_0..z_{k-1}.
using Dense = std::map<std::vector<int>, mpz_class>;

void dense_add(Dense& a, const std::vector<int>& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, ins] = a.try_emplace(e, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      dense_add(r, e, ca * cb);
    }
  return r;
}

Dense dense_const(int k, long c) {
  Dense d;
  dense_add(d, std::vector<int>(k, 0), c);
  return d;
}

// e_j of variables [lo, hi) among k.
Dense dense_elem(int k, int lo, int hi, int j) {
  Dense r;
  std::vector<int> e(k, 0);
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      dense_add(r, e, 1);
      return;
    }
    for (int v = start; v <= hi - left; ++v) {
      e[v] = 1;
      self(self, v + 1, left - 1);
      e[v] = 0;
    }
  };
  rec(rec, lo, j);
  return r;
}

// prod_{lo <= a < b < hi} (z_a - z_b)
Dense dense_vandermonde(int k, int lo, int hi) {
  Dense r = dense_const(k, 1);
  for (int a = lo; a < hi; ++a)
    for (int b = a + 1; b < hi; ++b) {
      Dense f;
      std::vector<int> e(k, 0);
      e[a] = 1;
      dense_add(f, e, 1);
      e[a] = 0;
      e[b] = 1;
      dense_add(f, e, -1);
      r = dense_mul(r, f);
    }
  return r;
}

// Expand a SymPoly over {X: m, Y: n} into z_0..z_{m+n-1}.
Dense expand(const SymPoly& p, int m, int n) {
  const int k = m + n;
  const auto& ring = *p.ring();
  std::vector<Dense> gens(ring.num_generators());
  for (int j = 1; j <= m; ++j) gens[ring.generator("X", j)] = dense_elem(k, 0, m, j);
  for (int j = 1; j <= n; ++j) gens[ring.generator("Y", j)] = dense_elem(k, m, k, j);
  Dense r;
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw Error(ErrorCode::internal, "sylvester: non-integral coefficient");
    Dense t = dense_const(k, 1);
    for (std::size_t g = 0; g < e.size(); ++g)
      for (int i = 0; i < e[g]; ++i) t = dense_mul(t, gens[g]);
    for (const auto& [te, tc] : t) dense_add(r, te, tc * c.get_num());
  }
  return r;
}

}  // namespace

int sylvester(int m, int n, const Partition& lambda, const Partition& mu) {
  if (m < 0 || n < 0) throw Error(ErrorCode::invalid_argument, "negative alphabet size");
  require_in_box(lambda, m, n);
  require_in_box(mu, m, n);
  if (m + n > 8) throw Error(ErrorCode::domain, "sylvester: alphabets too large");
  const RingPtr ring = make_ring({{"X", m}, {"Y", n}});
  const SymPoly f = schur(ring, "X", lambda) * schur_negative(ring, "Y", mu);
  const int k = m + n;
  const Dense g = dense_mul(dense_mul(expand(f, m, n), dense_vandermonde(k, 0, m)), dense_vandermonde(k, m, k));

  // zeta(f) = (1/V) * sum over shuffles sigma of sgn(sigma) * sigma(f V_X V_Y)
  Dense num;
  std::vector<int> pos(k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    int xi = 0, yi = m, inversions = 0, ys_seen = 0;
    for (int p = 0; p < k; ++p) {
      if (mask & (1u << p)) {
        pos[xi++] = p;
        inversions += ys_seen;
      } else {
        pos[yi++] = p;
        ++ys_seen;
      }
    }
    for (const auto& [e, c] : g) {
      std::vector<int> f2(k);
      for (int v = 0; v < k; ++v) f2[pos[v]] = e[v];
      dense_add(num, f2, inversions % 2 ? mpz_class(-c) : c);
    }
  }
  const Dense V = dense_vandermonde(k, 0, k);
  const auto& [lead_e, lead_c] = *V.rbegin();
  const mpz_class c = num.empty() ? mpz_class(0) : mpz_class(num.count(lead_e) ? num.at(lead_e) : 0) / lead_c;
  Dense check = V;
  for (auto& [e, v] : check) v *= c;
  if (c == 0) check.clear();
  if (check != num) throw Error(ErrorCode::internal, "sylvester: result is not a constant");
  return static_cast<int>(c.get_si());
}

// ---------------------------------------------------------------- Grassmannian

std::vector<Exponents> monomials_of_degree(const AlphabetRing& ring, int d) {
  std::vector<Exponents> out;
  const int n = ring.num_generators();
  if (d < 0) return out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, int g, int left) -> void {
    if (g == n) {
      if (left == 0) out.push_back(e);
      return;
    }
    const int deg = ring.generator_degree(g);
    for (int k = left / deg; k >= 0; --k) {
      e[g] = k;
      self(self, g + 1, left - k * deg);
    }
    e[g] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

namespace {

struct GrassmannianSlice {
  std::map<Exponents, int> column;
  linalg::EchelonBasis ideal;
  std::size_t size = 0;
};

GrassmannianSlice grassmannian_slice(const RingPtr& ring, int m, int N, int d) {
  GrassmannianSlice s;
  const auto mons = monomials_of_degree(*ring, d);
  for (std::size_t i = 0; i < mons.size(); ++i) s.column.emplace(mons[i], static_cast<int>(i));
  s.size = mons.size();
  for (int k = N + 1 - m; k <= N; ++k) {
    const SymPoly h = complete(ring, "X", k);
    for (const auto& mono : monomials_of_degree(*ring, d - 2 * k)) {
      SymPoly t(ring);
      t.add_term(mono, 1);
      const SymPoly prod = h * t;
      linalg::SparseRow row;
      for (const auto& [e, c] : prod.terms()) row.emplace_back(s.column.at(e), c);
      linalg::normalize(row);
      s.ideal.insert(std::move(row));
    }
  }
  return s;
}

linalg::SparseRow to_row(const SymPoly& p, const GrassmannianSlice& s) {
  linalg::SparseRow row;
  for (const auto& [e, c] : p.terms()) row.emplace_back(s.column.at(e), c);
  linalg::normalize(row);
  return row;
}

}  // namespace

qpoly::GradedDim grassmannian_dim(int m, int N) {
  if (m < 0 || N < 0 || m > N) throw Error(ErrorCode::domain, "grassmannian_dim requires 0 <= m <= N");
  const RingPtr ring = single_ring(m);
  const int top = 2 * m * (N - m);
  qpoly::GradedDim g;
  for (int d = 0; d <= top + 2 * m; d += 2) {
    const auto s = grassmannian_slice(ring, m, N, d);
    const long dim = static_cast<long>(s.size - s.ideal.rank());
    if (d > top && dim != 0) throw Error(ErrorCode::internal, "grassmannian quotient not finite above top degree");
    g.even.add_term(2 * d, dim);
  }
  return g;
}

int grassmannian_trace(int m, int N, const Partition& lambda, const Partition& mu) {
  if (m < 0 || N < 0 || m > N) throw Error(ErrorCode::domain, "grassmannian_trace requires 0 <= m <= N");
  require_in_box(lambda, m, N - m);
  require_in_box(mu, m, N - m);
  const int top = m * (N - m);
  if (weight(lambda) + weight(mu) != top) return 0;
  const RingPtr ring = single_ring(m);
  const auto s = grassmannian_slice(ring, m, N, 2 * top);
  const auto nf_top = s.ideal.normal_form(to_row(schur(ring, "X", Partition(m, N - m)), s));
  const auto nf = s.ideal.normal_form(to_row(schur(ring, "X", lambda) * schur(ring, "X", mu), s));
  if (nf_top.size() != 1) throw Error(ErrorCode::internal, "grassmannian top degree is not one-dimensional");
  if (nf.empty()) return 0;
  if (nf.size() != 1 || nf.front().first != nf_top.front().first)
    throw Error(ErrorCode::internal, "grassmannian normal form outside top class");
  const mpq_class r = nf.front().second / nf_top.front().second;
  if (r.get_den() != 1) throw Error(ErrorCode::internal, "grassmannian trace not integral");
  return static_cast<int>(r.get_num().get_si());
}

}  // namespace moykit::symfunc
