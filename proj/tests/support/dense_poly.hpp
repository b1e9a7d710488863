#pragma once

// Test oracle: polynomials in explicit variables x_1..x_m, with symmetric
// functions built from their combinatorial definitions. Shares nothing with
// the library's generator-basis code.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

#include "core/symfunc.hpp"

namespace oracle {

struct DensePoly {
  int vars = 0;
  std::map<std::vector<int>, mpq_class> terms;

  explicit DensePoly(int m) : vars(m) {}

  static DensePoly constant(int m, const mpq_class& c) {
    DensePoly p(m);
    if (c != 0) p.terms[std::vector<int>(m, 0)] = c;
    return p;
  }

  void add(const std::vector<int>& e, const mpq_class& c) {
    auto& slot = terms[e];
    slot += c;
    if (slot == 0) terms.erase(e);
  }

  DensePoly operator+(const DensePoly& o) const {
    DensePoly r = *this;
    for (const auto& [e, c] : o.terms) r.add(e, c);
    return r;
  }

  DensePoly operator*(const DensePoly& o) const {
    DensePoly r(vars);
    for (const auto& [a, ca] : terms)
      for (const auto& [b, cb] : o.terms) {
        std::vector<int> e(vars);
        for (int i = 0; i < vars; ++i) e[i] = a[i] + b[i];
        r.add(e, ca * cb);
      }
    return r;
  }

  bool operator==(const DensePoly& o) const { return terms == o.terms; }
};

// Sum over exponent vectors of total degree k with entries bounded by cap.
inline DensePoly monomial_sum(int m, int k, int cap) {
  DensePoly p(m);
  std::vector<int> e(m, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m) {
      if (left == 0) p.add(e, 1);
      return;
    }
    for (int v = 0; v <= std::min(left, cap); ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(0, k);
  return p;
}

inline DensePoly elementary(int m, int k) {
  if (k < 0) return DensePoly(m);
  return monomial_sum(m, k, 1);
}

inline DensePoly complete(int m, int k) {
  if (k < 0) return DensePoly(m);
  return monomial_sum(m, k, k);
}

inline DensePoly power_sum(int m, int k) {
  DensePoly p(m);
  if (k == 0) return DensePoly::constant(m, m);
  for (int i = 0; i < m; ++i) {
    std::vector<int> e(m, 0);
    e[i] = k;
    p.add(e, 1);
  }
  return p;
}

// Semistandard tableaux of shape lambda with entries 1..m.
inline DensePoly schur_tableaux(int m, const std::vector<int>& lambda) {
  DensePoly p(m);
  std::vector<std::vector<int>> t;
  for (int r : lambda)
    if (r > 0) t.emplace_back(r, 0);
  std::vector<int> content(m, 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    for (int j = 0; j < static_cast<int>(t[i].size()); ++j) cells.emplace_back(i, j);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      p.add(content, 1);
      return;
    }
    auto [i, j] = cells[idx];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= m; ++v) {
      t[i][j] = v;
      ++content[v - 1];
      rec(idx + 1);
      --content[v - 1];
    }
    t[i][j] = 0;
  };
  rec(0);
  return p;
}

// Expands a polynomial in the generators of a one-alphabet ring, reading the
// j-th generator as e_j(x_1..x_m).
inline DensePoly expand(const moykit::symfunc::SymPoly& p, int m) {
  std::vector<DensePoly> e;
  for (int j = 1; j <= m; ++j) e.push_back(elementary(m, j));
  DensePoly out(m);
  for (const auto& [exps, c] : p.terms()) {
    DensePoly term = DensePoly::constant(m, c);
    for (std::size_t g = 0; g < exps.size(); ++g)
      for (int k = 0; k < exps[g]; ++k) term = term * e[g];
    out = out + term;
  }
  return out;
}

}  // namespace oracle
