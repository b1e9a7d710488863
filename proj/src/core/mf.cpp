#include "core/mf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/statesum.hpp"

namespace moykit::mf {

using symfunc::Exponents;
using symfunc::make_ring;

SymPoly KoszulMF::potential() const {
  SymPoly w(ring);
  for (const auto& r : rows) w += r.a0 * r.a1;
  return w;
}

KoszulMF empty_mf(int N) {
  KoszulMF m;
  m.ring = make_ring({});
  m.N = N;
  return m;
}

SymPoly divided_difference(int m, int N, int j) {
  if (j < 1 || j > m) throw Error(ErrorCode::invalid_argument, "divided difference index out of range");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, SymPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find({m, N, j}); it != memo.end()) return it->second;
  }
  const RingPtr single = make_ring({{"X", m}});
  const RingPtr ring = make_ring({{"X", m}, {"Y", m}});
  const SymPoly p = symfunc::power_sum(single, "X", N + 1);
  auto mixed = [&](int last_y) {
    std::vector<SymPoly> images;
    for (int i = 1; i <= m; ++i) images.push_back(SymPoly::elem(ring, i <= last_y ? "Y" : "X", i));
    return symfunc::compose(p, images, ring);
  };
  const SymPoly num = mixed(j - 1) - mixed(j);
  const SymPoly den = SymPoly::elem(ring, "X", j) - SymPoly::elem(ring, "Y", j);
  SymPoly u = symfunc::exact_divide(num, den);
  std::lock_guard<std::mutex> lock(mu);
  return memo.try_emplace({m, N, j}, std::move(u)).first->second;
}

KoszulMF vertex_mf(const std::vector<Alphabet>& exits, const std::vector<Alphabet>& entrances, int N) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "N must be positive");
  std::vector<Alphabet> all = exits;
  all.insert(all.end(), entrances.begin(), entrances.end());
  KoszulMF M;
  M.N = N;
  M.ring = make_ring(all);
  int m = 0, m_in = 0;
  std::vector<std::string> xs, ys;
  for (const auto& a : exits) {
    m += a.size;
    xs.push_back(a.name);
  }
  for (const auto& a : entrances) {
    m_in += a.size;
    ys.push_back(a.name);
  }
  if (m != m_in) throw Error(ErrorCode::invalid_argument, "vertex is not balanced");
  for (std::size_t s = 0; s < exits.size(); ++s)
    for (std::size_t t = s + 1; t < exits.size(); ++t) M.q_shift -= exits[s].size * exits[t].size;

  std::vector<SymPoly> images;
  for (int i = 1; i <= m; ++i) images.push_back(symfunc::elem_of_union(M.ring, xs, i));
  for (int i = 1; i <= m; ++i) images.push_back(symfunc::elem_of_union(M.ring, ys, i));
  for (int j = 1; j <= m; ++j) {
    KoszulRow row{symfunc::compose(divided_difference(m, N, j), images, M.ring), images[j - 1] - images[m + j - 1],
                  2 * (N + 1) - 2 * j};
    M.rows.push_back(std::move(row));
  }
  if (!(M.potential() == vertex_potential(exits, entrances, N, M.ring))) throw Error(ErrorCode::internal, "vertex potential mismatch");
  return M;
}

KoszulMF tensor(const KoszulMF& a, const KoszulMF& b) {
  if (a.N != b.N) throw Error(ErrorCode::invalid_argument, "tensor: different N");
  std::vector<Alphabet> all = a.ring->alphabets();
  for (const auto& x : b.ring->alphabets()) {
    if (a.ring->has(x.name)) {
      if (a.ring->size_of(x.name) != x.size) throw Error(ErrorCode::invalid_argument, "tensor: size mismatch on " + x.name);
    } else {
      all.push_back(x);
    }
  }
  KoszulMF M;
  M.N = a.N;
  M.ring = make_ring(all);
  for (const auto* src : {&a, &b})
    for (const auto& r : src->rows) M.rows.push_back({symfunc::embed(r.a0, M.ring), symfunc::embed(r.a1, M.ring), r.deg0});
  M.q_shift = a.q_shift + b.q_shift;
  M.z2_shift = (a.z2_shift + b.z2_shift) % 2;
  return M;
}

namespace {

// Sign and entry of d applied to e_S along row j.
int koszul_sign(unsigned S, int j) { return __builtin_popcount(S & ((1u << j) - 1)) % 2 ? -1 : 1; }

}  // namespace

SymPoly vertex_potential(const std::vector<Alphabet>& exits, const std::vector<Alphabet>& entrances, int N,
                         const RingPtr& ring) {
  SymPoly w(ring);
  for (const auto& x : exits) w += symfunc::power_sum(ring, x.name, N + 1);
  for (const auto& y : entrances) w -= symfunc::power_sum(ring, y.name, N + 1);
  return w;
}

bool check_potential_identity(const KoszulMF& M, const SymPoly& w) {
  const int r = static_cast<int>(M.rows.size());
  if (r > 16) throw Error(ErrorCode::domain, "too many rows for a symbolic check");
  const unsigned n = 1u << r;
  // d^2 (e_S) must equal w e_S for every S.
  for (unsigned S = 0; S < n; ++S) {
    std::map<unsigned, SymPoly> out;
    for (int j = 0; j < r; ++j) {
      const unsigned T = S ^ (1u << j);
      const SymPoly& f = (S & (1u << j)) ? M.rows[j].a1 : M.rows[j].a0;
      for (int k = 0; k < r; ++k) {
        const unsigned U = T ^ (1u << k);
        const SymPoly& g = (T & (1u << k)) ? M.rows[k].a1 : M.rows[k].a0;
        SymPoly t = f * g;
        if (koszul_sign(S, j) * koszul_sign(T, k) < 0) t = -t;
        auto [it, ins] = out.try_emplace(U, SymPoly(M.ring));
        it->second += t;
      }
    }
    for (const auto& [U, p] : out) {
      if (U == S) {
        if (!(p == w)) return false;
      } else if (!p.is_zero()) {
        return false;
      }
    }
    if (!out.count(S) && !w.is_zero()) return false;
  }
  return true;
}

KoszulMF graph_mf(const moy::SliceWord& w, int N, const MarkingOptions& opts) {
  const auto g = statesum::edge_graph(w);
  if (!moy::closed(w)) throw Error(ErrorCode::domain, "graph_mf requires a closed graph");
  const int E = static_cast<int>(g.color.size());
  std::vector<bool> touches_vertex(E, false);
  for (const auto& v : g.vertices) touches_vertex[v.wide] = touches_vertex[v.e1] = touches_vertex[v.e2] = true;

  // marks[e] lists alphabets along the flow of edge e.
  std::vector<std::vector<Alphabet>> marks(E);
  std::vector<Alphabet> all;
  for (int e = 0; e < E; ++e) {
    int k = 1 + (e < static_cast<int>(opts.extra_marks.size()) ? opts.extra_marks[e] : 0);
    if (!touches_vertex[e]) k = std::max(k, 2);
    for (int i = 0; i < k; ++i) {
      marks[e].push_back({"e" + std::to_string(e) + "_" + std::to_string(i), g.color[e]});
      all.push_back(marks[e].back());
    }
  }

  std::vector<KoszulMF> pieces;
  for (const auto& v : g.vertices) {
    std::vector<Alphabet> exits, entrances;
    auto as_exit = [&](int e) { exits.push_back(marks[e].front()); };
    auto as_entrance = [&](int e) { entrances.push_back(marks[e].back()); };
    if (v.wide_is_exit) {
      as_exit(v.wide);
      as_entrance(v.e1);
      as_entrance(v.e2);
    } else {
      as_entrance(v.wide);
      as_exit(v.e1);
      as_exit(v.e2);
    }
    pieces.push_back(vertex_mf(exits, entrances, N));
  }
  for (int e = 0; e < E; ++e) {
    const int k = static_cast<int>(marks[e].size());
    const int arcs = touches_vertex[e] ? k - 1 : k;
    for (int i = 0; i < arcs; ++i) pieces.push_back(vertex_mf({marks[e][(i + 1) % k]}, {marks[e][i]}, N));
  }

  KoszulMF M;
  M.N = N;
  M.ring = make_ring(all);
  for (const auto& p : pieces) {
    for (const auto& r : p.rows) M.rows.push_back({symfunc::embed(r.a0, M.ring), symfunc::embed(r.a1, M.ring), r.deg0});
    M.q_shift += p.q_shift;
    M.z2_shift = (M.z2_shift + p.z2_shift) % 2;
  }
  return M;
}

// ---------------------------------------------------------------- homology

namespace {

// Finds a generator occurring in p only as a single linear term c*z.
std::optional<int> linear_generator(const SymPoly& p, const std::vector<bool>& active) {
  const int n = p.ring()->num_generators();
  std::vector<int> linear_terms(n, 0), other_terms(n, 0);
  for (const auto& [e, c] : p.terms()) {
    int total = 0, last = -1;
    for (int g = 0; g < n; ++g)
      if (e[g]) {
        total += e[g];
        last = g;
      }
    if (total == 1) {
      ++linear_terms[last];
    } else {
      for (int g = 0; g < n; ++g)
        if (e[g]) ++other_terms[g];
    }
  }
  // Prefer the highest-degree generator: it leaves smaller monomial bases.
  std::optional<int> best;
  for (int g = 0; g < n; ++g)
    if (active[g] && linear_terms[g] == 1 && other_terms[g] == 0)
      if (!best || p.ring()->generator_degree(g) >= p.ring()->generator_degree(*best)) best = g;
  return best;
}

bool is_unit(const SymPoly& p) { return !p.is_zero() && p.size() == 1 && p.constant_term() != 0; }

struct Reduced {
  KoszulMF mf;
  std::vector<bool> active;
  bool contractible = false;
};

Reduced reduce(const KoszulMF& M) {
  Reduced R{M, std::vector<bool>(M.ring->num_generators(), true), false};
  auto& rows = R.mf.rows;
  for (;;) {
    bool progress = false;
    for (const auto& r : rows)
      if (is_unit(r.a0) || is_unit(r.a1)) {
        R.contractible = true;
        return R;
      }
    for (std::size_t j = 0; j < rows.size() && !progress; ++j) {
      for (int slot = 1; slot >= 0 && !progress; --slot) {
        const SymPoly& entry = slot == 1 ? rows[j].a1 : rows[j].a0;
        const auto z = linear_generator(entry, R.active);
        if (!z) continue;
        Exponents ez(M.ring->num_generators(), 0);
        ez[*z] = 1;
        const mpq_class c = entry.terms().at(ez);
        SymPoly rest = entry;
        rest.add_term(ez, -c);
        const SymPoly image = rest.scaled(mpq_class(-1) / c);
        std::vector<SymPoly> images;
        for (int g = 0; g < M.ring->num_generators(); ++g)
          images.push_back(g == *z ? image : SymPoly::generator(M.ring, g));
        if (slot == 0) {
          R.mf.z2_shift ^= 1;
          R.mf.q_shift += R.mf.row_shift(j);
        }
        rows.erase(rows.begin() + static_cast<long>(j));
        for (auto& r : rows) {
          r.a0 = symfunc::compose(r.a0, images, M.ring);
          r.a1 = symfunc::compose(r.a1, images, M.ring);
        }
        R.active[*z] = false;
        progress = true;
      }
    }
    if (!progress) return R;
  }
}

struct Slices {
  const KoszulMF* mf;
  std::vector<int> gens;      // active generator indices
  std::vector<int> gen_deg;   // their degrees
  std::vector<int> shift;     // per S
  int r;

  // Monomials over the active generators, compressed exponents.
  std::vector<Exponents> monomials(int d) const {
    std::vector<Exponents> out;
    if (d < 0 || d % 2 != 0) return out;
    const int n = static_cast<int>(gens.size());
    Exponents e(n, 0);
    auto rec = [&](auto&& self, int g, int left) -> void {
      if (g == n) {
        if (left == 0) out.push_back(e);
        return;
      }
      for (int k = left / gen_deg[g]; k >= 0; --k) {
        e[g] = k;
        self(self, g + 1, left - k * gen_deg[g]);
      }
      e[g] = 0;
    };
    if (n == 0) {
      if (d == 0) out.push_back(e);
    } else {
      rec(rec, 0, d);
    }
    return out;
  }

  int parity(unsigned S) const { return (__builtin_popcount(S) + mf->z2_shift) % 2; }

  std::size_t dim(int eps, int d) const {
    std::size_t n = 0;
    for (unsigned S = 0; S < (1u << r); ++S)
      if (parity(S) == eps) n += monomials(d - shift[S]).size();
    return n;
  }

  // Rank of d restricted to degree-d, parity-eps piece.
  std::size_t rank(int eps, int d) const {
    const int N = mf->N;
    const int nfull = mf->ring->num_generators();
    // Column index of target (T, monomial) in degree d + N + 1.
    std::map<unsigned, std::map<Exponents, int>> cols;
    int next_col = 0;
    auto col_of = [&](unsigned T, const Exponents& e) {
      auto& m = cols[T];
      auto [it, ins] = m.try_emplace(e, next_col);
      if (ins) ++next_col;
      return it->second;
    };
    // Compressed entries per row slot.
    struct Entry {
      std::vector<std::pair<Exponents, mpq_class>> terms;
    };
    std::vector<std::array<Entry, 2>> entries(r);
    for (int j = 0; j < r; ++j)
      for (int s = 0; s < 2; ++s) {
        const SymPoly& p = s == 0 ? mf->rows[j].a0 : mf->rows[j].a1;
        for (const auto& [e, c] : p.terms()) {
          Exponents ce(gens.size());
          for (std::size_t g = 0; g < gens.size(); ++g) ce[g] = e[gens[g]];
          int seen = 0;
          for (int g = 0; g < nfull; ++g) seen += e[g];
          int kept = 0;
          for (int x : ce) kept += x;
          if (seen != kept) throw Error(ErrorCode::internal, "eliminated generator survived reduction");
          entries[j][s].terms.emplace_back(std::move(ce), c);
        }
      }
    linalg::EchelonBasis basis;
    Exponents prod(gens.size());
    for (unsigned S = 0; S < (1u << r); ++S) {
      if (parity(S) != eps) continue;
      for (const auto& mono : monomials(d - shift[S])) {
        linalg::SparseRow row;
        for (int j = 0; j < r; ++j) {
          const unsigned T = S ^ (1u << j);
          const Entry& ent = entries[j][(S >> j) & 1u];
          const int sign = koszul_sign(S, j);
          for (const auto& [e, c] : ent.terms) {
            for (std::size_t g = 0; g < gens.size(); ++g) prod[g] = mono[g] + e[g];
            row.emplace_back(col_of(T, prod), sign < 0 ? mpq_class(-c) : c);
          }
        }
        (void)N;
        linalg::normalize(row);
        basis.insert(std::move(row));
      }
    }
    return basis.rank();
  }
};

}  // namespace

int default_d_max(const qpoly::LaurentPoly& bracket, int N, int d_lo) {
  if (!bracket.is_zero()) return static_cast<int>(bracket.max_doubled_exp() / 2) + 2 * (N + 1);
  return -d_lo + 2 * (N + 1);
}

HomologyResult homology(const KoszulMF& M, const HomologyOptions& opts) {
  if (!M.potential().is_zero()) throw Error(ErrorCode::domain, "homology requires potential zero");
  HomologyResult res;
  Reduced R = opts.reduce ? reduce(M) : Reduced{M, std::vector<bool>(M.ring->num_generators(), true), false};
  const int N = M.N;
  Slices sl;
  sl.mf = &R.mf;
  sl.r = static_cast<int>(R.mf.rows.size());
  if (sl.r > 24) throw Error(ErrorCode::domain, "too many Koszul rows");
  for (int g = 0; g < M.ring->num_generators(); ++g)
    if (R.active[g]) {
      sl.gens.push_back(g);
      sl.gen_deg.push_back(M.ring->generator_degree(g));
    }
  sl.shift.resize(std::size_t(1) << sl.r);
  int d_lo = 0;
  for (unsigned S = 0; S < sl.shift.size(); ++S) {
    int s = R.mf.q_shift;
    for (int j = 0; j < sl.r; ++j)
      if (S & (1u << j)) s += R.mf.row_shift(j);
    sl.shift[S] = s;
    d_lo = S == 0 ? s : std::min(d_lo, s);
  }
  res.d_lo = d_lo;
  res.rows_after_reduction = R.mf.rows.size();
  res.generators_after_reduction = sl.gens.size();
  if (opts.d_max)
    res.d_max = *opts.d_max;
  else if (opts.bracket_top)
    res.d_max = *opts.bracket_top + 2 * (N + 1);
  else
    res.d_max = -d_lo + 2 * (N + 1);
  if (R.contractible) {
    res.contractible = true;
    return res;
  }
  if (res.d_max < d_lo) return res;

  // rank[eps][d - base] for d in [d_lo - N - 1, d_max]
  const int base = d_lo - (N + 1);
  const int span = res.d_max - base + 1;
  std::vector<std::size_t> rank(2 * span, 0), dim(2 * span, 0);
  parallel_for(2 * static_cast<std::size_t>(span), opts.threads, [&](std::size_t i, int) {
    const int eps = static_cast<int>(i % 2);
    const int d = base + static_cast<int>(i / 2);
    dim[i] = sl.dim(eps, d);
    rank[i] = dim[i] ? sl.rank(eps, d) : 0;
  });
  for (int d = d_lo; d <= res.d_max; ++d)
    for (int eps = 0; eps < 2; ++eps) {
      const std::size_t here = 2 * (d - base) + eps;
      const std::size_t in = 2 * (d - (N + 1) - base) + (1 - eps);
      const long h = static_cast<long>(dim[here]) - static_cast<long>(rank[here]) - static_cast<long>(rank[in]);
      if (h < 0) throw Error(ErrorCode::internal, "negative homology dimension");
      (eps == 0 ? res.gdim.even : res.gdim.odd).add_term(2 * d, h);
    }
  return res;
}

qpoly::GradedDim graph_gdim(const moy::SliceWord& w, int N, std::optional<int> d_max, int threads) {
  HomologyOptions opts;
  opts.threads = threads;
  opts.d_max = d_max;
  if (!d_max) {
    const auto b = statesum::bracket_dp(w, N);
    if (!b.is_zero()) opts.bracket_top = static_cast<int>(b.max_doubled_exp() / 2);
  }
  return homology(graph_mf(w, N), opts).gdim;
}

VerifyReport verify_gdim_equals_bracket(const moy::SliceWord& w, int N, std::optional<int> d_max, int threads) {
  VerifyReport rep;
  rep.bracket = statesum::bracket_dp(w, N);
  rep.colored_rotation = moy::colored_rotation(w);
  HomologyOptions opts;
  opts.threads = threads;
  opts.d_max = d_max;
  if (!rep.bracket.is_zero()) opts.bracket_top = static_cast<int>(rep.bracket.max_doubled_exp() / 2);
  const auto h = homology(graph_mf(w, N), opts);
  rep.gdim = h.gdim;
  rep.d_lo = h.d_lo;
  rep.d_max = h.d_max;

  rep.support_in_window = true;
  for (const auto& [e, c] : rep.bracket.terms())
    if (e < 2L * h.d_lo || e > 2L * rep.d_max) rep.support_in_window = false;

  qpoly::LaurentPoly windowed;
  for (const auto& [e, c] : rep.bracket.terms())
    if (e >= 2L * h.d_lo && e <= 2L * rep.d_max) windowed.add_term(e, c);
  rep.agrees = qpoly::specialize_tau(rep.gdim, 1) == windowed;

  rep.buffer_vanishes = true;
  const long band_lo = 2L * (rep.d_max - 2 * (N + 1));
  for (const auto* part : {&rep.gdim.even, &rep.gdim.odd})
    for (const auto& [e, c] : part->terms())
      if (e > band_lo) rep.buffer_vanishes = false;

  const bool odd_cr = rep.colored_rotation % 2 != 0;
  rep.parity_ok = odd_cr ? rep.gdim.even.is_zero() : rep.gdim.odd.is_zero();
  rep.pass = rep.support_in_window && rep.agrees && rep.buffer_vanishes && rep.parity_ok;
  rep.note = "buffer band vanishing is stabilization evidence, not a proof of finiteness";
  return rep;
}

}  // namespace moykit::mf
