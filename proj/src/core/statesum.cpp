#include "core/statesum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace moykit::statesum {

using moy::Dir;
using moy::EventKind;
using qpoly::LaurentPoly;

std::vector<int> label_values(Label a, int N) {
  std::vector<int> v;
  for (int i = 0; i < N; ++i)
    if (a & (Label(1) << i)) v.push_back(-N + 1 + 2 * i);
  return v;
}

Label label_from_values(const std::vector<int>& values, int N) {
  Label a = 0;
  for (int x : values) {
    const int i = x + N - 1;
    if (i < 0 || i >= 2 * N - 1 || i % 2 != 0) throw Error(ErrorCode::invalid_argument, "label element outside the index set");
    a |= Label(1) << (i / 2);
  }
  return a;
}

int label_sum(Label a, int N) {
  int s = 0;
  for (int i = 0; i < N; ++i)
    if (a & (Label(1) << i)) s += -N + 1 + 2 * i;
  return s;
}

int pi(Label a, Label b) {
  int count = 0;
  while (a) {
    const int i = __builtin_ctz(a);
    a &= a - 1;
    count += __builtin_popcount(b & ((Label(1) << i) - 1));
  }
  return count;
}

std::int64_t vertex_weight_doubled(int c1, int c2, Label a, Label b) {
  return static_cast<std::int64_t>(c1) * c2 - 2 * pi(a, b);
}

LaurentPoly vertex_weight(int c1, int c2, Label a, Label b) {
  if (a & b) throw Error(ErrorCode::invalid_argument, "vertex_weight: overlapping labels");
  if (__builtin_popcount(a) != c1 || __builtin_popcount(b) != c2)
    throw Error(ErrorCode::invalid_argument, "vertex_weight: label size does not match color");
  return LaurentPoly::monomial(vertex_weight_doubled(c1, c2, a, b));
}

namespace {

void require_evaluable(const moy::SliceWord& w, int N) {
  if (N < 0 || N > max_n) throw Error(ErrorCode::invalid_argument, "N out of supported range");
  moy::require_valid(w);
  if (moy::has_crossings(w)) throw Error(ErrorCode::domain, "state sum requires a crossingless graph");
  if (!moy::closed(w)) throw Error(ErrorCode::domain, "state sum requires a closed graph");
}

std::vector<Label> labels_of_size(int N, int c) {
  std::vector<Label> out;
  if (c < 0 || c > N) return out;
  for (Label a = 0; a < (Label(1) << N); ++a)
    if (__builtin_popcount(a) == c) out.push_back(a);
  return out;
}

}  // namespace

EdgeGraph edge_graph(const moy::SliceWord& w) {
  moy::require_valid(w);
  if (moy::has_crossings(w)) throw Error(ErrorCode::domain, "edge graph requires a crossingless word");
  // Segment ids joined by union-find; cups and caps glue segments, vertices
  // start new ones.
  std::vector<int> parent;
  std::vector<int> seg_color;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto fresh = [&](int c) {
    parent.push_back(static_cast<int>(parent.size()));
    seg_color.push_back(c);
    return parent.back();
  };
  struct RawVertex {
    int wide, e1, e2;
    bool wide_is_exit;
  };
  std::vector<RawVertex> raw;
  std::vector<std::pair<int, int>> raw_ext;

  std::vector<int> row;
  std::vector<Dir> dirs;
  for (const auto& s : w.boundary) {
    row.push_back(fresh(s.color));
    dirs.push_back(s.dir);
  }
  for (const auto& e : w.events) {
    const int i = e.pos;
    switch (e.kind) {
      case EventKind::cup: {
        const int id = fresh(e.a);
        row.insert(row.begin() + i, {id, id});
        const auto d = e.turn == moy::Turn::ccw ? std::pair{Dir::down, Dir::up} : std::pair{Dir::up, Dir::down};
        dirs.insert(dirs.begin() + i, {d.first, d.second});
        raw_ext.emplace_back(id, e.turn == moy::Turn::ccw ? 1 : -1);
        break;
      }
      case EventKind::cap: {
        parent[find(row[i])] = find(row[i + 1]);
        raw_ext.emplace_back(row[i + 1], e.turn == moy::Turn::ccw ? 1 : -1);
        row.erase(row.begin() + i, row.begin() + i + 2);
        dirs.erase(dirs.begin() + i, dirs.begin() + i + 2);
        break;
      }
      case EventKind::split: {
        const int wide = row[i];
        const int l = fresh(e.a), r = fresh(e.b);
        const bool up = dirs[i] == Dir::up;
        raw.push_back({wide, up ? l : r, up ? r : l, !up});
        row[i] = l;
        row.insert(row.begin() + i + 1, r);
        dirs.insert(dirs.begin() + i + 1, dirs[i]);
        break;
      }
      case EventKind::merge: {
        const int l = row[i], r = row[i + 1];
        const int wide = fresh(e.a + e.b);
        const bool up = dirs[i] == Dir::up;
        raw.push_back({wide, up ? l : r, up ? r : l, up});
        row[i] = wide;
        row.erase(row.begin() + i + 1);
        dirs.erase(dirs.begin() + i + 1);
        break;
      }
      default:
        break;
    }
  }
  EdgeGraph g;
  std::map<int, int> edge_of_root;
  auto edge = [&](int seg) {
    const int r = find(seg);
    auto [it, ins] = edge_of_root.try_emplace(r, static_cast<int>(g.color.size()));
    if (ins) g.color.push_back(seg_color[r]);
    return it->second;
  };
  for (int s = 0; s < static_cast<int>(parent.size()); ++s) edge(s);
  for (const auto& v : raw) g.vertices.push_back({edge(v.wide), edge(v.e1), edge(v.e2), v.wide_is_exit});
  for (const auto& [seg, sign] : raw_ext) g.extrema.push_back({edge(seg), sign});
  return g;
}

namespace {

// Backtracking enumerator over edge labels with vertex checks as soon as all
// three edges of a vertex are assigned.
class Enumerator {
 public:
  Enumerator(const EdgeGraph& g, int N) : g_(g), N_(N), labels_(g.color.size(), 0) {
    const int E = static_cast<int>(g.color.size());
    check_at_.assign(E, {});
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      const auto& x = g.vertices[v];
      const int last = std::max({x.wide, x.e1, x.e2});
      check_at_[last].push_back(static_cast<int>(v));
    }
    for (int e = 0; e < E; ++e) choices_.push_back(labels_of_size(N, g.color[e]));
  }

  bool feasible() const {
    return std::all_of(choices_.begin(), choices_.end(), [](const auto& c) { return !c.empty(); });
  }
  std::size_t first_choices() const { return choices_.empty() ? 1 : choices_[0].size(); }

  // Enumerate states with edge 0 fixed to its `first`-th choice (or all
  // states if there are no edges).
  void run(std::size_t first, const std::function<void(const State&)>& visit) {
    if (!feasible()) return;
    if (labels_.empty()) {
      visit(State{{}, 0});
      return;
    }
    labels_[0] = choices_[0][first];
    if (!vertices_ok(0)) return;
    rec(1, visit);
  }

 private:
  bool vertices_ok(int e) const {
    for (int v : check_at_[e]) {
      const auto& x = g_.vertices[v];
      const Label a = labels_[x.e1], b = labels_[x.e2];
      if ((a & b) || (a | b) != labels_[x.wide]) return false;
    }
    return true;
  }

  void rec(int e, const std::function<void(const State&)>& visit) {
    if (e == static_cast<int>(labels_.size())) {
      std::int64_t d = 0;
      for (const auto& x : g_.vertices)
        d += vertex_weight_doubled(g_.color[x.e1], g_.color[x.e2], labels_[x.e1], labels_[x.e2]);
      for (const auto& x : g_.extrema) d += x.sign * label_sum(labels_[x.edge], N_);
      visit(State{labels_, d});
      return;
    }
    for (Label a : choices_[e]) {
      labels_[e] = a;
      if (vertices_ok(e)) rec(e + 1, visit);
    }
  }

  const EdgeGraph& g_;
  int N_;
  std::vector<Label> labels_;
  std::vector<std::vector<int>> check_at_;
  std::vector<std::vector<Label>> choices_;
};

}  // namespace

void for_each_state(const moy::SliceWord& w, int N, const std::function<void(const State&)>& visit) {
  require_evaluable(w, N);
  const EdgeGraph g = edge_graph(w);
  Enumerator en(g, N);
  for (std::size_t f = 0; f < en.first_choices(); ++f) en.run(f, visit);
}

LaurentPoly bracket_enumerate(const moy::SliceWord& w, int N, int threads) {
  require_evaluable(w, N);
  const EdgeGraph g = edge_graph(w);
  const std::size_t parts = Enumerator(g, N).first_choices();
  std::vector<LaurentPoly> partial(parts);
  parallel_for(parts, threads, [&](std::size_t f, int) {
    Enumerator en(g, N);
    std::map<std::int64_t, long> acc;
    en.run(f, [&](const State& s) { ++acc[s.doubled_exp]; });
    for (const auto& [e, c] : acc) partial[f].add_term(e, c);
  });
  LaurentPoly total;
  for (const auto& p : partial) total += p;
  if (!total.is_integral()) throw Error(ErrorCode::internal, "bracket has half-integer exponents");
  return total;
}

std::size_t Sweep::KeyHash::operator()(const std::vector<Label>& k) const noexcept {
  std::size_t h = k.size();
  for (Label x : k) h = h * 0x9E3779B97F4A7C15ULL + x + (h >> 17);
  return h;
}

namespace {

void accumulate(Sweep::Frontier& f, std::vector<Label>&& key, const LaurentPoly& w, std::int64_t shift) {
  auto [it, ins] = f.try_emplace(std::move(key));
  it->second += w.shifted(shift);
  if (it->second.is_zero()) f.erase(it);
}

}  // namespace

Sweep::Sweep(int N) : N_(N) {
  if (N < 0 || N > max_n) throw Error(ErrorCode::invalid_argument, "N out of supported range");
  frontier_.emplace(std::vector<Label>{}, LaurentPoly(1));
}

Sweep::Frontier Sweep::step(const Frontier& cur, const std::vector<moy::Strand>& row, const moy::Event& e) const {
  Frontier next;
  const int i = e.pos;
  switch (e.kind) {
    case EventKind::cup: {
      const auto choices = labels_of_size(N_, e.a);
      const int sign = e.turn == moy::Turn::ccw ? 1 : -1;
      for (const auto& [key, wt] : cur)
        for (Label a : choices) {
          std::vector<Label> k = key;
          k.insert(k.begin() + i, {a, a});
          accumulate(next, std::move(k), wt, sign * label_sum(a, N_));
        }
      break;
    }
    case EventKind::cap: {
      const int sign = e.turn == moy::Turn::ccw ? 1 : -1;
      for (const auto& [key, wt] : cur) {
        if (key[i] != key[i + 1]) continue;
        const Label a = key[i];
        std::vector<Label> k = key;
        k.erase(k.begin() + i, k.begin() + i + 2);
        accumulate(next, std::move(k), wt, sign * label_sum(a, N_));
      }
      break;
    }
    case EventKind::split: {
      const bool up = row[i].dir == Dir::up;
      for (const auto& [key, wt] : cur) {
        const Label a = key[i];
        // Submasks l of a with |l| = e.a as the left branch.
        for (Label l = a;; l = (l - 1) & a) {
          if (__builtin_popcount(l) == e.a) {
            const Label r = a & ~l;
            std::vector<Label> k = key;
            k[i] = l;
            k.insert(k.begin() + i + 1, r);
            const auto d = up ? vertex_weight_doubled(e.a, e.b, l, r) : vertex_weight_doubled(e.b, e.a, r, l);
            accumulate(next, std::move(k), wt, d);
          }
          if (l == 0) break;
        }
      }
      break;
    }
    case EventKind::merge: {
      const bool up = row[i].dir == Dir::up;
      for (const auto& [key, wt] : cur) {
        const Label l = key[i], r = key[i + 1];
        if (l & r) continue;
        std::vector<Label> k = key;
        k[i] = l | r;
        k.erase(k.begin() + i + 1);
        const auto d = up ? vertex_weight_doubled(e.a, e.b, l, r) : vertex_weight_doubled(e.b, e.a, r, l);
        accumulate(next, std::move(k), wt, d);
      }
      break;
    }
    default:
      throw Error(ErrorCode::domain, "state sum requires a crossingless graph");
  }
  return next;
}

void Sweep::apply(const moy::Event& e) {
  std::vector<moy::Strand> after = row_;
  if (auto err = moy::apply_event(after, e)) throw Error(ErrorCode::validation, *err);
  frontier_ = step(frontier_, row_, e);
  row_ = std::move(after);
}

void Sweep::apply_combination(const std::vector<Branch>& branches) {
  if (branches.empty()) throw Error(ErrorCode::invalid_argument, "empty combination");
  Frontier total;
  std::vector<moy::Strand> final_row;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    Frontier f = frontier_;
    std::vector<moy::Strand> row = row_;
    for (const auto& e : branches[b].events) {
      std::vector<moy::Strand> after = row;
      if (auto err = moy::apply_event(after, e)) throw Error(ErrorCode::validation, *err);
      f = step(f, row, e);
      row = std::move(after);
    }
    if (b == 0)
      final_row = row;
    else if (row != final_row)
      throw Error(ErrorCode::invalid_argument, "branches end on different rows");
    for (auto& [key, wt] : f) {
      std::vector<Label> k = key;
      accumulate(total, std::move(k), wt * branches[b].coefficient, 0);
    }
  }
  frontier_ = std::move(total);
  row_ = std::move(final_row);
}

LaurentPoly Sweep::result() const {
  if (!row_.empty()) throw Error(ErrorCode::domain, "sweep has open strands");
  LaurentPoly total;
  if (auto it = frontier_.find({}); it != frontier_.end()) total = it->second;
  if (!total.is_integral()) throw Error(ErrorCode::internal, "bracket has half-integer exponents");
  return total;
}

LaurentPoly bracket_dp(const moy::SliceWord& w, int N) {
  require_evaluable(w, N);
  Sweep s(N);
  for (const auto& e : w.events) {
    s.apply(e);
    if (s.frontier_size() == 0) return LaurentPoly();
  }
  return s.result();
}

LaurentPoly bracket(const moy::SliceWord& w, int N, Engine engine, int threads) {
  return engine == Engine::dp ? bracket_dp(w, N) : bracket_enumerate(w, N, threads);
}

}  // namespace moykit::statesum
