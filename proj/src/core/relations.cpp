#include "core/relations.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace moykit::relations {

using moy::Dir;
using moy::Event;
using moy::SliceWord;
using moy::Turn;
using qpoly::LaurentPoly;
using qpoly::qbinom;
using qpoly::qint;

namespace {

using Events = std::vector<Event>;

SliceWord word(const Events& events) {
  SliceWord w;
  w.events = events;
  return w;
}

Events cat(std::initializer_list<Events> parts) {
  Events out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

// Close a tangle with bottom (a_1..a_r) and top (b_1..b_s), all upward and of
// equal total T, by merging everything into one strand and a circle of color T.
// `tangle` acts at offset 1 on [T down, a..., ...].
Events close_tree(int total, const std::vector<int>& bottom, const std::vector<int>& top, const Events& tangle) {
  Events ev{Event::cup(total, Turn::ccw, 0)};
  // Split T into bottom colors left to right.
  int rest = total;
  for (std::size_t i = 0; i + 1 < bottom.size(); ++i) {
    ev.push_back(Event::split(bottom[i], rest - bottom[i], 1 + static_cast<int>(i)));
    rest -= bottom[i];
  }
  const Events t = moy::shifted(tangle, 1);
  ev.insert(ev.end(), t.begin(), t.end());
  // Merge top colors from the right.
  int acc = top.back();
  for (std::size_t i = top.size() - 1; i-- > 0;) {
    ev.push_back(Event::merge(top[i], acc, 1 + static_cast<int>(i)));
    acc += top[i];
  }
  ev.push_back(Event::cap(total, Turn::ccw, 0));
  return ev;
}

void add(std::vector<Instance>& out, int rel, const std::string& p, const SliceWord& lhs,
         std::vector<std::pair<LaurentPoly, SliceWord>> rhs) {
  Instance base{rel, p, "", lhs, rhs};
  Instance mir{rel, p, "mirror", moy::reverse_mirror(lhs), {}};
  Instance rev{rel, p, "reversed", moy::reverse_orientation(lhs), {}};
  for (const auto& [c, w] : rhs) {
    mir.rhs.emplace_back(qpoly::bar(c), moy::reverse_mirror(w));
    rev.rhs.emplace_back(c, moy::reverse_orientation(w));
  }
  out.push_back(std::move(base));
  out.push_back(std::move(mir));
  out.push_back(std::move(rev));
}

}  // namespace

std::vector<Instance> instances(int N, int W) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "N must be positive");
  std::vector<Instance> out;
  const SliceWord empty;

  // (1) circle
  for (int m = 0; m <= W; ++m)
    add(out, 1, params({{"m", m}}), word({Event::cup(m, Turn::ccw, 0), Event::cap(m, Turn::ccw, 0)}),
        {{qbinom(N, m), empty}});

  // (2) associativity of splits
  for (int i = 0; i <= W; ++i)
    for (int j = 0; i + j <= W; ++j)
      for (int k = 0; i + j + k <= W; ++k) {
        const int T = i + j + k;
        const Events lhs{Event::split(i, j + k, 0), Event::split(j, k, 1)};
        const Events rhs{Event::split(i + j, k, 0), Event::split(i, j, 0)};
        const Events tail{Event::merge(j, k, 2), Event::merge(i, j + k, 1), Event::cap(T, Turn::ccw, 0)};
        const Events head{Event::cup(T, Turn::ccw, 0)};
        add(out, 2, params({{"i", i}, {"j", j}, {"k", k}}),
            word(cat({head, moy::shifted(lhs, 1), tail})),
            {{LaurentPoly(1), word(cat({head, moy::shifted(rhs, 1), tail}))}});
      }

  // (3) digon
  for (int m = 0; m <= W; ++m)
    for (int n = 0; m + n <= W; ++n) {
      const int T = m + n;
      add(out, 3, params({{"m", m}, {"n", n}}),
          word({Event::cup(T, Turn::ccw, 0), Event::split(m, n, 1), Event::merge(m, n, 1), Event::cap(T, Turn::ccw, 0)}),
          {{qbinom(m + n, n), word({Event::cup(T, Turn::ccw, 0), Event::cap(T, Turn::ccw, 0)})}});
    }

  // (4) leaf digon on a strand of color m
  for (int m = 0; m <= W; ++m)
    for (int n = 0; m + n <= W; ++n) {
      const Events t{Event::cup(n, Turn::cw, 1), Event::merge(m, n, 0), Event::split(m, n, 0), Event::cap(n, Turn::cw, 1)};
      add(out, 4, params({{"m", m}, {"n", n}}),
          word(cat({{Event::cup(m, Turn::ccw, 0)}, moy::shifted(t, 1), {Event::cap(m, Turn::ccw, 0)}})),
          {{qbinom(N - m, n), word({Event::cup(m, Turn::ccw, 0), Event::cap(m, Turn::ccw, 0)})}});
    }

  // (5) bottom/top (1 up, m down)
  for (int m = 1; m + 1 <= W; ++m) {
    const Events lhs{Event::cup(m, Turn::ccw, 0), Event::merge(m, 1, 1), Event::split(1, m, 1), Event::cap(m, Turn::cw, 2),
                     Event::cup(m, Turn::cw, 2),  Event::merge(1, m, 1), Event::split(m, 1, 1), Event::cap(m, Turn::ccw, 0)};
    const Events ident{};
    const Events turn{Event::split(1, m - 1, 1), Event::cap(1, Turn::cw, 0), Event::cup(1, Turn::cw, 0),
                      Event::merge(1, m - 1, 1)};
    auto close = [&](const Events& t) {
      return word(cat({{Event::cup(1, Turn::ccw, 0), Event::cup(m, Turn::ccw, 2)}, moy::shifted(t, 1),
                       {Event::cap(m, Turn::ccw, 2), Event::cap(1, Turn::ccw, 0)}}));
    };
    add(out, 5, params({{"m", m}}), close(lhs), {{LaurentPoly(1), close(ident)}, {qint(N - m - 1), close(turn)}});
  }

  // (6) square with one side of color 1
  for (int m = 1; m <= W; ++m)
    for (int l = 1; l + m <= W; ++l)
      for (int n = 0; n <= m; ++n) {
        const int T = l + m;
        const Events lhs{Event::split(l + n - 1, m - n, 1), Event::merge(1, l + n - 1, 0), Event::split(l, n, 0),
                         Event::merge(n, m - n, 1)};
        const Events r1{Event::split(l - 1, m, 1), Event::merge(1, l - 1, 0)};
        const Events r2{Event::merge(1, m + l - 1, 0), Event::split(l, m, 0)};
        auto close = [&](const Events& t) { return word(close_tree(T, {1, m + l - 1}, {l, m}, t)); };
        add(out, 6, params({{"m", m}, {"l", l}, {"n", n}}), close(lhs),
            {{qbinom(m - 1, n), close(r1)}, {qbinom(m - 1, n - 1), close(r2)}});
      }

  // (7) general square
  for (int n = 0; n <= W; ++n)
    for (int m = 0; n + m <= W; ++m)
      for (int l = 0; l <= 2 && n + m + l <= W; ++l)
        for (int k = 0; k <= 3 && k <= m + l; ++k) {
          if (n + k - m < 0) continue;
          const int T = n + m + l;
          const Events lhs{Event::split(k, m + l - k, 1), Event::merge(n, k, 0), Event::split(m, n + k - m, 0),
                           Event::merge(n + k - m, m + l - k, 1)};
          auto close = [&](const Events& t) { return word(close_tree(T, {n, m + l}, {m, n + l}, t)); };
          std::vector<std::pair<LaurentPoly, SliceWord>> rhs;
          for (int j = std::max(m - n, 0); j <= m; ++j) {
            const Events t{Event::split(m - j, n + j - m, 0), Event::merge(n + j - m, m + l, 1), Event::split(j, n + l, 1),
                           Event::merge(m - j, j, 0)};
            rhs.emplace_back(qbinom(l, k - j), close(t));
          }
          add(out, 7, params({{"n", n}, {"m", m}, {"l", l}, {"k", k}}), close(lhs), std::move(rhs));
        }
  return out;
}

std::vector<Outcome> verify(int N, int max_width, statesum::Engine engine, int threads) {
  const auto inst = instances(N, max_width);
  std::vector<Outcome> out(inst.size());
  parallel_for(inst.size(), threads, [&](std::size_t i, int) {
    Outcome o;
    o.instance = inst[i];
    o.lhs_value = statesum::bracket(inst[i].lhs, N, engine);
    for (const auto& [c, w] : inst[i].rhs) o.rhs_value += c * statesum::bracket(w, N, engine);
    o.pass = o.lhs_value == o.rhs_value;
    out[i] = std::move(o);
  });
  return out;
}

}  // namespace moykit::relations
