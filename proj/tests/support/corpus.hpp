#pragma once

// Hand-built diagrams for the invariance and oracle tests.

#include <string>
#include <utility>
#include <vector>

#include "core/moy.hpp"

namespace corpus {

using moykit::moy::Dir;
using moykit::moy::Event;
using moykit::moy::SliceWord;
using moykit::moy::Strand;
using moykit::moy::Turn;

/// Events built against a live strand row, so crossings can be given by
/// which strand is on top instead of by sign.
class Tangle {
 public:
  explicit Tangle(std::vector<Strand> row) : row_(std::move(row)), start_(row_) {}

  Tangle& add(const Event& e) {
    moykit::moy::apply_event(row_, e);
    events_.push_back(e);
    return *this;
  }

  /// Crossing at (pos, pos+1) with the bottom-left strand on top if left_over.
  Tangle& over(int pos, bool left_over) {
    const Strand L = row_[pos], R = row_[pos + 1];
    // Positive when both strands point up and the left one is on top;
    // reversing one strand flips the sign.
    int sign = (L.dir == R.dir) ? 1 : -1;
    if (!left_over) sign = -sign;
    return add(Event::cross(sign > 0, pos));
  }

  /// Braid-style generator: sigma(i) is left-over at i, sigma(-i) right-over.
  Tangle& sigma(int i) { return over(std::abs(i) - 1, i > 0); }

  const std::vector<Event>& events() const { return events_; }
  const std::vector<Strand>& start() const { return start_; }
  const std::vector<Strand>& row() const { return row_; }

 private:
  std::vector<Strand> row_;
  std::vector<Strand> start_;
  std::vector<Event> events_;
};

inline Turn turn_with_right(Dir right) { return right == Dir::up ? Turn::ccw : Turn::cw; }

/// Closes a tangle whose end row equals its start row with nested arcs on
/// the left: strand i is capped against a partner at mirror position.
inline SliceWord close(const Tangle& t) {
  const auto& s = t.start();
  const int k = static_cast<int>(s.size());
  SliceWord w;
  for (int i = k - 1; i >= 0; --i) w.events.push_back(Event::cup(s[i].color, turn_with_right(s[i].dir), k - 1 - i));
  for (Event e : t.events()) {
    e.pos += k;
    w.events.push_back(e);
  }
  for (int i = 0; i < k; ++i) w.events.push_back(Event::cap(s[i].color, turn_with_right(s[i].dir), k - 1 - i));
  return w;
}

inline Tangle braid(std::vector<Strand> row, const std::vector<int>& gens) {
  Tangle t(std::move(row));
  for (int g : gens) t.sigma(g);
  return t;
}

inline std::vector<Strand> ups(int k, int color = 1) { return std::vector<Strand>(k, Strand{color, Dir::up}); }

inline SliceWord trefoil(bool right_handed) { return close(braid(ups(2), right_handed ? std::vector{1, 1, 1} : std::vector{-1, -1, -1})); }
inline SliceWord figure_eight() { return close(braid(ups(3), {1, -2, 1, -2})); }
inline SliceWord hopf(int a, int b, bool positive) {
  return close(braid({{a, Dir::up}, {b, Dir::up}}, positive ? std::vector{1, 1} : std::vector{-1, -1}));
}

struct Pair {
  std::string name;
  int move;  // 1, 2 or 3
  SliceWord lhs;
  SliceWord rhs;
};

inline std::string label(const std::vector<Strand>& row) {
  std::string s;
  for (const auto& x : row) s += std::to_string(x.color) + (x.dir == Dir::up ? "u" : "d");
  return s;
}

/// All row patterns of length k with colors in {1..max_color}.
inline std::vector<std::vector<Strand>> rows(int k, int max_color) {
  std::vector<std::vector<Strand>> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<Strand>> next;
    for (const auto& r : out)
      for (int c = 1; c <= max_color; ++c)
        for (Dir d : {Dir::up, Dir::down}) {
          auto x = r;
          x.push_back({c, d});
          next.push_back(x);
        }
    out = std::move(next);
  }
  return out;
}

/// A curl on a single strand: cup on the given side, one crossing, cap.
inline Tangle with_kink(const std::vector<Strand>& row, int at, bool right_side, bool left_over) {
  Tangle t(row);
  const Strand s = row[at];
  const Dir other = s.dir == Dir::up ? Dir::down : Dir::up;
  if (right_side) {
    t.add(Event::cup(s.color, turn_with_right(other), at + 1));
    t.over(at, left_over);
    t.add(Event::cap(s.color, turn_with_right(other), at + 1));
  } else {
    t.add(Event::cup(s.color, turn_with_right(s.dir), at));
    t.over(at + 1, left_over);
    t.add(Event::cap(s.color, turn_with_right(s.dir), at));
  }
  return t;
}

inline Tangle concat(const Tangle& a, const Tangle& b) {
  Tangle t(a.start());
  for (const auto& e : a.events()) t.add(e);
  for (const auto& e : b.events()) t.add(e);
  return t;
}

/// Reidemeister pairs with colors up to max_color.
inline std::vector<Pair> reidemeister_pairs(int max_color) {
  std::vector<Pair> out;
  for (const auto& row : rows(1, max_color))
    for (bool right : {false, true})
      for (bool lo : {false, true})
        out.push_back({"R1 " + label(row) + (right ? " right" : " left") + (lo ? " L" : " R"), 1,
                       close(with_kink(row, 0, right, lo)), close(Tangle(row))});
  // A kink on a strand of a nontrivial diagram.
  for (bool lo : {false, true}) {
    Tangle base = braid(ups(2), {1, 1, 1});
    out.push_back({std::string("R1 trefoil ") + (lo ? "L" : "R"), 1,
                   close(concat(base, with_kink(base.row(), 1, true, lo))), close(base)});
  }
  for (const auto& row : rows(2, max_color))
    for (bool lo : {false, true}) {
      Tangle t(row);
      t.over(0, lo).over(0, !lo);
      out.push_back({"R2 " + label(row) + (lo ? " L" : " R"), 2, close(t), close(Tangle(row))});
    }
  // R2 next to an existing crossing of the same pair.
  for (const auto& row : rows(2, max_color)) {
    if (row[0] != row[1]) continue;
    Tangle base(row);
    base.over(0, true);
    Tangle twisted = base;
    twisted.over(0, false).over(0, true);
    out.push_back({"R2 on crossing " + label(row), 2, close(twisted), close(base)});
  }
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> r3 = {
      {{1, 2, 1}, {2, 1, 2}}, {{-1, -2, -1}, {-2, -1, -2}}, {{1, 2, -1}, {-2, 1, 2}}, {{-1, 2, 1}, {2, 1, -2}}};
  for (const auto& row : rows(3, max_color)) {
    // Full twist pure braid: the first half takes either side of the move.
    for (std::size_t v = 0; v < r3.size(); ++v) {
      std::vector<int> tail = {1, 2, 1};
      auto lhs = r3[v].first, rhs = r3[v].second;
      lhs.insert(lhs.end(), tail.begin(), tail.end());
      rhs.insert(rhs.end(), tail.begin(), tail.end());
      // The reversal permutation must map the row onto itself.
      if (!(row[0] == row[2])) continue;
      out.push_back({"R3 " + label(row) + " v" + std::to_string(v), 3, close(braid(row, lhs)), close(braid(row, rhs))});
    }
  }
  return out;
}

/// Diagrams without vertices, for parity and Euler checks.
inline std::vector<std::pair<std::string, SliceWord>> link_corpus(int max_color) {
  std::vector<std::pair<std::string, SliceWord>> out = {
      {"unknot", close(Tangle(ups(1)))},
      {"trefoil right", trefoil(true)},
      {"trefoil left", trefoil(false)},
      {"figure eight", figure_eight()},
  };
  for (int a = 1; a <= max_color; ++a)
    for (int b = 1; b <= max_color; ++b)
      for (bool p : {false, true})
        out.push_back({"hopf " + std::to_string(a) + std::to_string(b) + (p ? "+" : "-"), hopf(a, b, p)});
  for (const auto& pr : reidemeister_pairs(max_color)) out.push_back({pr.name, pr.lhs});
  return out;
}

}  // namespace corpus
