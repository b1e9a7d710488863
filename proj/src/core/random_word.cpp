#include "core/random_word.hpp"

#include <random>
#include <vector>

namespace moykit::moy {

namespace {

Turn cap_turn(Dir left) { return left == Dir::down ? Turn::ccw : Turn::cw; }

struct Builder {
  std::mt19937_64& rng;
  const RandomWordOptions& opts;
  std::vector<Strand> row;
  std::vector<Event> events;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  void push(const Event& e) {
    apply_event(row, e);
    events.push_back(e);
  }

  // One random event; returns false if the chosen kind had no legal move.
  bool step() {
    const int w = static_cast<int>(row.size());
    // Vertices are favored so that short words are not mostly bare circles.
    std::discrete_distribution<int> kind({2, 2, 3, 3, 2});
    switch (kind(rng)) {
      case 0:
        push(Event::cup(uniform(1, opts.max_color), uniform(0, 1) ? Turn::ccw : Turn::cw, uniform(0, w)));
        return true;
      case 1: {
        std::vector<int> opts_pos;
        for (int i = 0; i + 1 < w; ++i)
          if (row[i].color == row[i + 1].color && row[i].dir != row[i + 1].dir) opts_pos.push_back(i);
        if (opts_pos.empty()) return false;
        int i = opts_pos[uniform(0, static_cast<int>(opts_pos.size()) - 1)];
        push(Event::cap(row[i].color, cap_turn(row[i].dir), i));
        return true;
      }
      case 2: {
        if (!opts.vertices) return false;
        std::vector<int> cand;
        for (int i = 0; i < w; ++i)
          if (row[i].color >= 2) cand.push_back(i);
        if (cand.empty()) return false;
        int i = cand[uniform(0, static_cast<int>(cand.size()) - 1)];
        int a = uniform(1, row[i].color - 1);
        push(Event::split(a, row[i].color - a, i));
        return true;
      }
      case 3: {
        if (!opts.vertices) return false;
        std::vector<int> cand;
        for (int i = 0; i + 1 < w; ++i)
          if (row[i].dir == row[i + 1].dir && row[i].color + row[i + 1].color <= opts.max_color) cand.push_back(i);
        if (cand.empty()) return false;
        int i = cand[uniform(0, static_cast<int>(cand.size()) - 1)];
        push(Event::merge(row[i].color, row[i + 1].color, i));
        return true;
      }
      default: {
        if (!opts.crossings || w < 2) return false;
        push(Event::cross(uniform(0, 1) == 1, uniform(0, w - 2)));
        return true;
      }
    }
  }

  // Caps everything off, splitting the wider strand of an unequal pair.
  bool close() {
    while (!row.empty()) {
      bool progressed = false;
      for (int i = 0; i + 1 < static_cast<int>(row.size()); ++i) {
        const Strand s = row[i], t = row[i + 1];
        if (s.dir == t.dir) continue;
        if (s.color == t.color) {
          push(Event::cap(s.color, cap_turn(s.dir), i));
        } else if (!opts.vertices) {
          continue;
        } else if (s.color > t.color) {
          push(Event::split(s.color - t.color, t.color, i));
        } else {
          push(Event::split(s.color, t.color - s.color, i + 1));
        }
        progressed = true;
        break;
      }
      // No opposite pair can be capped or split: merge a parallel pair.
      for (int i = 0; !progressed && opts.vertices && i + 1 < static_cast<int>(row.size()); ++i)
        if (row[i].dir == row[i + 1].dir) {
          push(Event::merge(row[i].color, row[i + 1].color, i));
          progressed = true;
        }
      if (!progressed) return false;
      if (static_cast<int>(events.size()) > opts.max_events) return false;
    }
    return true;
  }
};

}  // namespace

SliceWord random_closed_word(std::uint64_t seed, const RandomWordOptions& opts) {
  if (opts.max_events < 2 || opts.max_color < 1)
    throw Error(ErrorCode::invalid_argument, "random word needs max_events >= 2 and max_color >= 1");
  std::mt19937_64 rng(seed);
  for (;;) {
    Builder b{rng, opts, {}, {}};
    const int body = b.uniform((opts.max_events + 1) / 2, opts.max_events - 1);
    for (int tries = 0; static_cast<int>(b.events.size()) < body && tries < 8 * body; ++tries) b.step();
    if (!b.close() || b.events.empty() || static_cast<int>(b.events.size()) > opts.max_events) continue;
    // Closing a graph with vertices costs more events, so without this most
    // short words would be plain circles.
    bool has_vertex = false;
    for (const auto& e : b.events) has_vertex |= e.is_vertex();
    if (opts.vertices && !has_vertex && b.uniform(0, 3) != 0) continue;
    SliceWord w;
    w.events = std::move(b.events);
    return w;
  }
}

}  // namespace moykit::moy
