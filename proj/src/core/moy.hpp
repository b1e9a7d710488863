#pragma once

// Sweepline slice words: MOY graphs and colored link diagrams as sequences of
// cups, caps, splits, merges and crossings acting on a row of strands.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"

namespace moykit::moy {

enum class Dir { up, down };
enum class Turn { ccw, cw };
enum class EventKind { cup, cap, split, merge, cross_pos, cross_neg };

struct Strand {
  int color = 0;
  Dir dir = Dir::up;
  friend bool operator==(const Strand&, const Strand&) = default;
};

/// cup/cap use `a` as the color and `turn`; split/merge use (a, b) as the
/// (left, right) colors. `pos` indexes the strand row before the event.
struct Event {
  EventKind kind = EventKind::cup;
  int a = 0;
  int b = 0;
  Turn turn = Turn::ccw;
  int pos = 0;

  friend bool operator==(const Event&, const Event&) = default;

  static Event cup(int c, Turn t, int pos) { return {EventKind::cup, c, 0, t, pos}; }
  static Event cap(int c, Turn t, int pos) { return {EventKind::cap, c, 0, t, pos}; }
  static Event split(int m, int n, int pos) { return {EventKind::split, m, n, Turn::ccw, pos}; }
  static Event merge(int m, int n, int pos) { return {EventKind::merge, m, n, Turn::ccw, pos}; }
  static Event cross(bool positive, int pos) {
    return {positive ? EventKind::cross_pos : EventKind::cross_neg, 0, 0, Turn::ccw, pos};
  }
  bool is_crossing() const { return kind == EventKind::cross_pos || kind == EventKind::cross_neg; }
  bool is_vertex() const { return kind == EventKind::split || kind == EventKind::merge; }
};

struct SliceWord {
  std::optional<int> n;  // optional "N" header
  std::vector<Strand> boundary;
  std::vector<Event> events;

  friend bool operator==(const SliceWord&, const SliceWord&) = default;
};

struct Diagnostic {
  std::size_t event_index = 0;
  std::string reason;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Applies one event to a strand row; returns a reason on failure and leaves
/// the row unspecified.
std::optional<std::string> apply_event(std::vector<Strand>& row, const Event& e);

/// Empty iff every event type-checks. Stops at the first failing event.
std::vector<Diagnostic> validate(const SliceWord& w);
/// Throws Error(validation) with the first diagnostic.
void require_valid(const SliceWord& w);

std::vector<Strand> final_strands(const SliceWord& w);
bool closed(const SliceWord& w);
bool has_crossings(const SliceWord& w);
bool has_vertices(const SliceWord& w);
std::size_t crossing_count(const SliceWord& w);
/// Width of the row before each event, plus the final width at the end.
std::vector<int> widths(const SliceWord& w);

SliceWord parse(std::string_view text);
std::string serialize(const SliceWord& w);
std::string to_string(const Event& e);

/// Sum over extrema of +-color/2 (ccw positive); requires closed, no crossings.
int colored_rotation(const SliceWord& w);
/// Sum of component colors; requires no split/merge events.
int total_color(const SliceWord& w);
/// Left-right reflection: turns, vertex branch order and crossing signs flip.
SliceWord reverse_mirror(const SliceWord& w);
/// Every strand reversed: directions and extremum turns flip.
SliceWord reverse_orientation(const SliceWord& w);
/// Rotation of the picture by 180 degrees.
SliceWord rotate180(const SliceWord& w);
/// Events of b appended after a; b's boundary must match a's final row.
SliceWord concat(const SliceWord& a, const SliceWord& b);
/// Every event position shifted by `offset`.
std::vector<Event> shifted(const std::vector<Event>& events, int offset);

}  // namespace moykit::moy
