#include "core/moy.hpp"

#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace moykit::moy {

namespace {

const char* dir_name(Dir d) { return d == Dir::up ? "u" : "d"; }
const char* turn_name(Turn t) { return t == Turn::ccw ? "ccw" : "cw"; }

// Cup/cap pair pattern: ccw is (down, up), cw is (up, down).
std::pair<Dir, Dir> extremum_dirs(Turn t) {
  return t == Turn::ccw ? std::pair{Dir::down, Dir::up} : std::pair{Dir::up, Dir::down};
}

}  // namespace

std::optional<std::string> apply_event(std::vector<Strand>& row, const Event& e) {
  const int w = static_cast<int>(row.size());
  switch (e.kind) {
    case EventKind::cup: {
      if (e.a < 0) return "negative color";
      if (e.pos < 0 || e.pos > w) return "position out of range";
      auto [l, r] = extremum_dirs(e.turn);
      row.insert(row.begin() + e.pos, {Strand{e.a, l}, Strand{e.a, r}});
      return std::nullopt;
    }
    case EventKind::cap: {
      if (e.pos < 0 || e.pos + 1 >= w) return "position out of range";
      auto [l, r] = extremum_dirs(e.turn);
      const Strand& s = row[e.pos];
      const Strand& t = row[e.pos + 1];
      if (s.color != e.a || t.color != e.a) return "color mismatch";
      if (s.dir != l || t.dir != r) return "direction mismatch";
      row.erase(row.begin() + e.pos, row.begin() + e.pos + 2);
      return std::nullopt;
    }
    case EventKind::split: {
      if (e.a < 0 || e.b < 0) return "negative color";
      if (e.pos < 0 || e.pos >= w) return "position out of range";
      const Strand s = row[e.pos];
      if (s.color != e.a + e.b) return "color mismatch";
      row[e.pos] = {e.a, s.dir};
      row.insert(row.begin() + e.pos + 1, Strand{e.b, s.dir});
      return std::nullopt;
    }
    case EventKind::merge: {
      if (e.pos < 0 || e.pos + 1 >= w) return "position out of range";
      const Strand s = row[e.pos];
      const Strand t = row[e.pos + 1];
      if (s.color != e.a || t.color != e.b) return "color mismatch";
      if (s.dir != t.dir) return "direction mismatch";
      row[e.pos] = {e.a + e.b, s.dir};
      row.erase(row.begin() + e.pos + 1);
      return std::nullopt;
    }
    case EventKind::cross_pos:
    case EventKind::cross_neg:
      if (e.pos < 0 || e.pos + 1 >= w) return "position out of range";
      std::swap(row[e.pos], row[e.pos + 1]);
      return std::nullopt;
  }
  return "unknown event";
}

std::vector<Diagnostic> validate(const SliceWord& w) {
  std::vector<Diagnostic> out;
  std::vector<Strand> row = w.boundary;
  for (const Strand& s : row)
    if (s.color < 0) return {{0, "negative boundary color"}};
  for (std::size_t i = 0; i < w.events.size(); ++i) {
    if (auto err = apply_event(row, w.events[i])) {
      out.push_back({i, *err});
      return out;
    }
  }
  return out;
}

void require_valid(const SliceWord& w) {
  const auto d = validate(w);
  if (!d.empty())
    throw Error(ErrorCode::validation, "event " + std::to_string(d.front().event_index) + ": " + d.front().reason);
}

std::vector<Strand> final_strands(const SliceWord& w) {
  std::vector<Strand> row = w.boundary;
  for (std::size_t i = 0; i < w.events.size(); ++i)
    if (auto err = apply_event(row, w.events[i]))
      throw Error(ErrorCode::validation, "event " + std::to_string(i) + ": " + *err);
  return row;
}

bool closed(const SliceWord& w) { return w.boundary.empty() && final_strands(w).empty(); }

bool has_crossings(const SliceWord& w) {
  for (const auto& e : w.events)
    if (e.is_crossing()) return true;
  return false;
}

bool has_vertices(const SliceWord& w) {
  for (const auto& e : w.events)
    if (e.is_vertex()) return true;
  return false;
}

std::size_t crossing_count(const SliceWord& w) {
  std::size_t n = 0;
  for (const auto& e : w.events) n += e.is_crossing();
  return n;
}

std::vector<int> widths(const SliceWord& w) {
  std::vector<int> out;
  int width = static_cast<int>(w.boundary.size());
  for (const auto& e : w.events) {
    out.push_back(width);
    switch (e.kind) {
      case EventKind::cup: width += 2; break;
      case EventKind::cap: width -= 2; break;
      case EventKind::split: width += 1; break;
      case EventKind::merge: width -= 1; break;
      default: break;
    }
  }
  out.push_back(width);
  return out;
}

// ---------------------------------------------------------------- text format

namespace {

struct Cursor {
  std::string_view line;
  std::size_t at = 0;
  int lineno = 0;

  void skip_ws() {
    while (at < line.size() && (line[at] == ' ' || line[at] == '\t' || line[at] == '\r')) ++at;
  }
  bool done() {
    skip_ws();
    return at >= line.size();
  }
  int column() const { return static_cast<int>(at) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(lineno, column(), msg); }

  std::string_view word() {
    skip_ws();
    const std::size_t start = at;
    while (at < line.size() && line[at] != ' ' && line[at] != '\t' && line[at] != '\r') ++at;
    return line.substr(start, at - start);
  }

  int integer(std::string_view what) {
    skip_ws();
    const std::size_t start = at;
    int v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + at, line.data() + line.size(), v);
    if (ec != std::errc() || ptr == line.data() + at) {
      at = start;
      fail("expected " + std::string(what));
    }
    at = static_cast<std::size_t>(ptr - line.data());
    return v;
  }

  int nonneg(std::string_view what) {
    const std::size_t start = at;
    const int v = integer(what);
    if (v < 0) {
      at = start;
      skip_ws();
      fail(std::string(what) + " must be nonnegative");
    }
    return v;
  }

  Turn turn() {
    skip_ws();
    const std::size_t start = at;
    auto t = word();
    if (t == "ccw") return Turn::ccw;
    if (t == "cw") return Turn::cw;
    at = start;
    fail("expected ccw or cw");
  }

  int position() {
    skip_ws();
    if (at >= line.size() || line[at] != '@') fail("expected @<position>");
    ++at;
    if (at < line.size() && (line[at] == ' ' || line[at] == '\t')) fail("expected position after @");
    return nonneg("position");
  }
};

}  // namespace

SliceWord parse(std::string_view text) {
  SliceWord w;
  bool seen_event = false;
  std::size_t start = 0;
  int lineno = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Cursor c{line, 0, lineno};
    if (c.done()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t tok_at = c.at;
    const std::string_view tok = c.word();
    if (tok == "N") {
      if (seen_event || w.n) {
        c.at = tok_at;
        c.fail("N header must come first and only once");
      }
      const std::size_t vat = c.at;
      const int n = c.integer("N");
      if (n < 1) {
        c.at = vat;
        c.skip_ws();
        c.fail("N must be positive");
      }
      w.n = n;
    } else if (tok == "boundary:") {
      if (seen_event || !w.boundary.empty()) {
        c.at = tok_at;
        c.fail("boundary must precede events and appear once");
      }
      while (!c.done()) {
        const std::size_t sat = c.at;
        const int color = c.nonneg("boundary color");
        if (c.at >= line.size() || (line[c.at] != 'u' && line[c.at] != 'd')) c.fail("expected direction u or d");
        w.boundary.push_back({color, line[c.at] == 'u' ? Dir::up : Dir::down});
        ++c.at;
        if (c.at < line.size() && line[c.at] != ' ' && line[c.at] != '\t' && line[c.at] != '\r') {
          c.at = sat;
          c.fail("malformed boundary strand");
        }
      }
    } else {
      Event e;
      if (tok == "cup" || tok == "cap") {
        e.kind = tok == "cup" ? EventKind::cup : EventKind::cap;
        e.a = c.nonneg("color");
        e.turn = c.turn();
      } else if (tok == "split" || tok == "merge") {
        e.kind = tok == "split" ? EventKind::split : EventKind::merge;
        e.a = c.nonneg("color");
        e.b = c.nonneg("color");
      } else if (tok == "x+" || tok == "x-") {
        e.kind = tok == "x+" ? EventKind::cross_pos : EventKind::cross_neg;
      } else {
        c.at = tok_at;
        c.fail("unknown event '" + std::string(tok) + "'");
      }
      e.pos = c.position();
      if (!c.done()) c.fail("unexpected trailing text");
      w.events.push_back(e);
      seen_event = true;
    }
    if (!c.done()) c.fail("unexpected trailing text");
    if (end == text.size()) break;
  }
  return w;
}

std::string to_string(const Event& e) {
  std::ostringstream os;
  switch (e.kind) {
    case EventKind::cup: os << "cup " << e.a << ' ' << turn_name(e.turn); break;
    case EventKind::cap: os << "cap " << e.a << ' ' << turn_name(e.turn); break;
    case EventKind::split: os << "split " << e.a << ' ' << e.b; break;
    case EventKind::merge: os << "merge " << e.a << ' ' << e.b; break;
    case EventKind::cross_pos: os << "x+"; break;
    case EventKind::cross_neg: os << "x-"; break;
  }
  os << " @" << e.pos;
  return os.str();
}

std::string serialize(const SliceWord& w) {
  std::ostringstream os;
  if (w.n) os << "N " << *w.n << '\n';
  if (!w.boundary.empty()) {
    os << "boundary:";
    for (const auto& s : w.boundary) os << ' ' << s.color << dir_name(s.dir);
    os << '\n';
  }
  for (const auto& e : w.events) os << to_string(e) << '\n';
  return os.str();
}

// ---------------------------------------------------------------- invariants

int colored_rotation(const SliceWord& w) {
  if (!closed(w)) throw Error(ErrorCode::domain, "colored_rotation requires a closed word");
  if (has_crossings(w)) throw Error(ErrorCode::domain, "colored_rotation requires a crossingless word");
  long twice = 0;
  for (const auto& e : w.events)
    if (e.kind == EventKind::cup || e.kind == EventKind::cap) twice += e.turn == Turn::ccw ? e.a : -e.a;
  if (twice % 2 != 0) throw Error(ErrorCode::internal, "colored rotation is not an integer");
  return static_cast<int>(twice / 2);
}

int total_color(const SliceWord& w) {
  if (has_vertices(w)) throw Error(ErrorCode::domain, "total_color requires a link diagram without vertices");
  require_valid(w);
  std::vector<int> parent;
  std::vector<int> color;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto fresh = [&](int c) {
    parent.push_back(static_cast<int>(parent.size()));
    color.push_back(c);
    return parent.back();
  };
  std::vector<int> row;
  for (const auto& s : w.boundary) row.push_back(fresh(s.color));
  std::vector<int> open_ends;  // strands still on the final row
  for (const auto& e : w.events) {
    switch (e.kind) {
      case EventKind::cup: {
        const int id = fresh(e.a);
        row.insert(row.begin() + e.pos, {id, id});
        break;
      }
      case EventKind::cap:
        parent[find(row[e.pos])] = find(row[e.pos + 1]);
        row.erase(row.begin() + e.pos, row.begin() + e.pos + 2);
        break;
      default:
        std::swap(row[e.pos], row[e.pos + 1]);
        break;
    }
  }
  std::map<int, int> comp;
  for (std::size_t i = 0; i < parent.size(); ++i) comp[find(static_cast<int>(i))] = color[i];
  int total = 0;
  for (const auto& [root, c] : comp) total += c;
  return total;
}

SliceWord reverse_mirror(const SliceWord& w) {
  SliceWord out;
  out.n = w.n;
  out.boundary.assign(w.boundary.rbegin(), w.boundary.rend());
  const auto wd = widths(w);
  for (std::size_t i = 0; i < w.events.size(); ++i) {
    const Event& e = w.events[i];
    const int W = wd[i];
    Event f = e;
    switch (e.kind) {
      case EventKind::cup:
        f.pos = W - e.pos;
        f.turn = e.turn == Turn::ccw ? Turn::cw : Turn::ccw;
        break;
      case EventKind::cap:
        f.pos = W - 2 - e.pos;
        f.turn = e.turn == Turn::ccw ? Turn::cw : Turn::ccw;
        break;
      case EventKind::split:
        f.pos = W - 1 - e.pos;
        std::swap(f.a, f.b);
        break;
      case EventKind::merge:
        f.pos = W - 2 - e.pos;
        std::swap(f.a, f.b);
        break;
      case EventKind::cross_pos:
        f.pos = W - 2 - e.pos;
        f.kind = EventKind::cross_neg;
        break;
      case EventKind::cross_neg:
        f.pos = W - 2 - e.pos;
        f.kind = EventKind::cross_pos;
        break;
    }
    out.events.push_back(f);
  }
  return out;
}

SliceWord reverse_orientation(const SliceWord& w) {
  SliceWord out = w;
  for (auto& s : out.boundary) s.dir = s.dir == Dir::up ? Dir::down : Dir::up;
  for (auto& e : out.events)
    if (e.kind == EventKind::cup || e.kind == EventKind::cap) e.turn = e.turn == Turn::ccw ? Turn::cw : Turn::ccw;
  return out;
}

SliceWord rotate180(const SliceWord& w) {
  SliceWord out;
  out.n = w.n;
  const auto fin = final_strands(w);
  for (auto it = fin.rbegin(); it != fin.rend(); ++it)
    out.boundary.push_back({it->color, it->dir == Dir::up ? Dir::down : Dir::up});
  const auto wd = widths(w);
  for (std::size_t k = w.events.size(); k-- > 0;) {
    const Event& e = w.events[k];
    const int W = wd[k];  // width below the original event
    Event f = e;
    switch (e.kind) {
      case EventKind::cup:
        f.kind = EventKind::cap;
        f.pos = W - e.pos;
        break;
      case EventKind::cap:
        f.kind = EventKind::cup;
        f.pos = W - 2 - e.pos;
        break;
      case EventKind::split:
        f.kind = EventKind::merge;
        f.pos = W - 1 - e.pos;
        std::swap(f.a, f.b);
        break;
      case EventKind::merge:
        f.kind = EventKind::split;
        f.pos = W - 2 - e.pos;
        std::swap(f.a, f.b);
        break;
      case EventKind::cross_pos:
      case EventKind::cross_neg:
        f.pos = W - 2 - e.pos;
        break;
    }
    out.events.push_back(f);
  }
  return out;
}

SliceWord concat(const SliceWord& a, const SliceWord& b) {
  if (final_strands(a) != b.boundary) throw Error(ErrorCode::validation, "concat: boundary mismatch");
  SliceWord out = a;
  out.events.insert(out.events.end(), b.events.begin(), b.events.end());
  return out;
}

std::vector<Event> shifted(const std::vector<Event>& events, int offset) {
  std::vector<Event> out = events;
  for (auto& e : out) e.pos += offset;
  return out;
}

}  // namespace moykit::moy
