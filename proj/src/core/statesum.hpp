#pragma once

// The MOY state sum <Gamma>_N: exhaustive enumeration and a sweepline
// dynamic program over labeled frontiers.

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "core/moy.hpp"
#include "core/qpoly.hpp"

namespace moykit::statesum {

/// Subset of {-N+1, -N+3, ..., N-1}; bit i stands for -N+1+2i.
using Label = std::uint32_t;

constexpr int max_n = 30;

std::vector<int> label_values(Label a, int N);
Label label_from_values(const std::vector<int>& values, int N);
/// Sum of the elements of a label.
int label_sum(Label a, int N);

/// #{(a, b) in A x B : a > b}
int pi(Label a, Label b);
/// q^{c1 c2 / 2 - pi(A, B)}; throws on overlapping labels or size mismatch.
qpoly::LaurentPoly vertex_weight(int c1, int c2, Label a, Label b);
/// Doubled exponent of vertex_weight, no checks.
std::int64_t vertex_weight_doubled(int c1, int c2, Label a, Label b);

/// Edge structure of a closed crossingless word.
struct EdgeGraph {
  struct Vertex {
    int wide;   // edge carrying the union
    int e1;     // branch paired with e2 in the weight
    int e2;
    bool wide_is_exit;  // flow leaves the vertex along the wide edge
  };
  struct Extremum {
    int edge;
    int sign;   // +1 ccw, -1 cw
  };
  std::vector<int> color;  // per edge
  std::vector<Vertex> vertices;
  std::vector<Extremum> extrema;
};

EdgeGraph edge_graph(const moy::SliceWord& w);

struct State {
  std::vector<Label> labels;  // per edge of edge_graph(w)
  std::int64_t doubled_exp;   // total weight q^{doubled_exp/2}
};

/// Calls visit for every state, in a deterministic order (single thread).
void for_each_state(const moy::SliceWord& w, int N, const std::function<void(const State&)>& visit);

/// Sweepline dynamic program over labeled frontiers, starting from the
/// empty row. Frontier keys are full label tuples of the current row.
class Sweep {
 public:
  struct KeyHash {
    std::size_t operator()(const std::vector<Label>& k) const noexcept;
  };
  using Frontier = std::unordered_map<std::vector<Label>, qpoly::LaurentPoly, KeyHash>;

  struct Branch {
    qpoly::LaurentPoly coefficient;
    std::vector<moy::Event> events;  // positions in the current row
  };

  explicit Sweep(int N);

  /// One crossingless event.
  void apply(const moy::Event& e);
  /// Frontier becomes sum_b coefficient_b * (frontier after events_b). All
  /// branches must end on the same row.
  void apply_combination(const std::vector<Branch>& branches);

  const std::vector<moy::Strand>& row() const { return row_; }
  std::size_t frontier_size() const { return frontier_.size(); }
  /// Weight of the empty row; requires every strand to be closed.
  qpoly::LaurentPoly result() const;

 private:
  Frontier step(const Frontier& cur, const std::vector<moy::Strand>& row, const moy::Event& e) const;

  int N_;
  std::vector<moy::Strand> row_;
  Frontier frontier_;
};

enum class Engine { dp, enumerate };

qpoly::LaurentPoly bracket(const moy::SliceWord& w, int N, Engine engine, int threads = 1);
qpoly::LaurentPoly bracket_enumerate(const moy::SliceWord& w, int N, int threads = 1);
qpoly::LaurentPoly bracket_dp(const moy::SliceWord& w, int N);

}  // namespace moykit::statesum
