#pragma once

// Graded Koszul matrix factorizations of MOY graphs and the graded
// dimension of their homology.

#include <optional>
#include <string>
#include <vector>

#include "core/linalg.hpp"
#include "core/moy.hpp"
#include "core/qpoly.hpp"
#include "core/symfunc.hpp"

namespace moykit::mf {

using symfunc::Alphabet;
using symfunc::RingPtr;
using symfunc::SymPoly;

/// R --a0--> R{q^{N+1-deg0}} --a1--> R. deg0 is the declared doubled degree
/// of a0, kept even when a0 vanishes.
struct KoszulRow {
  SymPoly a0;
  SymPoly a1;
  int deg0 = 0;
};

struct KoszulMF {
  RingPtr ring;
  int N = 1;
  std::vector<KoszulRow> rows;
  int q_shift = 0;
  int z2_shift = 0;

  SymPoly potential() const;
  /// q-shift of row j's odd generator.
  int row_shift(std::size_t j) const { return N + 1 - rows[j].deg0; }
};

/// C(empty): a single even generator in degree 0 over the ground field.
KoszulMF empty_mf(int N);

/// U_j of the vertex of width m, over the formal ring {X: m, Y: m}.
SymPoly divided_difference(int m, int N, int j);

/// Factorization of a vertex whose exits and entrances carry the given
/// alphabets. Built in a ring containing exactly those alphabets.
KoszulMF vertex_mf(const std::vector<Alphabet>& exits, const std::vector<Alphabet>& entrances, int N);

/// Tensor product over the pushout of the two rings (alphabets identified by
/// name; sizes must agree).
KoszulMF tensor(const KoszulMF& a, const KoszulMF& b);

/// sum p_{N+1}(exits) - sum p_{N+1}(entrances) in the given ring.
SymPoly vertex_potential(const std::vector<Alphabet>& exits, const std::vector<Alphabet>& entrances, int N,
                         const RingPtr& ring);

/// Symbolic check of d^2 = w * id on the full differential.
bool check_potential_identity(const KoszulMF& M, const SymPoly& w);

struct MarkingOptions {
  /// Extra marked points per edge (edge index of statesum::edge_graph).
  std::vector<int> extra_marks;
};

KoszulMF graph_mf(const moy::SliceWord& w, int N, const MarkingOptions& opts = {});

/// Degreewise homology. `reduce` eliminates rows with a linear entry first.
struct HomologyOptions {
  /// Top of the degree window. When absent: bracket_top + 2(N+1) if given,
  /// otherwise -d_lo + 2(N+1).
  std::optional<int> d_max;
  std::optional<int> bracket_top;
  bool reduce = true;
  int threads = 1;
};

struct HomologyResult {
  qpoly::GradedDim gdim;
  int d_lo = 0;   // lowest degree of the underlying module
  int d_max = 0;
  bool contractible = false;  // a unit entry was found
  std::size_t rows_after_reduction = 0;
  std::size_t generators_after_reduction = 0;
};

HomologyResult homology(const KoszulMF& M, const HomologyOptions& opts);

/// Default window top: bracket top degree + 2(N+1), or -d_lo + 2(N+1) when
/// the bracket vanishes.
int default_d_max(const qpoly::LaurentPoly& bracket, int N, int d_lo);

/// gdim of H(C(Gamma)) on the window (default window from the bracket).
qpoly::GradedDim graph_gdim(const moy::SliceWord& w, int N, std::optional<int> d_max, int threads = 1);

struct VerifyReport {
  qpoly::LaurentPoly bracket;
  qpoly::GradedDim gdim;
  int d_lo = 0;
  int d_max = 0;
  int colored_rotation = 0;
  bool support_in_window = false;  // bracket terms inside [2*d_lo, 2*d_max]
  bool agrees = false;             // gdim at tau=1 equals the bracket
  bool buffer_vanishes = false;    // nothing just above d_max; not required
  bool parity_ok = false;          // all classes in tau-degree cr mod 2
  bool pass = false;
  std::string note;
};

VerifyReport verify_gdim_equals_bracket(const moy::SliceWord& w, int N, std::optional<int> d_max, int threads = 1);

}  // namespace moykit::mf
