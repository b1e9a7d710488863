#include "core/error.hpp"
#include "core/invariant.hpp"
#include "core/mf.hpp"
#include "core/moy.hpp"
#include "core/random_word.hpp"
#include "core/statesum.hpp"
#include "doctest.h"
#include "support/corpus.hpp"

namespace mf = moykit::mf;
namespace moy = moykit::moy;
using moykit::qpoly::LaurentPoly;
using moykit::qpoly::qbinom;
using moykit::qpoly::specialize_tau;

namespace {

moy::SliceWord circle(int m, moy::Turn t = moy::Turn::ccw) {
  moy::SliceWord w;
  w.events = {moy::Event::cup(m, t, 0), moy::Event::cap(m, t, 0)};
  return w;
}

moy::SliceWord digon(int a, int b) {
  moy::SliceWord w;
  w.events = {moy::Event::cup(a + b, moy::Turn::ccw, 0), moy::Event::split(a, b, 1), moy::Event::merge(a, b, 1),
              moy::Event::cap(a + b, moy::Turn::ccw, 0)};
  return w;
}

// Square with edge colors 1 and 2 closed by two nested arcs.
moy::SliceWord square() {
  return moy::parse(
      "cup 2 ccw @0\ncup 1 ccw @1\nsplit 1 1 @3\nmerge 1 1 @2\nsplit 1 1 @2\nmerge 1 1 @3\ncap 1 ccw @1\ncap 2 ccw @0\n");
}

}  // namespace

TEST_CASE("vertex factorizations square to the potential") {
  using mf::Alphabet;
  for (int N = 1; N <= 3; ++N)
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(N);
      CAPTURE(m);
      auto check = [&](const std::vector<Alphabet>& x, const std::vector<Alphabet>& y) {
        const auto M = mf::vertex_mf(x, y, N);
        return mf::check_potential_identity(M, mf::vertex_potential(x, y, N, M.ring));
      };
      CHECK(check({{"A", m}}, {{"B", m}}));
      for (int a = 1; a < m; ++a) {
        CHECK(check({{"A", a}, {"B", m - a}}, {{"C", m}}));
        CHECK(check({{"C", m}}, {{"A", a}, {"B", m - a}}));
      }
    }
  CHECK_THROWS_AS(mf::vertex_mf({{"A", 1}}, {{"B", 2}}, 2), moykit::Error);
}

TEST_CASE("a broken row is caught") {
  auto M = mf::vertex_mf({{"A", 1}, {"B", 1}}, {{"C", 2}}, 2);
  const auto w = mf::vertex_potential({{"A", 1}, {"B", 1}}, {{"C", 2}}, 2, M.ring);
  REQUIRE(mf::check_potential_identity(M, w));
  auto broken = M;
  broken.rows[0].a0 += moykit::symfunc::SymPoly::constant(M.ring, 1);
  CHECK_FALSE(mf::check_potential_identity(broken, w));
}

TEST_CASE("circles: homology is the shifted Grassmannian") {
  for (int N = 1; N <= 3; ++N)
    for (int m = 0; m <= N; ++m)
      for (auto t : {moy::Turn::ccw, moy::Turn::cw}) {
        CAPTURE(N);
        CAPTURE(m);
        const auto rep = mf::verify_gdim_equals_bracket(circle(m, t), N, std::nullopt);
        CHECK(rep.pass);
        CHECK(specialize_tau(rep.gdim, 1) == qbinom(N, m));
        // All classes sit in tau-degree m.
        CHECK((m % 2 ? rep.gdim.even : rep.gdim.odd).is_zero());
      }
}

TEST_CASE("digon and square agree with the bracket") {
  for (int N = 1; N <= 3; ++N) {
    const auto rep = mf::verify_gdim_equals_bracket(digon(1, 1), N, std::nullopt);
    CAPTURE(N);
    CHECK(rep.pass);
    CHECK(rep.parity_ok);
  }
  for (int N = 2; N <= 3; ++N) {
    const auto rep = mf::verify_gdim_equals_bracket(square(), N, std::nullopt);
    CHECK(rep.pass);
    CHECK(specialize_tau(rep.gdim, 1) == moykit::statesum::bracket_dp(square(), N));
  }
}

TEST_CASE("width cap kills the digon") {
  for (int N = 1; N <= 3; ++N)
    for (int a = 1; a <= N; ++a) {
      const int b = N + 1 - a;
      const auto rep = mf::verify_gdim_equals_bracket(digon(a, b), N, std::nullopt);
      CAPTURE(N);
      CAPTURE(a);
      CHECK(rep.bracket.is_zero());
      CHECK(rep.gdim.is_zero());
      CHECK(rep.pass);
    }
}

TEST_CASE("row reduction does not change homology") {
  const std::vector<std::pair<moy::SliceWord, int>> cases = {
      {circle(1), 2}, {circle(2), 3}, {circle(1, moy::Turn::cw), 3}, {digon(1, 1), 2}, {digon(1, 1), 3}, {square(), 2}};
  for (const auto& [w, N] : cases) {
    CAPTURE(moy::serialize(w));
    CAPTURE(N);
    // The unreduced complex is large; the window stops at the bracket's top.
    const auto M = mf::graph_mf(w, N);
    mf::HomologyOptions a;
    a.d_max = static_cast<int>(moykit::statesum::bracket_dp(w, N).max_doubled_exp() / 2);
    mf::HomologyOptions b = a;
    b.reduce = false;
    const auto ra = mf::homology(M, a), rb = mf::homology(M, b);
    CHECK(ra.gdim == rb.gdim);
    CHECK(rb.rows_after_reduction == M.rows.size());
  }
}

TEST_CASE("extra marked points do not change homology") {
  const std::vector<std::pair<moy::SliceWord, int>> cases = {{circle(1), 2}, {circle(2), 3}, {digon(1, 1), 3}, {square(), 2}};
  for (const auto& [w, N] : cases) {
    const auto plain = mf::graph_gdim(w, N, 4 * (N + 1));
    const auto g = moykit::statesum::edge_graph(w);
    for (std::size_t e = 0; e < g.color.size(); ++e) {
      mf::MarkingOptions opts;
      opts.extra_marks.assign(g.color.size(), 0);
      opts.extra_marks[e] = 2;
      mf::HomologyOptions h;
      h.d_max = 4 * (N + 1);
      CAPTURE(e);
      CHECK(mf::homology(mf::graph_mf(w, N, opts), h).gdim == plain);
    }
  }
}

TEST_CASE("random small graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    moy::RandomWordOptions o;
    o.max_events = 6;
    o.max_color = 2;
    const auto w = moy::random_closed_word(seed, o);
    for (int N = 1; N <= 3; ++N) {
      CAPTURE(moy::serialize(w));
      CAPTURE(N);
      CHECK(mf::verify_gdim_equals_bracket(w, N, std::nullopt).pass);
    }
  }
}

TEST_CASE("threads do not change homology") {
  mf::HomologyOptions a, b;
  a.d_max = b.d_max = 12;
  b.threads = 3;
  const auto M = mf::graph_mf(square(), 3);
  CHECK(mf::homology(M, a).gdim == mf::homology(M, b).gdim);
}

TEST_CASE("Euler characteristic from homology") {
  for (const auto& w : {corpus::close(corpus::with_kink(corpus::ups(1), 0, true, true)),
                        corpus::close(corpus::with_kink(corpus::ups(1), 0, false, false)), corpus::hopf(1, 1, true)}) {
    CAPTURE(moy::serialize(w));
    CHECK(moykit::invariant::complex_euler(w, 2, moykit::invariant::GdimSource::mf) == moykit::invariant::rt_poly(w, 2));
  }
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(mf::graph_mf(moy::parse("cup 1 ccw @0\n"), 2), moykit::Error);
  CHECK_THROWS_AS(mf::vertex_mf({{"A", 1}}, {{"B", 1}}, 0), moykit::Error);
}
