#include <set>

#include "core/error.hpp"
#include "core/moy.hpp"
#include "core/random_word.hpp"
#include "core/relations.hpp"
#include "core/statesum.hpp"
#include "doctest.h"

namespace moy = moykit::moy;
namespace ss = moykit::statesum;
using moykit::qpoly::LaurentPoly;
using moykit::qpoly::qbinom;

namespace {

moy::SliceWord circle(int m, moy::Turn t = moy::Turn::ccw) {
  moy::SliceWord w;
  w.events = {moy::Event::cup(m, t, 0), moy::Event::cap(m, t, 0)};
  return w;
}

moy::SliceWord random_graph(std::uint64_t seed, int max_events = 6, int max_color = 3) {
  moy::RandomWordOptions o;
  o.max_events = max_events;
  o.max_color = max_color;
  return moy::random_closed_word(seed, o);
}

}  // namespace

TEST_CASE("labels") {
  CHECK(ss::label_values(0b101, 3) == std::vector<int>{-2, 2});
  CHECK(ss::label_from_values({-2, 2}, 3) == 0b101u);
  CHECK(ss::label_sum(0b111, 3) == 0);
  CHECK(ss::pi(ss::label_from_values({1}, 2), ss::label_from_values({-1}, 2)) == 1);
  CHECK(ss::pi(ss::label_from_values({-1}, 2), ss::label_from_values({1}, 2)) == 0);
  CHECK(ss::vertex_weight(1, 1, 0b01, 0b10) == LaurentPoly::monomial(1));
  CHECK(ss::vertex_weight(1, 1, 0b10, 0b01) == LaurentPoly::monomial(-1));
  CHECK_THROWS_AS(ss::vertex_weight(1, 1, 0b01, 0b01), moykit::Error);
  CHECK_THROWS_AS(ss::vertex_weight(2, 1, 0b01, 0b10), moykit::Error);
}

TEST_CASE("circles give quantum binomials") {
  for (int N = 1; N <= 6; ++N)
    for (int m = 0; m <= N + 1; ++m)
      for (auto t : {moy::Turn::ccw, moy::Turn::cw}) {
        CAPTURE(N);
        CAPTURE(m);
        CHECK(ss::bracket_dp(circle(m, t), N) == qbinom(N, m));
        CHECK(ss::bracket_enumerate(circle(m, t), N) == qbinom(N, m));
      }
  CHECK(ss::bracket_dp(moy::SliceWord{}, 3) == LaurentPoly::q_power(0));
}

TEST_CASE("engines agree on random words") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto w = random_graph(seed);
    for (int N = 1; N <= 3; ++N) {
      CAPTURE(moy::serialize(w));
      CAPTURE(N);
      CHECK(ss::bracket_dp(w, N) == ss::bracket_enumerate(w, N));
    }
  }
}

TEST_CASE("relations hold through the identity sweep") {
  for (int N = 1; N <= 4; ++N) {
    for (const auto& o : moykit::relations::verify(N, N)) {
      CAPTURE(N);
      CAPTURE(o.instance.relation);
      CAPTURE(o.instance.params);
      CAPTURE(o.instance.variant);
      CHECK(o.pass);
    }
  }
}

TEST_CASE("sweep covers every relation in every variant") {
  std::set<std::pair<int, std::string>> seen;
  for (const auto& inst : moykit::relations::instances(4, 4)) seen.insert({inst.relation, inst.variant});
  for (int r = 1; r <= 7; ++r)
    for (const char* v : {"", "mirror", "reversed"}) CHECK(seen.count({r, v}) == 1);
}

TEST_CASE("picture symmetries") {
  for (std::uint64_t seed = 300; seed < 400; ++seed) {
    const auto w = random_graph(seed, 8, 3);
    for (int N = 2; N <= 4; ++N) {
      const LaurentPoly b = ss::bracket_dp(w, N);
      CAPTURE(moy::serialize(w));
      CHECK(b.is_integral());
      CHECK(ss::bracket_dp(moy::reverse_mirror(w), N) == moykit::qpoly::bar(b));
      CHECK(ss::bracket_dp(moy::rotate180(w), N) == b);
      CHECK(ss::bracket_dp(moy::reverse_orientation(w), N) == b);
    }
  }
}

TEST_CASE("thread count does not change the result") {
  for (std::uint64_t seed = 500; seed < 520; ++seed) {
    const auto w = random_graph(seed, 10, 3);
    CHECK(ss::bracket_enumerate(w, 3, 1) == ss::bracket_enumerate(w, 3, 4));
  }
}

TEST_CASE("state listing") {
  const auto w = moy::parse("cup 2 ccw @0\nsplit 1 1 @1\nmerge 1 1 @1\ncap 2 ccw @0\n");
  const auto g = ss::edge_graph(w);
  CHECK(g.vertices.size() == 2);
  CHECK(g.extrema.size() == 2);
  LaurentPoly total;
  std::size_t count = 0;
  ss::for_each_state(w, 3, [&](const ss::State& s) {
    ++count;
    total += LaurentPoly::monomial(s.doubled_exp);
  });
  CHECK(count == 6);
  CHECK(total == ss::bracket_dp(w, 3));
  CHECK(total == qbinom(2, 1) * qbinom(3, 2));
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(ss::bracket_dp(moy::parse("cup 1 ccw @0\n"), 2), moykit::Error);
  CHECK(ss::bracket_dp(circle(1), 0).is_zero());
  CHECK(ss::bracket_dp(circle(0), 0) == LaurentPoly(1));
  CHECK_THROWS_AS(ss::bracket_dp(circle(1), -1), moykit::Error);
  CHECK_THROWS_AS(ss::bracket_dp(circle(1), 31), moykit::Error);
  CHECK_THROWS_AS(ss::bracket_dp(moy::parse("cup 1 ccw @0\ncup 1 ccw @1\nx+ @2\ncap 1 ccw @1\ncap 1 ccw @0\n"), 2),
                  moykit::Error);
}
