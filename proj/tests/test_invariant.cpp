#include "core/error.hpp"
#include "core/invariant.hpp"
#include "core/moy.hpp"
#include "core/random_word.hpp"
#include "core/statesum.hpp"
#include "doctest.h"
#include "support/corpus.hpp"
#include "support/skein_oracle.hpp"

namespace inv = moykit::invariant;
namespace moy = moykit::moy;
using moykit::qpoly::LaurentPoly;
using moykit::qpoly::qbinom;

namespace {

LaurentPoly from_oracle(const oracle::IntPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p) out += LaurentPoly::q_power(e, static_cast<long>(c));
  return out;
}

LaurentPoly q(std::int64_t e, long c = 1) { return LaurentPoly::q_power(e, c); }

}  // namespace

TEST_CASE("oracle reproduces the classical values") {
  CHECK(from_oracle(oracle::khovanov_jones(corpus::trefoil(true))) == q(1) + q(3) + q(5) - q(9));
  CHECK(from_oracle(oracle::khovanov_jones(corpus::trefoil(false))) == q(-1) + q(-3) + q(-5) - q(-9));
  CHECK(from_oracle(oracle::khovanov_jones(corpus::figure_eight())) == q(-5) + q(5));
  CHECK(from_oracle(oracle::khovanov_jones(moy::SliceWord{})) == q(0));
}

TEST_CASE("uncolored N=2 matches the skein oracle") {
  std::vector<moy::SliceWord> words = {corpus::trefoil(true), corpus::trefoil(false), corpus::figure_eight(),
                                       corpus::hopf(1, 1, true), corpus::hopf(1, 1, false)};
  for (const auto& pr : corpus::reidemeister_pairs(1)) words.push_back(pr.lhs);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    moy::RandomWordOptions o;
    o.max_events = 12;
    o.max_color = 1;
    o.vertices = false;
    o.crossings = true;
    words.push_back(moy::random_closed_word(seed, o));
  }
  for (const auto& w : words) {
    CAPTURE(moy::serialize(w));
    CHECK(inv::rt_poly(w, 2) == from_oracle(oracle::khovanov_jones(w)));
  }
}

TEST_CASE("unknots and unlinks") {
  for (int N = 1; N <= 5; ++N)
    for (int m = 0; m <= N; ++m) {
      auto w = corpus::close(corpus::Tangle({{m, moy::Dir::up}}));
      CHECK(inv::rt_poly(w, N) == qbinom(N, m));
    }
  CHECK(inv::rt_poly(moy::SliceWord{}, 3) == q(0));
}

TEST_CASE("resolutions of a crossing") {
  for (int N = 1; N <= 4; ++N)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n)
        for (bool pos : {true, false}) {
          auto rs = inv::resolve_crossing(pos, m, n, N);
          CHECK(static_cast<int>(rs.size()) == std::min(m, n) + 1);
          for (const auto& r : rs) {
            CHECK(moy::validate(r.word).empty());
            CHECK(moy::final_strands(r.word) == std::vector<moy::Strand>{{m, moy::Dir::up}, {n, moy::Dir::up}});
          }
        }
  // Same-color shift factor is a monomial of sign (-1)^m.
  auto s = inv::shift_factor(true, 2, 2, 3);
  CHECK(s == q(2 * (3 + 1 - 2), 1));
  CHECK(inv::shift_factor(false, 1, 1, 2) == q(-2, -1));
}

TEST_CASE("Reidemeister invariance") {
  const auto pairs = corpus::reidemeister_pairs(2);
  CHECK(pairs.size() > 50);
  for (const auto& pr : pairs)
    for (int N = 2; N <= 4; ++N) {
      CAPTURE(pr.name);
      CAPTURE(N);
      REQUIRE(moy::validate(pr.lhs).empty());
      REQUIRE(moy::validate(pr.rhs).empty());
      CHECK(inv::rt_poly(pr.lhs, N) == inv::rt_poly(pr.rhs, N));
      if (pr.move != 1) CHECK(inv::bracket_link(pr.lhs, N) == inv::bracket_link(pr.rhs, N));
    }
}

TEST_CASE("mirror image conjugates") {
  for (const auto& [name, w] : corpus::link_corpus(2)) {
    CAPTURE(name);
    CHECK(inv::rt_poly(moy::reverse_mirror(w), 3) == moykit::qpoly::bar(inv::rt_poly(w, 3)));
  }
}

TEST_CASE("Euler characteristic and parity over the corpus") {
  for (const auto& [name, w] : corpus::link_corpus(2))
    for (int N = 2; N <= 4; ++N) {
      CAPTURE(name);
      CAPTURE(N);
      CHECK(inv::complex_euler(w, N, inv::GdimSource::bracket) == inv::rt_poly(w, N));
      CHECK(inv::parity_check(w, N));
    }
}

TEST_CASE("engines and threads agree for links") {
  auto w = corpus::figure_eight();
  CHECK(inv::bracket_link(w, 3, 1, moykit::statesum::Engine::enumerate) == inv::bracket_link(w, 3, 3));
}

TEST_CASE("normalization of mixed crossings") {
  auto w = moy::parse("cup 1 ccw @0\nx+ @0\nx- @0\ncap 1 ccw @0\n");
  auto n = inv::normalize_crossings(w);
  CHECK(moy::validate(n).empty());
  for (const auto& c : inv::crossings(n)) CHECK(c.m >= 0);
  CHECK(inv::rt_poly(w, 3) == qbinom(3, 1));
}
