#include <moykit/moykit.h>

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

std::string data_path(const char* name) {
  const char* dir = std::getenv("MOYKIT_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

moykit_word* load(const char* name) {
  moykit_word* w = nullptr;
  REQUIRE(moykit_word_load(data_path(name).c_str(), &w) == MOYKIT_OK);
  return w;
}

moykit_word* parse(const char* text) {
  moykit_word* w = nullptr;
  REQUIRE(moykit_word_parse(text, &w) == MOYKIT_OK);
  return w;
}

std::string str(const moykit_poly* p) {
  char* s = nullptr;
  REQUIRE(moykit_poly_to_string(p, &s) == MOYKIT_OK);
  std::string out = s;
  moykit_string_free(s);
  return out;
}

struct Term {
  int64_t num, den;
  std::string coeff;
};

std::vector<Term> terms(const moykit_poly* p) {
  std::vector<Term> out;
  for (size_t i = 0; i < moykit_poly_size(p); ++i) {
    Term t{};
    char* c = nullptr;
    REQUIRE(moykit_poly_term(p, i, &t.num, &t.den, &c) == MOYKIT_OK);
    t.coeff = c;
    moykit_string_free(c);
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::strlen(moykit_version()) > 0);
  moykit_word* w = nullptr;
  CHECK(moykit_word_parse("cup 1 ccw @0\nwobble\n", &w) == MOYKIT_ERR_PARSE);
  CHECK(w == nullptr);
  CHECK(std::string(moykit_last_error()).find("line 2") != std::string::npos);
  CHECK(moykit_word_load("/nonexistent/x.moy", &w) == MOYKIT_ERR_IO);
  CHECK(moykit_word_parse(nullptr, &w) == MOYKIT_ERR_ARGUMENT);
  CHECK(moykit_last_error() != nullptr);
}

TEST_CASE("word queries") {
  moykit_word* w = load("circle1.moy");
  int has = 0, n = 0;
  CHECK(moykit_word_header_n(w, &has, &n) == MOYKIT_OK);
  CHECK(has == 1);
  CHECK(n == 2);
  int closed = 0;
  CHECK(moykit_word_is_closed(w, &closed) == MOYKIT_OK);
  CHECK(closed == 1);
  size_t cross = 9;
  CHECK(moykit_word_crossings(w, &cross) == MOYKIT_OK);
  CHECK(cross == 0);
  int rot = 0;
  CHECK(moykit_colored_rotation(w, &rot) == MOYKIT_OK);
  CHECK((rot == 1 || rot == -1));

  char* text = nullptr;
  REQUIRE(moykit_word_serialize(w, &text) == MOYKIT_OK);
  moykit_word* back = parse(text);
  moykit_string_free(text);
  moykit_poly *a = nullptr, *b = nullptr;
  REQUIRE(moykit_bracket(w, 0, MOYKIT_ENGINE_DP, 1, &a) == MOYKIT_OK);
  REQUIRE(moykit_bracket(back, 0, MOYKIT_ENGINE_DP, 1, &b) == MOYKIT_OK);
  CHECK(moykit_poly_equal(a, b));
  moykit_poly_free(a);
  moykit_poly_free(b);
  moykit_word_free(back);
  moykit_word_free(w);

  moykit_word* t = load("trefoil_right.moy");
  CHECK(moykit_word_crossings(t, &cross) == MOYKIT_OK);
  CHECK(cross == 3);
  moykit_word_free(t);
}

TEST_CASE("validation reports the failing event") {
  moykit_word* w = load("bad_color.moy");
  size_t idx = 99;
  CHECK(moykit_word_validate(w, &idx) == MOYKIT_ERR_VALIDATION);
  CHECK(idx == 1);
  moykit_poly* p = nullptr;
  CHECK(moykit_bracket(w, 2, MOYKIT_ENGINE_DP, 1, &p) == MOYKIT_ERR_VALIDATION);
  CHECK(p == nullptr);
  moykit_word_free(w);
}

TEST_CASE("missing N is an argument error") {
  moykit_word* w = load("circle2.moy");
  moykit_poly* p = nullptr;
  CHECK(moykit_bracket(w, 0, MOYKIT_ENGINE_DP, 1, &p) == MOYKIT_ERR_ARGUMENT);
  moykit_word_free(w);
}

TEST_CASE("bracket terms") {
  moykit_word* w = load("circle2.moy");
  moykit_poly* p = nullptr;
  REQUIRE(moykit_bracket(w, 3, MOYKIT_ENGINE_DP, 1, &p) == MOYKIT_OK);
  auto ts = terms(p);
  REQUIRE(ts.size() == 3);
  CHECK(ts[0].num == -2);
  CHECK(ts[1].num == 0);
  CHECK(ts[2].num == 2);
  for (const auto& t : ts) {
    CHECK(t.den == 1);
    CHECK(t.coeff == "1");
  }
  int64_t num, den;
  char* c = nullptr;
  CHECK(moykit_poly_term(p, 3, &num, &den, &c) == MOYKIT_ERR_ARGUMENT);

  moykit_poly* e = nullptr;
  REQUIRE(moykit_bracket(w, 3, MOYKIT_ENGINE_ENUMERATE, 2, &e) == MOYKIT_OK);
  CHECK(moykit_poly_equal(p, e));
  moykit_poly_free(e);
  moykit_poly_free(p);
  moykit_word_free(w);
}

TEST_CASE("rt and euler on the trefoil") {
  moykit_word* w = load("trefoil_right.moy");
  moykit_poly *rt = nullptr, *eu = nullptr;
  REQUIRE(moykit_rt(w, 2, 1, &rt) == MOYKIT_OK);
  CHECK(str(rt) == "-q^9 + q^5 + q^3 + q");
  REQUIRE(moykit_euler(w, 2, MOYKIT_GDIM_BRACKET, 1, &eu) == MOYKIT_OK);
  CHECK(moykit_poly_equal(rt, eu));
  int pass = 0, total = 0;
  CHECK(moykit_parity(w, 2, &pass, &total) == MOYKIT_OK);
  CHECK(pass == 1);
  moykit_poly_free(rt);
  moykit_poly_free(eu);
  moykit_word_free(w);
}

TEST_CASE("gdim report") {
  moykit_word* w = load("digon11.moy");
  moykit_gdim_report* r = nullptr;
  REQUIRE(moykit_gdim(w, 2, 0, 0, 1, &r) == MOYKIT_OK);
  moykit_gdim_flags f{};
  REQUIRE(moykit_gdim_report_flags(r, &f) == MOYKIT_OK);
  CHECK(f.pass == 1);
  CHECK(f.agrees == 1);
  CHECK(f.parity_ok == 1);
  CHECK(f.support_in_window == 1);
  const moykit_poly* even = moykit_gdim_report_even(r);
  const moykit_poly* odd = moykit_gdim_report_odd(r);
  const moykit_poly* br = moykit_gdim_report_bracket(r);
  CHECK(moykit_poly_size(br) > 0);
  CHECK((moykit_poly_equal(even, br) || moykit_poly_equal(odd, br)));
  moykit_gdim_report_free(r);
  moykit_word_free(w);
}

TEST_CASE("relation sweep callback") {
  struct Tally {
    size_t calls = 0, fails = 0;
  } tally;
  size_t total = 0, failed = 0;
  auto cb = [](int, const char*, const char*, int pass, const moykit_poly* lhs, const moykit_poly* rhs, void* user) {
    auto* t = static_cast<Tally*>(user);
    ++t->calls;
    if (!pass || !moykit_poly_equal(lhs, rhs)) ++t->fails;
  };
  REQUIRE(moykit_verify_relations(2, 2, MOYKIT_ENGINE_DP, 1, cb, &tally, &total, &failed) == MOYKIT_OK);
  CHECK(total > 0);
  CHECK(tally.calls == total);
  CHECK(failed == 0);
  CHECK(tally.fails == 0);
  size_t again = 0;
  CHECK(moykit_verify_relations(2, 2, MOYKIT_ENGINE_DP, 1, nullptr, nullptr, &again, &failed) == MOYKIT_OK);
  CHECK(again == total);
  CHECK(moykit_verify_relations(0, 2, MOYKIT_ENGINE_DP, 1, nullptr, nullptr, &again, &failed) != MOYKIT_OK);
}

TEST_CASE("state dump sums to the bracket") {
  moykit_word* w = load("digon11.moy");
  struct Acc {
    std::map<int64_t, long> weight;
    bool sizes_ok = true;
  } acc;
  auto cb = [](size_t n_edges, const int* colors, const uint32_t* labels, int64_t e, void* user) {
    auto* a = static_cast<Acc*>(user);
    for (size_t i = 0; i < n_edges; ++i)
      if (__builtin_popcount(labels[i]) != colors[i]) a->sizes_ok = false;
    ++a->weight[e];
  };
  REQUIRE(moykit_states(w, 3, cb, &acc) == MOYKIT_OK);
  CHECK(acc.sizes_ok);
  moykit_poly* p = nullptr;
  REQUIRE(moykit_bracket(w, 3, MOYKIT_ENGINE_DP, 1, &p) == MOYKIT_OK);
  std::map<int64_t, long> expected;
  for (const auto& t : terms(p)) expected[t.num * (2 / t.den)] = std::stol(t.coeff);
  for (auto it = acc.weight.begin(); it != acc.weight.end();) it = it->second ? std::next(it) : acc.weight.erase(it);
  CHECK(acc.weight == expected);
  moykit_poly_free(p);
  moykit_word_free(w);
}

TEST_CASE("random words are deterministic and valid") {
  moykit_word *a = nullptr, *b = nullptr;
  REQUIRE(moykit_word_random(11, 6, 2, 1, 0, &a) == MOYKIT_OK);
  REQUIRE(moykit_word_random(11, 6, 2, 1, 0, &b) == MOYKIT_OK);
  char *sa = nullptr, *sb = nullptr;
  REQUIRE(moykit_word_serialize(a, &sa) == MOYKIT_OK);
  REQUIRE(moykit_word_serialize(b, &sb) == MOYKIT_OK);
  CHECK(std::string(sa) == std::string(sb));
  moykit_string_free(sa);
  moykit_string_free(sb);
  CHECK(moykit_word_validate(a, nullptr) == MOYKIT_OK);
  int closed = 0;
  CHECK(moykit_word_is_closed(a, &closed) == MOYKIT_OK);
  CHECK(closed == 1);
  moykit_word_free(a);
  moykit_word_free(b);
}
