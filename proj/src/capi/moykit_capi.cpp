#include "moykit/moykit.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "core/error.hpp"
#include "core/invariant.hpp"
#include "core/mf.hpp"
#include "core/moy.hpp"
#include "core/qpoly.hpp"
#include "core/random_word.hpp"
#include "core/relations.hpp"
#include "core/statesum.hpp"

struct moykit_word {
  moykit::moy::SliceWord w;
};

struct moykit_poly {
  moykit::qpoly::LaurentPoly p;
  std::vector<std::pair<std::int64_t, mpz_class>> flat;  // terms in ascending order

  explicit moykit_poly(moykit::qpoly::LaurentPoly x) : p(std::move(x)) {
    for (const auto& [e, c] : p.terms()) flat.emplace_back(e, c);
  }
};

struct moykit_gdim_report {
  moykit_poly even;
  moykit_poly odd;
  moykit_poly bracket;
  moykit_gdim_flags flags;
};

namespace {

thread_local std::string last_error;

moykit_status status_of(moykit::ErrorCode c) {
  using moykit::ErrorCode;
  switch (c) {
    case ErrorCode::invalid_argument: return MOYKIT_ERR_ARGUMENT;
    case ErrorCode::parse: return MOYKIT_ERR_PARSE;
    case ErrorCode::validation: return MOYKIT_ERR_VALIDATION;
    case ErrorCode::domain: return MOYKIT_ERR_DOMAIN;
    case ErrorCode::arithmetic: return MOYKIT_ERR_ARITHMETIC;
    case ErrorCode::io: return MOYKIT_ERR_IO;
    case ErrorCode::internal: return MOYKIT_ERR_INTERNAL;
  }
  return MOYKIT_ERR_INTERNAL;
}

template <class F>
moykit_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return MOYKIT_OK;
  } catch (const moykit::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MOYKIT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MOYKIT_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw moykit::Error(moykit::ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// n <= 0 falls back to the word's header.
int resolve_n(const moykit_word* w, int n) {
  if (n > 0) return n;
  if (w->w.n) return *w->w.n;
  throw moykit::Error(moykit::ErrorCode::invalid_argument, "N not given and the input has no N header");
}

moykit::statesum::Engine engine_of(moykit_engine e) {
  switch (e) {
    case MOYKIT_ENGINE_DP: return moykit::statesum::Engine::dp;
    case MOYKIT_ENGINE_ENUMERATE: return moykit::statesum::Engine::enumerate;
  }
  throw moykit::Error(moykit::ErrorCode::invalid_argument, "unknown engine");
}

}  // namespace

extern "C" {

const char* moykit_last_error(void) { return last_error.c_str(); }

const char* moykit_version(void) { return "0.1.0"; }

void moykit_string_free(char* s) { std::free(s); }

moykit_status moykit_word_parse(const char* text, moykit_word** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new moykit_word{moykit::moy::parse(text)};
  });
}

moykit_status moykit_word_load(const char* path, moykit_word** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw moykit::Error(moykit::ErrorCode::io, std::string("cannot open ") + path);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = new moykit_word{moykit::moy::parse(ss.str())};
  });
}

void moykit_word_free(moykit_word* w) { delete w; }

moykit_status moykit_word_random(uint64_t seed, int max_events, int max_color, int with_vertices, int with_crossings,
                                 moykit_word** out) {
  return guarded([&] {
    need(out, "out");
    moykit::moy::RandomWordOptions o;
    o.max_events = max_events;
    o.max_color = max_color;
    o.vertices = with_vertices != 0;
    o.crossings = with_crossings != 0;
    *out = new moykit_word{moykit::moy::random_closed_word(seed, o)};
  });
}

moykit_status moykit_word_serialize(const moykit_word* w, char** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    *out = dup_string(moykit::moy::serialize(w->w));
  });
}

moykit_status moykit_word_header_n(const moykit_word* w, int* has_n, int* n) {
  return guarded([&] {
    need(w, "word");
    need(has_n, "has_n");
    need(n, "n");
    *has_n = w->w.n.has_value();
    *n = w->w.n.value_or(0);
  });
}

moykit_status moykit_word_validate(const moykit_word* w, size_t* event_index) {
  return guarded([&] {
    need(w, "word");
    auto d = moykit::moy::validate(w->w);
    if (d.empty()) return;
    if (event_index) *event_index = d.front().event_index;
    throw moykit::Error(moykit::ErrorCode::validation,
                        "event " + std::to_string(d.front().event_index) + ": " + d.front().reason);
  });
}

moykit_status moykit_word_is_closed(const moykit_word* w, int* closed) {
  return guarded([&] {
    need(w, "word");
    need(closed, "closed");
    moykit::moy::require_valid(w->w);
    *closed = moykit::moy::closed(w->w);
  });
}

moykit_status moykit_word_crossings(const moykit_word* w, size_t* count) {
  return guarded([&] {
    need(w, "word");
    need(count, "count");
    *count = moykit::moy::crossing_count(w->w);
  });
}

moykit_status moykit_colored_rotation(const moykit_word* w, int* out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    *out = moykit::moy::colored_rotation(w->w);
  });
}

moykit_status moykit_total_color(const moykit_word* w, int* out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    *out = moykit::moy::total_color(w->w);
  });
}

void moykit_poly_free(moykit_poly* p) { delete p; }

size_t moykit_poly_size(const moykit_poly* p) { return p ? p->flat.size() : 0; }

moykit_status moykit_poly_term(const moykit_poly* p, size_t i, int64_t* num, int64_t* den, char** coeff) {
  return guarded([&] {
    need(p, "poly");
    if (i >= p->flat.size()) throw moykit::Error(moykit::ErrorCode::invalid_argument, "term index out of range");
    const auto& [e, c] = p->flat[i];
    if (num) *num = (e % 2 == 0) ? e / 2 : e;
    if (den) *den = (e % 2 == 0) ? 1 : 2;
    if (coeff) *coeff = dup_string(c.get_str());
  });
}

moykit_status moykit_poly_to_string(const moykit_poly* p, char** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = dup_string(p->p.to_string());
  });
}

int moykit_poly_equal(const moykit_poly* a, const moykit_poly* b) {
  if (!a || !b) return a == b;
  return a->p == b->p;
}

moykit_status moykit_bracket(const moykit_word* w, int n, moykit_engine engine, int threads, moykit_poly** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    int N = resolve_n(w, n);
    auto eng = engine_of(engine);
    moykit::moy::require_valid(w->w);
    if (moykit::moy::has_crossings(w->w))
      *out = new moykit_poly(moykit::invariant::bracket_link(w->w, N, threads, eng));
    else
      *out = new moykit_poly(moykit::statesum::bracket(w->w, N, eng, threads));
  });
}

moykit_status moykit_rt(const moykit_word* w, int n, int threads, moykit_poly** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    *out = new moykit_poly(moykit::invariant::rt_poly(w->w, resolve_n(w, n), threads));
  });
}

moykit_status moykit_euler(const moykit_word* w, int n, moykit_gdim_source source, int threads, moykit_poly** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    auto src = source == MOYKIT_GDIM_MF ? moykit::invariant::GdimSource::mf : moykit::invariant::GdimSource::bracket;
    if (source != MOYKIT_GDIM_MF && source != MOYKIT_GDIM_BRACKET)
      throw moykit::Error(moykit::ErrorCode::invalid_argument, "unknown gdim source");
    *out = new moykit_poly(moykit::invariant::complex_euler(w->w, resolve_n(w, n), src, threads));
  });
}

moykit_status moykit_parity(const moykit_word* w, int n, int* pass, int* total_color) {
  return guarded([&] {
    need(w, "word");
    need(pass, "pass");
    auto r = moykit::invariant::parity_report(w->w, resolve_n(w, n));
    *pass = r.pass;
    if (total_color) *total_color = r.total_color;
  });
}

moykit_status moykit_gdim(const moykit_word* w, int n, int has_max_deg, int max_deg, int threads,
                          moykit_gdim_report** out) {
  return guarded([&] {
    need(w, "word");
    need(out, "out");
    std::optional<int> d_max;
    if (has_max_deg) d_max = max_deg;
    auto r = moykit::mf::verify_gdim_equals_bracket(w->w, resolve_n(w, n), d_max, threads);
    moykit_gdim_flags f{};
    f.d_lo = r.d_lo;
    f.d_max = r.d_max;
    f.colored_rotation = r.colored_rotation;
    f.support_in_window = r.support_in_window;
    f.agrees = r.agrees;
    f.buffer_vanishes = r.buffer_vanishes;
    f.parity_ok = r.parity_ok;
    f.pass = r.pass;
    *out = new moykit_gdim_report{moykit_poly(r.gdim.even), moykit_poly(r.gdim.odd), moykit_poly(r.bracket), f};
  });
}

void moykit_gdim_report_free(moykit_gdim_report* r) { delete r; }

const moykit_poly* moykit_gdim_report_even(const moykit_gdim_report* r) { return r ? &r->even : nullptr; }
const moykit_poly* moykit_gdim_report_odd(const moykit_gdim_report* r) { return r ? &r->odd : nullptr; }
const moykit_poly* moykit_gdim_report_bracket(const moykit_gdim_report* r) { return r ? &r->bracket : nullptr; }

moykit_status moykit_gdim_report_flags(const moykit_gdim_report* r, moykit_gdim_flags* out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    *out = r->flags;
  });
}

moykit_status moykit_verify_relations(int n, int max_width, moykit_engine engine, int threads, moykit_relation_cb cb,
                                      void* user, size_t* total, size_t* failed) {
  return guarded([&] {
    auto outcomes = moykit::relations::verify(n, max_width, engine_of(engine), threads);
    size_t bad = 0;
    for (const auto& o : outcomes) {
      if (!o.pass) ++bad;
      if (cb) {
        moykit_poly l(o.lhs_value), r(o.rhs_value);
        cb(o.instance.relation, o.instance.params.c_str(), o.instance.variant.c_str(), o.pass, &l, &r, user);
      }
    }
    if (total) *total = outcomes.size();
    if (failed) *failed = bad;
  });
}

moykit_status moykit_states(const moykit_word* w, int n, moykit_state_cb cb, void* user) {
  return guarded([&] {
    need(w, "word");
    if (!cb) throw moykit::Error(moykit::ErrorCode::invalid_argument, "callback is null");
    int N = resolve_n(w, n);
    auto g = moykit::statesum::edge_graph(w->w);
    moykit::statesum::for_each_state(w->w, N, [&](const moykit::statesum::State& s) {
      cb(s.labels.size(), g.color.data(), s.labels.data(), s.doubled_exp, user);
    });
  });
}

}  // extern "C"
