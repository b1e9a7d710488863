// moykit command-line tool. Talks to the library only through moykit.h.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "moykit/moykit.h"

using json = nlohmann::ordered_json;

namespace {

enum class Format { json, csv, pretty };

struct RunConfig {
  int n = 0;  // 0: take it from the file header
  std::string engine = "dp";
  std::optional<int> max_deg;
  Format output = Format::json;
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

// Exit codes.
constexpr int ok = 0;
constexpr int failure = 1;
constexpr int violation = 2;

struct Failed {
  std::string message;
};

void check(moykit_status s) {
  if (s != MOYKIT_OK) throw Failed{moykit_last_error()};
}

struct WordDel {
  void operator()(moykit_word* w) const { moykit_word_free(w); }
};
struct PolyDel {
  void operator()(moykit_poly* p) const { moykit_poly_free(p); }
};
struct ReportDel {
  void operator()(moykit_gdim_report* r) const { moykit_gdim_report_free(r); }
};
using Word = std::unique_ptr<moykit_word, WordDel>;
using Poly = std::unique_ptr<moykit_poly, PolyDel>;

std::string take(char* s) {
  std::string out(s);
  moykit_string_free(s);
  return out;
}

Word load(const std::string& path) {
  moykit_word* w = nullptr;
  check(moykit_word_load(path.c_str(), &w));
  Word word(w);
  check(moykit_word_validate(word.get(), nullptr));
  return word;
}

int resolve_n(const moykit_word* w, const RunConfig& cfg) {
  if (cfg.n > 0) return cfg.n;
  int has = 0, n = 0;
  check(moykit_word_header_n(w, &has, &n));
  if (!has) throw Failed{"--n is required (the input has no N header)"};
  return n;
}

moykit_engine engine_of(const RunConfig& cfg) {
  return cfg.engine == "enumerate" ? MOYKIT_ENGINE_ENUMERATE : MOYKIT_ENGINE_DP;
}

struct Term {
  std::int64_t num;
  std::int64_t den;
  std::string coeff;
};

std::vector<Term> terms(const moykit_poly* p) {
  std::vector<Term> out;
  for (size_t i = 0; i < moykit_poly_size(p); ++i) {
    Term t{};
    char* c = nullptr;
    check(moykit_poly_term(p, i, &t.num, &t.den, &c));
    t.coeff = take(c);
    out.push_back(std::move(t));
  }
  return out;
}

json coeff_json(const std::string& c) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(c, &used);
    if (used == c.size()) return v;
  } catch (const std::out_of_range&) {
  }
  return c;  // too large for a JSON integer
}

json poly_json(const moykit_poly* p) {
  json arr = json::array();
  for (const auto& t : terms(p)) arr.push_back(json::array({t.num, t.den, coeff_json(t.coeff)}));
  return arr;
}

std::string pretty(const moykit_poly* p) {
  char* s = nullptr;
  check(moykit_poly_to_string(p, &s));
  return take(s);
}

void emit_csv_rows(const std::string& part, const moykit_poly* p) {
  for (const auto& t : terms(p)) std::cout << part << ',' << t.num << ',' << t.den << ',' << t.coeff << '\n';
}

// Shared printer for the {"n", "input", "poly", "tau_odd", "report"} schema.
void emit(const RunConfig& cfg, int n, const std::string& input, const moykit_poly* poly, const moykit_poly* odd,
          const json& report) {
  switch (cfg.output) {
    case Format::json: {
      json j;
      j["n"] = n;
      j["input"] = input;
      if (poly) j["poly"] = poly_json(poly);
      if (odd) j["tau_odd"] = poly_json(odd);
      if (!report.is_null()) j["report"] = report;
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::csv:
      std::cout << "part,exp_num,exp_den,coeff\n";
      if (poly) emit_csv_rows("poly", poly);
      if (odd) emit_csv_rows("tau_odd", odd);
      break;
    case Format::pretty:
      if (poly) std::cout << (odd ? "even: " : "") << pretty(poly) << '\n';
      if (odd) std::cout << "odd:  " << pretty(odd) << '\n';
      if (!report.is_null())
        for (const auto& [k, v] : report.items()) std::cout << k << ": " << v.dump() << '\n';
      break;
  }
}

int cmd_bracket(const std::string& file, const RunConfig& cfg) {
  Word w = load(file);
  const int n = resolve_n(w.get(), cfg);
  moykit_poly* p = nullptr;
  check(moykit_bracket(w.get(), n, engine_of(cfg), cfg.threads, &p));
  Poly poly(p);
  emit(cfg, n, file, poly.get(), nullptr, json());
  return ok;
}

int cmd_rt(const std::string& file, const RunConfig& cfg) {
  Word w = load(file);
  const int n = resolve_n(w.get(), cfg);
  moykit_poly* p = nullptr;
  check(moykit_rt(w.get(), n, cfg.threads, &p));
  Poly poly(p);
  emit(cfg, n, file, poly.get(), nullptr, json());
  return ok;
}

int cmd_euler(const std::string& file, const RunConfig& cfg, const std::string& source) {
  Word w = load(file);
  const int n = resolve_n(w.get(), cfg);
  moykit_poly *e = nullptr, *r = nullptr;
  check(moykit_euler(w.get(), n, source == "mf" ? MOYKIT_GDIM_MF : MOYKIT_GDIM_BRACKET, cfg.threads, &e));
  Poly euler(e);
  check(moykit_rt(w.get(), n, cfg.threads, &r));
  Poly rt(r);
  const bool agrees = moykit_poly_equal(euler.get(), rt.get());
  json report;
  report["source"] = source;
  report["rt"] = poly_json(rt.get());
  report["agrees"] = agrees;
  emit(cfg, n, file, euler.get(), nullptr, report);
  return agrees ? ok : violation;
}

int cmd_parity(const std::string& file, const RunConfig& cfg) {
  Word w = load(file);
  const int n = resolve_n(w.get(), cfg);
  int pass = 0, total = 0;
  check(moykit_parity(w.get(), n, &pass, &total));
  json report;
  report["pass"] = pass != 0;
  report["total_color"] = total;
  emit(cfg, n, file, nullptr, nullptr, report);
  return pass ? ok : violation;
}

int cmd_gdim(const std::string& file, const RunConfig& cfg) {
  Word w = load(file);
  const int n = resolve_n(w.get(), cfg);
  moykit_gdim_report* r = nullptr;
  check(moykit_gdim(w.get(), n, cfg.max_deg.has_value(), cfg.max_deg.value_or(0), cfg.threads, &r));
  std::unique_ptr<moykit_gdim_report, ReportDel> rep(r);
  moykit_gdim_flags f{};
  check(moykit_gdim_report_flags(rep.get(), &f));
  json report;
  report["bracket"] = poly_json(moykit_gdim_report_bracket(rep.get()));
  report["d_lo"] = f.d_lo;
  report["d_max"] = f.d_max;
  report["colored_rotation"] = f.colored_rotation;
  report["support_in_window"] = f.support_in_window != 0;
  report["agrees"] = f.agrees != 0;
  report["buffer_vanishes"] = f.buffer_vanishes != 0;
  report["parity_ok"] = f.parity_ok != 0;
  report["pass"] = f.pass != 0;
  report["note"] = "degree window is a heuristic bound; buffer_vanishes is evidence, not proof";
  emit(cfg, n, file, moykit_gdim_report_even(rep.get()), moykit_gdim_report_odd(rep.get()), report);
  return f.pass ? ok : violation;
}

struct RelationSink {
  const RunConfig* cfg;
  json failures = json::array();
};

void on_relation(int relation, const char* params, const char* variant, int pass, const moykit_poly* lhs,
                 const moykit_poly* rhs, void* user) {
  auto* sink = static_cast<RelationSink*>(user);
  if (sink->cfg->output == Format::pretty)
    std::cout << (pass ? "ok   " : "FAIL ") << "(" << relation << ") " << params << (*variant ? " " : "") << variant
              << '\n';
  if (!pass) {
    json f;
    f["relation"] = relation;
    f["params"] = params;
    f["variant"] = variant;
    f["lhs"] = poly_json(lhs);
    f["rhs"] = poly_json(rhs);
    sink->failures.push_back(f);
  }
}

int cmd_verify_relations(const RunConfig& cfg, int max_width) {
  if (cfg.n < 1) throw Failed{"--n is required"};
  RelationSink sink{&cfg};
  size_t total = 0, failed = 0;
  check(moykit_verify_relations(cfg.n, max_width, engine_of(cfg), cfg.threads, on_relation, &sink, &total, &failed));
  json report;
  report["max_width"] = max_width;
  report["instances"] = total;
  report["failed"] = failed;
  report["failures"] = sink.failures;
  if (cfg.output == Format::csv) {
    std::cout << "instances,failed\n" << total << ',' << failed << '\n';
  } else if (cfg.output == Format::pretty) {
    std::cout << total << " instances, " << failed << " failed\n";
  } else {
    emit(cfg, cfg.n, "", nullptr, nullptr, report);
  }
  return failed == 0 ? ok : violation;
}

struct StateSink {
  int n;
};

void on_state(size_t n_edges, const int* colors, const uint32_t* labels, int64_t doubled_exp, void* user) {
  const int N = static_cast<StateSink*>(user)->n;
  json j;
  json edges = json::array();
  for (size_t e = 0; e < n_edges; ++e) {
    json vals = json::array();
    for (int i = 0; i < N; ++i)
      if (labels[e] >> i & 1u) vals.push_back(-N + 1 + 2 * i);
    edges.push_back({{"color", colors[e]}, {"label", vals}});
  }
  j["edges"] = edges;
  if (doubled_exp % 2 == 0)
    j["weight"] = json::array({doubled_exp / 2, 1});
  else
    j["weight"] = json::array({doubled_exp, 2});
  std::cout << j.dump() << '\n';
}

int cmd_states(const std::string& file, const RunConfig& cfg) {
  Word w = load(file);
  StateSink sink{resolve_n(w.get(), cfg)};
  check(moykit_states(w.get(), sink.n, on_state, &sink));
  return ok;
}

// dp against enumerate on seeded random closed words.
int cmd_sweep(const RunConfig& cfg, int count, int max_events, int max_color) {
  if (cfg.n < 1) throw Failed{"--n is required"};
  const std::uint64_t seed = cfg.seed.value_or(1);
  int mismatches = 0;
  for (int i = 0; i < count; ++i) {
    moykit_word* raw = nullptr;
    check(moykit_word_random(seed + static_cast<std::uint64_t>(i), max_events, max_color, 1, 0, &raw));
    Word w(raw);
    moykit_poly *a = nullptr, *b = nullptr;
    check(moykit_bracket(w.get(), cfg.n, MOYKIT_ENGINE_DP, 1, &a));
    Poly pa(a);
    check(moykit_bracket(w.get(), cfg.n, MOYKIT_ENGINE_ENUMERATE, cfg.threads, &b));
    Poly pb(b);
    if (!moykit_poly_equal(pa.get(), pb.get())) {
      ++mismatches;
      char* text = nullptr;
      check(moykit_word_serialize(w.get(), &text));
      std::cerr << "mismatch for seed " << seed + i << ":\n" << take(text);
    }
  }
  json report;
  report["seed"] = seed;
  report["words"] = count;
  report["mismatches"] = mismatches;
  emit(cfg, cfg.n, "", nullptr, nullptr, report);
  return mismatches == 0 ? ok : violation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moykit: colored sl(N) MOY brackets, RT polynomials, matrix factorization homology"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string output = "json";
  app.add_option("--n", cfg.n, "rank N of sl(N)")->check(CLI::PositiveNumber);
  app.add_option("--engine", cfg.engine, "state-sum engine")->check(CLI::IsMember({"dp", "enumerate"}));
  app.add_option("--max-deg", cfg.max_deg, "top q-degree of the homology window");
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores")
      ->envname("MOYKIT_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--output", output, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--seed", cfg.seed, "seed for random sweeps");

  std::string file;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, ".moy input")->required();
    return sub;
  };
  auto* bracket = with_file(app.add_subcommand("bracket", "MOY bracket of a closed graph or link diagram"));
  auto* rt = with_file(app.add_subcommand("rt", "re-normalized RT polynomial of a link diagram"));
  auto* gdim = with_file(app.add_subcommand("gdim", "graded dimension of H(Gamma) checked against the bracket"));
  std::string source = "bracket";
  auto* euler = with_file(app.add_subcommand("euler", "Euler characteristic of the crossing complex"));
  euler->add_option("--source", source, "gdim source for resolutions")->check(CLI::IsMember({"bracket", "mf"}));
  auto* parity = with_file(app.add_subcommand("parity", "Z/2 degree of the complex against the total color"));
  int max_width = 3;
  auto* relations = app.add_subcommand("verify-relations", "check the MOY relations up to a width");
  relations->add_option("--max-width", max_width, "largest edge color")->check(CLI::PositiveNumber);
  auto* states = with_file(app.add_subcommand("states", "dump every state as JSON lines"));
  int count = 200, max_events = 6, max_color = 2;
  auto* sweep = app.add_subcommand("sweep", "compare the two state-sum engines on random words");
  sweep->add_option("--count", count)->check(CLI::PositiveNumber);
  sweep->add_option("--max-events", max_events)->check(CLI::Range(2, 64));
  sweep->add_option("--max-color", max_color)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return failure;
  }
  cfg.output = output == "csv" ? Format::csv : output == "pretty" ? Format::pretty : Format::json;

  try {
    if (*bracket) return cmd_bracket(file, cfg);
    if (*rt) return cmd_rt(file, cfg);
    if (*gdim) return cmd_gdim(file, cfg);
    if (*euler) return cmd_euler(file, cfg, source);
    if (*parity) return cmd_parity(file, cfg);
    if (*relations) return cmd_verify_relations(cfg, max_width);
    if (*states) return cmd_states(file, cfg);
    if (*sweep) return cmd_sweep(cfg, count, max_events, max_color);
  } catch (const Failed& e) {
    std::cerr << "error: " << e.message << '\n';
    return failure;
  }
  return failure;
}
