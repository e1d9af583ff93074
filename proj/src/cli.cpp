#include "wordrep/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "wordrep/errors.hpp"
#include "wordrep/json_io.hpp"

namespace wordrep::cli {

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  auto to_int = [&](const std::string& t) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (t.empty() || pos != t.size()) throw UsageError("bad range '" + s + "'");
    return v;
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    std::int64_t v = to_int(s);
    return {v, v};
  }
  std::int64_t lo = to_int(s.substr(0, dots)), hi = to_int(s.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + s + "'");
  return {lo, hi};
}

int exit_code(Verdict v) { return v == Verdict::Unknown ? 2 : 0; }

std::uint64_t default_budget() {
  if (const char* env = std::getenv("WORDREP_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("WORDREP_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultSearchBudget;
}

std::vector<CirculantSpec> sweep_grid(const SweepOptions& opt) {
  if (opt.n_lo < 3) throw UsageError("sweep range must start at n >= 3");
  std::vector<CirculantSpec> grid;
  for (std::int64_t n = opt.n_lo; n <= opt.n_hi; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (opt.a && *opt.a != a) continue;
      for (std::int64_t b = a + 1; b < n; ++b) {
        if (opt.b && *opt.b != b) continue;
        CirculantSpec s = five_regular_spec(n, a, b);
        if (is_connected_circulant(s)) grid.push_back(std::move(s));
      }
    }
  }
  return grid;
}

SweepReport run_sweep(const SweepOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CirculantSpec> grid = sweep_grid(opt);
  std::vector<std::optional<ClassificationResult>> slots(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
      const auto& j = grid[i].jumps();
      slots[i] = classify(j[2], j[0], j[1], opt.budget);
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepReport rep;
  rep.grid = "n=" + std::to_string(opt.n_lo) + ".." + std::to_string(opt.n_hi);
  if (opt.a) rep.grid += " a=" + std::to_string(*opt.a);
  if (opt.b) rep.grid += " b=" + std::to_string(*opt.b);
  for (auto& s : slots) {
    ++rep.by_verdict[to_string(s->verdict)];
    ++rep.by_tag[s->theorem_tag];
    rep.rows.push_back(std::move(*s));
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
  return rep;
}

void write_rows(const SweepReport& r, std::ostream& out) {
  for (const auto& row : r.rows) out << to_json(row, false).dump() << '\n';
}

void write_summary(const SweepReport& r, std::ostream& out) {
  std::size_t verified = 0;
  double cpu_ms = 0;
  for (const auto& row : r.rows) {
    verified += row.verdict == Verdict::Representable && row.verify_ok;
    cpu_ms += row.elapsed_ms;
  }
  out << "grid " << r.grid << ": " << r.rows.size() << " connected instances\n";
  for (const auto& [v, c] : r.by_verdict) out << "  " << v << ": " << c << '\n';
  out << "  representable with verified certificate: " << verified << '\n';
  out << "by theorem_tag:\n";
  for (const auto& [t, c] : r.by_tag) out << "  " << t << ": " << c << '\n';
  out << "wall " << static_cast<long long>(r.wall_ms) << " ms, classify total "
      << static_cast<long long>(cpu_ms) << " ms\n";
}

namespace {

CirculantSpec spec_from(std::int64_t order, const std::vector<std::int64_t>& jumps) {
  return CirculantSpec::canonical(order, jumps);
}

Word word_from(const std::string& text, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    auto words = read_words(in);
    if (words.size() != 1) throw UsageError(file + " must hold exactly one word");
    return words.front();
  }
  return parse_word(text);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word-representability toolkit for circulant graphs"};
  app.require_subcommand(1);

  std::int64_t n = 0, a = 0, b = 0, order = 0;
  std::vector<std::int64_t> jumps;
  std::uint64_t budget = 0;
  bool deterministic = false;

  auto* c = app.add_subcommand("classify", "classify one circulant");
  c->add_option("--n", n, "half-order of C_{2n}(a, b, n)");
  c->add_option("--a", a);
  c->add_option("--b", b);
  c->add_option("--order", order, "order of a general circulant");
  c->add_option("--jumps", jumps)->delimiter(',');
  c->add_option("--budget", budget, "search node budget");
  c->add_flag("--deterministic", deterministic, "accepted; searches are always deterministic");

  std::string range, out_path;
  std::optional<std::int64_t> fa, fb;
  int jobs = 1;
  auto* s = app.add_subcommand("sweep", "classify every connected C_{2n}(a, b, n) in a range");
  s->add_option("--n", range, "n or lo..hi")->required();
  s->add_option("--a", fa, "only this a");
  s->add_option("--b", fb, "only this b");
  s->add_option("--budget", budget);
  s->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  s->add_option("--out", out_path, "JSON lines file (default: standard output)");
  s->add_flag("--deterministic", deterministic);

  std::string word_text, word_file;
  auto* v = app.add_subcommand("verify", "check a word against a circulant");
  v->add_option("--word", word_text, "letters separated by spaces");
  v->add_option("--word-file", word_file);
  v->add_option("--order", order)->required();
  v->add_option("--jumps", jumps)->delimiter(',')->required();

  bool orient = false;
  auto* e = app.add_subcommand("export", "write a circulant (or a searched orientation) as DOT");
  e->add_option("--order", order)->required();
  e->add_option("--jumps", jumps)->delimiter(',')->required();
  e->add_flag("--orientation", orient, "search a semi-transitive orientation and export it");
  e->add_option("--budget", budget);
  e->add_option("--out", out_path);

  int k_max = 3;
  auto* m = app.add_subcommand("minword", "least k with a k-uniform representing word");
  m->add_option("--order", order)->required();
  m->add_option("--jumps", jumps)->delimiter(',')->required();
  m->add_option("--kmax", k_max);
  m->add_option("--budget", budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    std::ostringstream o, er;
    int rc = app.exit(ex, o, er);
    out << o.str();
    err << er.str();
    return rc == 0 ? 0 : 1;
  }

  try {
    if (budget == 0) {
      bool given = false;
      for (auto* sub : {c, s, e, m})
        if (sub->parsed() && sub->count("--budget")) given = true;
      if (!given) budget = default_budget();
    }

    if (c->parsed()) {
      ClassificationResult r = [&] {
        if (c->count("--order")) return classify_circulant(spec_from(order, jumps), budget);
        if (!c->count("--n") || !c->count("--a") || !c->count("--b")) {
          throw UsageError("classify needs --n --a --b or --order --jumps");
        }
        return classify(n, a, b, budget);
      }();
      out << to_json(r).dump(2) << '\n';
      return exit_code(r.verdict);
    }

    if (s->parsed()) {
      auto [lo, hi] = parse_range(range);
      SweepOptions opt{lo, hi, fa, fb, budget, jobs};
      SweepReport rep = run_sweep(opt);
      if (out_path.empty()) {
        write_rows(rep, out);
        write_summary(rep, err);
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        write_rows(rep, f);
        f.close();
        if (!f) throw UsageError("cannot write " + out_path);
        write_summary(rep, out);
      }
      return rep.by_verdict.count(to_string(Verdict::Unknown)) ? exit_code(Verdict::Unknown) : 0;
    }

    if (v->parsed()) {
      if (word_text.empty() == word_file.empty()) {
        throw UsageError("verify needs exactly one of --word, --word-file");
      }
      Word w = word_from(word_text, word_file);
      RepresentsResult res = represents(w, build_circulant(spec_from(order, jumps)));
      Json j{{"represents", res.ok}, {"violations", Json::array()}};
      for (const auto& pv : res.violations) {
        j["violations"].push_back({{"pair", {pv.pair.first, pv.pair.second}},
                                   {"adjacent", pv.expected},
                                   {"alternating", pv.actual}});
      }
      out << j.dump(2) << '\n';
      return res.ok ? 0 : 3;
    }

    if (e->parsed()) {
      CirculantSpec spec = spec_from(order, jumps);
      Graph g = build_circulant(spec);
      std::string dot;
      if (orient) {
        SearchResult r = search_semi_transitive(g, budget);
        if (r.status != SearchStatus::Found) {
          err << "no semi-transitive orientation: " << to_string(r.status) << '\n';
          return r.status == SearchStatus::Undecided ? 2 : 3;
        }
        dot = to_dot(*r.orientation, "G");
      } else {
        dot = to_dot(g, "G");
      }
      if (out_path.empty()) {
        out << dot;
      } else {
        std::ofstream f(out_path);
        if (!(f << dot)) throw UsageError("cannot write " + out_path);
      }
      return 0;
    }

    if (m->parsed()) {
      Graph g = build_circulant(spec_from(order, jumps));
      out << to_json(min_uniform_representation(g, k_max, budget)).dump(2) << '\n';
      return 0;
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace wordrep::cli
