#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/construct.hpp"

namespace wordrep::cli {

struct SweepOptions {
  std::int64_t n_lo = 3;
  std::int64_t n_hi = 3;
  std::optional<std::int64_t> a;  // keep only rows with this a
  std::optional<std::int64_t> b;
  std::uint64_t budget = kDefaultSearchBudget;
  int jobs = 1;
};

struct SweepReport {
  std::string grid;
  std::vector<ClassificationResult> rows;  // lexicographic in (n, a, b)
  std::map<std::string, std::size_t> by_verdict;
  std::map<std::string, std::size_t> by_tag;
  double wall_ms = 0;
};

// Connected 5-regular specs (n, a, b) in the grid, lexicographic.
std::vector<CirculantSpec> sweep_grid(const SweepOptions& opt);

SweepReport run_sweep(const SweepOptions& opt);

// One JSON object per line, no timing fields.
void write_rows(const SweepReport& r, std::ostream& out);
void write_summary(const SweepReport& r, std::ostream& out);

// "5" or "3..12". Throws UsageError.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s);

int exit_code(Verdict v);

// Budget from WORDREP_BUDGET, else the library default.
std::uint64_t default_budget();

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wordrep::cli
