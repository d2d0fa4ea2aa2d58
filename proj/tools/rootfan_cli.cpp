// SPDX-License-Identifier: Apache-2.0
// rootfan command-line front end. Talks to the library only through rootfan.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootfan/rootfan.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

struct Common {
  std::string type;
  std::optional<int> rank;
  std::string format = "json";
  bool oracle = false;
  bool regularity = false;
  bool allow_long = false;
  bool quiet = false;
  std::string out;
};

int exit_code(rootfan_status s) {
  switch (s) {
    case ROOTFAN_OK: return 0;
    case ROOTFAN_E_INVARIANT:
    case ROOTFAN_E_INTERNAL: return kExitInvariant;
    default: return kExitUsage;
  }
}

int report_error(rootfan_status s) {
  std::cerr << "rootfan: error: " << rootfan_last_error() << "\n";
  return exit_code(s);
}

rootfan_format format_of(const std::string& f) {
  if (f == "csv") return ROOTFAN_FORMAT_CSV;
  if (f == "text") return ROOTFAN_FORMAT_TEXT;
  return ROOTFAN_FORMAT_JSON;
}

unsigned options_of(const Common& c) {
  unsigned o = 0;
  if (c.oracle) o |= ROOTFAN_OPT_ORACLE;
  if (c.regularity) o |= ROOTFAN_OPT_REGULARITY;
  if (c.allow_long) o |= ROOTFAN_OPT_ALLOW_LONG;
  return o;
}

using SystemPtr = std::unique_ptr<rootfan_system, decltype(&rootfan_system_destroy)>;

rootfan_status open_system(const Common& c, SystemPtr& out) {
  rootfan_system* sys = nullptr;
  rootfan_status s = ROOTFAN_OK;
  if (c.rank) {
    if (c.type.size() != 1) {
      std::cerr << "rootfan: --type must be a single series letter when --rank is given\n";
      return ROOTFAN_E_ARGUMENT;
    }
    s = rootfan_system_create_series(c.type[0], *c.rank, &sys);
  } else {
    s = rootfan_system_create(c.type.c_str(), &sys);
  }
  if (s == ROOTFAN_OK) out.reset(sys);
  return s;
}

int emit(const Common& c, char* text) {
  std::string data(text);
  rootfan_string_free(text);
  if (c.out.empty()) {
    std::cout << data;
    if (!data.empty() && data.back() != '\n') std::cout << "\n";
    std::cout.flush();
    return 0;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) {
    std::cerr << "rootfan: cannot write " << c.out << "\n";
    return kExitUsage;
  }
  f << data;
  if (!data.empty() && data.back() != '\n') f << "\n";
  return f ? 0 : kExitUsage;
}

void progress(void* user, size_t done, size_t total, const char* label) {
  if (*static_cast<bool*>(user)) return;
  std::fprintf(stderr, "[%zu/%zu] %s\n", done, total, label);
}

void add_common(CLI::App* cmd, Common& c, bool needs_system) {
  if (needs_system) {
    cmd->add_option("--type", c.type, "Series letter (A..G), or a product such as B3xG2 without --rank")
        ->required();
    cmd->add_option("--rank", c.rank, "Rank of the series")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_flag("--oracle", c.oracle, "Cross-check against brute-force computations (rank <= 4)");
  cmd->add_flag("--regularity", c.regularity, "Compute aut order, flag count and lattice-regularity");
  cmd->add_flag("--allow-long", c.allow_long, "Permit full E7/E8 scans");
  cmd->add_flag("-q,--quiet", c.quiet, "No progress on stderr");
  cmd->add_option("--out", c.out, "Write output to PATH instead of stdout");
}

// Reduces an integer coefficient list in the fundamental weight basis to its support.
std::optional<std::vector<int>> support_of_weight(const std::vector<long long>& w) {
  std::vector<int> s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0) {
      std::cerr << "rootfan: --weight must be anti-dominant (coefficient " << i + 1 << " is positive)\n";
      return std::nullopt;
    }
    if (w[i] < 0) s.push_back(static_cast<int>(i + 1));
  }
  std::cerr << "rootfan: note: the fan depends only on the support of the weight; using support {";
  for (std::size_t i = 0; i < s.size(); ++i) std::cerr << (i ? "," : "") << s[i];
  std::cerr << "}\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rootfan: Fano classification of generic torus orbit closures in G/P"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rootfan_version()));

  Common c;
  std::vector<int> support;
  std::vector<long long> weight;
  std::string types = "ABCDEFG";
  int max_rank = 6;

  auto* classify = app.add_subcommand("classify", "Classify the fan of one support");
  add_common(classify, c, true);
  auto* sopt = classify->add_option("--support", support, "1-based node indices, e.g. 1,3")->delimiter(',');
  auto* wopt = classify->add_option("--weight", weight, "Anti-dominant weight in fundamental weight coordinates")
                   ->delimiter(',')
                   ->allow_extra_args(false);
  sopt->excludes(wopt);
  wopt->excludes(sopt);

  auto* scan = app.add_subcommand("scan", "Classify every support of a root system");
  add_common(scan, c, true);

  auto* table = app.add_subcommand("table", "Rows for all Q-Gorenstein-Fano supports up to a rank");
  add_common(table, c, false);
  table->add_option("--types", types, "Series letters, e.g. A,B,C")->capture_default_str();
  table->add_option("--max-rank", max_rank, "Largest rank")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  char* text = nullptr;
  rootfan_status s = ROOTFAN_OK;
  if (*table) {
    s = rootfan_table(types.c_str(), max_rank, options_of(c), format_of(c.format), progress,
                      &c.quiet, &text);
    if (s != ROOTFAN_OK) return report_error(s);
    return emit(c, text);
  }

  SystemPtr sys(nullptr, &rootfan_system_destroy);
  if ((s = open_system(c, sys)) != ROOTFAN_OK) return report_error(s);

  if (*classify) {
    if (wopt->count() > 0) {
      if (weight.size() != rootfan_system_rank(sys.get())) {
        std::cerr << "rootfan: --weight needs " << rootfan_system_rank(sys.get()) << " coefficients\n";
        return kExitUsage;
      }
      auto reduced = support_of_weight(weight);
      if (!reduced) return kExitUsage;
      support = *reduced;
    } else if (sopt->count() == 0) {
      std::cerr << "rootfan: classify needs --support or --weight\n";
      return kExitUsage;
    }
    s = rootfan_classify(sys.get(), support.data(), support.size(), options_of(c), format_of(c.format), &text);
    if (s != ROOTFAN_OK) return report_error(s);
    return emit(c, text);
  }

  size_t hits = 0;
  s = rootfan_scan(sys.get(), options_of(c), format_of(c.format), progress, &c.quiet, &text, &hits);
  if (s != ROOTFAN_OK) return report_error(s);
  int rc = emit(c, text);
  if (c.format != "text" && !c.quiet) std::cerr << "summary: " << hits << " Q-Gorenstein Fano\n";
  return rc;
}
