// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rootfan/assoc.hpp"

namespace rootfan {

inline constexpr const char* kSchemaVersion = "1.0";

struct ReportOptions {
  bool oracle = false;
  bool regularity = false;
  bool allow_long = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  std::string type;
  std::size_t rank = 0;
  std::vector<int> support;  // 1-based
  std::vector<int> j_lambda;
  std::int64_t prim_count = 0;
  std::int64_t max_cones = 0;

  struct Normal {
    IntVec direction;
    std::vector<std::string> phi;
    friend bool operator==(const Normal&, const Normal&) = default;
  };
  std::optional<Normal> normal;

  struct Flags {
    bool q_gorenstein_fano = false;
    bool gorenstein_fano = false;
    bool smooth = false;
    bool fano = false;
    friend bool operator==(const Flags&, const Flags&) = default;
  } flags;

  struct Pair {
    std::string type;
    std::vector<int> support;
    std::string lattice_relation;
    bool same_pair = false;
    std::vector<std::vector<std::string>> lattice_basis;  // Z-basis of the lattice in base coordinates
    friend bool operator==(const Pair&, const Pair&) = default;
  } minimal_pair;

  struct Regularity {
    std::int64_t aut_order = 0;
    std::int64_t flag_count = 0;
    bool lattice_regular = false;
    friend bool operator==(const Regularity&, const Regularity&) = default;
  };
  std::optional<Regularity> regularity;

  std::vector<std::string> diagnostics;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Builds sigma, checks its structure, classifies it and computes the
/// minimal pair (and regularity when asked).
ReportDocument make_report(std::shared_ptr<const RootSystem> rs, IndexSet support, const ReportOptions& opts = {});

std::vector<int> one_based(IndexSet s);
IndexSet parse_support(const std::vector<int>& one_based_indices, std::size_t rank);

std::string to_json(const ReportDocument& doc);
std::string to_json(const std::vector<ReportDocument>& docs);
ReportDocument report_from_json(const std::string& text);
std::string to_csv(const std::vector<ReportDocument>& docs);
std::string to_text(const ReportDocument& doc);

using ProgressFn = std::function<void(std::size_t done, std::size_t total, const std::string& label)>;

/// Supports that meet every component, in canonical order (by size, then lexicographic).
std::vector<IndexSet> scan_supports(const RootSystem& rs);

/// One document per admissible support, in canonical order. Full scans of
/// E7 and E8 require allow_long.
std::vector<ReportDocument> scan(std::shared_ptr<const RootSystem> rs, const ReportOptions& opts,
                                 const ProgressFn& progress = {});

struct TableRow {
  std::string system;     // e.g. "B3"
  std::vector<int> support;
  std::string label;      // "(B3, -w2)"
  std::string prim_fundamental;  // "{-w1,-w3}"
  std::string geometry;
  std::string minimal_pair;
  std::string lattice_regular;  // "yes", "no" or "" above the regularity cap
};

TableRow table_row(const ReportDocument& doc);
std::string geometry_label(const ReportDocument::Flags& f);

/// Rows for all Q-Gorenstein-Fano supports of the listed series up to max_rank.
std::vector<TableRow> table(const std::vector<char>& types, int max_rank, const ReportOptions& opts,
                            const ProgressFn& progress = {});
std::string table_text(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);

}  // namespace rootfan
