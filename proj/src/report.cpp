// SPDX-License-Identifier: Apache-2.0
#include "rootfan/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace rootfan {

using ojson = nlohmann::ordered_json;

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

std::string join_strings(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool is_long_system(const RootSystem& rs) {
  for (const auto& c : rs.spec().components)
    if (c.type == 'E' && c.rank >= 7) return true;
  return false;
}

ojson document_json(const ReportDocument& d) {
  ojson j;
  j["schema_version"] = d.schema_version;
  j["input"] = {{"type", d.type}, {"rank", d.rank}, {"support", d.support}};
  j["j_lambda"] = d.j_lambda;
  j["prim_count"] = d.prim_count;
  j["max_cones"] = d.max_cones;
  if (d.normal)
    j["normal"] = {{"direction", d.normal->direction}, {"phi", d.normal->phi}};
  else
    j["normal"] = nullptr;
  j["flags"] = {{"q_gorenstein_fano", d.flags.q_gorenstein_fano},
                {"gorenstein_fano", d.flags.gorenstein_fano},
                {"smooth", d.flags.smooth},
                {"fano", d.flags.fano}};
  j["minimal_pair"] = {{"type", d.minimal_pair.type},
                       {"support", d.minimal_pair.support},
                       {"lattice_relation", d.minimal_pair.lattice_relation},
                       {"same_pair", d.minimal_pair.same_pair},
                       {"lattice_basis", d.minimal_pair.lattice_basis}};
  if (d.regularity)
    j["regularity"] = {{"aut_order", d.regularity->aut_order},
                       {"flag_count", d.regularity->flag_count},
                       {"lattice_regular", d.regularity->lattice_regular}};
  else
    j["regularity"] = nullptr;
  j["diagnostics"] = d.diagnostics;
  return j;
}

ReportDocument document_from(const ojson& j) {
  ReportDocument d;
  d.schema_version = j.at("schema_version").get<std::string>();
  d.type = j.at("input").at("type").get<std::string>();
  d.rank = j.at("input").at("rank").get<std::size_t>();
  d.support = j.at("input").at("support").get<std::vector<int>>();
  d.j_lambda = j.at("j_lambda").get<std::vector<int>>();
  d.prim_count = j.at("prim_count").get<std::int64_t>();
  d.max_cones = j.at("max_cones").get<std::int64_t>();
  if (!j.at("normal").is_null())
    d.normal = ReportDocument::Normal{j["normal"].at("direction").get<IntVec>(),
                                      j["normal"].at("phi").get<std::vector<std::string>>()};
  const auto& f = j.at("flags");
  d.flags = {f.at("q_gorenstein_fano").get<bool>(), f.at("gorenstein_fano").get<bool>(), f.at("smooth").get<bool>(),
             f.at("fano").get<bool>()};
  const auto& m = j.at("minimal_pair");
  d.minimal_pair.type = m.at("type").get<std::string>();
  d.minimal_pair.support = m.at("support").get<std::vector<int>>();
  d.minimal_pair.lattice_relation = m.at("lattice_relation").get<std::string>();
  d.minimal_pair.same_pair = m.at("same_pair").get<bool>();
  d.minimal_pair.lattice_basis = m.at("lattice_basis").get<std::vector<std::vector<std::string>>>();
  if (!j.at("regularity").is_null()) {
    const auto& r = j["regularity"];
    d.regularity = ReportDocument::Regularity{r.at("aut_order").get<std::int64_t>(), r.at("flag_count").get<std::int64_t>(),
                                              r.at("lattice_regular").get<bool>()};
  }
  d.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return d;
}

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned threads, F&& fn, const ProgressFn& progress,
                            const std::function<std::string(std::size_t)>& label) {
  std::vector<T> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      {
        std::lock_guard lock(mu);
        if (error) return;
      }
      try {
        out[k] = fn(k);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        return;
      }
      std::lock_guard lock(mu);
      ++done;
      if (progress) progress(done, count, label(k));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

std::vector<int> one_based(IndexSet s) {
  std::vector<int> out;
  for (auto i : s.indices()) out.push_back(static_cast<int>(i) + 1);
  return out;
}

IndexSet parse_support(const std::vector<int>& idx, std::size_t rank) {
  IndexSet s;
  for (int i : idx) {
    if (i < 1 || static_cast<std::size_t>(i) > rank)
      throw ArgumentError("support index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    s.insert(static_cast<std::size_t>(i - 1));
  }
  if (s.empty()) throw ArgumentError("support must be non-empty");
  return s;
}

ReportDocument make_report(std::shared_ptr<const RootSystem> rs, IndexSet support, const ReportOptions& opts) {
  if (opts.regularity && rs->rank() > kRegularityMaxRank)
    throw CapacityError("regularity is computed up to rank " + std::to_string(kRegularityMaxRank));
  auto gf = build_sigma(rs, support);
  verify_structure(gf);
  auto cr = classify(gf, {.oracle = opts.oracle});
  auto mp = minimal_pair(gf);

  ReportDocument d;
  d.type = rs->name();
  d.rank = rs->rank();
  d.support = one_based(support);
  d.j_lambda = one_based(cr.j_lambda);
  d.prim_count = static_cast<std::int64_t>(cr.prim_count);
  d.max_cones = cr.max_cone_count;
  if (cr.normal) {
    ReportDocument::Normal nd;
    nd.direction = cr.normal->direction;
    for (const auto& q : cr.normal->phi) nd.phi.push_back(q.str());
    d.normal = std::move(nd);
  }
  d.flags = {cr.q_gorenstein_fano, cr.gorenstein_fano, cr.smooth, cr.fano};
  d.minimal_pair.type = mp.type_string();
  d.minimal_pair.support = one_based(mp.support);
  d.minimal_pair.lattice_relation = to_string(mp.lattice.relation);
  d.minimal_pair.same_pair = mp.same_pair;
  for (const auto& row : mp.lattice.basis_in_base) {
    std::vector<std::string> r;
    for (const auto& q : row) r.push_back(q.str());
    d.minimal_pair.lattice_basis.push_back(std::move(r));
  }
  if (opts.regularity) {
    auto reg = regularity(gf, mp);
    d.regularity = ReportDocument::Regularity{reg.aut_order, reg.flag_count, reg.lattice_regular};
  }
  d.diagnostics = cr.diagnostics;
  if (cr.hull != HullKind::Hyperplane) {
    const char* why = cr.hull == HullKind::FullDim         ? "Prim spans the whole space affinely"
                      : cr.hull == HullKind::ThroughOrigin ? "affine hull of Prim passes through the origin"
                                                           : "affine hull of Prim has codimension above one";
    d.diagnostics.push_back(std::string("normal: absent, ") + why);
  }
  d.diagnostics.insert(d.diagnostics.end(), mp.diagnostics.begin(), mp.diagnostics.end());
  return d;
}

std::string to_json(const ReportDocument& doc) { return document_json(doc).dump(2) + "\n"; }

std::string to_json(const std::vector<ReportDocument>& docs) {
  ojson arr = ojson::array();
  for (const auto& d : docs) arr.push_back(document_json(d));
  return arr.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& text) {
  try {
    return document_from(ojson::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed report document: ") + e.what());
  }
}

std::string to_csv(const std::vector<ReportDocument>& docs) {
  std::ostringstream os;
  os << "type,rank,support,j_lambda,prim_count,max_cones,q_gorenstein_fano,gorenstein_fano,smooth,fano,"
        "normal_direction,phi,minimal_pair_type,minimal_pair_support,lattice_relation,same_pair,"
        "aut_order,flag_count,lattice_regular,diagnostics\n";
  for (const auto& d : docs) {
    std::vector<std::string> dir, phi;
    if (d.normal) {
      for (auto c : d.normal->direction) dir.push_back(std::to_string(c));
      phi = d.normal->phi;
    }
    os << d.type << ',' << d.rank << ',' << csv_quote(join_ints(d.support, ";")) << ','
       << csv_quote(join_ints(d.j_lambda, ";")) << ',' << d.prim_count << ',' << d.max_cones << ','
       << d.flags.q_gorenstein_fano << ',' << d.flags.gorenstein_fano << ',' << d.flags.smooth << ',' << d.flags.fano
       << ',' << csv_quote(join_strings(dir, ";")) << ',' << csv_quote(join_strings(phi, ";")) << ','
       << d.minimal_pair.type << ',' << csv_quote(join_ints(d.minimal_pair.support, ";")) << ','
       << d.minimal_pair.lattice_relation << ',' << d.minimal_pair.same_pair << ',';
    if (d.regularity)
      os << d.regularity->aut_order << ',' << d.regularity->flag_count << ',' << d.regularity->lattice_regular;
    else
      os << ",,";
    os << ',' << csv_quote(join_strings(d.diagnostics, " | ")) << '\n';
  }
  return os.str();
}

std::string to_text(const ReportDocument& d) {
  std::ostringstream os;
  os << d.type << " support {" << join_ints(d.support, ",") << "}\n";
  os << "  J_lambda        {" << join_ints(d.j_lambda, ",") << "}\n";
  os << "  prim / cones    " << d.prim_count << " / " << d.max_cones << "\n";
  if (d.normal) {
    std::vector<std::string> dir;
    for (auto c : d.normal->direction) dir.push_back(std::to_string(c));
    os << "  normal          (" << join_strings(dir, ",") << ")  phi (" << join_strings(d.normal->phi, ",") << ")\n";
  } else {
    os << "  normal          none\n";
  }
  os << "  geometry        " << (d.flags.q_gorenstein_fano ? geometry_label(d.flags) : "not Q-Gorenstein Fano") << "\n";
  os << "  minimal pair    " << (d.minimal_pair.same_pair ? "same pair" : d.minimal_pair.type) << " {"
     << join_ints(d.minimal_pair.support, ",") << "}, " << d.minimal_pair.lattice_relation << "\n";
  if (d.regularity)
    os << "  regularity      aut " << d.regularity->aut_order << ", flags " << d.regularity->flag_count << ", "
       << (d.regularity->lattice_regular ? "lattice-regular" : "not lattice-regular") << "\n";
  for (const auto& s : d.diagnostics) os << "  note: " << s << "\n";
  return os.str();
}

std::vector<IndexSet> scan_supports(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  std::vector<IndexSet> out;
  for (std::uint32_t b = 1; b < (1u << n); ++b) {
    IndexSet s(b);
    bool ok = true;
    for (std::size_t c = 0; c < rs.spec().components.size() && ok; ++c) ok = !(s & rs.component_nodes(c)).empty();
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

std::vector<ReportDocument> scan(std::shared_ptr<const RootSystem> rs, const ReportOptions& opts,
                                 const ProgressFn& progress) {
  if (is_long_system(*rs) && !opts.allow_long)
    throw CapacityError("full scan of " + rs->name() + " is long-running; pass --allow-long");
  const auto supports = scan_supports(*rs);
  return parallel_map<ReportDocument>(
      supports.size(), opts.threads, [&](std::size_t k) { return make_report(rs, supports[k], opts); }, progress,
      [&](std::size_t k) { return rs->name() + " " + supports[k].str(); });
}

std::string geometry_label(const ReportDocument::Flags& f) {
  if (f.fano) return "Smooth, Fano";
  if (f.gorenstein_fano) return "Gorenstein Fano";
  if (f.q_gorenstein_fano) return "Q-Gorenstein Fano";
  return "";
}

TableRow table_row(const ReportDocument& d) {
  TableRow r;
  r.system = d.type;
  r.support = d.support;
  r.label = "(" + d.type + ", ";
  for (int i : d.support) r.label += "-w" + std::to_string(i);
  r.label += ")";
  r.prim_fundamental = "{";
  for (std::size_t k = 0; k < d.j_lambda.size(); ++k) r.prim_fundamental += (k ? ",-w" : "-w") + std::to_string(d.j_lambda[k]);
  r.prim_fundamental += "}";
  r.geometry = geometry_label(d.flags);
  if (d.minimal_pair.same_pair)
    r.minimal_pair = "same pair, " + d.minimal_pair.lattice_relation;
  else
    r.minimal_pair = "(" + d.minimal_pair.type + ", {" + join_ints(d.minimal_pair.support, ",") + "}), " +
                     d.minimal_pair.lattice_relation;
  if (d.regularity) r.lattice_regular = d.regularity->lattice_regular ? "yes" : "no";
  return r;
}

std::vector<TableRow> table(const std::vector<char>& types, int max_rank, const ReportOptions& opts,
                            const ProgressFn& progress) {
  std::vector<std::pair<char, int>> systems;
  for (char t : types) {
    int lo = 1, hi = max_rank;
    switch (t) {
      case 'A': lo = 1; break;
      case 'B':
      case 'C': lo = 2; break;
      case 'D': lo = 4; break;
      case 'E': lo = 6; hi = std::min(max_rank, 8); break;
      case 'F': lo = 4; hi = std::min(max_rank, 4); break;
      case 'G': lo = 2; hi = std::min(max_rank, 2); break;
      default: throw ArgumentError(std::string("unknown type '") + t + "'");
    }
    for (int r = lo; r <= hi; ++r) systems.emplace_back(t, r);
  }
  std::sort(systems.begin(), systems.end());
  systems.erase(std::unique(systems.begin(), systems.end()), systems.end());

  std::vector<TableRow> rows;
  for (auto [t, r] : systems) {
    auto rs = std::make_shared<const RootSystem>(RootSystemSpec::single(t, r));
    ReportOptions o = opts;
    o.regularity = rs->rank() <= kRegularityMaxRank;
    auto docs = scan(rs, o, progress);
    for (const auto& d : docs)
      if (d.flags.q_gorenstein_fano) rows.push_back(table_row(d));
  }
  return rows;
}

std::string table_text(const std::vector<TableRow>& rows) {
  const std::vector<std::string> head{"(type, lambda)", "Prim & {-w_i}", "Geometry", "minimal pair", "lattice-regular"};
  std::vector<std::vector<std::string>> cells{head};
  for (const auto& r : rows) cells.push_back({r.label, r.prim_fundamental, r.geometry, r.minimal_pair, r.lattice_regular});
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    for (std::size_t c = 0; c < cells[k].size(); ++c) {
      os << (c ? " | " : "") << cells[k][c];
      if (c + 1 < cells[k].size()) os << std::string(width[c] - cells[k][c].size(), ' ');
    }
    os << "\n";
    if (k == 0) {
      for (std::size_t c = 0; c < width.size(); ++c) os << (c ? "-+-" : "") << std::string(width[c], '-');
      os << "\n";
    }
  }
  return os.str();
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "type_lambda,prim_fundamental,geometry,minimal_pair,lattice_regular\n";
  for (const auto& r : rows)
    os << csv_quote(r.label) << ',' << csv_quote(r.prim_fundamental) << ',' << csv_quote(r.geometry) << ','
       << csv_quote(r.minimal_pair) << ',' << r.lattice_regular << '\n';
  return os.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
  ojson arr = ojson::array();
  for (const auto& r : rows)
    arr.push_back({{"system", r.system},
                   {"support", r.support},
                   {"label", r.label},
                   {"prim_fundamental", r.prim_fundamental},
                   {"geometry", r.geometry},
                   {"minimal_pair", r.minimal_pair},
                   {"lattice_regular", r.lattice_regular}});
  return arr.dump(2) + "\n";
}

}  // namespace rootfan
