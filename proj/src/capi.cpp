// SPDX-License-Identifier: Apache-2.0
#include "rootfan/rootfan.h"

#include <cctype>
#include <cstring>
#include <memory>
#include <string>

#include "rootfan/report.hpp"

struct rootfan_system {
  std::shared_ptr<const rootfan::RootSystem> rs;
};

struct rootfan_fan {
  rootfan::GenericFan gf;
};

namespace {

thread_local std::string g_last_error;

rootfan_status fail(rootfan_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
rootfan_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return ROOTFAN_OK;
  } catch (const rootfan::CapacityError& e) {
    return fail(ROOTFAN_E_CAPACITY, e.what());
  } catch (const rootfan::InvariantViolation& e) {
    return fail(ROOTFAN_E_INVARIANT, e.what());
  } catch (const rootfan::ArithmeticOverflow& e) {
    return fail(ROOTFAN_E_CAPACITY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ROOTFAN_E_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ROOTFAN_E_INTERNAL, e.what());
  } catch (...) {
    return fail(ROOTFAN_E_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

rootfan::ReportOptions options_from(unsigned options) {
  rootfan::ReportOptions o;
  o.oracle = options & ROOTFAN_OPT_ORACLE;
  o.regularity = options & ROOTFAN_OPT_REGULARITY;
  o.allow_long = options & ROOTFAN_OPT_ALLOW_LONG;
  return o;
}

rootfan::IndexSet support_from(const rootfan_system* sys, const int* support, size_t count) {
  if (count > 0 && !support) throw rootfan::ArgumentError("null support array");
  std::vector<int> idx(support, support + count);
  return rootfan::parse_support(idx, sys->rs->rank());
}

rootfan::ProgressFn progress_from(rootfan_progress_fn fn, void* user) {
  if (!fn) return {};
  return [fn, user](std::size_t done, std::size_t total, const std::string& label) { fn(user, done, total, label.c_str()); };
}

void require(const void* p, const char* what) {
  if (!p) throw rootfan::ArgumentError(std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* rootfan_version(void) { return "1.0.0"; }

const char* rootfan_last_error(void) { return g_last_error.c_str(); }

void rootfan_string_free(char* s) { std::free(s); }

rootfan_status rootfan_system_create(const char* type_spec, rootfan_system** out) {
  return guarded([&] {
    require(type_spec, "type specification");
    require(out, "output pointer");
    auto rs = std::make_shared<const rootfan::RootSystem>(rootfan::RootSystemSpec::parse(type_spec));
    *out = new rootfan_system{std::move(rs)};
  });
}

rootfan_status rootfan_system_create_series(char type, int rank, rootfan_system** out) {
  return guarded([&] {
    require(out, "output pointer");
    auto rs = std::make_shared<const rootfan::RootSystem>(rootfan::RootSystemSpec::single(type, rank));
    *out = new rootfan_system{std::move(rs)};
  });
}

void rootfan_system_destroy(rootfan_system* sys) { delete sys; }

size_t rootfan_system_rank(const rootfan_system* sys) { return sys ? sys->rs->rank() : 0; }

rootfan_status rootfan_system_name(const rootfan_system* sys, char** out) {
  return guarded([&] {
    require(sys, "system");
    require(out, "output pointer");
    *out = dup_string(sys->rs->name());
  });
}

rootfan_status rootfan_system_weyl_order(const rootfan_system* sys, long long* out) {
  return guarded([&] {
    require(sys, "system");
    require(out, "output pointer");
    *out = rootfan::weyl_order(*sys->rs);
  });
}

rootfan_status rootfan_fan_build(const rootfan_system* sys, const int* support, size_t count, rootfan_fan** out) {
  return guarded([&] {
    require(sys, "system");
    require(out, "output pointer");
    *out = new rootfan_fan{rootfan::build_sigma(sys->rs, support_from(sys, support, count))};
  });
}

void rootfan_fan_destroy(rootfan_fan* fan) { delete fan; }

size_t rootfan_fan_prim_count(const rootfan_fan* fan) { return fan ? fan->gf.prim.size() : 0; }

long long rootfan_fan_max_cones(const rootfan_fan* fan) { return fan ? fan->gf.max_cone_count : 0; }

rootfan_status rootfan_fan_classify(const rootfan_fan* fan, unsigned options, unsigned* flags) {
  return guarded([&] {
    require(fan, "fan");
    require(flags, "output pointer");
    auto r = rootfan::classify(fan->gf, {.oracle = (options & ROOTFAN_OPT_ORACLE) != 0});
    unsigned f = 0;
    if (r.q_gorenstein_fano) f |= ROOTFAN_FLAG_Q_GORENSTEIN_FANO;
    if (r.gorenstein_fano) f |= ROOTFAN_FLAG_GORENSTEIN_FANO;
    if (r.smooth) f |= ROOTFAN_FLAG_SMOOTH;
    if (r.fano) f |= ROOTFAN_FLAG_FANO;
    *flags = f;
  });
}

rootfan_status rootfan_classify(const rootfan_system* sys, const int* support, size_t count, unsigned options,
                                rootfan_format format, char** out) {
  return guarded([&] {
    require(sys, "system");
    require(out, "output pointer");
    auto doc = rootfan::make_report(sys->rs, support_from(sys, support, count), options_from(options));
    switch (format) {
      case ROOTFAN_FORMAT_JSON: *out = dup_string(rootfan::to_json(doc)); break;
      case ROOTFAN_FORMAT_CSV: *out = dup_string(rootfan::to_csv({doc})); break;
      case ROOTFAN_FORMAT_TEXT: *out = dup_string(rootfan::to_text(doc)); break;
      default: throw rootfan::ArgumentError("unknown output format");
    }
  });
}

rootfan_status rootfan_scan(const rootfan_system* sys, unsigned options, rootfan_format format,
                            rootfan_progress_fn progress, void* user, char** out, size_t* hits) {
  return guarded([&] {
    require(sys, "system");
    require(out, "output pointer");
    auto docs = rootfan::scan(sys->rs, options_from(options), progress_from(progress, user));
    size_t q = 0;
    for (const auto& d : docs) q += d.flags.q_gorenstein_fano ? 1 : 0;
    if (hits) *hits = q;
    std::string text;
    switch (format) {
      case ROOTFAN_FORMAT_JSON: text = rootfan::to_json(docs); break;
      case ROOTFAN_FORMAT_CSV: text = rootfan::to_csv(docs); break;
      case ROOTFAN_FORMAT_TEXT:
        for (const auto& d : docs) text += rootfan::to_text(d);
        text += "summary: " + std::to_string(docs.size()) + " supports, " + std::to_string(q) +
                " Q-Gorenstein Fano\n";
        break;
      default: throw rootfan::ArgumentError("unknown output format");
    }
    *out = dup_string(text);
  });
}

rootfan_status rootfan_table(const char* types, int max_rank, unsigned options, rootfan_format format,
                             rootfan_progress_fn progress, void* user, char** out) {
  return guarded([&] {
    require(types, "type list");
    require(out, "output pointer");
    if (max_rank < 1) throw rootfan::ArgumentError("max rank must be positive");
    std::vector<char> letters;
    for (const char* p = types; *p; ++p) {
      if (*p == ',' || std::isspace(static_cast<unsigned char>(*p))) continue;
      letters.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(*p))));
    }
    if (letters.empty()) throw rootfan::ArgumentError("empty type list");
    auto rows = rootfan::table(letters, max_rank, options_from(options), progress_from(progress, user));
    switch (format) {
      case ROOTFAN_FORMAT_JSON: *out = dup_string(rootfan::table_json(rows)); break;
      case ROOTFAN_FORMAT_CSV: *out = dup_string(rootfan::table_csv(rows)); break;
      case ROOTFAN_FORMAT_TEXT: *out = dup_string(rootfan::table_text(rows)); break;
      default: throw rootfan::ArgumentError("unknown output format");
    }
  });
}

}  // extern "C"
