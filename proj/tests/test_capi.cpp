#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <string>

#include "rootfan/rootfan.h"

TEST_CASE("system lifecycle") {
  rootfan_system* sys = nullptr;
  REQUIRE(rootfan_system_create("E6", &sys) == ROOTFAN_OK);
  CHECK(rootfan_system_rank(sys) == 6);
  long long order = 0;
  CHECK(rootfan_system_weyl_order(sys, &order) == ROOTFAN_OK);
  CHECK(order == 51840);
  char* name = nullptr;
  CHECK(rootfan_system_name(sys, &name) == ROOTFAN_OK);
  CHECK(std::string(name) == "E6");
  rootfan_string_free(name);
  rootfan_system_destroy(sys);
}

TEST_CASE("error codes and messages") {
  rootfan_system* sys = nullptr;
  CHECK(rootfan_system_create("H3", &sys) == ROOTFAN_E_ARGUMENT);
  CHECK(sys == nullptr);
  CHECK(std::strlen(rootfan_last_error()) > 0);
  CHECK(rootfan_system_create(nullptr, &sys) == ROOTFAN_E_ARGUMENT);
  CHECK(rootfan_system_create_series('A', 0, &sys) == ROOTFAN_E_ARGUMENT);

  REQUIRE(rootfan_system_create_series('A', 3, &sys) == ROOTFAN_OK);
  CHECK(std::strlen(rootfan_last_error()) == 0);
  int bad[] = {4};
  char* out = nullptr;
  CHECK(rootfan_classify(sys, bad, 1, 0, ROOTFAN_FORMAT_JSON, &out) == ROOTFAN_E_ARGUMENT);
  CHECK(out == nullptr);
  rootfan_system_destroy(sys);

  REQUIRE(rootfan_system_create("E7", &sys) == ROOTFAN_OK);
  CHECK(rootfan_scan(sys, 0, ROOTFAN_FORMAT_JSON, nullptr, nullptr, &out, nullptr) == ROOTFAN_E_CAPACITY);
  rootfan_system_destroy(sys);
}

TEST_CASE("fan handle") {
  rootfan_system* sys = nullptr;
  REQUIRE(rootfan_system_create_series('G', 2, &sys) == ROOTFAN_OK);
  int support[] = {2};
  rootfan_fan* fan = nullptr;
  REQUIRE(rootfan_fan_build(sys, support, 1, &fan) == ROOTFAN_OK);
  CHECK(rootfan_fan_max_cones(fan) == 6);
  unsigned flags = 0;
  CHECK(rootfan_fan_classify(fan, ROOTFAN_OPT_ORACLE, &flags) == ROOTFAN_OK);
  CHECK(flags == (ROOTFAN_FLAG_Q_GORENSTEIN_FANO | ROOTFAN_FLAG_GORENSTEIN_FANO | ROOTFAN_FLAG_SMOOTH |
                  ROOTFAN_FLAG_FANO));
  rootfan_fan_destroy(fan);
  rootfan_system_destroy(sys);
}

namespace {

void count_progress(void* user, size_t, size_t, const char*) { ++*static_cast<int*>(user); }

}  // namespace

TEST_CASE("scan with progress") {
  rootfan_system* sys = nullptr;
  REQUIRE(rootfan_system_create_series('A', 3, &sys) == ROOTFAN_OK);
  int calls = 0;
  char* out = nullptr;
  size_t hits = 0;
  REQUIRE(rootfan_scan(sys, 0, ROOTFAN_FORMAT_TEXT, count_progress, &calls, &out, &hits) == ROOTFAN_OK);
  CHECK(calls == 7);
  CHECK(hits == 4);
  CHECK(std::string(out).find("summary: 7 supports, 4 Q-Gorenstein Fano") != std::string::npos);
  rootfan_string_free(out);
  rootfan_system_destroy(sys);
}

TEST_CASE("table through the C API") {
  char* out = nullptr;
  REQUIRE(rootfan_table("G", 2, 0, ROOTFAN_FORMAT_CSV, nullptr, nullptr, &out) == ROOTFAN_OK);
  std::string csv(out);
  rootfan_string_free(out);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(rootfan_table("Z", 2, 0, ROOTFAN_FORMAT_CSV, nullptr, nullptr, &out) == ROOTFAN_E_ARGUMENT);
}
