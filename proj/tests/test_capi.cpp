#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "monocurve/monocurve.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  mc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::strlen(mc_version()) > 0);
  mc_curve* curve = nullptr;
  const int64_t bad[] = {4, 6};
  CHECK(mc_curve_create(bad, 2, 0, &curve) == MC_INVALID_INPUT);
  CHECK(curve == nullptr);
  CHECK(std::string(mc_last_error()).find("gcd") != std::string::npos);
  CHECK(mc_curve_create(nullptr, 2, 0, &curve) == MC_INVALID_INPUT);
  const int64_t ok[] = {5, 9};
  CHECK(mc_curve_create(ok, 2, 0, nullptr) == MC_INVALID_INPUT);
}

TEST_CASE("curve handle") {
  const int64_t seq[] = {11, 13, 15, 17, 19, 21, 23};
  mc_curve* curve = nullptr;
  REQUIRE(mc_curve_create(seq, 7, 0, &curve) == MC_OK);
  int flag = -1;
  CHECK(mc_curve_cm_assumed(curve, &flag) == MC_OK);
  CHECK(flag == 1);
  int64_t index = 0;
  CHECK(mc_curve_group_index(curve, &index) == MC_OK);
  CHECK(index == 23);
  CHECK(mc_curve_contains(curve, 48, 44, &flag) == MC_OK);
  CHECK(flag == 1);
  CHECK(mc_curve_contains(curve, 48, 43, &flag) == MC_OK);
  CHECK(flag == 0);
  CHECK(mc_curve_contains(curve, -1, 0, &flag) == MC_INVALID_INPUT);
  CHECK(mc_curve_in_group(curve, -1, 24, &flag) == MC_OK);
  CHECK(flag == 1);

  std::vector<std::thread> workers;
  std::vector<int> results(4, 0);
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      int in = 0;
      results[static_cast<size_t>(t)] = mc_curve_contains(curve, 48 + 23 * t, 44, &in) == MC_OK && in == 1;
    });
  for (auto& w : workers) w.join();
  CHECK(results == std::vector<int>{1, 1, 1, 1});

  char* json = nullptr;
  REQUIRE(mc_derivations_json(curve, MC_METHOD_BOTH, 0, &json) == MC_OK);
  const std::string text = take(json);
  CHECK(text.find("\"schema\": \"monocurve/1\"") != std::string::npos);
  CHECK(text.find("t^48 u^22 d/du") != std::string::npos);
  mc_curve_destroy(curve);
  mc_curve_destroy(nullptr);
}

TEST_CASE("limits map to MC_LIMIT_EXCEEDED") {
  const int64_t seq[] = {5, 9};
  mc_curve* curve = nullptr;
  REQUIRE(mc_curve_create(seq, 2, 0, &curve) == MC_OK);
  char* json = nullptr;
  CHECK(mc_derivations_json(curve, MC_METHOD_BRUTE, 3, &json) == MC_LIMIT_EXCEEDED);
  CHECK(json == nullptr);
  CHECK(std::string(mc_last_error()).find("cap") != std::string::npos);
  mc_curve_destroy(curve);
}

TEST_CASE("non-CM input") {
  const int64_t seq[] = {1, 3, 4};
  mc_curve* curve = nullptr;
  REQUIRE(mc_curve_create(seq, 3, 0, &curve) == MC_OK);
  int flag = -1;
  CHECK(mc_curve_cm_assumed(curve, &flag) == MC_OK);
  CHECK(flag == 0);
  char* json = nullptr;
  CHECK(mc_derivations_json(curve, MC_METHOD_BRUTE, 0, &json) == MC_INVALID_INPUT);
  int64_t len = 0;
  CHECK(mc_frobenius_power_colength(curve, 2, &len) == MC_INVALID_INPUT);
  mc_curve_destroy(curve);
}

TEST_CASE("Hilbert-Kunz") {
  const int64_t seq[] = {7, 10, 13, 16, 19};
  int64_t num = 0, den = 0;
  CHECK(mc_hk(seq, 5, MC_METHOD_CLOSED, &num, &den) == MC_OK);
  CHECK(num == 223);
  CHECK(den == 19);
  num = den = 0;
  CHECK(mc_hk(seq, 5, MC_METHOD_ETO, &num, &den) == MC_OK);
  CHECK(num == 223);
  CHECK(den == 19);
  const int64_t bad[] = {2, 4};
  CHECK(mc_hk(bad, 2, MC_METHOD_CLOSED, &num, &den) == MC_INVALID_INPUT);

  const int64_t s123[] = {1, 2, 3};
  mc_curve* curve = nullptr;
  REQUIRE(mc_curve_create(s123, 3, 0, &curve) == MC_OK);
  int64_t len = 0;
  CHECK(mc_frobenius_power_colength(curve, 8, &len) == MC_OK);
  CHECK(len == 128);
  CHECK(mc_frobenius_power_colength(curve, 0, &len) == MC_INVALID_INPUT);
  mc_curve_destroy(curve);

  char* json = nullptr;
  REQUIRE(mc_hk_json(s123, 3, MC_METHOD_BOTH, 0, 0, &json) == MC_OK);
  CHECK(take(json).find("\"num\": 2") != std::string::npos);
}

TEST_CASE("pf, apery and validate") {
  const int64_t seq[] = {5, 9};
  char* json = nullptr;
  REQUIRE(mc_pf_json(seq, 2, &json) == MC_OK);
  CHECK(take(json).find("pf_s1") != std::string::npos);
  REQUIRE(mc_apery_json(seq, 2, 5, &json) == MC_OK);
  CHECK(take(json).find("apery_set") != std::string::npos);
  CHECK(mc_apery_json(seq, 2, 0, &json) == MC_INVALID_INPUT);
  REQUIRE(mc_validate_json(10, MC_FAMILY_ALL, &json) == MC_OK);
  CHECK(take(json).find("\"passed\": true") != std::string::npos);
}
