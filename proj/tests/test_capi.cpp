#include <doctest.h>

#include <cstring>
#include <string>

#include "hurwitz.h"

namespace {

struct Handle {
  hrw_presentation* p = nullptr;
  ~Handle() { hrw_presentation_free(p); }
};

}  // namespace

TEST_CASE("C API builds, verifies and exports") {
  const int64_t primes[] = {3, 5};
  Handle h;
  REQUIRE(hrw_present_main(primes, 2, &h.p) == HRW_OK);
  CHECK(hrw_generator_count(h.p) == 21);
  CHECK(hrw_relator_count(h.p) == 265);

  int64_t counts[4] = {0, 0, 0, 0};
  REQUIRE(hrw_relation_type_counts(h.p, counts) == HRW_OK);
  CHECK(counts[0] == 121);
  CHECK(counts[1] == 10);
  CHECK(counts[2] == 24);
  CHECK(counts[3] == 110);

  int pass = 0;
  char* report = nullptr;
  REQUIRE(hrw_verify(h.p, &pass, &report) == HRW_OK);
  CHECK(pass == 1);
  CHECK(std::strstr(report, "PASS") != nullptr);
  hrw_string_free(report);

  char* magma = nullptr;
  REQUIRE(hrw_export(h.p, "magma", &magma) == HRW_OK);
  CHECK(std::strstr(magma, "F<[t]>:=FreeGroup(21);") != nullptr);
  hrw_string_free(magma);

  char* json = nullptr;
  REQUIRE(hrw_export(h.p, "json", &json) == HRW_OK);
  Handle parsed;
  REQUIRE(hrw_parse_json(json, &parsed.p) == HRW_OK);
  CHECK(hrw_generator_count(parsed.p) == 21);
  char* json2 = nullptr;
  REQUIRE(hrw_export(parsed.p, "json", &json2) == HRW_OK);
  CHECK(std::string(json) == json2);
  hrw_string_free(json);
  hrw_string_free(json2);

  CHECK(hrw_export(h.p, "tex", &json) == HRW_ERROR_USAGE);
}

TEST_CASE("C API error codes") {
  Handle h;
  CHECK(hrw_present_main(nullptr, 0, &h.p) == HRW_ERROR_NO_ODD_PRIMES);
  const int64_t with_two[] = {2, 3};
  CHECK(hrw_present_main(with_two, 2, &h.p) == HRW_ERROR_NO_ODD_PRIMES);
  CHECK(std::strlen(hrw_last_error()) > 0);

  const int64_t primes[] = {3, 5};
  CHECK(hrw_present_oracle(primes, 2, 100, &h.p) == HRW_ERROR_SIZE_LIMIT);

  CHECK(hrw_fixture("missing", &h.p) == HRW_ERROR_NOT_FOUND);
  CHECK(hrw_parse_json("{", &h.p) == HRW_ERROR_PARSE);
  CHECK(hrw_present_main(primes, 2, nullptr) == HRW_ERROR_USAGE);
}

TEST_CASE("C API fixtures and congruence") {
  REQUIRE(hrw_fixture_count() == 6);
  CHECK(hrw_fixture_name(6) == nullptr);
  CHECK(std::string(hrw_fixture_name(0)) == "s3_5");

  Handle h;
  REQUIRE(hrw_fixture("s3_5", &h.p) == HRW_OK);
  int all_scalar = 0;
  uint64_t order = 0;
  char* report = nullptr;
  REQUIRE(hrw_congruence_image(h.p, 7, 1, 0, &all_scalar, &order, &report) == HRW_OK);
  CHECK(all_scalar == 1);
  CHECK(order % 168 == 0);
  hrw_string_free(report);

  CHECK(hrw_congruence_image(h.p, 5, 1, 0, &all_scalar, &order, nullptr) == HRW_ERROR_PRIME_IN_S);
  CHECK(hrw_congruence_image(h.p, 7, 1, 10, &all_scalar, &order, nullptr) == HRW_ERROR_CAP_EXCEEDED);
}

TEST_CASE("C API abelianization and simplify agree") {
  const int64_t primes[] = {3};
  Handle main_p, oracle_p, simplified;
  REQUIRE(hrw_present_main(primes, 1, &main_p.p) == HRW_OK);
  REQUIRE(hrw_present_oracle(primes, 1, 0, &oracle_p.p) == HRW_OK);
  REQUIRE(hrw_simplify(main_p.p, 0, 0, 0, &simplified.p) == HRW_OK);
  CHECK(hrw_generator_count(simplified.p) <= hrw_generator_count(main_p.p));

  auto invariants = [](hrw_presentation* p) {
    int64_t* torsion = nullptr;
    size_t len = 0, rank = 0;
    REQUIRE(hrw_abelianization(p, &torsion, &len, &rank) == HRW_OK);
    std::string out = "rank " + std::to_string(rank) + ":";
    for (size_t i = 0; i < len; ++i) out += " " + std::to_string(torsion[i]);
    hrw_int64_array_free(torsion);
    return out;
  };
  auto a = invariants(main_p.p);
  CHECK(a == invariants(oracle_p.p));
  CHECK(a == invariants(simplified.p));
}

TEST_CASE("C API norm enumeration") {
  int64_t* coords = nullptr;
  size_t count = 0;
  REQUIRE(hrw_elements_of_norm(3, &coords, &count) == HRW_OK);
  CHECK(count == 96);
  // Doubled coordinates: each entry has square-sum 12.
  for (size_t i = 0; i < count; ++i) {
    int64_t s = 0;
    for (int j = 0; j < 4; ++j) s += coords[4 * i + j] * coords[4 * i + j];
    CHECK(s == 12);
  }
  hrw_int64_array_free(coords);
  CHECK(hrw_elements_of_norm(0, &coords, &count) == HRW_ERROR_USAGE);
}
