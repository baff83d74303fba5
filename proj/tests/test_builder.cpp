#include <doctest.h>

#include <map>
#include <vector>

#include "hurwitz/builder.hpp"
#include "hurwitz/serialize.hpp"

using namespace hurwitz;

namespace {

std::vector<std::vector<std::int64_t>> subsets_up_to_three(const std::vector<std::int64_t>& pool) {
  std::vector<std::vector<std::int64_t>> out;
  const std::size_t n = pool.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) > 3) continue;
    std::vector<std::int64_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(pool[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("main builder generator and relation counts for {3,5}") {
  auto p = build_main(SPrimeSet::make({3, 5}));
  CHECK(p.generators.size() == 21);  // 11 + 4 + 6
  CHECK(p.provenance.type_counts[0] == 121);
  CHECK(p.provenance.type_counts[1] == 10);
  CHECK(p.provenance.type_counts[2] == 24);
  CHECK(p.provenance.type_counts[3] == 110);
  CHECK(p.relators.size() == 265);

  // Every witness stays inside the S-units.
  auto report = verify_presentation(p);
  CHECK(report.pass);
  CHECK(report.relator_checks.size() == 265);
}

TEST_CASE("main builder counts for {3} and {3,5,7}") {
  auto p3 = build_main(SPrimeSet::make({3}));
  CHECK(p3.generators.size() == 15);
  CHECK(p3.provenance.type_counts[2] == 0);

  auto p357 = build_main(SPrimeSet::make({3, 5, 7}));
  CHECK(p357.generators.size() == 29);  // 11 + 4 + 6 + 8
  // Sum of (p+1)(q+1) over pairs q < p: 4*6 + 4*8 + 6*8.
  CHECK(p357.provenance.type_counts[2] == 104);
}

TEST_CASE("main builder rejects empty S") {
  CHECK_THROWS_AS(build_main(SPrimeSet::make({})), Error);
}

TEST_CASE("builder soundness over all small S") {
  for (const auto& primes : subsets_up_to_three({3, 5, 7, 11, 13})) {
    auto s = SPrimeSet::make(primes);
    auto p = build_main(s);
    auto report = verify_presentation(p);
    INFO("S = ", s.to_string());
    CHECK(report.pass);

    std::int64_t expected2 = 0, expected3 = 0, expected4 = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      expected2 += primes[i] + 1;
      expected4 += 11 * (primes[i] + 1);
      for (std::size_t j = 0; j < i; ++j) expected3 += (primes[i] + 1) * (primes[j] + 1);
    }
    CHECK(p.provenance.type_counts[0] == 121);
    CHECK(p.provenance.type_counts[1] == expected2);
    CHECK(p.provenance.type_counts[2] == expected3);
    CHECK(p.provenance.type_counts[3] == expected4);
  }
}

TEST_CASE("oracle soundness within its envelope") {
  for (const auto& primes :
       std::vector<std::vector<std::int64_t>>{{3}, {5}, {7}, {3, 5}, {3, 7}, {5, 7}}) {
    auto p = build_oracle(SPrimeSet::make(primes));
    INFO("S = ", p.s_set.to_string());
    CHECK(verify_presentation(p).pass);
  }
}

TEST_CASE("oracle generator counts") {
  auto p3 = build_oracle(SPrimeSet::make({3}));
  CHECK(p3.generators.size() == 59);  // 11 + 48

  auto p35 = build_oracle(SPrimeSet::make({3, 5}));
  CHECK(p35.generators.size() == 419);  // 11 + 48 + 72 + 288
}

TEST_CASE("oracle respects the generator cap") {
  CHECK_THROWS_AS(build_oracle(SPrimeSet::make({3, 5}), 100), Error);
}

TEST_CASE("type 2 pairing is an involution on transversal indices") {
  for (std::int64_t p : {3, 5, 7}) {
    auto t = prime_transversal(p);
    std::vector<int> partner(t.members.size(), -1);
    for (std::size_t i = 0; i < t.members.size(); ++i) {
      int found = 0;
      for (std::size_t j = 0; j < t.members.size(); ++j) {
        auto prod = canonical_class(t.members[i].rep() * t.members[j].rep());
        if (prod.norm() == 1) {
          partner[i] = static_cast<int>(j);
          ++found;
        }
      }
      CHECK(found == 1);
    }
    for (std::size_t i = 0; i < partner.size(); ++i)
      CHECK(partner[static_cast<std::size_t>(partner[i])] == static_cast<int>(i));
  }
}

TEST_CASE("type 4 decomposition is unique on S = {3,5}") {
  const auto& units = unit_transversal();
  for (std::int64_t p : {3, 5}) {
    auto t = prime_transversal(p);
    for (int d = 1; d < 12; ++d) {
      for (const auto& sigma : t.members) {
        auto target = canonical_class(units.members[static_cast<std::size_t>(d)].rep() * sigma.rep());
        int matches = 0;
        for (const auto& tau : t.members)
          for (const auto& mu : units.members)
            if (canonical_class(tau.rep() * mu.rep()) == target) ++matches;
        CHECK(matches == 1);
      }
    }
  }
}

TEST_CASE("type 3 decomposition is unique on S = {3,5}") {
  const auto& units = unit_transversal();
  auto t3 = prime_transversal(3);
  auto t5 = prime_transversal(5);
  std::map<ProjectiveClass, int> hits;
  for (const auto& nu : units.members)
    for (const auto& alpha : t3.members)
      for (const auto& beta : t5.members)
        ++hits[canonical_class(nu.rep() * alpha.rep() * beta.rep())];
  CHECK(hits.size() == 12u * 4u * 6u);  // collision-free, hence unique matches
  for (const auto& sigma : t5.members)
    for (const auto& tau : t3.members)
      CHECK(hits.count(canonical_class(sigma.rep() * tau.rep())) == 1);
}

TEST_CASE("builders are deterministic") {
  auto s = SPrimeSet::make({3, 5});
  CHECK(export_presentation(build_main(s), ExportFormat::json) ==
        export_presentation(build_main(s), ExportFormat::json));
  CHECK(export_presentation(build_oracle(s), ExportFormat::json) ==
        export_presentation(build_oracle(s), ExportFormat::json));
}

TEST_CASE("verify reports scalars per relator") {
  auto p = build_main(SPrimeSet::make({3}));
  auto report = verify_presentation(p);
  REQUIRE(report.pass);
  for (const auto& check : report.relator_checks) {
    CHECK(check.is_scalar);
    CHECK(check.scalar != 0);
  }
}

TEST_CASE("verify flags a broken relator instead of throwing") {
  auto p = build_main(SPrimeSet::make({3}));
  p.relators.push_back(Word{{0, 1}});  // a bare unit generator is not a relation
  auto report = verify_presentation(p);
  CHECK(!report.pass);
  REQUIRE(report.failed_relators.size() == 1);
  CHECK(report.failed_relators[0] == static_cast<int>(p.relators.size()) - 1);
  CHECK(report.summary().find("FAIL") != std::string::npos);
}

TEST_CASE("single-generator toy presentation verifies") {
  Presentation p;
  p.s_set = SPrimeSet::make({3});
  Generator g;
  g.id = {GenKind::named, 0, 0};
  g.label = "a";
  g.witness = canonical_class(HurwitzElement::from_doubled(1, -1, 1, 3));
  p.generators.push_back(g);
  p.relators.push_back(Word{{0, 1}, {0, -1}});
  CHECK(verify_presentation(p).pass);
}
