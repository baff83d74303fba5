#include <doctest.h>

#include "hurwitz/builder.hpp"
#include "hurwitz/fixtures.hpp"

using namespace hurwitz;

TEST_CASE("fixture corpus covers the six tabulated S") {
  const auto& all = fixtures();
  REQUIRE(all.size() == 6);
  CHECK(find_fixture("s3_5") != nullptr);
  CHECK(find_fixture("s3_7") != nullptr);
  CHECK(find_fixture("s3_11") != nullptr);
  CHECK(find_fixture("s5_7") != nullptr);
  CHECK(find_fixture("s3_5_7") != nullptr);
  CHECK(find_fixture("s3_5_11") != nullptr);
  CHECK(find_fixture("s4_2") == nullptr);
  CHECK_THROWS_AS(fixture_presentation("nope"), Error);
}

TEST_CASE("every fixture verifies") {
  for (const auto& f : fixtures()) {
    auto p = fixture_presentation(f.name);
    auto report = verify_presentation(p);
    INFO("fixture ", f.name, ": ", report.summary());
    CHECK(report.pass);
    CHECK(p.generators.size() == f.generators.size());
    CHECK(p.relators.size() == f.relator_exprs.size());
  }
}

TEST_CASE("fixture generator norms match the prime sets") {
  auto p = fixture_presentation("s3_7");
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators[0].witness.norm() == 3);
  CHECK(p.generators[1].witness.norm() == 28 / 4);  // primitive representative of -1-I-J-5IJ
}

TEST_CASE("s3_7 first relator evaluates to a scalar") {
  auto p = fixture_presentation("s3_7");
  auto report = verify_presentation(p);
  REQUIRE(report.pass);
  // 12-letter word over witnesses of norms 3 and 7: the scalar is 3^4 * 7^3.
  CHECK(report.relator_checks[0].scalar == 27783);
}

TEST_CASE("both bracket readings verify where brackets occur") {
  for (const char* name : {"s3_11", "s5_7", "s3_5_7"}) {
    const FixtureEntry* f = find_fixture(name);
    REQUIRE(f != nullptr);
    Presentation p;
    p.s_set = SPrimeSet::make(f->primes);
    std::map<char, int> slots;
    int idx = 0;
    for (const auto& [label, c] : f->generators) {
      Generator g;
      g.id = {GenKind::named, 0, idx};
      g.label = label;
      g.witness = canonical_class(HurwitzElement::from_integral(c[0], c[1], c[2], c[3]));
      slots[label[0]] = idx++;
      p.generators.push_back(g);
    }
    for (const auto& e : f->relator_exprs)
      p.relators.push_back(parse_word_expr(e, slots, CommutatorExpansion::direct_first));
    CHECK(verify_presentation(p).pass);
  }
}

TEST_CASE("word parser") {
  std::map<char, int> slots{{'a', 0}, {'b', 1}};

  auto w = parse_word_expr("a b^-2 a^3", slots);
  REQUIRE(w.size() == 6);
  CHECK(w[0] == Letter{0, 1});
  CHECK(w[1] == Letter{1, -1});
  CHECK(w[2] == Letter{1, -1});
  CHECK(w[3] == Letter{0, 1});

  auto sq = parse_word_expr("(a b)^2", slots);
  REQUIRE(sq.size() == 4);
  CHECK(sq[2] == Letter{0, 1});

  auto negsq = parse_word_expr("(a b)^-1", slots);
  REQUIRE(negsq.size() == 2);
  CHECK(negsq[0] == Letter{1, -1});
  CHECK(negsq[1] == Letter{0, -1});

  auto comm = parse_word_expr("(a, b)", slots, CommutatorExpansion::inverse_first);
  REQUIRE(comm.size() == 4);
  CHECK(comm[0] == Letter{0, -1});
  CHECK(comm[1] == Letter{1, -1});
  CHECK(comm[2] == Letter{0, 1});
  CHECK(comm[3] == Letter{1, 1});

  auto comm2 = parse_word_expr("(a, b)", slots, CommutatorExpansion::direct_first);
  CHECK(comm2[0] == Letter{0, 1});
  CHECK(comm2[3] == Letter{1, -1});

  CHECK_THROWS_AS(parse_word_expr("a q", slots), Error);
  CHECK_THROWS_AS(parse_word_expr("(a b", slots), Error);
  CHECK_THROWS_AS(parse_word_expr("a^", slots), Error);
  CHECK_THROWS_AS(parse_word_expr("a)", slots), Error);
}
