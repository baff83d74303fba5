#include <doctest.h>

#include <random>
#include <set>

#include "hurwitz/abelian.hpp"
#include "hurwitz/builder.hpp"
#include "hurwitz/fixtures.hpp"
#include "hurwitz/splitting.hpp"
#include "hurwitz/transversal.hpp"

using namespace hurwitz;

namespace {

HurwitzElement random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  int parity = coin(rng);
  std::uniform_int_distribution<std::int64_t> pick(-25, 24);
  auto draw = [&] { return 2 * pick(rng) + parity; };
  return {Int(draw()), Int(draw()), Int(draw()), Int(draw())};
}

// All splitting parameters mod p, for the independence check.
std::vector<std::pair<std::int64_t, std::int64_t>> all_splittings_mod_p(std::int64_t p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      if ((a * a + b * b + 1) % p == 0) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("find_splitting small cases") {
  auto s5 = find_splitting(5, 1);
  CHECK(s5.a == 0);
  CHECK(s5.b == 2);

  auto s7 = find_splitting(7, 1);
  CHECK(s7.a == 2);
  CHECK(s7.b == 3);

  auto s25 = find_splitting(5, 2);
  CHECK(s25.modulus == 25);
  CHECK((s25.a * s25.a + s25.b * s25.b + 1) % 25 == 0);

  CHECK_THROWS_AS(find_splitting(2, 1), Error);
  CHECK_THROWS_AS(find_splitting(9, 1), Error);
}

TEST_CASE("Hensel lifts hold at every precision") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 37, 43})
    for (int k : {1, 2, 3}) {
      auto s = find_splitting(p, k);
      __int128 v = static_cast<__int128>(s.a) * s.a + static_cast<__int128>(s.b) * s.b + 1;
      CHECK(static_cast<std::int64_t>(v % s.modulus) == 0);
    }
}

TEST_CASE("rho is a ring homomorphism with det = norm") {
  const HurwitzElement I = HurwitzElement::from_doubled(0, 2, 0, 0);
  const HurwitzElement J = HurwitzElement::from_doubled(0, 0, 2, 0);
  for (std::int64_t p : {5, 7, 11})
    for (int k : {1, 2, 3}) {
      auto s = find_splitting(p, k);
      auto id = ResidueMatrix::identity(s.modulus);
      CHECK(rho(HurwitzElement::one(), s) == id);

      // I^2 = -1 and IJ + JI = 0.
      auto mi = rho(I, s), mj = rho(J, s);
      auto minus_id = ResidueMatrix{s.modulus, {s.modulus - 1, 0, 0, s.modulus - 1}};
      CHECK(mi.mul(mi) == minus_id);
      auto ij = mi.mul(mj), ji = mj.mul(mi);
      for (int e = 0; e < 4; ++e) CHECK((ij.e[static_cast<std::size_t>(e)] + ji.e[static_cast<std::size_t>(e)]) % s.modulus == 0);

      std::mt19937 rng(static_cast<unsigned>(100 * p + k));
      for (int trial = 0; trial < 1000; ++trial) {
        HurwitzElement a = random_element(rng);
        HurwitzElement b = random_element(rng);
        CHECK(rho(a * b, s) == rho(a, s).mul(rho(b, s)));
        CHECK(rho(a, s).det() == (a.reduced_norm() % s.modulus).convert_to<std::int64_t>());
      }
    }
}

TEST_CASE("det of transversal images") {
  auto s = find_splitting(7, 1);
  for (const auto& t : prime_transversal(3).members)
    CHECK(rho(t.rep(), s).det() == 3);
}

TEST_CASE("neighbor labels are right-unit invariant") {
  auto s = find_splitting(5, 1);
  auto t = prime_transversal(5);
  for (const auto& c : t.members)
    for (const auto& u : unit_elements()) {
      auto moved = canonical_class(c.rep() * u);
      CHECK(neighbor_label(moved, s) == neighbor_label(c, s));
    }
}

TEST_CASE("transversal labels cover the projective line") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    auto t = prime_transversal(p);
    for (auto [a, b] : {all_splittings_mod_p(p).front(), all_splittings_mod_p(p).back()}) {
      SplittingData s{p, 1, a, b, p};
      std::set<NeighborLabel> labels;
      for (const auto& c : t.members) labels.insert(neighbor_label(c, s));
      CHECK(labels.size() == static_cast<std::size_t>(p + 1));  // all of P^1(F_p)
    }
  }
}

TEST_CASE("neighbor_label rejects norm mismatches") {
  auto s = find_splitting(5, 1);
  CHECK_THROWS_AS(neighbor_label(canonical_class(HurwitzElement::from_doubled(1, 1, 1, 1)), s),
                  Error);
}

TEST_CASE("congruence image of the main presentation") {
  auto p = build_main(SPrimeSet::make({3, 5}));
  auto report = congruence_image(p, 7, 1);
  CHECK(report.all_scalar);
  CHECK(report.relator_scalar.size() == 265);
  CHECK(report.image_order > 1);

  CHECK_THROWS_AS(congruence_image(p, 5, 1), Error);   // q in S
  CHECK_THROWS_AS(congruence_image(p, 2, 1), Error);   // even
  CHECK_THROWS_AS(congruence_image(p, 7, 1, 10), Error);  // cap
}

TEST_CASE("congruence image at higher precision") {
  auto p = build_main(SPrimeSet::make({3}));
  auto report = congruence_image(p, 5, 2);
  CHECK(report.all_scalar);
}

TEST_CASE("identity-like presentation has image order 1") {
  Presentation p;
  p.s_set = SPrimeSet::make({3});
  Generator g;
  g.id = {GenKind::named, 0, 0};
  g.label = "a";
  g.witness = ProjectiveClass{};
  p.generators.push_back(g);
  p.relators.push_back(Word{{0, 1}});
  auto report = congruence_image(p, 7, 1);
  CHECK(report.all_scalar);
  CHECK(report.image_order == 1);
}

TEST_CASE("fixture image mod 7 contains PSL2(F7)") {
  auto p = fixture_presentation("s3_5");
  auto report = congruence_image(p, 7, 1);
  CHECK(report.all_scalar);
  CHECK(report.image_order % 168 == 0);
}
