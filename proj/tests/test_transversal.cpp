#include <doctest.h>

#include <map>
#include <set>

#include "hurwitz/transversal.hpp"

using namespace hurwitz;

namespace {

// Independent quadruple-loop count of doubled tuples with w^2+x^2+y^2+z^2
// = 4n and uniform parity; no pruning, no sharing with the enumerator.
long brute_force_count(long n) {
  long m = 4 * n, count = 0;
  long bound = 1;
  while (bound * bound < m) ++bound;
  for (long w = -bound; w <= bound; ++w)
    for (long x = -bound; x <= bound; ++x)
      for (long y = -bound; y <= bound; ++y)
        for (long z = -bound; z <= bound; ++z) {
          if (w * w + x * x + y * y + z * z != m) continue;
          long p = ((w % 2) + 2) % 2;
          if (((x % 2) + 2) % 2 != p || ((y % 2) + 2) % 2 != p || ((z % 2) + 2) % 2 != p) continue;
          ++count;
        }
  return count;
}

long divisor_sum(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

}  // namespace

TEST_CASE("norm enumeration counts") {
  CHECK(elements_of_norm(1).size() == 24);
  CHECK(elements_of_norm(3).size() == 96);    // 24(p+1), p = 3
  CHECK(elements_of_norm(15).size() == 576);  // 24 * sigma(15)
  CHECK_THROWS_AS(elements_of_norm(0), Error);
}

TEST_CASE("norm enumeration matches brute force and the divisor sum") {
  for (long n : {1, 3, 5, 7, 9, 11, 13, 15, 21, 35}) {
    auto got = elements_of_norm(n);
    CHECK(static_cast<long>(got.size()) == brute_force_count(n));
    CHECK(static_cast<long>(got.size()) == 24 * divisor_sum(n));
    for (const auto& e : got) {
      CHECK(e.reduced_norm() == n);
      CHECK(e.parity_valid());
    }
  }
}

TEST_CASE("enumeration is deterministic and sorted") {
  auto a = elements_of_norm(13);
  auto b = elements_of_norm(13);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1] < a[i]);
}

TEST_CASE("unit transversal") {
  const auto& u = unit_transversal();
  REQUIRE(u.members.size() == 12);
  CHECK(u.members[0].is_identity());
  for (const auto& c : u.members) CHECK(c.norm() == 1);

  // Closed under class multiplication.
  for (const auto& a : u.members)
    for (const auto& b : u.members) {
      auto prod = canonical_class(a.rep() * b.rep());
      CHECK(u.index_of(prod).has_value());
    }
}

TEST_CASE("prime transversals pick one class per right unit orbit") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    auto t = prime_transversal(p);
    REQUIRE(static_cast<std::int64_t>(t.members.size()) == p + 1);
    for (const auto& c : t.members) CHECK(c.norm() == p);

    // Conjugates of norm-p elements have norm p as well.
    for (const auto& c : t.members) CHECK(c.rep().conjugate().reduced_norm() == p);

    // Every norm-p element lies in the right orbit of exactly one member.
    const auto& units = unit_elements();
    for (const auto& e : elements_of_norm(p)) {
      int hits = 0;
      for (const auto& s : t.members)
        for (const auto& u : units)
          if (canonical_class(s.rep() * u) == canonical_class(e)) {
            ++hits;
            break;
          }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("orbit partition sizes") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    auto all = elements_of_norm(p);
    CHECK(static_cast<std::int64_t>(all.size()) == 24 * (p + 1));
    const auto& units = unit_elements();
    std::map<HurwitzElement, int> orbit_of;
    int orbits = 0;
    for (const auto& e : all) {
      if (orbit_of.count(e)) continue;
      for (const auto& u : units) orbit_of[e * u] = orbits;
      ++orbits;
    }
    CHECK(orbits == p + 1);
    CHECK(orbit_of.size() == all.size());
  }
}

TEST_CASE("prime transversal is deterministic") {
  auto a = prime_transversal(13);
  auto b = prime_transversal(13);
  REQUIRE(a.members.size() == 14);
  CHECK(a.members == b.members);
}

TEST_CASE("locate_unit_class") {
  CHECK(locate_unit_class(HurwitzElement::one()) == 0);
  CHECK(locate_unit_class(HurwitzElement::from_doubled(6, 0, 0, 0)) == 0);  // scalar 3
  CHECK(!locate_unit_class(HurwitzElement::from_doubled(2, 2, 0, 0)).has_value());  // norm 2
  CHECK(!locate_unit_class(HurwitzElement{}).has_value());

  // t * conj(t) is the scalar Nm(t).
  auto t = prime_transversal(3);
  for (const auto& c : t.members)
    CHECK(locate_unit_class(c.rep() * c.rep().conjugate()) == 0);

  // Every unit element locates at its own class index.
  const auto& u = unit_transversal();
  for (int k = 0; k < 12; ++k)
    CHECK(locate_unit_class(u.members[static_cast<std::size_t>(k)].rep()) == k);
}
