#include "hurwitz/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace hurwitz {

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<HurwitzElement> elements_of_norm(std::int64_t n) {
  if (n < 1) raise(Errc::invalid_argument, "norm must be positive");
  if (n > (std::int64_t{1} << 40)) raise(Errc::overflow, "norm too large to enumerate");
  const std::int64_t m = 4 * n;
  std::vector<HurwitzElement> out;
  const std::int64_t wmax = isqrt(m);
  for (std::int64_t w = -wmax; w <= wmax; ++w) {
    const std::int64_t rx = m - w * w;
    const std::int64_t xmax = isqrt(rx);
    // All coordinates share the parity of w.
    std::int64_t x0 = -xmax;
    if (((x0 - w) & 1) != 0) ++x0;
    for (std::int64_t x = x0; x <= xmax; x += 2) {
      const std::int64_t ry = rx - x * x;
      const std::int64_t ymax = isqrt(ry);
      std::int64_t y0 = -ymax;
      if (((y0 - w) & 1) != 0) ++y0;
      for (std::int64_t y = y0; y <= ymax; y += 2) {
        const std::int64_t zz = ry - y * y;
        const std::int64_t z = isqrt(zz);
        if (z * z != zz) continue;
        if (((z - w) & 1) != 0) continue;
        if (z > 0) out.emplace_back(Int(w), Int(x), Int(y), Int(-z));
        out.emplace_back(Int(w), Int(x), Int(y), Int(z));
      }
    }
  }
  return out;
}

const std::vector<HurwitzElement>& unit_elements() {
  static const std::vector<HurwitzElement> units = elements_of_norm(1);
  return units;
}

const Transversal& unit_transversal() {
  static const Transversal t = [] {
    std::set<ProjectiveClass> classes;
    for (const auto& u : unit_elements()) classes.insert(canonical_class(u));
    Transversal out;
    out.norm = 1;
    ProjectiveClass identity;
    out.members.push_back(identity);
    for (const auto& c : classes)
      if (!c.is_identity()) out.members.push_back(c);
    return out;
  }();
  return t;
}

std::optional<int> Transversal::index_of(const ProjectiveClass& c) const {
  auto it = std::find(members.begin(), members.end(), c);
  if (it == members.end()) return std::nullopt;
  return static_cast<int>(it - members.begin());
}

Transversal prime_transversal(std::int64_t p) {
  if (p == 2 || !is_prime(p))
    raise(Errc::invalid_prime, "transversal requires an odd prime, got " + std::to_string(p));
  const auto all = elements_of_norm(p);
  const auto& units = unit_elements();

  // Partition into right O*-orbits.
  std::map<HurwitzElement, int> orbit_of;
  std::vector<std::vector<HurwitzElement>> orbits;
  for (const auto& e : all) {
    if (orbit_of.count(e)) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<HurwitzElement> orbit;
    orbit.reserve(units.size());
    for (const auto& u : units) {
      HurwitzElement eu = e * u;
      if (!orbit_of.emplace(eu, id).second)
        raise(Errc::match_not_found, "right unit orbit is not free at norm " + std::to_string(p));
      orbit.push_back(std::move(eu));
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  if (orbits.size() != static_cast<std::size_t>(p + 1))
    raise(Errc::match_not_found, "expected p+1 orbits at p = " + std::to_string(p));

  // Representatives come in conjugate pairs (the conjugate of one chosen
  // representative represents the orbit it lands in), so the scalar
  // pairing sigma*tau = p*unit is an involution on the transversal.
  std::vector<ProjectiveClass> rep(orbits.size());
  std::vector<bool> assigned(orbits.size(), false);
  for (std::size_t x = 0; x < orbits.size(); ++x) {
    if (assigned[x]) continue;
    bool done = false;
    for (const auto& cand : orbits[x]) {
      HurwitzElement conj = cand.conjugate();
      int y = orbit_of.at(conj);
      if (y == static_cast<int>(x)) {
        rep[x] = canonical_class(cand);
        assigned[x] = true;
        done = true;
        break;
      }
      if (!assigned[static_cast<std::size_t>(y)]) {
        rep[x] = canonical_class(cand);
        rep[static_cast<std::size_t>(y)] = canonical_class(conj);
        assigned[x] = assigned[static_cast<std::size_t>(y)] = true;
        done = true;
        break;
      }
    }
    if (!done) {  // every conjugate orbit already paired elsewhere
      rep[x] = canonical_class(orbits[x].front());
      assigned[x] = true;
    }
  }

  std::sort(rep.begin(), rep.end());
  Transversal out;
  out.norm = p;
  out.members = std::move(rep);
  return out;
}

std::optional<int> locate_unit_class(const HurwitzElement& a) {
  if (a.is_zero()) return std::nullopt;
  ProjectiveClass c = canonical_class(a);
  if (c.norm() != 1) return std::nullopt;
  return unit_transversal().index_of(c);
}

}  // namespace hurwitz
