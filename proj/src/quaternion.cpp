#include "hurwitz/quaternion.hpp"

#include <algorithm>
#include <sstream>

namespace hurwitz {

namespace {

bool same_parity(const Int& a, const Int& b) { return (a - b) % 2 == 0; }

}  // namespace

bool HurwitzElement::parity_valid() const {
  return same_parity(w, x) && same_parity(w, y) && same_parity(w, z);
}

HurwitzElement HurwitzElement::from_doubled(Int w, Int x, Int y, Int z) {
  HurwitzElement e{std::move(w), std::move(x), std::move(y), std::move(z)};
  if (!e.parity_valid())
    raise(Errc::invalid_argument,
          "doubled coordinates must share parity: " + e.to_string());
  return e;
}

HurwitzElement HurwitzElement::from_integral(Int a, Int b, Int c, Int d) {
  return {2 * a, 2 * b, 2 * c, 2 * d};
}

HurwitzElement operator*(const HurwitzElement& a, const HurwitzElement& b) {
  // Hamilton product in doubled coordinates; the sums below are always even.
  return {(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z) / 2,
          (a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y) / 2,
          (a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x) / 2,
          (a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w) / 2};
}

std::strong_ordering HurwitzElement::operator<=>(const HurwitzElement& o) const {
  if (auto c = w.compare(o.w); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = x.compare(o.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = y.compare(o.y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  auto c = z.compare(o.z);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

HurwitzElement multiply(const HurwitzElement& a, const HurwitzElement& b) { return a * b; }
HurwitzElement conjugate(const HurwitzElement& a) { return a.conjugate(); }
Int reduced_norm(const HurwitzElement& a) { return a.reduced_norm(); }

std::string HurwitzElement::to_string() const {
  // Prints "a + b*I + c*J + d*IJ" when coordinates are integral, otherwise
  // "(w + x*I + y*J + z*IJ)/2" in doubled coordinates.
  bool halves = w % 2 != 0;
  const std::array<const Int*, 4> coef = {&w, &x, &y, &z};
  static const char* names[4] = {"", "I", "J", "IJ"};
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    Int c = halves ? *coef[i] : *coef[i] / 2;
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1 || i == 0) {
      out << a.str();
      if (i != 0) out << "*";
    }
    if (i != 0) out << names[i];
  }
  if (first) return "0";
  if (halves) return "(" + out.str() + ")/2";
  return out.str();
}

ProjectiveClass canonical_class(const HurwitzElement& a) {
  if (a.is_zero()) raise(Errc::zero_element, "zero element has no projective class");
  Int g = gcd(gcd(abs(a.w), abs(a.x)), gcd(abs(a.y), abs(a.z)));
  HurwitzElement r{a.w / g, a.x / g, a.y / g, a.z / g};
  if (!r.parity_valid()) r = {2 * r.w, 2 * r.x, 2 * r.y, 2 * r.z};
  // First nonzero coordinate positive.
  const Int* lead = &r.w;
  if (*lead == 0) lead = &r.x;
  if (*lead == 0) lead = &r.y;
  if (*lead == 0) lead = &r.z;
  if (*lead < 0) r = -r;
  return ProjectiveClass{std::move(r)};
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

SPrimeSet SPrimeSet::make(std::vector<std::int64_t> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  Int m = 1;
  for (std::int64_t p : primes) {
    if (p == 2) raise(Errc::no_odd_primes, "primes must be odd");
    if (!is_prime(p)) raise(Errc::invalid_argument, "not a prime: " + std::to_string(p));
    m *= p;
  }
  return SPrimeSet{std::move(primes), std::move(m)};
}

bool SPrimeSet::contains(std::int64_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

std::string SPrimeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(primes[i]);
  }
  return out + "}";
}

bool class_in_projective_sunits(const ProjectiveClass& c, const SPrimeSet& s) {
  Int n = c.norm();
  for (std::int64_t p : s.primes)
    while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace hurwitz
