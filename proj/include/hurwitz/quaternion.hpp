#ifndef HURWITZ_QUATERNION_HPP
#define HURWITZ_QUATERNION_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hurwitz/error.hpp"

namespace hurwitz {

using Int = boost::multiprecision::cpp_int;

/// Element of the Hurwitz order, stored in doubled coordinates:
/// (w, x, y, z) represents (w + x*I + y*J + z*IJ)/2, with
/// w = x = y = z (mod 2) so the element lies in the order.
struct HurwitzElement {
  Int w, x, y, z;

  HurwitzElement() : w(0), x(0), y(0), z(0) {}
  HurwitzElement(Int w_, Int x_, Int y_, Int z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  // Validating factories. from_doubled takes doubled coordinates and
  // rejects mixed parity; from_integral takes ordinary coordinates of an
  // element of Z[1, I, J, IJ].
  static HurwitzElement from_doubled(Int w, Int x, Int y, Int z);
  static HurwitzElement from_integral(Int a, Int b, Int c, Int d);
  static HurwitzElement one() { return {2, 0, 0, 0}; }

  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  bool parity_valid() const;

  HurwitzElement conjugate() const { return {w, -x, -y, -z}; }
  HurwitzElement operator-() const { return {-w, -x, -y, -z}; }
  Int reduced_norm() const { return (w * w + x * x + y * y + z * z) / 4; }

  friend HurwitzElement operator*(const HurwitzElement& a, const HurwitzElement& b);
  friend HurwitzElement operator+(const HurwitzElement& a, const HurwitzElement& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }

  bool operator==(const HurwitzElement&) const = default;
  // Lexicographic on (w, x, y, z).
  std::strong_ordering operator<=>(const HurwitzElement& o) const;

  std::string to_string() const;
};

HurwitzElement multiply(const HurwitzElement& a, const HurwitzElement& b);
HurwitzElement conjugate(const HurwitzElement& a);
Int reduced_norm(const HurwitzElement& a);

/// Class of a nonzero quaternion modulo rational scalars. The stored
/// representative is primitive (doubled coordinates divided by their gcd,
/// doubled again if that leaves mixed parity) and sign-canonical (tuple
/// lexicographically greater than its negation).
class ProjectiveClass {
public:
  ProjectiveClass() : rep_(HurwitzElement::one()) {}

  const HurwitzElement& rep() const { return rep_; }
  Int norm() const { return rep_.reduced_norm(); }
  bool is_identity() const { return rep_ == HurwitzElement::one(); }

  bool operator==(const ProjectiveClass&) const = default;
  std::strong_ordering operator<=>(const ProjectiveClass& o) const {
    return rep_ <=> o.rep_;
  }

  std::string to_string() const { return rep_.to_string(); }

  friend ProjectiveClass canonical_class(const HurwitzElement& a);

private:
  explicit ProjectiveClass(HurwitzElement rep) : rep_(std::move(rep)) {}
  HurwitzElement rep_;
};

/// Canonical projective class of a nonzero element. Throws Errc::zero_element.
ProjectiveClass canonical_class(const HurwitzElement& a);

/// A finite set of odd primes together with m = product of its members.
struct SPrimeSet {
  std::vector<std::int64_t> primes;  // strictly increasing
  Int m;

  static SPrimeSet make(std::vector<std::int64_t> primes);
  bool contains(std::int64_t p) const;
  bool empty() const { return primes.empty(); }
  std::string to_string() const;
};

bool is_prime(std::int64_t n);

/// True iff every prime factor of the norm of the primitive representative
/// lies in S (S-smooth norm).
bool class_in_projective_sunits(const ProjectiveClass& c, const SPrimeSet& s);

}  // namespace hurwitz

#endif
