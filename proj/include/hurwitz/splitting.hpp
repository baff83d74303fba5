#ifndef HURWITZ_SPLITTING_HPP
#define HURWITZ_SPLITTING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/presentation.hpp"
#include "hurwitz/quaternion.hpp"

namespace hurwitz {

/// Parameters (a, b) with a^2 + b^2 + 1 = 0 (mod p^k), realizing the
/// quaternion algebra at p as 2x2 matrices to precision k via
/// I -> [[a, b], [b, -a]] and J -> [[0, 1], [-1, 0]].
struct SplittingData {
  std::int64_t p = 0;
  int k = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t modulus = 0;  // p^k
};

/// Exhaustive search mod p followed by Hensel lifting. Throws
/// Errc::invalid_prime for p = 2 (the algebra ramifies there) and
/// Errc::overflow when p^k does not fit the working precision.
SplittingData find_splitting(std::int64_t p, int k);

/// 2x2 matrix over Z/m, row-major entries reduced to [0, m).
struct ResidueMatrix {
  std::int64_t m = 0;
  std::array<std::int64_t, 4> e{0, 0, 0, 0};

  static ResidueMatrix identity(std::int64_t m);
  ResidueMatrix mul(const ResidueMatrix& o) const;
  ResidueMatrix inverse() const;  // requires det to be a unit mod m
  ResidueMatrix reduced(std::int64_t q) const;
  std::int64_t det() const;
  bool is_scalar() const;
  bool operator==(const ResidueMatrix&) const = default;
  std::string to_string() const;
};

/// Image of an element under the reduction map to matrices mod p^k.
/// Requires p odd (the half in doubled coordinates must invert).
ResidueMatrix rho(const HurwitzElement& x, const SplittingData& s);

/// Point of the projective line over F_p, normalized to (1 : t) or (0 : 1).
struct NeighborLabel {
  std::int64_t u = 0;
  std::int64_t v = 0;
  bool operator==(const NeighborLabel&) const = default;
  auto operator<=>(const NeighborLabel&) const = default;
  std::string to_string() const;
};

/// The tree neighbor a norm-p class sends the base vertex to: the column
/// space of its matrix image mod p. Throws Errc::norm_mismatch unless the
/// class has norm exactly s.p.
NeighborLabel neighbor_label(const ProjectiveClass& c, const SplittingData& s);

struct CongruenceReport {
  std::int64_t q = 0;
  int r = 1;
  std::vector<ResidueMatrix> generator_images;  // mod q^r
  std::vector<bool> relator_scalar;
  bool all_scalar = false;
  std::uint64_t image_order = 0;  // projectivized closure order mod q
  std::string summary() const;
};

/// Maps generator witnesses through rho at precision q^r (q an odd prime
/// outside S), checks every relator lands on a scalar matrix, and measures
/// the projectivized image closure mod q. Throws Errc::prime_in_s and
/// Errc::cap_exceeded.
CongruenceReport congruence_image(const Presentation& p, std::int64_t q, int r,
                                  std::uint64_t cap = 1000000);

}  // namespace hurwitz

#endif
