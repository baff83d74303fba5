#ifndef HURWITZ_ABELIAN_HPP
#define HURWITZ_ABELIAN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/presentation.hpp"
#include "hurwitz/splitting.hpp"

namespace hurwitz {

/// Invariant factors d1 | d2 | ... (each > 1) plus free rank of an
/// abelian group.
struct AbelianInvariants {
  std::vector<Int> torsion;
  int free_rank = 0;

  bool operator==(const AbelianInvariants&) const = default;
  std::string to_string() const;
};

/// Diagonal of the Smith normal form of an integer matrix, as nonnegative
/// invariant factors in a divisibility chain (1s and trailing 0s included,
/// length min(rows, cols)).
std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m);

/// Abelianization of the presented group: Smith normal form of the
/// relator exponent-sum matrix.
AbelianInvariants abelianization(const Presentation& p);

/// Exact order of the matrix group generated by gens modulo q (all over
/// the same prime modulus), by breadth-first closure; projectivize divides
/// out scalars. Returns nullopt once the closure exceeds cap.
std::optional<std::uint64_t> closure_order(std::span<const ResidueMatrix> gens,
                                           bool projectivize, std::uint64_t cap);

}  // namespace hurwitz

#endif
