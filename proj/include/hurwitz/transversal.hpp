#ifndef HURWITZ_TRANSVERSAL_HPP
#define HURWITZ_TRANSVERSAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hurwitz/quaternion.hpp"

namespace hurwitz {

/// One projective class per right O*-orbit of elements of a fixed reduced
/// norm. Norm 1 holds the 12 projective unit classes (identity first);
/// norm p holds the p+1 neighbor representatives. Members after the
/// identity are in increasing lexicographic order of their representatives.
struct Transversal {
  std::int64_t norm = 1;
  std::vector<ProjectiveClass> members;

  std::optional<int> index_of(const ProjectiveClass& c) const;
};

/// All elements of the Hurwitz order with reduced norm n, in increasing
/// lexicographic order of doubled coordinates. 24 elements for n = 1,
/// 24(p+1) for an odd prime p.
std::vector<HurwitzElement> elements_of_norm(std::int64_t n);

/// The 24 unit elements of the order (cached).
const std::vector<HurwitzElement>& unit_elements();

/// The 12 projective unit classes, identity at index 0.
const Transversal& unit_transversal();

/// One representative class per right O*-orbit of norm-p elements.
Transversal prime_transversal(std::int64_t p);

/// Index of canonical_class(a) in unit_transversal() when a is a nonzero
/// rational-scalar multiple of a unit; absent otherwise.
std::optional<int> locate_unit_class(const HurwitzElement& a);

}  // namespace hurwitz

#endif
