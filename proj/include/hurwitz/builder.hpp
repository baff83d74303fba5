#ifndef HURWITZ_BUILDER_HPP
#define HURWITZ_BUILDER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/presentation.hpp"
#include "hurwitz/transversal.hpp"

namespace hurwitz {

/// Presentation of the projective S-unit group from the transversal-based
/// builder: 11 unit generators plus p+1 generators per prime, with the
/// four relation families (unit*unit, p*p into a scalar, p*q reordering,
/// unit-across-p commutation).
Presentation build_main(const SPrimeSet& s);

/// Presentation with one generator per projective class of norm dividing
/// m_S (identity excluded) and one relator per product landing back in the
/// generator set. Grows fast; generator_cap bounds it.
Presentation build_oracle(const SPrimeSet& s, std::size_t generator_cap = 1000);

struct RelatorCheck {
  bool is_scalar = false;
  Int scalar;  // the rational scalar when is_scalar (product = scalar * 1)
};

struct VerifyReport {
  bool pass = false;
  std::vector<RelatorCheck> relator_checks;
  std::vector<int> failed_relators;      // indices with non-scalar product
  std::vector<int> non_smooth_witnesses; // generator indices outside the S-units
  std::string summary() const;
};

/// Soundness check: every witness has S-smooth norm and every relator's
/// witness product is a rational scalar. Failures are reported, not thrown.
VerifyReport verify_presentation(const Presentation& p);

}  // namespace hurwitz

#endif
