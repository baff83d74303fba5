#ifndef HURWITZ_FIXTURES_HPP
#define HURWITZ_FIXTURES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/presentation.hpp"

namespace hurwitz {

/// How a two-element bracket (x, y) in a relator expression expands.
enum class CommutatorExpansion {
  inverse_first,  // x^-1 y^-1 x y
  direct_first,   // x y x^-1 y^-1
};

/// A tabulated presentation: generators as integral quaternion
/// coordinates (a, b, c, d) for a + b*I + c*J + d*IJ, relators as textual
/// words over the generator letters.
struct FixtureEntry {
  std::string name;
  std::vector<std::int64_t> primes;
  std::vector<std::pair<std::string, std::array<std::int64_t, 4>>> generators;
  std::vector<std::string> relator_exprs;
  std::string source_note;
};

const std::vector<FixtureEntry>& fixtures();
const FixtureEntry* find_fixture(std::string_view name);

Presentation fixture_presentation(const FixtureEntry& entry);
Presentation fixture_presentation(std::string_view name);  // Errc::not_found

/// Word expression parser used by the fixtures: letters, ^exponents,
/// parenthesized subwords with powers, and (x, y) brackets.
Word parse_word_expr(std::string_view expr, const std::map<char, int>& letter_slots,
                     CommutatorExpansion expansion = CommutatorExpansion::inverse_first);

}  // namespace hurwitz

#endif
