#ifndef HURWITZ_PRESENTATION_HPP
#define HURWITZ_PRESENTATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/quaternion.hpp"

namespace hurwitz {

/// Identity of a generator. Unit generators index into unit_transversal()
/// (1..11, identity excluded); prime generators index into
/// prime_transversal(p) (0..p); named generators are free-standing
/// (oracle classes, fixtures, parsed files) and carry only their index.
enum class GenKind { unit, prime, named };

struct GeneratorId {
  GenKind kind = GenKind::named;
  std::int64_t prime = 0;  // meaningful only for GenKind::prime
  int index = 0;

  bool operator==(const GeneratorId&) const = default;
  std::string to_string() const;
};

/// Parses the encodings produced by GeneratorId::to_string ("u3", "t5_2",
/// anything else becomes a named id).
GeneratorId parse_generator_id(const std::string& text, int position);

/// One letter of a word: generator slot (index into
/// Presentation::generators) and exponent +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);

struct Generator {
  GeneratorId id;
  std::string label;
  ProjectiveClass witness;
};

struct Provenance {
  std::string algorithm;  // "main", "oracle", "fixture", "parsed", ... ("+tietze" once simplified)
  // Relation counts for the main builder: type 1 (unit*unit), type 2
  // (p*p), type 3 (p*q), type 4 (unit*p). Zero elsewhere.
  std::array<std::int64_t, 4> type_counts{0, 0, 0, 0};
};

struct Presentation {
  SPrimeSet s_set;
  std::vector<Generator> generators;
  std::vector<Word> relators;
  Provenance provenance;
};

/// Product of the witnesses along a word (conjugate representative for
/// exponent -1). Empty word gives 1.
HurwitzElement evaluate_word(const Presentation& p, const Word& w);

/// True iff the witness product is a rational scalar, i.e. the relator
/// holds in the projective unit group.
bool word_is_projective_identity(const Presentation& p, const Word& w);

}  // namespace hurwitz

#endif
