#ifndef HURWITZ_TIETZE_HPP
#define HURWITZ_TIETZE_HPP

#include <functional>

#include "hurwitz/presentation.hpp"

namespace hurwitz {

/// Bounds on the simplification search. max_eliminated_word_length caps
/// both the defining word substituted for an eliminated generator and the
/// relators used as rewrite rules; max_relator_growth caps how much a
/// single substitution may lengthen any one relator.
struct SimplifyBudget {
  int max_passes = 30;
  int max_relator_growth = 64;
  int max_eliminated_word_length = 64;
};

/// Cancels adjacent inverse letters and then inverse first/last pairs.
/// The result is the same group element up to conjugacy.
Word free_and_cyclic_reduce(const Word& w);

/// Called after each individual Tietze move with the current state.
using MoveObserver = std::function<void(const Presentation&)>;

/// Tietze simplification: relator reduction, duplicate / inverse /
/// cyclic-conjugate removal, elimination of generators occurring exactly
/// once in some relator, and rewriting by shorter halves of short
/// relators. Witnesses carry over, so the output still verifies; the
/// generator count never grows.
Presentation simplify(const Presentation& p, const SimplifyBudget& budget = {},
                      const MoveObserver& observer = nullptr);

}  // namespace hurwitz

#endif
