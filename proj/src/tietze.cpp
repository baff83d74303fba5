#include "hurwitz/tietze.hpp"

#include <algorithm>
#include <map>

namespace hurwitz {

namespace {

bool cancels(const Letter& a, const Letter& b) { return a.gen == b.gen && a.exp == -b.exp; }

std::vector<std::pair<int, int>> sort_key(const Word& w) {
  std::vector<std::pair<int, int>> key;
  key.reserve(w.size());
  for (const Letter& l : w) key.emplace_back(l.gen, l.exp);
  return key;
}

// Lexicographically least rotation of w or of its inverse; empty words map
// to themselves. Used to spot duplicate, inverse and conjugated relators.
Word canonical_cyclic(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  auto best_key = sort_key(best);
  auto consider = [&](Word candidate) {
    for (std::size_t r = 0; r < candidate.size(); ++r) {
      std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
      auto key = sort_key(candidate);
      if (key < best_key) {
        best = candidate;
        best_key = std::move(key);
      }
    }
  };
  consider(w);
  consider(inverse(w));
  return best;
}

int count_gen(const Word& w, int g) {
  int n = 0;
  for (const Letter& l : w)
    if (l.gen == g) ++n;
  return n;
}

Word substitute(const Word& w, int g, const Word& repl) {
  Word out;
  out.reserve(w.size() + repl.size());
  Word repl_inv = inverse(repl);
  for (const Letter& l : w) {
    if (l.gen != g) {
      out.push_back(l);
      continue;
    }
    const Word& ins = l.exp > 0 ? repl : repl_inv;
    out.insert(out.end(), ins.begin(), ins.end());
  }
  return out;
}

// First position of lhs as a contiguous subword, or npos.
std::size_t find_subword(const Word& w, const Word& lhs) {
  if (lhs.empty() || lhs.size() > w.size()) return std::string::npos;
  for (std::size_t i = 0; i + lhs.size() <= w.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < lhs.size(); ++j)
      if (!(w[i + j] == lhs[j])) {
        hit = false;
        break;
      }
    if (hit) return i;
  }
  return std::string::npos;
}

struct Workspace {
  const Presentation* input;
  std::vector<bool> alive;
  std::vector<Word> relators;
  const MoveObserver* observer;

  Presentation snapshot() const {
    Presentation out;
    out.s_set = input->s_set;
    out.provenance = input->provenance;
    std::vector<int> remap(alive.size(), -1);
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (alive[i]) {
        remap[i] = static_cast<int>(out.generators.size());
        out.generators.push_back(input->generators[i]);
      }
    for (const Word& w : relators) {
      Word r;
      r.reserve(w.size());
      for (const Letter& l : w) r.push_back({remap[static_cast<std::size_t>(l.gen)], l.exp});
      out.relators.push_back(std::move(r));
    }
    return out;
  }

  void moved() const {
    if (observer && *observer) (*observer)(snapshot());
  }
};

// Reduce every relator, drop trivial ones and keep one copy per cyclic
// conjugacy class (up to inversion). Returns true when anything changed.
bool reduce_and_dedupe(Workspace& ws) {
  bool changed = false;
  std::vector<Word> kept;
  std::map<std::vector<std::pair<int, int>>, bool> seen;
  for (const Word& w : ws.relators) {
    Word r = free_and_cyclic_reduce(w);
    if (r.size() != w.size()) changed = true;
    if (r.empty()) {
      changed = true;
      continue;
    }
    auto key = sort_key(canonical_cyclic(r));
    if (seen.emplace(std::move(key), true).second) {
      kept.push_back(std::move(r));
    } else {
      changed = true;
    }
  }
  ws.relators = std::move(kept);
  if (changed) ws.moved();
  return changed;
}

bool eliminate_generators(Workspace& ws, const SimplifyBudget& budget) {
  bool changed = false;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    // Candidates: generator occurring exactly once in some relator;
    // shortest defining relator first, ties by lowest generator index.
    std::vector<std::tuple<std::size_t, int, std::size_t>> candidates;  // (len, gen, relator)
    for (std::size_t ri = 0; ri < ws.relators.size(); ++ri) {
      const Word& r = ws.relators[ri];
      if (r.size() > static_cast<std::size_t>(budget.max_eliminated_word_length) + 1) continue;
      for (const Letter& l : r)
        if (count_gen(r, l.gen) == 1) candidates.emplace_back(r.size(), l.gen, ri);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& [len, g, ri] : candidates) {
      Word r = ws.relators[ri];
      std::size_t pos = 0;
      while (r[pos].gen != g) ++pos;
      std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
      Word tail(r.begin() + 1, r.end());
      Word repl = r[0].exp > 0 ? inverse(tail) : tail;

      bool fits = true;
      for (std::size_t i = 0; i < ws.relators.size() && fits; ++i) {
        if (i == ri) continue;
        std::size_t occ = static_cast<std::size_t>(count_gen(ws.relators[i], g));
        if (occ == 0) continue;
        std::size_t new_len = ws.relators[i].size() - occ + occ * repl.size();
        if (new_len > ws.relators[i].size() + static_cast<std::size_t>(budget.max_relator_growth))
          fits = false;
      }
      if (!fits) continue;

      std::vector<Word> next;
      next.reserve(ws.relators.size() - 1);
      for (std::size_t i = 0; i < ws.relators.size(); ++i) {
        if (i == ri) continue;
        next.push_back(free_and_cyclic_reduce(substitute(ws.relators[i], g, repl)));
      }
      ws.relators = std::move(next);
      ws.alive[static_cast<std::size_t>(g)] = false;
      changed = true;
      progressed = true;
      ws.moved();
      reduce_and_dedupe(ws);
      break;  // candidate set is stale after a substitution
    }
  }
  return changed;
}

bool rewrite_by_short_relators(Workspace& ws, const SimplifyBudget& budget) {
  bool changed = false;
  for (std::size_t src = 0; src < ws.relators.size(); ++src) {
    const Word rule = ws.relators[src];
    const std::size_t len = rule.size();
    if (len < 2 || len > static_cast<std::size_t>(budget.max_eliminated_word_length)) continue;
    const std::size_t h = len / 2 + 1;  // strict majority so replacements shrink
    for (int invert = 0; invert < 2; ++invert) {
      Word base = invert ? inverse(rule) : rule;
      for (std::size_t rot = 0; rot < len; ++rot) {
        Word lhs(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(h));
        Word rhs = inverse(Word(base.begin() + static_cast<std::ptrdiff_t>(h), base.end()));
        for (std::size_t dst = 0; dst < ws.relators.size(); ++dst) {
          if (dst == src) continue;
          for (;;) {
            std::size_t at = find_subword(ws.relators[dst], lhs);
            if (at == std::string::npos) break;
            Word next;
            next.reserve(ws.relators[dst].size());
            next.insert(next.end(), ws.relators[dst].begin(),
                        ws.relators[dst].begin() + static_cast<std::ptrdiff_t>(at));
            next.insert(next.end(), rhs.begin(), rhs.end());
            next.insert(next.end(), ws.relators[dst].begin() + static_cast<std::ptrdiff_t>(at + h),
                        ws.relators[dst].end());
            ws.relators[dst] = free_and_cyclic_reduce(next);
            changed = true;
            ws.moved();
          }
        }
        std::rotate(base.begin(), base.begin() + 1, base.end());
      }
    }
  }
  if (changed) reduce_and_dedupe(ws);
  return changed;
}

}  // namespace

Word free_and_cyclic_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && cancels(out[lo], out[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

Presentation simplify(const Presentation& p, const SimplifyBudget& budget,
                      const MoveObserver& observer) {
  if (budget.max_passes < 1 || budget.max_relator_growth < 1 || budget.max_eliminated_word_length < 1)
    raise(Errc::invalid_argument, "simplify budget fields must be positive");

  Workspace ws;
  ws.input = &p;
  ws.alive.assign(p.generators.size(), true);
  ws.relators = p.relators;
  ws.observer = &observer;

  reduce_and_dedupe(ws);
  for (int pass = 0; pass < budget.max_passes; ++pass) {
    bool changed = eliminate_generators(ws, budget);
    changed |= rewrite_by_short_relators(ws, budget);
    if (!changed) break;
  }

  Presentation out = ws.snapshot();
  out.provenance.algorithm = p.provenance.algorithm + "+tietze";
  return out;
}

}  // namespace hurwitz
