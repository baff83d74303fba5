#include "hurwitz/fixtures.hpp"

#include <algorithm>
#include <cctype>

namespace hurwitz {

namespace {

class WordParser {
public:
  WordParser(std::string_view s, const std::map<char, int>& slots, CommutatorExpansion expansion)
      : s_(s), slots_(slots), expansion_(expansion) {}

  Word parse() {
    Word w = word(true);
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return w;
  }

private:
  [[noreturn]] void fail(const std::string& why) {
    raise(Errc::parse_error, "word '" + std::string(s_) + "': " + why + " at offset " +
                                 std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Word word(bool top_level) {
    Word out;
    for (;;) {
      skip_ws();
      if (pos_ == s_.size()) {
        if (!top_level) fail("unterminated group");
        return out;
      }
      char c = s_[pos_];
      if (c == ')' || c == ',') {
        if (top_level) fail("unbalanced delimiter");
        return out;
      }
      Word factor = atom();
      int e = exponent();
      append_power(out, factor, e);
    }
  }

  Word atom() {
    skip_ws();
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Word first = word(false);
      if (at(',')) {
        ++pos_;
        Word second = word(false);
        if (!at(')')) fail("expected ')'");
        ++pos_;
        return bracket(first, second);
      }
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return first;
    }
    auto it = slots_.find(c);
    if (it == slots_.end()) fail(std::string("unknown generator '") + c + "'");
    ++pos_;
    return Word{{it->second, 1}};
  }

  Word bracket(const Word& x, const Word& y) const {
    Word out;
    auto cat = [&out](const Word& w) { out.insert(out.end(), w.begin(), w.end()); };
    if (expansion_ == CommutatorExpansion::inverse_first) {
      cat(inverse(x));
      cat(inverse(y));
      cat(x);
      cat(y);
    } else {
      cat(x);
      cat(y);
      cat(inverse(x));
      cat(inverse(y));
    }
    return out;
  }

  int exponent() {
    skip_ws();
    if (pos_ == s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
    int v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  static void append_power(Word& out, const Word& base, int e) {
    if (e == 0) return;
    const Word use = e > 0 ? base : inverse(base);
    for (int i = 0; i < std::abs(e); ++i) out.insert(out.end(), use.begin(), use.end());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const std::map<char, int>& slots_;
  CommutatorExpansion expansion_;
};

// Bracket expansion for the tabulated relators. Every bracket below
// appears squared and scalar-verifies under the x^-1 y^-1 x y reading
// (the alternate x y x^-1 y^-1 verifies as well); this reading is frozen.
constexpr CommutatorExpansion kFixtureExpansion = CommutatorExpansion::inverse_first;

std::vector<FixtureEntry> make_fixtures() {
  std::vector<FixtureEntry> all;

  all.push_back(FixtureEntry{
      "s3_5",
      {3, 5},
      {{"a", {-1, 1, -1, -3}}, {"b", {-9, -7, -1, 7}}},
      {
          "(b^-1 a^-1 b a^-1)^3",
          "(b^-1 a^-2 b a^-1 b^-1 a^-1)^2",
          "(a^-1 b^-1 a^-1 b^-1 a^-1 b a^-1)^2",
          "b^-1 a b a b^-1 a^-1 b^2 a b^-1 a b a^2 b^-1 a b a b^-1 a^2 b a^2 b^-1 a^-1 b a^-2 b^-1 a^-2",
          "(b a^2 b^-1 a b a^-1 b)^2",
          "b^-1 a^3 b a^2 b^-1 a b^-1 a^-2 b a^-1 b^-1 a",
          "b^-2 a^-1 b a^-1 b^-1 a b a^2 b^-2 a^-2 b a^-1",
          "a b^-1 a^2 b a^-1 b^-1 a^-2 b a^-2 b^-1 a b a",
      },
      "two-generator table for S = {3,5}",
  });

  all.push_back(FixtureEntry{
      "s3_7",
      {3, 7},
      {{"a", {-1, 1, -1, -3}}, {"b", {-1, -1, -1, -5}}},
      {
          "b a b a^-2 b a b^-1 a^-1 b^-1 a^2 b^-1 a^-1",
          "a^3 b a^-2 b a b a^2 b^-1 a^-1 b^-3 a^-1 b^-1",
          "b a b^-1 a^-1 b^-1 a^-1 b a b^2 a b^2 a^-2 b a b",
          "(a^2 b^-1 a^-1 b^-2 a^-1 b^-1 a)^2",
          "a b^3 a b^3 a b a^-2 b a^3 b a^-2 b",
          "b^-2 a b^2 a b a^-2 b^3 a b a^-2 b^2 a^2 b^-1 a^-1 b^-2 a^-1 b^-2 a^-1",
      },
      "two-generator table for S = {3,7}",
  });

  all.push_back(FixtureEntry{
      "s3_11",
      {3, 11},
      {{"a", {1, 1, -1, -1}}, {"b", {-1, -1, -1, -3}}, {"c", {-1, 1, 0, -3}}},
      {
          "a^3",
          "(b^-1 c a^-1)^2",
          "(b, a^-1)^2",
          "(c^-1 b a^-1 b)^2",
          "b a^-1 b^-2 a c^-1 a b^-1 c^-1",
          "c^-1 a b^-1 c^-1 a c b^-1 a^-1 c^-1",
          "(b^2 a^-1 b^-1 a^-1)^2",
          "(b a b^-1 a^-1 c^-1)^2",
      },
      "table for S = {3,11}; the bare b^-2 exponent in r5 is read as b^(-2)",
  });

  all.push_back(FixtureEntry{
      "s5_7",
      {5, 7},
      {{"a", {1, -1, 1, -1}}, {"b", {0, 0, -1, -2}}, {"c", {-1, 1, 1, -5}}},
      {
          "b^2",
          "a^3",
          "(c^-1 a b)^2",
          "(a, c^-1)^2",
          "(b c a^-1 c^-1 a)^2",
          "(c a^-1 c^-1 a^-1)^3",
          "c a c^-1 a b c a c^-1 a^-1 c^-1 a^-1 b a c a",
          "c^-1 a^-1 b a c^2 a c^-1 a^-1 b a c a c^-1 a",
      },
      "three-generator table for S = {5,7}",
  });

  all.push_back(FixtureEntry{
      "s3_5_7",
      {3, 5, 7},
      {{"a", {1, 1, -1, -1}}, {"b", {-1, -1, -1, -3}}, {"c", {0, -1, 0, -2}}, {"d", {-1, -1, -1, -5}}},
      {
          "c^2",
          "a^3",
          "b^-1 d a d^-1 b a^-1",
          "b d c d^-1 b^-1 c",
          "c a^-1 d^-1 c a d",
          "(d^-1, a)^2",
          "(d b a^-1 d)^2",
          "(c a^-1 b^2)^2",
          "(d a b a^-1)^2",
          "b^-1 d c a d^-1 b^-1 a c a^-1",
          "c a^-1 b^-1 a^-1 c d a^-1 d^-1 b^-1 a",
          "b a d a d^-1 a b^2 a b^-1 a",
          "d^-1 b^-1 a^-1 b d^-1 b^2 a d a d^-1",
          "(a^-1 d a^-1 d^-1)^3",
          "d^2 a d^-1 a b d^-1 a^-1 d a^-1 d^-1 b^-1",
          "d^-1 a^-1 b^-1 a c b^-1 a d^-1 a c a^-1 d a^-1 d^-1",
          "c d a^-1 d^-1 a^-1 d^-1 a^-1 b^-1 a c b^-1 d^-1 a d a d^-1",
          "(d a^-1 d a^-1 d^-1 a^-1 c a^-1)^2",
      },
      "four-generator table for S = {3,5,7}",
  });

  all.push_back(FixtureEntry{
      "s3_5_11",
      {3, 5, 11},
      {{"a", {-1, -1, -1, -3}}, {"b", {-1, 0, 0, -2}}, {"c", {-1, 0, 1, -3}}},
      {
          "b^2 c b a^-1 c^-2 b^-1 a c^-1",
          "(b^-1 c^-1 b^-1 a c^-1 a^-1)^2",
          "b c b a b a^-1 b^-1 c^-1 b^-1 a c^-1 b^-1 c a^-1",
          "b a c^-1 b^-1 a c^-1 a^2 b^-1 c^-1 b^-1 a c^-1 a",
          "b^-2 a^-1 b^-1 c^-1 b^-1 c^-1 b^-1 a c^-1 a b a^-1 b^-1 c^-1 b^-1",
          "b a c^-1 b^-1 a c^-1 a b^-1 c a^-1 c a^-1 b c a^-1 c^-1",
          "c a^-1 b c b^-1 a^-1 b^-1 c b^-1 c^-1 b^-1 a c^-1 a b c",
          "c b^2 a c^-1 b^-1 a c^-1 a c a^-1 b c b a^-1 c a^-1 b",
          "a^-1 c^-1 a^-1 c a^-1 b c b^-1 a c^-1 b a b^-1 c^-1 b^-2 a c",
          "c^2 a^-1 b c b a^-2 c^-2 b^-1 a^2 b^-1 c^-1 b^-1 a b",
          "c^-1 a^-1 b^2 c b a^-1 b^-1 a^-1 b^-1 a b^2 a c^-1 b^-1 a c^-1",
          "b c a c^-1 b^-1 a c^-1 a c^-2 b^-1 a^-1 c a^-1 b c a^-1 c",
          "(b^2 c a^-1 b c b^2 a)^2",
          "a^-2 c a^-2 c a^-1 b c a^-1 c a^-2 b a b c^-1 b^-1 a c^-1",
          "b a b^2 a c^-1 b^-2 a b^-1 a^-1 b^-2 a^-3 b^-1 c^-1 b^-1 a",
          "a c b c b a^-1 c^-1 b^-1 c^-1 b^-1 a c^-1 b c b a b^-1 a^-1 b^-2 a^-1 b^-1",
          "b a b^2 a b a c^-1 a b a b c^-1 b^-1 a c^-1 b a^-1 b c b a",
          "b^2 c a^-1 b c a^-1 c b a^-1 c^-1 a^-1 c a^-1 b c b a^-1 b a^-1 b a",
          "b^-2 c^-1 b^-1 a c^-1 a b^-1 a b^-1 a^-1 b^-2 a^-1 b c b^-1 a^-1 c a^-1 b^-1 a",
          "(b a c^-1 a^-1 c a^-1 b c b^2 a)^2",
          "(c^-1 a^-2 c a^-1 b c b c^-1 b^-1 a c^-1 a^-1)^2",
          "a^-1 b c b a c^-1 b^-1 a c^-1 a^3 c a^-1 b c b^-1 a^-1 b^-1 c a^-1 b c a^-1 b^-1 c b^-2 c^-1 b^-1 a c^-1 b^-2 a^-1 c b c",
      },
      "three-generator table for S = {3,5,11}",
  });

  return all;
}

}  // namespace

const std::vector<FixtureEntry>& fixtures() {
  static const std::vector<FixtureEntry> all = make_fixtures();
  return all;
}

const FixtureEntry* find_fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

Word parse_word_expr(std::string_view expr, const std::map<char, int>& letter_slots,
                     CommutatorExpansion expansion) {
  return WordParser(expr, letter_slots, expansion).parse();
}

Presentation fixture_presentation(const FixtureEntry& entry) {
  Presentation p;
  p.s_set = SPrimeSet::make(entry.primes);
  p.provenance.algorithm = "fixture:" + entry.name;

  std::map<char, int> slots;
  int idx = 0;
  for (const auto& [label, coords] : entry.generators) {
    Generator g;
    g.id = {GenKind::named, 0, idx};
    g.label = label;
    g.witness = canonical_class(
        HurwitzElement::from_integral(coords[0], coords[1], coords[2], coords[3]));
    slots[label.at(0)] = idx;
    p.generators.push_back(std::move(g));
    ++idx;
  }
  for (const auto& expr : entry.relator_exprs)
    p.relators.push_back(parse_word_expr(expr, slots, kFixtureExpansion));
  return p;
}

Presentation fixture_presentation(std::string_view name) {
  const FixtureEntry* entry = find_fixture(name);
  if (!entry) raise(Errc::not_found, "no fixture named '" + std::string(name) + "'");
  return fixture_presentation(*entry);
}

}  // namespace hurwitz
