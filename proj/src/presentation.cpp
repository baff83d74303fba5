#include "hurwitz/presentation.hpp"

#include <algorithm>

namespace hurwitz {

std::string GeneratorId::to_string() const {
  switch (kind) {
    case GenKind::unit:
      return "u" + std::to_string(index);
    case GenKind::prime:
      return "t" + std::to_string(prime) + "_" + std::to_string(index);
    case GenKind::named:
      return "g" + std::to_string(index);
  }
  return "?";
}

GeneratorId parse_generator_id(const std::string& text, int position) {
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (text.size() >= 2 && text[0] == 'u' && all_digits(std::string_view(text).substr(1)))
    return {GenKind::unit, 0, std::stoi(text.substr(1))};
  if (text.size() >= 4 && text[0] == 't') {
    auto sep = text.find('_');
    if (sep != std::string::npos && all_digits(std::string_view(text).substr(1, sep - 1)) &&
        all_digits(std::string_view(text).substr(sep + 1)))
      return {GenKind::prime, std::stoll(text.substr(1, sep - 1)), std::stoi(text.substr(sep + 1))};
  }
  return {GenKind::named, 0, position};
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

HurwitzElement evaluate_word(const Presentation& p, const Word& w) {
  HurwitzElement acc = HurwitzElement::one();
  for (const Letter& l : w) {
    const HurwitzElement& rep = p.generators.at(static_cast<std::size_t>(l.gen)).witness.rep();
    acc = acc * (l.exp > 0 ? rep : rep.conjugate());
  }
  return acc;
}

bool word_is_projective_identity(const Presentation& p, const Word& w) {
  HurwitzElement v = evaluate_word(p, w);
  return !v.is_zero() && v.x == 0 && v.y == 0 && v.z == 0;
}

}  // namespace hurwitz
