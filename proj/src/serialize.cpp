#include "hurwitz/serialize.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

namespace hurwitz {

namespace {

std::int64_t to_i64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) raise(Errc::overflow, "coordinate does not fit 64 bits");
  return v.convert_to<std::int64_t>();
}

// Words rendered with collected powers: t[1]*t[2]^-2*t[1].
std::string word_text(const Word& w) {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j].gen == w[i].gen && w[j].exp == w[i].exp) ++j;
    int e = w[i].exp * static_cast<int>(j - i);
    if (!first) out << "*";
    out << "t[" << (w[i].gen + 1) << "]";
    if (e != 1) out << "^" << e;
    first = false;
    i = j;
  }
  return out.str();
}

std::string export_gap(const Presentation& p) {
  std::ostringstream out;
  out << "F := FreeGroup(" << p.generators.size() << ");\n";
  out << "t := GeneratorsOfGroup(F);\n";
  out << "rels := [\n";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out << "  " << word_text(p.relators[i]) << (i + 1 < p.relators.size() ? "," : "") << "\n";
  out << "];\n";
  out << "G := F / rels;\n";
  return out.str();
}

std::string export_magma(const Presentation& p) {
  std::ostringstream out;
  out << "F<[t]>:=FreeGroup(" << p.generators.size() << ");\n";
  out << "FP:=quo<F|[\n";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out << word_text(p.relators[i]) << (i + 1 < p.relators.size() ? "," : "") << "\n";
  out << "]>;\n";
  return out.str();
}

std::string export_json(const Presentation& p) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["primes"] = p.s_set.primes;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : p.generators) {
    const HurwitzElement& r = g.witness.rep();
    gens.push_back({{"id", g.id.to_string()},
                    {"label", g.label},
                    {"coords", {to_i64(r.w), to_i64(r.x), to_i64(r.y), to_i64(r.z)}}});
  }
  doc["generators"] = std::move(gens);
  nlohmann::json rels = nlohmann::json::array();
  for (const Word& w : p.relators) {
    nlohmann::json r = nlohmann::json::array();
    for (const Letter& l : w) r.push_back(l.exp * (l.gen + 1));
    rels.push_back(std::move(r));
  }
  doc["relators"] = std::move(rels);
  return doc.dump(2) + "\n";
}

}  // namespace

std::optional<ExportFormat> parse_format(std::string_view name) {
  if (name == "json") return ExportFormat::json;
  if (name == "gap") return ExportFormat::gap;
  if (name == "magma") return ExportFormat::magma;
  return std::nullopt;
}

std::string export_presentation(const Presentation& p, ExportFormat format) {
  switch (format) {
    case ExportFormat::json:
      return export_json(p);
    case ExportFormat::gap:
      return export_gap(p);
    case ExportFormat::magma:
      return export_magma(p);
  }
  raise(Errc::invalid_argument, "unknown export format");
}

Presentation parse_presentation_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, std::string("invalid json: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) raise(Errc::parse_error, "unsupported version");
    Presentation p;
    p.provenance.algorithm = "parsed";
    p.s_set = SPrimeSet::make(doc.at("primes").get<std::vector<std::int64_t>>());
    int position = 0;
    for (const auto& g : doc.at("generators")) {
      auto coords = g.at("coords").get<std::vector<std::int64_t>>();
      if (coords.size() != 4) raise(Errc::parse_error, "coords must have four entries");
      HurwitzElement e = HurwitzElement::from_doubled(coords[0], coords[1], coords[2], coords[3]);
      Generator gen;
      gen.id = parse_generator_id(g.at("id").get<std::string>(), position);
      gen.label = g.at("label").get<std::string>();
      gen.witness = canonical_class(e);
      p.generators.push_back(std::move(gen));
      ++position;
    }
    for (const auto& r : doc.at("relators")) {
      Word w;
      for (const auto& v : r) {
        std::int64_t s = v.get<std::int64_t>();
        std::int64_t idx = s > 0 ? s : -s;
        if (idx < 1 || idx > static_cast<std::int64_t>(p.generators.size()))
          raise(Errc::parse_error, "relator index out of range");
        w.push_back({static_cast<int>(idx - 1), s > 0 ? 1 : -1});
      }
      p.relators.push_back(std::move(w));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, std::string("presentation schema violation: ") + e.what());
  }
}

}  // namespace hurwitz
