#ifndef HURWITZ_SERIALIZE_HPP
#define HURWITZ_SERIALIZE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "hurwitz/presentation.hpp"

namespace hurwitz {

enum class ExportFormat { json, gap, magma };

std::optional<ExportFormat> parse_format(std::string_view name);

/// json: canonical schema (version, primes, generators with doubled
/// coordinates, relators as 1-based signed indices); gap: free-group
/// quotient script; magma: the F<[t]>:=FreeGroup(n); FP:=quo<...> layout.
/// Output is deterministic, and json round-trips byte-identically through
/// parse_presentation_json.
std::string export_presentation(const Presentation& p, ExportFormat format);

/// Inverse of the json exporter. Throws Errc::parse_error on malformed
/// input; witnesses are re-canonicalized from the stored coordinates.
Presentation parse_presentation_json(const std::string& text);

}  // namespace hurwitz

#endif
