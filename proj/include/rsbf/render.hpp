#ifndef RSBF_RENDER_HPP
#define RSBF_RENDER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsbf/orbits.hpp"
#include "rsbf/structure.hpp"

// Text renderings of results. JSON and CSV layouts are versioned by
// kSchemaVersion and documented in docs/schema.md.
namespace rsbf::render {

enum class OutputFormat { pretty, json, csv };

inline constexpr int kSchemaVersion = 1;

std::optional<OutputFormat> parse_format(std::string_view name);

/// Class table; when `invariants` is given (one entry per class) the weight,
/// nonlinearity and profile digest columns are filled.
std::string classes(const orbits::ClassTable& table, OutputFormat fmt,
                    const std::vector<structure::ClassInvariants>* invariants = nullptr);

std::string census(const structure::Census& c, OutputFormat fmt);

std::string invariants(int n, const std::vector<structure::ClassInvariants>& rows, OutputFormat fmt,
                       bool verbose);

std::string conjecture(const structure::ConjectureReport& report, OutputFormat fmt, bool verbose);

/// Named theorem check ("prime", "power3", ...).
std::string report(std::string_view check, const structure::Report& r, OutputFormat fmt);

/// Inverse of classes(..., json). Throws DomainError on malformed input or
/// members that are not canonical.
orbits::ClassTable parse_classes_json(std::string_view text);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace rsbf::render

#endif  // RSBF_RENDER_HPP
