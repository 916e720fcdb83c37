#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dgd/classify.hpp"
#include "dgd/convert.hpp"
#include "dgd/digraph.hpp"
#include "dgd/duality.hpp"
#include "dgd/hamilton.hpp"
#include "dgd/normalize.hpp"

namespace dgd {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Arc-list text format: optional "# n=<count>" header, optional
/// "label <id> <text>" lines, one "tail head" pair per line. Lines starting
/// with '#' are otherwise comments. Order is inferred from the largest
/// endpoint when no header is given.
Digraph parse_arc_list(std::string_view text);

/// Canonical emission: header, label lines (when labeled), then arcs in
/// lexicographic order. parse/emit round-trip bit-exactly on this form.
std::string emit_arc_list(const Digraph& g);

std::string to_dot(const Digraph& g, std::string_view name = "G");

/// RFC-style CSV field quoting (quotes only when needed).
std::string csv_field(std::string_view s);

using json = nlohmann::ordered_json;

json to_json(const Digraph& g);
json to_json(const FValidityReport& r);
json to_json(const DualityVerdict& v);
json to_json(const NormalizationReport& r);
json to_json(const L31Interval& iv);
json to_json(const ClassReport& r);
json trace_to_json(const ConvertTrace& t);

}  // namespace dgd
