#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bichroma/arc_graph.hpp"
#include "bichroma/instance.hpp"

namespace bichroma {

/// Parses either the text format
///
///     collinear <m>
///     <x> <R|B>        (m lines)
///
/// or `circle <n> <k> <R|B>`, or the JSON mirror of either. Input starting
/// with '{' is treated as JSON. Throws InvalidInput on malformed input.
Instance parse_instance(std::string_view text);
Instance read_instance(const std::filesystem::path& path);

std::string instance_to_text(const Instance& inst);
std::string instance_to_json(const Instance& inst, int indent = -1);

std::string report_to_json(const SolveReport& report, int indent = -1);
SolveReport report_from_json(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace bichroma
