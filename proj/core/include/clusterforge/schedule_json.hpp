#pragma once

#include <filesystem>
#include <string>

#include "clusterforge/schedule.hpp"

namespace clusterforge {

/// Versioned JSON document with stable field order:
/// {version, name, target_graph{vertex_count, edges}, ops[{kind, operands}],
///  resources{entanglers, cz_gates, entangler_equiv, ancilla_photons, photons}}.
std::string schedule_to_json(const Schedule& s);

/// Parses and validates a version-1 schedule document.
/// Throws std::invalid_argument / std::runtime_error on malformed input.
Schedule schedule_from_json(const std::string& text);

void save_schedule(const Schedule& s, const std::filesystem::path& path);
Schedule load_schedule(const std::filesystem::path& path);

}  // namespace clusterforge
