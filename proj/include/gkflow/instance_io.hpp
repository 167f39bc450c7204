#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkflow/poset.hpp"

namespace gkflow {

// Parsed file before the relation is resolved. The labeling is absent when
// the file says "auto"; cp_pairs is used only in Explicit mode.
struct InstanceFile {
    Poset poset;
    std::optional<Labeling> labeling;
    enum class CpSpec { Minimal, Full, Explicit } cp_spec;
    std::vector<IdPair> cp_pairs;
};

InstanceFile parse_instance_file(const std::string& text);

// Resolves "auto" to the deterministic linear extension, "minimal" to the
// forced pairs and "full" to every h-increasing pair, then validates.
Instance resolve_instance(const InstanceFile& file);

Instance parse_instance(const std::string& text);

// Canonical form: covers as the transitive reduction, h explicit, cp as an
// explicit sorted pair list. parse(render(x)) == x, byte-stable output.
std::string render_instance(const Instance& inst);

std::string read_file(const std::string& path);

} // namespace gkflow
