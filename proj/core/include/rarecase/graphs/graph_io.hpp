#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "rarecase/graphs/graph_types.hpp"

namespace rarecase {

using AnyGraph = std::variant<SimpleGraph, DirectedMultigraph, UndirectedMultigraph>;

// JSON text with 1-based vertices; unlisted entries are 0.
AnyGraph parse_graph_json(const std::string& text);
std::string to_graph_json(const AnyGraph& g);

AnyGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const AnyGraph& g);

}  // namespace rarecase
