#pragma once

#include <string>

#include "alphaham/graph.hpp"

namespace alphaham {

enum class GraphFormat { EdgeList, Dimacs, Json };

GraphFormat format_from_name(const std::string& name);

Graph parse_graph(const std::string& text, GraphFormat format);

/// Guesses the format from the content ("p "/"c " lines -> DIMACS, '{' -> JSON,
/// otherwise edge list).
Graph parse_graph_auto(const std::string& text);

std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace alphaham
