#pragma once

#include "alphacrit/graph.hpp"

namespace alphacrit {

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);   // n >= 1, n-1 edges

}  // namespace alphacrit
