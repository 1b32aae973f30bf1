#ifndef FRACTALOID_JSON_IO_HPP
#define FRACTALOID_JSON_IO_HPP

#include <string>

#include "fractaloid/graph.hpp"

namespace fractaloid {

// Graph input format:
//   {"vertices":["v1",...],
//    "edges":[{"name":"e1","src":"v1","dst":"v2"},...]}
// Array order is declaration order.
DirectedGraph graph_from_json_text(const std::string& text);
DirectedGraph graph_from_json_file(const std::string& path);

} // namespace fractaloid

#endif
