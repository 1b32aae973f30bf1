#include "fractaloid/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace fractaloid {

DirectedGraph graph_from_json_text(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw std::invalid_argument("graph json: expected {vertices, edges}");
    std::vector<std::string> vertices;
    for (const auto& v : doc.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (const auto& e : doc.at("edges")) {
        edges.emplace_back(e.at("name").get<std::string>(), e.at("src").get<std::string>(),
                           e.at("dst").get<std::string>());
    }
    return DirectedGraph(std::move(vertices), std::move(edges));
}

DirectedGraph graph_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return graph_from_json_text(text);
}

} // namespace fractaloid
