#include "edgebetti/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "edgebetti/errors.hpp"

namespace edgebetti {

namespace {

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

}  // namespace

SimpleGraph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = strip_comment(line);
        if (body.empty()) continue;
        std::istringstream fields(body);
        if (n < 0) {
            if (!(fields >> n) || n < 0) throw DomainError("line " + std::to_string(lineno) + ": expected vertex count");
            continue;
        }
        int u = 0, v = 0;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw DomainError("line " + std::to_string(lineno) + ": expected 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw DomainError("line " + std::to_string(lineno) + ": endpoint out of range");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw DomainError("edge list is empty");
    return SimpleGraph(n, edges);
}

std::string to_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("graph JSON must be an object");
    std::vector<std::string> labels;
    int n = 0;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
        n = static_cast<int>(labels.size());
        if (j.contains("n") && j.at("n").get<int>() != n) throw DomainError("graph JSON: 'n' disagrees with labels");
    } else if (j.contains("n")) {
        n = j.at("n").get<int>();
    } else {
        throw DomainError("graph JSON needs 'labels' or 'n'");
    }
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2) throw DomainError("graph JSON: each edge must be [u, v]");
        const int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("graph JSON: endpoint out of range");
        edges.emplace_back(u, v);
    }
    return SimpleGraph(n, edges, labels);
}

nlohmann::json graph_to_json(const SimpleGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"labels", g.labels()}, {"edges", edges}};
}

SimpleGraph parse_graph(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("graph JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    std::istringstream in(text);
    return parse_edge_list(in);
}

SimpleGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace edgebetti
