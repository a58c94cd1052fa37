#include "majvote/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace majvote {

std::string_view to_string(GraphFamily family) {
    switch (family) {
        case GraphFamily::Empty: return "empty";
        case GraphFamily::Chain: return "chain";
        case GraphFamily::ChainPBC: return "chain-pbc";
        case GraphFamily::Complete: return "complete";
        case GraphFamily::Custom: return "custom";
    }
    return "unknown";
}

GraphFamily parse_graph_family(std::string_view name) {
    if (name == "empty") return GraphFamily::Empty;
    if (name == "chain") return GraphFamily::Chain;
    if (name == "chain-pbc") return GraphFamily::ChainPBC;
    if (name == "complete") return GraphFamily::Complete;
    if (name == "custom") return GraphFamily::Custom;
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

Graph::Graph(int n, GraphFamily family, std::vector<Edge> edges)
    : n_(n), family_(family), storage_(std::make_shared<Storage>()) {
    if (family_ == GraphFamily::Complete) return;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    storage_->edges = std::move(edges);
    std::call_once(storage_->edges_once, [] {});
}

const std::vector<Edge>& Graph::edges() const {
    std::call_once(storage_->edges_once, [this] {
        auto& edges = storage_->edges;
        edges.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) edges.emplace_back(i, j);
    });
    return storage_->edges;
}

std::size_t Graph::edge_count() const noexcept {
    if (family_ == GraphFamily::Complete) return static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    return storage_->edges.size();
}

const std::vector<std::vector<int>>& Graph::adjacency() const {
    std::call_once(storage_->adjacency_once, [this] {
        auto& adjacency = storage_->adjacency;
        adjacency.assign(static_cast<std::size_t>(n_), {});
        for (const auto& [i, j] : edges()) {
            adjacency[i].push_back(j);
            adjacency[j].push_back(i);
        }
        for (auto& nb : adjacency) std::sort(nb.begin(), nb.end());
    });
    return storage_->adjacency;
}

Graph build_graph(GraphFamily family, int n) {
    if (n < 1) throw std::invalid_argument("graph needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    switch (family) {
        case GraphFamily::Empty:
            break;
        case GraphFamily::Chain:
        case GraphFamily::ChainPBC:
            if (n < 3)
                throw std::invalid_argument(std::string(to_string(family)) +
                                            " graph needs n >= 3, got " + std::to_string(n));
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            if (family == GraphFamily::ChainPBC) edges.emplace_back(0, n - 1);
            break;
        case GraphFamily::Complete:
            break;  // edges materialize lazily
        case GraphFamily::Custom:
            throw std::invalid_argument("custom graphs come from an edge list, not build_graph");
    }
    return Graph(n, family, std::move(edges));
}

Graph from_edge_list(int n, const std::vector<Edge>& pairs) {
    if (n < 1) throw std::invalid_argument("graph needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::out_of_range("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") has a vertex outside [0, " + std::to_string(n) + ")");
        if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
        edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    return Graph(n, GraphFamily::Custom, std::move(edges));
}

Graph read_graph(std::istream& in) {
    int n = -1;
    std::vector<Edge> pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string probe;
        if (!(fields >> probe)) continue;
        fields.clear();
        fields.str(line);
        if (n < 0) {
            if (!(fields >> n) || n < 1)
                throw std::invalid_argument("graph file line " + std::to_string(line_no) +
                                            ": expected a positive vertex count");
            continue;
        }
        int i = 0, j = 0;
        std::string rest;
        if (!(fields >> i >> j) || (fields >> rest))
            throw std::invalid_argument("graph file line " + std::to_string(line_no) +
                                        ": expected `i j`");
        pairs.emplace_back(i, j);
    }
    if (n < 0) throw std::invalid_argument("graph file has no vertex count");
    return from_edge_list(n, pairs);
}

Graph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path.string());
    return read_graph(in);
}

}  // namespace majvote
