// Undirected simple graphs that parameterize the Ising prior.
#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace majvote {

enum class GraphFamily { Empty, Chain, ChainPBC, Complete, Custom };

std::string_view to_string(GraphFamily family);
/// Accepts empty|chain|chain-pbc|complete|custom.
GraphFamily parse_graph_family(std::string_view name);

using Edge = std::pair<int, int>;  // always first < second

class Graph {
public:
    int n() const noexcept { return n_; }
    GraphFamily family() const noexcept { return family_; }
    /// Sorted, deduplicated, each with first < second. Complete graphs
    /// materialize this on first use.
    const std::vector<Edge>& edges() const;
    std::size_t edge_count() const noexcept;
    /// Neighbor lists, each sorted. Materialized on first use.
    const std::vector<std::vector<int>>& adjacency() const;

    /// Edge set equality; the family tag is not compared.
    bool same_edges(const Graph& other) const { return n_ == other.n_ && edges() == other.edges(); }

    friend Graph build_graph(GraphFamily family, int n);
    friend Graph from_edge_list(int n, const std::vector<Edge>& pairs);

private:
    struct Storage {
        std::once_flag edges_once;
        std::once_flag adjacency_once;
        std::vector<Edge> edges;
        std::vector<std::vector<int>> adjacency;
    };

    Graph(int n, GraphFamily family, std::vector<Edge> edges);

    int n_ = 0;
    GraphFamily family_ = GraphFamily::Empty;
    // Shared so copies are cheap; contents never change once materialized.
    std::shared_ptr<Storage> storage_;
};

/// n >= 1; Chain and ChainPBC need n >= 3. Custom is not buildable here.
Graph build_graph(GraphFamily family, int n);

/// Family is Custom. Duplicate pairs (in either orientation) collapse.
Graph from_edge_list(int n, const std::vector<Edge>& pairs);

/// Text format: first non-comment line `n`, then one `i j` per line.
/// `#` starts a comment anywhere on a line.
Graph read_graph(std::istream& in);
Graph load_graph_file(const std::filesystem::path& path);

}  // namespace majvote
