#pragma once

#include "ispoly/literal.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace ispoly {

using Vertex = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph with optional literal labels.
///
/// Edges are kept as a sorted list; neighbor lists are built on demand.
/// Construction rejects self-loops, duplicate edges and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count, std::vector<Edge> edges = {},
                   std::vector<std::optional<Literal>> labels = {});

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(Vertex u, Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency() const;
    std::vector<std::size_t> degrees() const;

    bool has_labels() const { return !labels_.empty(); }
    std::optional<Literal> label(Vertex v) const;
    const std::vector<std::optional<Literal>>& labels() const { return labels_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::optional<Literal>> labels_;
};

/// Multiset of nonnegative path lengths, kept sorted.
class CloneSpec {
public:
    CloneSpec() = default;
    explicit CloneSpec(std::vector<std::size_t> entries);
    /// k copies of 0.
    static CloneSpec zeros(std::size_t k) { return CloneSpec(std::vector<std::size_t>(k, 0)); }

    const std::vector<std::size_t>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t sum() const { return sum_; }
    bool empty() const { return entries_.empty(); }
    /// Vertices contributed per original vertex: sum + size.
    std::size_t block_size() const { return sum_ + entries_.size(); }

    friend bool operator==(const CloneSpec& lhs, const CloneSpec& rhs) { return lhs.entries_ == rhs.entries_; }

private:
    std::vector<std::size_t> entries_;
    std::size_t sum_ = 0;
};

/// Position of an S-clone vertex relative to the source graph.
/// path_position 0 is the clone itself, 1..s its pendant path.
struct CloneVertex {
    Vertex original = 0;
    std::size_t clone_index = 0;
    std::size_t path_position = 0;

    friend auto operator<=>(const CloneVertex&, const CloneVertex&) = default;
};

/// S-clone of g.
///
/// Numbering: original vertex a owns the block starting at a * spec.block_size().
/// Inside a block the |S| clones come first, in the sorted order of S, followed
/// by the pendant path of clone 0, then that of clone 1, and so on, each path
/// listed from the vertex adjacent to its clone outwards. Labels are dropped.
Graph s_clone(const Graph& g, const CloneSpec& spec);
CloneVertex s_clone_origin(const CloneSpec& spec, Vertex vertex);
Vertex s_clone_vertex(const CloneSpec& spec, const CloneVertex& where);

/// S-clone with S = {0 x k}; vertex a's copies are a*k .. a*k + k - 1.
Graph k_clone(const Graph& g, std::size_t k);

/// Appends k new vertices n..n+k-1 forming the path v, n, n+1, ..., n+k-1.
Graph attach_path(const Graph& g, Vertex v, std::size_t k);

/// Adds k pendant leaves to every original vertex; the leaves of v are
/// n + v*k .. n + v*k + k - 1.
Graph comb(const Graph& g, std::size_t k);

/// Removes v; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);

} // namespace ispoly
