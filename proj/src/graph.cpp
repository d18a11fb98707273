#include "ispoly/graph.hpp"

#include "ispoly/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ispoly {

Literal Literal::from_dimacs(long value)
{
    if (value == 0)
        throw DomainError("literal 0 is not a variable");
    return Literal{static_cast<std::uint32_t>(value < 0 ? -value : value), value < 0};
}

std::string to_string(const Literal& literal)
{
    return std::to_string(literal.to_dimacs());
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::optional<Literal>> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels))
{
    for (Edge& e : edges_) {
        if (e.u >= vertex_count_ || e.v >= vertex_count_)
            throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} out of range for " + std::to_string(vertex_count_) + " vertices");
        if (e.u == e.v)
            throw DomainError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw DomainError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    if (!labels_.empty() && labels_.size() != vertex_count_)
        throw DomainError("label vector has " + std::to_string(labels_.size()) + " entries for " +
                          std::to_string(vertex_count_) + " vertices");
    if (std::none_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); }))
        labels_.clear();
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::vector<Vertex>> Graph::adjacency() const
{
    std::vector<std::vector<Vertex>> adj(vertex_count_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj)
        std::sort(row.begin(), row.end());
    return adj;
}

std::vector<std::size_t> Graph::degrees() const
{
    std::vector<std::size_t> deg(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::optional<Literal> Graph::label(Vertex v) const
{
    if (labels_.empty() || v >= labels_.size())
        return std::nullopt;
    return labels_[v];
}

CloneSpec::CloneSpec(std::vector<std::size_t> entries) : entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end());
    sum_ = std::accumulate(entries_.begin(), entries_.end(), std::size_t{0});
}

namespace {

void require_vertex(const Graph& g, Vertex v)
{
    if (v >= g.vertex_count())
        throw DomainError("vertex " + std::to_string(v) + " out of range for " +
                          std::to_string(g.vertex_count()) + " vertices");
}

// Offsets of each clone's path inside a block.
std::vector<std::size_t> path_offsets(const CloneSpec& spec)
{
    std::vector<std::size_t> offsets(spec.size());
    std::size_t next = spec.size();
    for (std::size_t i = 0; i < spec.size(); ++i) {
        offsets[i] = next;
        next += spec.entries()[i];
    }
    return offsets;
}

} // namespace

Graph s_clone(const Graph& g, const CloneSpec& spec)
{
    const std::size_t block = spec.block_size();
    const std::size_t copies = spec.size();
    const auto offsets = path_offsets(spec);

    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * copies * copies + g.vertex_count() * spec.sum());
    for (const Edge& e : g.edges())
        for (std::size_t i = 0; i < copies; ++i)
            for (std::size_t j = 0; j < copies; ++j)
                edges.push_back({e.u * block + i, e.v * block + j});
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (std::size_t i = 0; i < copies; ++i) {
            Vertex prev = a * block + i;
            for (std::size_t p = 0; p < spec.entries()[i]; ++p) {
                Vertex next = a * block + offsets[i] + p;
                edges.push_back({prev, next});
                prev = next;
            }
        }
    }
    return Graph(g.vertex_count() * block, std::move(edges));
}

CloneVertex s_clone_origin(const CloneSpec& spec, Vertex vertex)
{
    const std::size_t block = spec.block_size();
    if (block == 0)
        throw DomainError("empty clone spec has no vertices");
    CloneVertex where{vertex / block, 0, 0};
    std::size_t local = vertex % block;
    if (local < spec.size()) {
        where.clone_index = local;
        return where;
    }
    const auto offsets = path_offsets(spec);
    auto it = std::upper_bound(offsets.begin(), offsets.end(), local);
    // Clones with empty paths share an offset with their successor; upper_bound
    // lands past all of them.
    std::size_t i = static_cast<std::size_t>(it - offsets.begin()) - 1;
    where.clone_index = i;
    where.path_position = local - offsets[i] + 1;
    return where;
}

Vertex s_clone_vertex(const CloneSpec& spec, const CloneVertex& where)
{
    if (where.clone_index >= spec.size() || where.path_position > spec.entries()[where.clone_index])
        throw DomainError("no such clone position");
    Vertex base = where.original * spec.block_size();
    if (where.path_position == 0)
        return base + where.clone_index;
    return base + path_offsets(spec)[where.clone_index] + where.path_position - 1;
}

Graph k_clone(const Graph& g, std::size_t k)
{
    if (k == 0)
        throw DomainError("k-clone requires k >= 1");
    return s_clone(g, CloneSpec::zeros(k));
}

Graph attach_path(const Graph& g, Vertex v, std::size_t k)
{
    require_vertex(g, v);
    if (k == 0)
        return g;
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    Vertex prev = v;
    for (std::size_t i = 0; i < k; ++i) {
        edges.push_back({prev, n + i});
        prev = n + i;
    }
    auto labels = g.labels();
    if (!labels.empty())
        labels.resize(n + k);
    return Graph(n + k, std::move(edges), std::move(labels));
}

Graph comb(const Graph& g, std::size_t k)
{
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t j = 0; j < k; ++j)
            edges.push_back({v, n + v * k + j});
    auto labels = g.labels();
    if (!labels.empty())
        labels.resize(n * (k + 1));
    return Graph(n * (k + 1), std::move(edges), std::move(labels));
}

Graph delete_vertex(const Graph& g, Vertex v)
{
    require_vertex(g, v);
    auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v)
            edges.push_back({shift(e.u), shift(e.v)});
    auto labels = g.labels();
    if (!labels.empty())
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(v));
    return Graph(g.vertex_count() - 1, std::move(edges), std::move(labels));
}

} // namespace ispoly
