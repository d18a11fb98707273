#include "ispoly/graph_io.hpp"

#include "ispoly/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ispoly {

namespace {

std::vector<std::string> split_words(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;)
        words.push_back(w);
    return words;
}

std::size_t parse_count(const std::string& word, std::size_t line, const char* what)
{
    if (word.empty() || !std::all_of(word.begin(), word.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(line, std::string("expected ") + what + ", got '" + word + "'");
    try {
        return std::stoull(word);
    } catch (const std::exception&) {
        throw ParseError(line, std::string(what) + " out of range: '" + word + "'");
    }
}

long parse_signed(const std::string& word, std::size_t line)
{
    try {
        std::size_t used = 0;
        long v = std::stol(word, &used);
        if (used != word.size())
            throw ParseError(line, "expected an integer, got '" + word + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + word + "'");
    }
}

class EdgeCollector {
public:
    explicit EdgeCollector(std::size_t n) : n_(n) {}

    void add(Vertex u, Vertex v, std::size_t line)
    {
        if (u >= n_ || v >= n_)
            throw ParseError(line, "vertex out of range");
        if (u == v)
            throw ParseError(line, "self-loop at vertex " + std::to_string(u));
        if (!seen_.insert({std::min(u, v), std::max(u, v)}).second)
            throw ParseError(line, "duplicate edge");
        edges_.push_back({u, v});
    }

    std::vector<Edge> take() { return std::move(edges_); }
    std::size_t size() const { return edges_.size(); }

private:
    std::size_t n_;
    std::set<std::pair<Vertex, Vertex>> seen_;
    std::vector<Edge> edges_;
};

} // namespace

Graph parse_graph_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::optional<std::size_t> n, m;
    std::optional<EdgeCollector> edges;
    std::vector<std::optional<Literal>> labels;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto words = split_words(line);
        if (words.empty() || words[0] == "c")
            continue;
        if (words[0] == "p") {
            if (n)
                throw ParseError(line_no, "second header line");
            if (words.size() != 4 || words[1] != "is")
                throw ParseError(line_no, "malformed header, expected 'p is n m'");
            n = parse_count(words[2], line_no, "vertex count");
            m = parse_count(words[3], line_no, "edge count");
            edges.emplace(*n);
            continue;
        }
        if (!n)
            throw ParseError(line_no, "data before header 'p is n m'");
        if (words[0] == "e") {
            if (words.size() != 3)
                throw ParseError(line_no, "malformed edge line, expected 'e u v'");
            std::size_t u = parse_count(words[1], line_no, "vertex id");
            std::size_t v = parse_count(words[2], line_no, "vertex id");
            if (u == 0 || v == 0 || u > *n || v > *n)
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(*n));
            edges->add(u - 1, v - 1, line_no);
        } else if (words[0] == "l") {
            if (words.size() != 3)
                throw ParseError(line_no, "malformed label line, expected 'l v literal'");
            std::size_t v = parse_count(words[1], line_no, "vertex id");
            if (v == 0 || v > *n)
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(*n));
            long lit = parse_signed(words[2], line_no);
            if (lit == 0)
                throw ParseError(line_no, "label literal must be nonzero");
            labels.resize(*n);
            labels[v - 1] = Literal::from_dimacs(lit);
        } else {
            throw ParseError(line_no, "unknown line type '" + words[0] + "'");
        }
    }
    if (!n)
        throw ParseError(line_no, "missing header 'p is n m'");
    if (edges->size() != *m)
        throw ParseError(line_no, "header declares " + std::to_string(*m) + " edges, found " +
                                      std::to_string(edges->size()));
    return Graph(*n, edges->take(), std::move(labels));
}

std::string format_graph_text(const Graph& g)
{
    std::ostringstream out;
    out << "p is " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    for (Vertex v = 0; v < g.labels().size(); ++v)
        if (auto lit = g.label(v))
            out << "l " << v + 1 << ' ' << lit->to_dimacs() << '\n';
    return out.str();
}

Graph graph_from_json(const Json& doc)
{
    try {
        if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
            throw ParseError(0, "graph object needs fields 'n' and 'edges'");
        if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 0)
            throw ParseError(0, "'n' must be a nonnegative integer");
        auto n = doc["n"].get<std::size_t>();
        EdgeCollector edges(n);
        if (!doc["edges"].is_array())
            throw ParseError(0, "'edges' must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError(0, "edge entries must be [u, v] integer pairs");
            long u = e[0].get<long>(), v = e[1].get<long>();
            if (u < 0 || v < 0)
                throw ParseError(0, "negative vertex id");
            edges.add(static_cast<Vertex>(u), static_cast<Vertex>(v), 0);
        }
        std::vector<std::optional<Literal>> labels;
        if (doc.contains("labels")) {
            const auto& arr = doc["labels"];
            if (!arr.is_array() || arr.size() != n)
                throw ParseError(0, "'labels' must be an array of n literals");
            for (const auto& l : arr) {
                long lit = l.get<long>();
                labels.push_back(lit == 0 ? std::nullopt : std::optional<Literal>(Literal::from_dimacs(lit)));
            }
        }
        return Graph(n, edges.take(), std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed graph document: ") + e.what());
    }
}

Json graph_to_json(const Graph& g)
{
    Json doc;
    doc["n"] = g.vertex_count();
    Json edges = Json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    doc["edges"] = std::move(edges);
    if (g.has_labels()) {
        Json labels = Json::array();
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto lit = g.label(v);
            labels.push_back(lit ? lit->to_dimacs() : 0L);
        }
        doc["labels"] = std::move(labels);
    }
    return doc;
}

Graph parse_graph(std::string_view text)
{
    auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
    if (first != text.end() && *first == '{') {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(0, std::string("invalid JSON: ") + e.what());
        }
        return graph_from_json(doc);
    }
    return parse_graph_text(text);
}

} // namespace ispoly
