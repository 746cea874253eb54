#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "coronapd/family.hpp"
#include "coronapd/graph.hpp"

namespace coronapd {

// Where a corona vertex lives: the i-th center (the i-th vertex of G) or
// position `index` inside the i-th copy of H.
struct VertexLocus {
    bool is_center;
    int copy;
    int index;  // meaningful only for copy vertices

    bool operator==(const VertexLocus&) const = default;
};

// G (.) H with the canonical labeling: centers take ids 0..n1-1 in G's vertex
// order, copy i takes ids n1 + i*n2 .. n1 + (i+1)*n2 - 1 in H's vertex order.
// Immutable after construction.
class CoronaGraph {
public:
    CoronaGraph(Graph g, Graph h) : g_(std::move(g)), h_(std::move(h)), graph_(1) {
        if (!is_connected(g_))
            throw std::invalid_argument("corona requires a connected first factor");
        const int n1 = g_.order();
        const int n2 = h_.order();
        Graph c(n1 * (1 + n2));
        for (auto [u, v] : g_.edges()) c.add_edge(u, v);
        for (int i = 0; i < n1; ++i) {
            const int base = n1 + i * n2;
            for (auto [u, v] : h_.edges()) c.add_edge(base + u, base + v);
            for (int j = 0; j < n2; ++j) c.add_edge(i, base + j);
        }
        graph_ = std::move(c);
    }

    const Graph& graph() const { return graph_; }
    const Graph& g() const { return g_; }
    const Graph& h() const { return h_; }

    int n1() const { return g_.order(); }
    int n2() const { return h_.order(); }
    int order() const { return graph_.order(); }

    Vertex center(int i) const {
        if (i < 0 || i >= n1()) throw std::invalid_argument("center index out of range");
        return i;
    }

    // Vertex id of the j-th vertex of copy i.
    Vertex copy_vertex(int i, int j) const {
        if (i < 0 || i >= n1() || j < 0 || j >= n2())
            throw std::invalid_argument("copy position out of range");
        return n1() + i * n2() + j;
    }

    std::vector<Vertex> copy(int i) const {
        std::vector<Vertex> out(n2());
        for (int j = 0; j < n2(); ++j) out[j] = copy_vertex(i, j);
        return out;
    }

    VertexLocus locate(Vertex v) const {
        if (v < 0 || v >= order()) throw std::invalid_argument("vertex id out of range");
        if (v < n1()) return VertexLocus{true, v, -1};
        const int off = v - n1();
        return VertexLocus{false, off / n2(), off % n2()};
    }

private:
    Graph g_;
    Graph h_;
    Graph graph_;
};

inline CoronaGraph corona(const Graph& g, const Graph& h) { return CoronaGraph(g, h); }

// Spec grammar: a family spec or corona(SPEC,SPEC). Nesting depth is 1;
// corona of corona is rejected.
struct GraphSpec {
    std::variant<FamilySpec, std::pair<FamilySpec, FamilySpec>> value;

    bool is_corona() const { return value.index() == 1; }
};

inline std::string to_string(const GraphSpec& spec) {
    if (const auto* fam = std::get_if<FamilySpec>(&spec.value)) return to_string(*fam);
    const auto& [g, h] = std::get<std::pair<FamilySpec, FamilySpec>>(spec.value);
    return "corona(" + to_string(g) + "," + to_string(h) + ")";
}

inline GraphSpec parse_graph_spec(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);

    constexpr std::string_view kPrefix = "corona(";
    if (compact.rfind(kPrefix, 0) == 0) {
        if (compact.back() != ')')
            throw std::invalid_argument("malformed corona spec: " + std::string(text));
        const std::string_view inner(compact.data() + kPrefix.size(),
                                     compact.size() - kPrefix.size() - 1);
        const size_t comma = inner.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("malformed corona spec: " + std::string(text));
        const std::string_view left = inner.substr(0, comma);
        const std::string_view right = inner.substr(comma + 1);
        if (left.find("corona(") != std::string_view::npos ||
            right.find("corona(") != std::string_view::npos ||
            right.find(',') != std::string_view::npos)
            throw std::invalid_argument("nested corona specs are not supported: " +
                                        std::string(text));
        return GraphSpec{std::make_pair(parse_family_spec(left), parse_family_spec(right))};
    }
    return GraphSpec{parse_family_spec(compact)};
}

inline Graph build_graph(const GraphSpec& spec) {
    if (const auto* fam = std::get_if<FamilySpec>(&spec.value)) return build_family(*fam);
    const auto& [gs, hs] = std::get<std::pair<FamilySpec, FamilySpec>>(spec.value);
    return corona(build_family(gs), build_family(hs)).graph();
}

inline Graph build_graph(std::string_view text) { return build_graph(parse_graph_spec(text)); }

}  // namespace coronapd
