#include "wcg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wcg {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) {
        throw std::invalid_argument("Edge: endpoints must differ, got {" +
                                    std::to_string(a) + "," + std::to_string(b) + "}");
    }
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("Graph: vertex count must be non-negative");
    }
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [a, b] : edges) {
        add_edge(a, b);
    }
}

void Graph::require_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex id out of range: " + std::to_string(v) +
                                    " (n = " + std::to_string(n_) + ")");
    }
}

bool Graph::has_edge(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    if (u == v) return false;
    return matrix_[static_cast<std::size_t>(u) * n_ + v];
}

int Graph::degree(int v) const {
    require_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
}

namespace {

void insert_sorted(std::vector<int>& list, int x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
}

void erase_sorted(std::vector<int>& list, int x) {
    list.erase(std::lower_bound(list.begin(), list.end(), x));
}

}  // namespace

bool Graph::add_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) {
        throw std::invalid_argument("add_edge: self-loops are not allowed");
    }
    std::size_t uv = static_cast<std::size_t>(u) * n_ + v;
    if (matrix_[uv]) return false;
    matrix_[uv] = true;
    matrix_[static_cast<std::size_t>(v) * n_ + u] = true;
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++m_;
    return true;
}

bool Graph::remove_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) return false;
    std::size_t uv = static_cast<std::size_t>(u) * n_ + v;
    if (!matrix_[uv]) return false;
    matrix_[uv] = false;
    matrix_[static_cast<std::size_t>(v) * n_ + u] = false;
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --m_;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

void Graph::check_invariants() const {
    long long half_degrees = 0;
    for (int u = 0; u < n_; ++u) {
        if (!std::is_sorted(adj_[u].begin(), adj_[u].end())) {
            throw std::logic_error("neighbor list not sorted");
        }
        if (std::adjacent_find(adj_[u].begin(), adj_[u].end()) != adj_[u].end()) {
            throw std::logic_error("duplicate neighbor entry");
        }
        half_degrees += static_cast<long long>(adj_[u].size());
        for (int v = 0; v < n_; ++v) {
            bool m_uv = matrix_[static_cast<std::size_t>(u) * n_ + v];
            bool m_vu = matrix_[static_cast<std::size_t>(v) * n_ + u];
            bool listed = std::binary_search(adj_[u].begin(), adj_[u].end(), v);
            if (m_uv != m_vu) throw std::logic_error("adjacency matrix not symmetric");
            if (m_uv != listed) throw std::logic_error("matrix and neighbor lists disagree");
            if (u == v && m_uv) throw std::logic_error("self-loop present");
        }
    }
    if (half_degrees != 2LL * m_) {
        throw std::logic_error("edge count does not match degree sum");
    }
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> keep = vertices;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument("induced_subgraph: vertex out of range: " +
                                        std::to_string(v));
        }
    }
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        position[keep[i]] = static_cast<int>(i);
    }
    Graph sub(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (int w : g.neighbors(keep[i])) {
            int j = position[w];
            if (j > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), j);
        }
    }
    return {std::move(sub), std::move(keep)};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> components;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> members;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    return components;
}

}  // namespace wcg
