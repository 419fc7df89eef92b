#include <stdexcept>

#include "wcg/graph.hpp"

namespace wcg {

namespace {

void require_nonadjacent_pair(const Graph& g, int u, int v) {
    if (u == v) {
        throw std::invalid_argument("path query: endpoints must differ");
    }
    if (g.has_edge(u, v)) {
        throw std::invalid_argument("path query: endpoints must be non-adjacent");
    }
}

}  // namespace

bool is_chordless_path(const Graph& g, const ChordlessPath& path) {
    if (path.size() < 2) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] < 0 || path[i] >= g.vertex_count()) return false;
        for (std::size_t j = i + 1; j < path.size(); ++j) {
            bool adjacent = g.has_edge(path[i], path[j]);
            if (j == i + 1 && !adjacent) return false;
            if (j > i + 1 && adjacent) return false;
            if (path[i] == path[j]) return false;
        }
    }
    return true;
}

std::vector<ChordlessPath> chordless_p3_between(const Graph& g, int u, int v) {
    require_nonadjacent_pair(g, u, v);
    std::vector<ChordlessPath> out;
    for (int x : g.neighbors(u)) {
        if (g.has_edge(x, v)) out.push_back({u, x, v});
    }
    return out;
}

std::vector<ChordlessPath> chordless_p4_between(const Graph& g, int u, int v) {
    require_nonadjacent_pair(g, u, v);
    std::vector<ChordlessPath> out;
    for (int x : g.neighbors(u)) {
        if (g.has_edge(x, v)) continue;  // x-v would be a chord
        for (int y : g.neighbors(v)) {
            if (g.has_edge(y, u)) continue;  // u-y would be a chord
            // x != y since x avoids v's neighborhood and y lies in it; with
            // u,v non-adjacent these two conditions make (u,x,y,v) induced.
            if (g.has_edge(x, y)) out.push_back({u, x, y, v});
        }
    }
    return out;
}

namespace {

// Grows an induced path rooted at path[0]; every other vertex is larger than
// the root, so each induced cycle is searched from its minimum vertex only.
bool extend_induced_path(const Graph& g, std::vector<int>& path,
                         std::vector<char>& on_path, int min_len,
                         std::vector<int>& found) {
    const int root = path.front();
    const int last = path.back();
    for (int w : g.neighbors(last)) {
        if (w <= root || on_path[w]) continue;
        if (path.size() >= 2) {
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (g.has_edge(w, path[i])) {
                    chord = true;
                    break;
                }
            }
            if (chord) continue;
            if (g.has_edge(w, root)) {
                if (static_cast<int>(path.size()) + 1 >= min_len) {
                    found = path;
                    found.push_back(w);
                    return true;
                }
                // Closing edge arrived too early; going through w instead
                // would keep {root,w} as a chord, so w is a dead end here.
                continue;
            }
        }
        path.push_back(w);
        on_path[w] = 1;
        if (extend_induced_path(g, path, on_path, min_len, found)) return true;
        path.pop_back();
        on_path[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_chordless_cycle(const Graph& g, int min_len) {
    if (min_len < 4) {
        throw std::invalid_argument("find_chordless_cycle: min_len must be >= 4");
    }
    const int n = g.vertex_count();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        on_path[s] = 1;
        std::vector<int> found;
        if (extend_induced_path(g, path, on_path, min_len, found)) {
            return found;
        }
        on_path[s] = 0;
    }
    return std::nullopt;
}

}  // namespace wcg
