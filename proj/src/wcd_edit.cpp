#include "wcg/wcd_edit.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace wcg {

namespace {

// The midpoints of a P3 sit in N(u) ∩ N(v) while the midpoints of a P4 each
// miss one of the two neighborhoods, so a P3 midpoint never coincides with a
// P4 midpoint, and the first/second midpoints of two P4s never cross-match.
// Only same-position midpoints of two P4s can collide.

std::optional<HoleWitness> hole_from_paths(const Graph& t,
                                           const std::vector<ChordlessPath>& p3s,
                                           const std::vector<ChordlessPath>& p4s) {
    for (const auto& p3 : p3s) {
        int x = p3[1];
        for (const auto& p4 : p4s) {
            if (!t.has_edge(x, p4[1]) && !t.has_edge(x, p4[2])) {
                // u-x-v plus u-a-b-v closes an induced 5-cycle
                return HoleWitness{HoleKind::P3PlusP4, p3, p4};
            }
        }
    }
    for (std::size_t i = 0; i < p4s.size(); ++i) {
        int a = p4s[i][1], b = p4s[i][2];
        for (std::size_t j = i + 1; j < p4s.size(); ++j) {
            int c = p4s[j][1], d = p4s[j][2];
            if (a == c || b == d) continue;
            if (!t.has_edge(a, c) && !t.has_edge(a, d) && !t.has_edge(b, c) &&
                !t.has_edge(b, d)) {
                // the two P4s close an induced 6-cycle
                return HoleWitness{HoleKind::P4PlusP4, p4s[i], p4s[j]};
            }
        }
    }
    return std::nullopt;
}

std::optional<AntiholeWitness> antihole_from_paths(const Graph& t,
                                                   const std::vector<ChordlessPath>& p3s,
                                                   const std::vector<ChordlessPath>& p4s) {
    for (std::size_t i = 0; i < p3s.size(); ++i) {
        int x = p3s[i][1];
        for (std::size_t j = i + 1; j < p3s.size(); ++j) {
            int y = p3s[j][1];
            if (t.has_edge(x, y)) continue;
            for (const auto& p4 : p4s) {
                int a = p4[1], b = p4[2];
                bool xa = t.has_edge(x, a), xb = t.has_edge(x, b);
                bool ya = t.has_edge(y, a), yb = t.has_edge(y, b);
                // Exactly one chord per P3 midpoint, landing on distinct P4
                // midpoints; the six vertices then induce the complement of
                // a 6-cycle (every vertex has degree three).
                if (xa && yb && !xb && !ya) {
                    return AntiholeWitness{p3s[i], p3s[j], p4, Edge(x, a), Edge(y, b)};
                }
                if (xb && ya && !xa && !yb) {
                    return AntiholeWitness{p3s[i], p3s[j], p4, Edge(x, b), Edge(y, a)};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<HoleWitness> find_hole_config(const Graph& t, int u, int v) {
    return hole_from_paths(t, chordless_p3_between(t, u, v), chordless_p4_between(t, u, v));
}

std::optional<AntiholeWitness> find_antihole_config(const Graph& t, int u, int v) {
    return antihole_from_paths(t, chordless_p3_between(t, u, v),
                               chordless_p4_between(t, u, v));
}

DeletionCheck can_delete(Graph& t, Edge e) {
    if (!t.has_edge(e)) {
        throw std::invalid_argument("can_delete: edge not present in graph");
    }
    t.remove_edge(e);
    const auto p3s = chordless_p3_between(t, e.u, e.v);
    const auto p4s = chordless_p4_between(t, e.u, e.v);
    std::optional<RejectionWitness> witness;
    if (auto hole = hole_from_paths(t, p3s, p4s)) {
        witness = std::move(*hole);
    } else if (auto antihole = antihole_from_paths(t, p3s, p4s)) {
        witness = std::move(*antihole);
    }
    t.add_edge(e);
    return {!witness.has_value(), std::move(witness)};
}

DeletionOutcome chordal_to_weakly_chordal(const Graph& h,
                                          const std::vector<Edge>& fill_queue,
                                          std::vector<DeletionQueryLog>* query_log) {
    std::set<Edge> seen;
    for (Edge e : fill_queue) {
        if (!h.has_edge(e)) {
            throw std::invalid_argument("chordal_to_weakly_chordal: fill edge not in graph");
        }
        if (!seen.insert(e).second) {
            throw std::invalid_argument("chordal_to_weakly_chordal: duplicate fill edge");
        }
    }

    DeletionOutcome out{h, {}, {}, 0};
    Graph& t = out.final_graph;
    std::deque<Edge> queue(fill_queue.begin(), fill_queue.end());

    std::size_t prev_size = 0;
    std::size_t size = queue.size();
    while (prev_size != size && size != 0) {
        prev_size = size;
        // One round: a fixed-length pass over the snapshot, so edges pushed
        // back mid-round wait until the next round.
        for (std::size_t i = 0; i < prev_size; ++i) {
            Edge e = queue.front();
            queue.pop_front();
            t.remove_edge(e);
            const auto p3s = chordless_p3_between(t, e.u, e.v);
            const auto p4s = chordless_p4_between(t, e.u, e.v);
            if (query_log) {
                query_log->push_back({e.u, e.v, t.degree(e.u), t.degree(e.v),
                                      p3s.size(), p4s.size()});
            }
            bool blocked = hole_from_paths(t, p3s, p4s).has_value() ||
                           antihole_from_paths(t, p3s, p4s).has_value();
            if (blocked) {
                t.add_edge(e);
                queue.push_back(e);
            } else {
                out.deleted.push_back(e);
            }
        }
        ++out.rounds;
        size = queue.size();
    }
    out.retained.assign(queue.begin(), queue.end());
    return out;
}

}  // namespace wcg
