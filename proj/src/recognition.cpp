#include "wcg/recognition.hpp"

namespace wcg {

RecognitionVerdict is_weakly_chordal(const Graph& g) {
    if (auto hole = find_chordless_cycle(g, 5)) {
        return {false, std::move(hole), HoleLocation::InGraph};
    }
    if (auto hole = find_chordless_cycle(complement(g), 5)) {
        return {false, std::move(hole), HoleLocation::InComplement};
    }
    return {true, std::nullopt, HoleLocation::InGraph};
}

bool is_chordal(const Graph& g) {
    return !find_chordless_cycle(g, 4).has_value();
}

}  // namespace wcg
