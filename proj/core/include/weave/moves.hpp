#ifndef WEAVE_MOVES_HPP
#define WEAVE_MOVES_HPP

#include <string>
#include <variant>
#include <vector>

#include "weave/matrix.hpp"

namespace weave {

/// Torus translation acting on both index sets: result(i,j) = M(i+da, j+db).
struct Translate {
    int da = 0;
    int db = 0;
    friend bool operator==(const Translate&, const Translate&) = default;
};

/// Interchange of warps at positions i and i+1 (cyclic, 0-based).
/// Legal only when the two rows are comparable.
struct SwapWarps {
    int i = 0;
    friend bool operator==(const SwapWarps&, const SwapWarps&) = default;
};

/// Interchange of wefts at positions j and j+1 (cyclic, 0-based).
struct SwapWefts {
    int j = 0;
    friend bool operator==(const SwapWefts&, const SwapWefts&) = default;
};

using Move = std::variant<Translate, SwapWarps, SwapWefts>;
using MoveSequence = std::vector<Move>;

/// "translate 1 0" / "swap-warps 2" / "swap-wefts 1" with 1-based positions.
std::string to_string(const Move& mv);

/// Translations are always legal; swaps need comparable neighbors.
/// Throws std::out_of_range for swap positions outside the matrix.
bool can_apply(const CrossingMatrix& M, const Move& mv);

/// Applies one move. Throws std::invalid_argument if the move is illegal.
CrossingMatrix apply_move(const CrossingMatrix& M, const Move& mv);

/// Applies a whole sequence, validating each step.
CrossingMatrix replay(const CrossingMatrix& M, const MoveSequence& moves);

/// A move undoing `mv` on the matrix apply_move(M, mv).
Move inverse(const CrossingMatrix& M, const Move& mv);

}  // namespace weave

#endif  // WEAVE_MOVES_HPP
