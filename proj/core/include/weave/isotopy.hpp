#ifndef WEAVE_ISOTOPY_HPP
#define WEAVE_ISOTOPY_HPP

#include <cstddef>
#include <unordered_map>

#include "weave/fingerprint.hpp"
#include "weave/matrix.hpp"
#include "weave/moves.hpp"

namespace weave {

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

/**
 * The full move-equivalence class of a diagram: breadth-first closure of
 * the seed under the translation generators (1,0), (0,1) and every legal
 * interchange. Keeps the predecessor of each state so a move sequence to
 * any member can be read back.
 */
class Orbit {
public:
    std::size_t size() const { return members_.size(); }
    const CrossingMatrix& seed() const { return members_.front(); }
    const CrossingMatrix& member(std::size_t k) const { return members_[k]; }
    const std::vector<CrossingMatrix>& members() const { return members_; }

    bool contains(const CrossingMatrix& M) const { return index_.count(M) > 0; }

    /// Index of M within the orbit; -1 when absent.
    std::ptrdiff_t find(const CrossingMatrix& M) const;

    /// Moves transforming the seed into member k.
    MoveSequence witness_to(std::size_t k) const;

    /// Index of the lexicographically least member.
    std::size_t canonical_index() const;

private:
    friend Orbit orbit(const CrossingMatrix&, std::size_t);
    friend class OrbitBuilder;

    std::vector<CrossingMatrix> members_;
    std::unordered_map<CrossingMatrix, std::size_t, MatrixHash> index_;
    std::vector<std::ptrdiff_t> parent_;
    std::vector<Move> parent_move_;
};

/// Enumerates the orbit of M. Throws BudgetExceeded past `cap` states,
/// never returning a truncated orbit. Requires at least one warp and weft.
Orbit orbit(const CrossingMatrix& M, std::size_t cap = kDefaultOrbitCap);

struct CanonicalForm {
    std::string canonical;   // text form of the least member
    std::size_t class_size;  // number of diagrams in the class

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Lexicographic minimum of to_text over the orbit of M. Two diagrams of
/// equal shape are isotopic exactly when their canonical forms agree.
CanonicalForm canonical_form(const CrossingMatrix& M, std::size_t cap = kDefaultOrbitCap);

/// Moves from M to its canonical representative.
MoveSequence canonical_witness(const CrossingMatrix& M, std::size_t cap = kDefaultOrbitCap);

/// Orbit membership, with a fingerprint fast-reject before any search.
/// Diagrams of different shape are never isotopic.
bool is_isotopic(const CrossingMatrix& A, const CrossingMatrix& B,
                 std::size_t cap = kDefaultOrbitCap);

/// A move sequence carrying A to B, validated by replay before returning.
/// Throws std::invalid_argument when A and B are not isotopic.
MoveSequence isotopy_witness(const CrossingMatrix& A, const CrossingMatrix& B,
                             std::size_t cap = kDefaultOrbitCap);

/// The sixteen diagram symmetries generated by warp/weft reflection,
/// complement and transpose_dual, including the identity. Duplicates are
/// removed, so fewer may be returned for symmetric inputs.
std::vector<CrossingMatrix> symmetry_images(const CrossingMatrix& M);

/// Canonical form of the equivalence class under moves plus the sixteen
/// symmetries; diagrams of transposed shapes can share a class. class_size
/// counts diagrams of both shapes.
CanonicalForm homeo_canonical_form(const CrossingMatrix& M, std::size_t cap = kDefaultOrbitCap);

}  // namespace weave

#endif  // WEAVE_ISOTOPY_HPP
