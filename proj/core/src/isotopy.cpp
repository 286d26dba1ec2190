#include "weave/isotopy.hpp"

#include <algorithm>
#include <set>

namespace weave {

namespace {

void check_nondegenerate(const CrossingMatrix& M, const char* what) {
    if (M.warps() < 1 || M.wefts() < 1) {
        throw std::invalid_argument(std::string(what) + " requires at least one warp and one weft");
    }
}

void legal_moves(const CrossingMatrix& M, std::vector<Move>& out) {
    out.clear();
    out.emplace_back(Translate{1, 0});
    out.emplace_back(Translate{0, 1});
    if (M.warps() >= 2) {
        for (int i = 0; i < M.warps(); ++i) {
            if (M.rows_comparable(i, (i + 1) % M.warps())) out.emplace_back(SwapWarps{i});
        }
    }
    if (M.wefts() >= 2) {
        for (int j = 0; j < M.wefts(); ++j) {
            if (M.cols_comparable(j, (j + 1) % M.wefts())) out.emplace_back(SwapWefts{j});
        }
    }
}

}  // namespace

// Shared BFS: expands the orbit of `seed`; stops early when `target` is
// reached (if given). Returns the target's index, or -1.
class OrbitBuilder {
public:
    static std::ptrdiff_t expand(Orbit& orb, const CrossingMatrix& seed,
                                 const CrossingMatrix* target, std::size_t cap);
};

std::ptrdiff_t OrbitBuilder::expand(Orbit& orb, const CrossingMatrix& seed,
                                    const CrossingMatrix* target, std::size_t cap) {
    orb.members_.push_back(seed);
    orb.index_.emplace(seed, 0);
    orb.parent_.push_back(-1);
    orb.parent_move_.push_back(Translate{0, 0});
    if (target && seed == *target) return 0;

    std::vector<Move> moves;
    for (std::size_t head = 0; head < orb.members_.size(); ++head) {
        const CrossingMatrix cur = orb.members_[head];  // copy: members_ may reallocate
        legal_moves(cur, moves);
        for (const Move& mv : moves) {
            CrossingMatrix next = apply_move(cur, mv);
            auto [it, inserted] = orb.index_.emplace(std::move(next), orb.members_.size());
            if (!inserted) continue;
            if (orb.members_.size() + 1 > cap) {
                throw BudgetExceeded("orbit exceeds state budget of " + std::to_string(cap));
            }
            orb.members_.push_back(it->first);
            orb.parent_.push_back(static_cast<std::ptrdiff_t>(head));
            orb.parent_move_.push_back(mv);
            if (target && it->first == *target) {
                return static_cast<std::ptrdiff_t>(orb.members_.size() - 1);
            }
        }
    }
    return -1;
}

std::ptrdiff_t Orbit::find(const CrossingMatrix& M) const {
    auto it = index_.find(M);
    return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

MoveSequence Orbit::witness_to(std::size_t k) const {
    MoveSequence path;
    for (std::ptrdiff_t cur = static_cast<std::ptrdiff_t>(k); parent_[cur] >= 0;
         cur = parent_[cur]) {
        path.push_back(parent_move_[cur]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::size_t Orbit::canonical_index() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < members_.size(); ++k) {
        if (lex_less(members_[k], members_[best])) best = k;
    }
    return best;
}

Orbit orbit(const CrossingMatrix& M, std::size_t cap) {
    check_nondegenerate(M, "orbit");
    Orbit orb;
    OrbitBuilder::expand(orb, M, nullptr, cap);
    return orb;
}

CanonicalForm canonical_form(const CrossingMatrix& M, std::size_t cap) {
    const Orbit orb = orbit(M, cap);
    return {to_text(orb.member(orb.canonical_index())), orb.size()};
}

MoveSequence canonical_witness(const CrossingMatrix& M, std::size_t cap) {
    const Orbit orb = orbit(M, cap);
    return orb.witness_to(orb.canonical_index());
}

bool is_isotopic(const CrossingMatrix& A, const CrossingMatrix& B, std::size_t cap) {
    if (A.warps() != B.warps() || A.wefts() != B.wefts()) return false;
    check_nondegenerate(A, "is_isotopic");
    if (A == B) return true;
    if (!(fingerprint(A) == fingerprint(B))) return false;
    Orbit orb;
    return OrbitBuilder::expand(orb, A, &B, cap) >= 0;
}

MoveSequence isotopy_witness(const CrossingMatrix& A, const CrossingMatrix& B, std::size_t cap) {
    if (A.warps() != B.warps() || A.wefts() != B.wefts()) {
        throw std::invalid_argument("isotopy_witness: diagrams are not isotopic (shape mismatch)");
    }
    check_nondegenerate(A, "isotopy_witness");
    if (!(fingerprint(A) == fingerprint(B))) {
        throw std::invalid_argument("isotopy_witness: diagrams are not isotopic");
    }
    Orbit orb;
    const std::ptrdiff_t hit = OrbitBuilder::expand(orb, A, &B, cap);
    if (hit < 0) throw std::invalid_argument("isotopy_witness: diagrams are not isotopic");
    MoveSequence path = orb.witness_to(static_cast<std::size_t>(hit));
    if (!(replay(A, path) == B)) {
        throw std::logic_error("isotopy_witness: replay check failed");
    }
    return path;
}

std::vector<CrossingMatrix> symmetry_images(const CrossingMatrix& M) {
    std::vector<CrossingMatrix> images;
    images.reserve(16);
    for (const CrossingMatrix& base : {M, transpose_dual(M)}) {
        for (int mask = 0; mask < 8; ++mask) {
            CrossingMatrix img = base;
            if (mask & 1) img = reflect_warps(img);
            if (mask & 2) img = reflect_wefts(img);
            if (mask & 4) img = complement(img);
            if (std::find(images.begin(), images.end(), img) == images.end()) {
                images.push_back(std::move(img));
            }
        }
    }
    return images;
}

CanonicalForm homeo_canonical_form(const CrossingMatrix& M, std::size_t cap) {
    check_nondegenerate(M, "homeo_canonical_form");
    std::string best;
    std::size_t total = 0;
    std::set<std::string> seen_classes;
    for (const CrossingMatrix& img : symmetry_images(M)) {
        CanonicalForm cf = canonical_form(img, cap);
        if (seen_classes.insert(cf.canonical).second) total += cf.class_size;
        if (best.empty() || cf.canonical < best) best = std::move(cf.canonical);
    }
    return {best, total};
}

}  // namespace weave
