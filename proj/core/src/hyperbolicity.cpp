#include "weave/hyperbolicity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <queue>
#include <set>

namespace weave {

namespace {

// Tarjan, iterative. Fills comp[v] with SCC ids; edges always point from a
// higher id to a lower or equal one (reverse topological numbering).
int tarjan_scc(int V, const std::vector<std::vector<int>>& adj, std::vector<int>& comp) {
    std::vector<int> index(V, -1), low(V, 0), stack;
    std::vector<char> on_stack(V, 0);
    std::vector<std::pair<int, int>> call;  // (vertex, next child slot)
    comp.assign(V, -1);
    int next_index = 0, ncomp = 0;
    stack.reserve(V);

    for (int root = 0; root < V; ++root) {
        if (index[root] != -1) continue;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            const int v = call.back().first;
            const int ci = call.back().second;
            if (ci < static_cast<int>(adj[v].size())) {
                ++call.back().second;
                const int w = adj[v][ci];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
                call.pop_back();
                if (!call.empty()) {
                    const int p = call.back().first;
                    low[p] = std::min(low[p], low[v]);
                }
            }
        }
    }
    return ncomp;
}

// SCCs of the layer digraph, bottom to top. Ties between unordered layers
// go to the one holding the smallest ComponentId (warps before wefts).
std::vector<std::vector<ComponentId>> condensation_layers(const CrossingMatrix& M) {
    const LayerDigraph G = layer_digraph(M);
    const int V = G.vertex_count();
    std::vector<std::vector<int>> adj(V);
    for (const auto& [from, to] : G.edges) adj[from].push_back(to);

    std::vector<int> comp;
    const int ncomp = tarjan_scc(V, adj, comp);

    std::vector<std::vector<ComponentId>> vertices_of(ncomp);
    for (int v = 0; v < V; ++v) vertices_of[comp[v]].push_back(G.vertex(v));
    for (auto& vs : vertices_of) std::sort(vs.begin(), vs.end());

    std::vector<std::set<int>> cadj(ncomp);
    std::vector<int> indeg(ncomp, 0);
    for (const auto& [from, to] : G.edges) {
        if (comp[from] != comp[to] && cadj[comp[from]].insert(comp[to]).second) {
            ++indeg[comp[to]];
        }
    }

    using Entry = std::pair<ComponentId, int>;  // (smallest member, comp)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (int c = 0; c < ncomp; ++c) {
        if (indeg[c] == 0) ready.emplace(vertices_of[c].front(), c);
    }
    std::vector<std::vector<ComponentId>> layers;
    layers.reserve(ncomp);
    while (!ready.empty()) {
        const int c = ready.top().second;
        ready.pop();
        layers.push_back(vertices_of[c]);
        for (int d : cadj[c]) {
            if (--indeg[d] == 0) ready.emplace(vertices_of[d].front(), d);
        }
    }
    return layers;
}

constexpr std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// ---- parallel pair machinery on a cyclic arrangement of bitmask lines ----

struct PairHit {
    int first = 0;
    int second = 0;
    bool forward = true;  // cleared arc: first+1..second-1, else the wrap side
};

std::optional<PairHit> find_reachable_pair(const std::vector<std::uint64_t>& lines) {
    const int k = static_cast<int>(lines.size());
    for (int p = 0; p < k; ++p) {
        for (int q = p + 1; q < k; ++q) {
            if (lines[p] != lines[q]) continue;
            const std::uint64_t f = lines[p];
            bool clear = true;
            for (int t = p + 1; t < q && clear; ++t) clear = comparable_bits(lines[t], f);
            if (clear) return PairHit{p, q, true};
            clear = true;
            for (int t = (q + 1) % k; t != p && clear; t = (t + 1) % k) {
                clear = comparable_bits(lines[t], f);
            }
            if (clear) return PairHit{p, q, false};
        }
    }
    return std::nullopt;
}

std::vector<int> arc_positions(const PairHit& hit, int k) {
    std::vector<int> arc;
    if (hit.forward) {
        for (int t = hit.first + 1; t < hit.second; ++t) arc.push_back(t);
    } else {
        for (int t = (hit.second + 1) % k; t != hit.first; t = (t + 1) % k) arc.push_back(t);
    }
    return arc;
}

// Walks the line at `first` across the cleared arc until it neighbors `second`.
MoveSequence clear_arc_moves(ComponentKind kind, int k, const PairHit& hit) {
    MoveSequence moves;
    auto push = [&moves, kind](int pos) {
        if (kind == ComponentKind::Warp)
            moves.emplace_back(SwapWarps{pos});
        else
            moves.emplace_back(SwapWefts{pos});
    };
    if (hit.forward) {
        for (int p = hit.first; p + 1 < hit.second; ++p) push(p);
    } else {
        const int steps = hit.first + k - hit.second - 1;
        for (int s = 1; s <= steps; ++s) push(((hit.first - s) % k + k) % k);
    }
    return moves;
}

std::vector<std::uint64_t> row_lines(const CrossingMatrix& M) {
    std::vector<std::uint64_t> lines(M.warps());
    for (int i = 0; i < M.warps(); ++i) lines[i] = M.row_bits(i);
    return lines;
}

std::vector<std::uint64_t> col_lines(const CrossingMatrix& M) {
    std::vector<std::uint64_t> lines(M.wefts());
    for (int j = 0; j < M.wefts(); ++j) lines[j] = M.col_bits(j);
    return lines;
}

// Groups the positions carrying each repeated line value into maximal runs
// not separated by a line incomparable with that value. Families of size
// >= 2 are returned ordered by smallest member.
std::vector<std::vector<int>> find_families(const std::vector<std::uint64_t>& lines) {
    const int k = static_cast<int>(lines.size());
    std::vector<std::vector<int>> families;
    std::map<std::uint64_t, std::vector<int>> by_value;
    for (int p = 0; p < k; ++p) by_value[lines[p]].push_back(p);

    for (const auto& [value, positions] : by_value) {
        if (positions.size() < 2) continue;
        std::vector<char> blocked(k, 0);
        bool any_blocked = false;
        for (int t = 0; t < k; ++t) {
            if (!comparable_bits(lines[t], value)) {
                blocked[t] = 1;
                any_blocked = true;
            }
        }
        if (!any_blocked) {
            families.push_back(positions);
            continue;
        }
        // segment id = position of the nearest blocker at or before p, cyclically
        std::map<int, std::vector<int>> segments;
        for (int p : positions) {
            int b = p;
            while (!blocked[b]) b = (b - 1 + k) % k;  // terminates: a blocker exists
            segments[b].push_back(p);
        }
        for (auto& [b, group] : segments) {
            if (group.size() >= 2) families.push_back(std::move(group));
        }
    }
    std::sort(families.begin(), families.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return families;
}

std::optional<ParallelWitness> reachable_pair_of_kind(const CrossingMatrix& M,
                                                      ComponentKind kind) {
    const auto lines = kind == ComponentKind::Warp ? row_lines(M) : col_lines(M);
    if (lines.size() < 2) return std::nullopt;
    const auto hit = find_reachable_pair(lines);
    if (!hit) return std::nullopt;
    ParallelWitness w;
    w.kind = kind;
    w.first = hit->first;
    w.second = hit->second;
    w.arc = arc_positions(*hit, static_cast<int>(lines.size()));
    w.moves = clear_arc_moves(kind, static_cast<int>(lines.size()), *hit);
    return w;
}

void check_nondegenerate(const CrossingMatrix& M, const char* what) {
    if (M.warps() < 1 || M.wefts() < 1) {
        throw std::invalid_argument(std::string(what) + " requires at least one warp and one weft");
    }
}

}  // namespace

LayerDigraph layer_digraph(const CrossingMatrix& M) {
    LayerDigraph G;
    G.warps = M.warps();
    G.wefts = M.wefts();
    G.edges.reserve(static_cast<std::size_t>(M.warps()) * M.wefts());
    for (int i = 0; i < M.warps(); ++i) {
        for (int j = 0; j < M.wefts(); ++j) {
            const int warp = i, weft = M.warps() + j;
            if (M.at(i, j)) {
                G.edges.emplace_back(weft, warp);  // warp above
            } else {
                G.edges.emplace_back(warp, weft);  // warp below
            }
        }
    }
    return G;
}

LayerVerdict is_layered(const CrossingMatrix& M) {
    if (M.warps() + M.wefts() == 0) throw std::invalid_argument("is_layered: empty weave");
    LayerVerdict v;
    v.layers = condensation_layers(M);
    v.layered = v.layers.size() >= 2;
    return v;
}

bool is_layered_flag(const CrossingMatrix& M) {
    const int m = M.warps(), n = M.wefts(), V = m + n;
    if (V == 0) throw std::invalid_argument("is_layered: empty weave");
    if (V > 64) return is_layered(M).layered;

    std::array<std::uint64_t, 64> out{}, in{};
    const std::uint64_t rmask = low_mask(n), cmask = low_mask(m);
    for (int i = 0; i < m; ++i) {
        const std::uint64_t row = M.row_bits(i);
        out[i] = (~row & rmask) << m;
        in[i] = row << m;
    }
    for (int j = 0; j < n; ++j) {
        const std::uint64_t col = M.col_bits(j);
        out[m + j] = col;
        in[m + j] = ~col & cmask;
    }

    const std::uint64_t all = low_mask(V);
    for (const auto& nbr : {out, in}) {
        std::uint64_t reached = 1, frontier = 1;
        while (frontier != 0) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f != 0) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= nbr[v];
            }
            frontier = next & ~reached;
            reached |= frontier;
        }
        if (reached != all) return true;  // not strongly connected
    }
    return false;
}

bool verify_layering(const CrossingMatrix& M, const LayerVerdict& v) {
    const int m = M.warps(), n = M.wefts();
    std::vector<int> warp_layer(m, -1), weft_layer(n, -1);
    for (std::size_t l = 0; l < v.layers.size(); ++l) {
        for (const ComponentId& id : v.layers[l]) {
            auto& slot = id.kind == ComponentKind::Warp ? warp_layer : weft_layer;
            const int count = id.kind == ComponentKind::Warp ? m : n;
            if (id.index < 0 || id.index >= count) return false;
            if (slot[id.index] != -1) return false;  // duplicated component
            slot[id.index] = static_cast<int>(l);
        }
    }
    for (int i = 0; i < m; ++i)
        if (warp_layer[i] == -1) return false;
    for (int j = 0; j < n; ++j)
        if (weft_layer[j] == -1) return false;
    if (v.layered != (v.layers.size() >= 2)) return false;

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (warp_layer[i] > weft_layer[j] && M.at(i, j) != 1) return false;
            if (warp_layer[i] < weft_layer[j] && M.at(i, j) != 0) return false;
        }
    }
    return true;
}

std::optional<ParallelWitness> parallel_pair_reachable(const CrossingMatrix& M) {
    check_nondegenerate(M, "parallel_pair_reachable");
    if (auto w = reachable_pair_of_kind(M, ComponentKind::Warp)) return w;
    return reachable_pair_of_kind(M, ComponentKind::Weft);
}

bool has_reachable_parallel_pair(const CrossingMatrix& M) {
    if (M.warps() >= 2 && find_reachable_pair(row_lines(M))) return true;
    return M.wefts() >= 2 && find_reachable_pair(col_lines(M)).has_value();
}

std::optional<ParallelWitness> parallel_pair_oracle(const CrossingMatrix& M, std::size_t cap) {
    check_nondegenerate(M, "parallel_pair_oracle");
    const int m = M.warps(), n = M.wefts();

    auto adjacent_equal = [m, n](const CrossingMatrix& S) -> std::optional<std::pair<ComponentKind, int>> {
        if (m >= 2) {
            for (int i = 0; i < m; ++i) {
                if (S.row_bits(i) == S.row_bits((i + 1) % m)) return {{ComponentKind::Warp, i}};
            }
        }
        if (n >= 2) {
            for (int j = 0; j < n; ++j) {
                if (S.col_bits(j) == S.col_bits((j + 1) % n)) return {{ComponentKind::Weft, j}};
            }
        }
        return std::nullopt;
    };

    std::vector<CrossingMatrix> members{M};
    std::unordered_map<CrossingMatrix, std::size_t, MatrixHash> index{{M, 0}};
    std::vector<std::ptrdiff_t> parent{-1};
    std::vector<Move> parent_move{Translate{0, 0}};

    for (std::size_t head = 0; head < members.size(); ++head) {
        const CrossingMatrix cur = members[head];
        if (auto hit = adjacent_equal(cur)) {
            MoveSequence path;
            for (std::ptrdiff_t at = static_cast<std::ptrdiff_t>(head); parent[at] >= 0;
                 at = parent[at]) {
                path.push_back(parent_move[at]);
            }
            std::reverse(path.begin(), path.end());

            // positions are permuted by the swaps; recover the original pair
            const auto [kind, pos] = *hit;
            const int k = kind == ComponentKind::Warp ? m : n;
            std::vector<int> at_position(static_cast<std::size_t>(k));
            for (int t = 0; t < k; ++t) at_position[t] = t;
            for (const Move& mv : path) {
                if (kind == ComponentKind::Warp) {
                    if (const auto* sw = std::get_if<SwapWarps>(&mv)) {
                        std::swap(at_position[sw->i], at_position[(sw->i + 1) % k]);
                    }
                } else {
                    if (const auto* sw = std::get_if<SwapWefts>(&mv)) {
                        std::swap(at_position[sw->j], at_position[(sw->j + 1) % k]);
                    }
                }
            }
            ParallelWitness w;
            w.kind = kind;
            w.first = at_position[pos];
            w.second = at_position[(pos + 1) % k];
            if (w.first > w.second) std::swap(w.first, w.second);
            w.moves = std::move(path);
            return w;
        }

        std::vector<Move> moves;
        if (m >= 2) {
            for (int i = 0; i < m; ++i)
                if (cur.rows_comparable(i, (i + 1) % m)) moves.emplace_back(SwapWarps{i});
        }
        if (n >= 2) {
            for (int j = 0; j < n; ++j)
                if (cur.cols_comparable(j, (j + 1) % n)) moves.emplace_back(SwapWefts{j});
        }
        for (const Move& mv : moves) {
            CrossingMatrix next = apply_move(cur, mv);
            auto [it, inserted] = index.emplace(std::move(next), members.size());
            if (!inserted) continue;
            if (members.size() + 1 > cap) {
                throw BudgetExceeded("interchange orbit exceeds state budget of " +
                                     std::to_string(cap));
            }
            members.push_back(it->first);
            parent.push_back(static_cast<std::ptrdiff_t>(head));
            parent_move.push_back(mv);
        }
    }
    return std::nullopt;
}

bool verify_parallel_witness(const CrossingMatrix& M, const ParallelWitness& w) {
    const int k = w.kind == ComponentKind::Warp ? M.warps() : M.wefts();
    if (k < 2) return false;
    if (w.first < 0 || w.second < 0 || w.first >= k || w.second >= k || w.first == w.second) {
        return false;
    }
    int p = w.first, q = w.second;
    CrossingMatrix cur = M;
    try {
        for (const Move& mv : w.moves) {
            cur = apply_move(cur, mv);
            if (const auto* tr = std::get_if<Translate>(&mv)) {
                const int shift = w.kind == ComponentKind::Warp ? tr->da : tr->db;
                p = ((p - shift) % k + k) % k;
                q = ((q - shift) % k + k) % k;
            } else if (const auto* sw = std::get_if<SwapWarps>(&mv)) {
                if (w.kind == ComponentKind::Warp) {
                    const int a = sw->i, b = (sw->i + 1) % k;
                    if (p == a) p = b; else if (p == b) p = a;
                    if (q == a) q = b; else if (q == b) q = a;
                }
            } else if (const auto* sf = std::get_if<SwapWefts>(&mv)) {
                if (w.kind == ComponentKind::Weft) {
                    const int a = sf->j, b = (sf->j + 1) % k;
                    if (p == a) p = b; else if (p == b) p = a;
                    if (q == a) q = b; else if (q == b) q = a;
                }
            }
        }
    } catch (const std::exception&) {
        return false;  // an illegal move in the sequence
    }
    if ((q + 1) % k != p && (p + 1) % k != q) return false;
    return w.kind == ComponentKind::Warp ? cur.row_bits(p) == cur.row_bits(q)
                                         : cur.col_bits(p) == cur.col_bits(q);
}

HyperbolicityVerdict is_hyperbolic(const CrossingMatrix& M) {
    HyperbolicityVerdict v;
    if (M.warps() == 0 || M.wefts() == 0) {
        v.kind = HyperbolicityVerdict::Kind::NotApplicable;
        return v;
    }
    LayerVerdict layering = is_layered(M);
    if (layering.layered) {
        v.kind = HyperbolicityVerdict::Kind::NotHyperbolicLayered;
        v.layering = std::move(layering);
        return v;
    }
    if (auto w = parallel_pair_reachable(M)) {
        v.kind = HyperbolicityVerdict::Kind::NotHyperbolicParallel;
        v.parallel = std::move(w);
        return v;
    }
    v.kind = HyperbolicityVerdict::Kind::Hyperbolic;
    return v;
}

bool is_hyperbolic_flag(const CrossingMatrix& M) {
    if (M.warps() == 0 || M.wefts() == 0) return false;
    return !is_layered_flag(M) && !has_reachable_parallel_pair(M);
}

bool is_pi_hyperbolic(const CrossingMatrix& M) { return is_hyperbolic(M).hyperbolic(); }

bool no_adjacent_comparable(const CrossingMatrix& M) {
    if (M.warps() < 2 || M.wefts() < 2) {
        throw std::invalid_argument("no_adjacent_comparable requires at least two warps and wefts");
    }
    for (int i = 0; i < M.warps(); ++i) {
        if (M.rows_comparable(i, (i + 1) % M.warps())) return false;
    }
    for (int j = 0; j < M.wefts(); ++j) {
        if (M.cols_comparable(j, (j + 1) % M.wefts())) return false;
    }
    return true;
}

namespace {

struct SubWeave {
    CrossingMatrix M;
    std::vector<std::optional<ComponentId>> rows;  // original id per warp slot
    std::vector<std::optional<ComponentId>> cols;
};

SubWeave restrict_to(const SubWeave& w, const std::vector<int>& row_pos,
                     const std::vector<int>& col_pos) {
    SubWeave sub;
    sub.M = CrossingMatrix(static_cast<int>(row_pos.size()), static_cast<int>(col_pos.size()));
    for (std::size_t a = 0; a < row_pos.size(); ++a) {
        for (std::size_t b = 0; b < col_pos.size(); ++b) {
            sub.M.set(static_cast<int>(a), static_cast<int>(b), w.M.at(row_pos[a], col_pos[b]));
        }
    }
    for (int p : row_pos) sub.rows.push_back(w.rows[p]);
    for (int p : col_pos) sub.cols.push_back(w.cols[p]);
    return sub;
}

void process_subweave(const SubWeave& w, std::vector<JsjPiece>& out) {
    const int m = w.M.warps(), n = w.M.wefts();
    if (m + n == 0) return;

    // 1) split along the layering witness; consecutive single-kind layers
    //    form one axis block (their level tori separate nothing further)
    const auto layers = condensation_layers(w.M);
    if (layers.size() >= 2) {
        // A multi-vertex SCC always holds both kinds (the digraph is
        // bipartite), so a single-kind block is exactly a run of singletons.
        std::vector<std::vector<ComponentId>> blocks;
        for (const auto& layer : layers) {
            const bool mergeable =
                !blocks.empty() && layer.size() == 1 &&
                std::all_of(blocks.back().begin(), blocks.back().end(),
                            [&](const ComponentId& id) { return id.kind == layer[0].kind; });
            if (mergeable) {
                blocks.back().push_back(layer[0]);
            } else {
                blocks.push_back(layer);
            }
        }
        if (blocks.size() >= 2) {
            for (const auto& block : blocks) {
                std::vector<int> row_pos, col_pos;
                for (const ComponentId& id : block) {
                    (id.kind == ComponentKind::Warp ? row_pos : col_pos).push_back(id.index);
                }
                std::sort(row_pos.begin(), row_pos.end());
                std::sort(col_pos.begin(), col_pos.end());
                process_subweave(restrict_to(w, row_pos, col_pos), out);
            }
            return;
        }
    }

    // 2) collapse parallel families reachable by interchanges
    const auto row_fams = m >= 2 ? find_families(row_lines(w.M)) : std::vector<std::vector<int>>{};
    const auto col_fams = n >= 2 ? find_families(col_lines(w.M)) : std::vector<std::vector<int>>{};
    if (!row_fams.empty() || !col_fams.empty()) {
        std::vector<char> drop_row(m, 0), drop_col(n, 0);
        std::vector<char> phantom_row(m, 0), phantom_col(n, 0);
        auto emit_family = [&](ComponentKind kind, const std::vector<int>& fam) {
            JsjPiece piece;
            piece.type = JsjPiece::Type::SolidTorusParallelFamily;
            piece.family_kind = kind;
            piece.multiplicity = static_cast<int>(fam.size());
            for (int p : fam) {
                const auto& id = kind == ComponentKind::Warp ? w.rows[p] : w.cols[p];
                if (id) piece.members.push_back(*id);
            }
            out.push_back(std::move(piece));
        };
        for (const auto& fam : row_fams) {
            emit_family(ComponentKind::Warp, fam);
            phantom_row[fam.front()] = 1;
            for (std::size_t t = 1; t < fam.size(); ++t) drop_row[fam[t]] = 1;
        }
        for (const auto& fam : col_fams) {
            emit_family(ComponentKind::Weft, fam);
            phantom_col[fam.front()] = 1;
            for (std::size_t t = 1; t < fam.size(); ++t) drop_col[fam[t]] = 1;
        }
        std::vector<int> row_pos, col_pos;
        for (int i = 0; i < m; ++i)
            if (!drop_row[i]) row_pos.push_back(i);
        for (int j = 0; j < n; ++j)
            if (!drop_col[j]) col_pos.push_back(j);
        SubWeave collapsed = restrict_to(w, row_pos, col_pos);
        for (std::size_t a = 0; a < row_pos.size(); ++a)
            if (phantom_row[row_pos[a]]) collapsed.rows[a] = std::nullopt;
        for (std::size_t b = 0; b < col_pos.size(); ++b)
            if (phantom_col[col_pos[b]]) collapsed.cols[b] = std::nullopt;
        process_subweave(collapsed, out);
        return;
    }

    // 3) terminal piece
    JsjPiece piece;
    piece.type = (m == 0 || n == 0) ? JsjPiece::Type::AxisOnlyWeave
                                    : JsjPiece::Type::HyperbolicWeave;
    piece.matrix = w.M;
    piece.warp_ids = w.rows;
    piece.weft_ids = w.cols;
    out.push_back(std::move(piece));
}

}  // namespace

JsjReport jsj_report(const CrossingMatrix& M) {
    JsjReport report;
    SubWeave whole;
    whole.M = M;
    for (int i = 0; i < M.warps(); ++i) whole.rows.push_back(ComponentId{ComponentKind::Warp, i});
    for (int j = 0; j < M.wefts(); ++j) whole.cols.push_back(ComponentId{ComponentKind::Weft, j});
    process_subweave(whole, report.pieces);
    return report;
}

double volume_upper_bound(int warps, int wefts) {
    return static_cast<double>(warps) * static_cast<double>(wefts) * kOctahedronVolume;
}

double volume_upper_bound(const CrossingMatrix& M) {
    return volume_upper_bound(M.warps(), M.wefts());
}

}  // namespace weave
