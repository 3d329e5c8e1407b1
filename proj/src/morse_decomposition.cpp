#include "conmat/morse_decomposition.hpp"

#include <algorithm>

namespace conmat {

std::vector<std::vector<int>> strongly_connected_components(const FlowDigraph& g) {
    const int n = g.n_nodes();
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call; // node, next child slot
    int next_index = 0;
    int n_comp = 0;

    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        index[static_cast<std::size_t>(root)] = lowlink[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        call.push_back({root, 0});
        while (!call.empty()) {
            const int v = call.back().first;
            const std::size_t ci = call.back().second;
            const auto& succ = g.succ[static_cast<std::size_t>(v)];
            if (ci < succ.size()) {
                call.back().second = ci + 1;
                const int w = succ[ci];
                if (w == v) continue; // self-loops carry no information here
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = lowlink[static_cast<std::size_t>(w)] =
                        next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    call.push_back({w, 0});
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    lowlink[static_cast<std::size_t>(v)] = std::min(
                        lowlink[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                call.pop_back();
                if (!call.empty()) {
                    const int parent = call.back().first;
                    lowlink[static_cast<std::size_t>(parent)] =
                        std::min(lowlink[static_cast<std::size_t>(parent)],
                                 lowlink[static_cast<std::size_t>(v)]);
                }
                if (lowlink[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        comp[static_cast<std::size_t>(w)] = n_comp;
                        if (w == v) break;
                    }
                    ++n_comp;
                }
            }
        }
    }

    std::vector<std::vector<int>> comps(static_cast<std::size_t>(n_comp));
    for (int v = 0; v < n; ++v)
        comps[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

std::string MorseViolation::describe(const SimplicialComplex& k) const {
    auto name = [&](int id) { return id >= 0 ? k.simplex(id).to_string() : std::string("?"); };
    switch (kind) {
        case Kind::SplitsScc:
            return "simplices " + name(a) + " and " + name(b) +
                   " lie in one strongly connected component but in different sets";
        case Kind::NotPathConvex:
            return "a path from " + name(a) + " escapes its Morse set through " + name(b) +
                   " and returns at " + name(c);
        case Kind::NotPartialOrder:
            return "reachability between the sets of " + name(a) + ", " + name(b) +
                   (c >= 0 ? ", " + name(c) : "") + " is not a partial order";
    }
    return "unknown violation";
}

const std::vector<int>& MorseDecomposition::set(int p) const {
    if (p < 0 || p >= n_sets())
        throw std::out_of_range("Morse set id out of range");
    return sets_[static_cast<std::size_t>(p)];
}

int MorseDecomposition::set_of(int simplex_id) const {
    if (simplex_id < 0 || simplex_id >= static_cast<int>(set_of_.size()))
        throw std::out_of_range("simplex id out of range");
    return set_of_[static_cast<std::size_t>(simplex_id)];
}

bool MorseDecomposition::leq(int p, int q) const {
    if (p < 0 || p >= n_sets() || q < 0 || q >= n_sets())
        throw std::out_of_range("Morse set id out of range");
    return reach_[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
}

std::vector<std::pair<int, int>> MorseDecomposition::covering_pairs() const {
    std::vector<std::pair<int, int>> covers;
    for (int q = 0; q < n_sets(); ++q) {
        for (int p : dag_[static_cast<std::size_t>(q)]) {
            bool has_intermediate = false;
            for (int r : dag_[static_cast<std::size_t>(q)]) {
                if (r != p && leq(p, r)) {
                    has_intermediate = true;
                    break;
                }
            }
            if (!has_intermediate) covers.push_back({p, q});
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

namespace {

std::vector<std::vector<int>> sort_sets(std::vector<std::vector<int>> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return sets;
}

} // namespace

MorseDecomposition condensation_order(const FlowDigraph& g,
                                      const std::vector<std::vector<int>>& sccs) {
    const int n = g.n_nodes();
    MorseDecomposition d;
    d.sets_ = sort_sets(sccs);
    const int k = d.n_sets();
    d.set_of_.assign(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < k; ++p) {
        for (int v : d.sets_[static_cast<std::size_t>(p)]) {
            if (v < 0 || v >= n || d.set_of_[static_cast<std::size_t>(v)] != -1)
                throw internal_error("scc list is not a partition of the digraph nodes");
            d.set_of_[static_cast<std::size_t>(v)] = p;
        }
    }
    for (int v = 0; v < n; ++v)
        if (d.set_of_[static_cast<std::size_t>(v)] == -1)
            throw internal_error("scc list is not a partition of the digraph nodes");

    d.dag_.assign(static_cast<std::size_t>(k), {});
    for (int v = 0; v < n; ++v) {
        const int p = d.set_of_[static_cast<std::size_t>(v)];
        for (int w : g.succ[static_cast<std::size_t>(v)]) {
            const int q = d.set_of_[static_cast<std::size_t>(w)];
            if (p != q) d.dag_[static_cast<std::size_t>(p)].push_back(q);
        }
    }
    for (auto& adj : d.dag_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }

    // reach_[q] = everything reachable from q along the flow (downsets)
    d.reach_.assign(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
    std::vector<int> work;
    for (int q = 0; q < k; ++q) {
        auto& row = d.reach_[static_cast<std::size_t>(q)];
        work.assign(1, q);
        row[static_cast<std::size_t>(q)] = true;
        while (!work.empty()) {
            const int v = work.back();
            work.pop_back();
            for (int w : d.dag_[static_cast<std::size_t>(v)]) {
                if (!row[static_cast<std::size_t>(w)]) {
                    row[static_cast<std::size_t>(w)] = true;
                    work.push_back(w);
                }
            }
        }
    }
    return d;
}

MorseDecomposition minimal_morse_decomposition(const FlowDigraph& g) {
    return condensation_order(g, strongly_connected_components(g));
}

std::vector<MorseViolation> check_morse_partition(const FlowDigraph& g,
                                                  const std::vector<std::vector<int>>& user_sets) {
    const int n = g.n_nodes();
    std::vector<int> user_of(static_cast<std::size_t>(n), -1);
    for (int b = 0; b < static_cast<int>(user_sets.size()); ++b) {
        for (int v : user_sets[static_cast<std::size_t>(b)]) {
            if (v < 0 || v >= n)
                throw validation_error("Morse partition references an unknown simplex id");
            if (user_of[static_cast<std::size_t>(v)] != -1)
                throw validation_error("Morse partition covers a simplex twice");
            user_of[static_cast<std::size_t>(v)] = b;
        }
    }
    for (int v = 0; v < n; ++v)
        if (user_of[static_cast<std::size_t>(v)] == -1)
            throw validation_error("Morse partition does not cover every simplex");

    std::vector<MorseViolation> out;
    const auto sccs = strongly_connected_components(g);
    const MorseDecomposition cond = condensation_order(g, sccs);
    const int ns = cond.n_sets();
    const int m = static_cast<int>(user_sets.size());

    // every block must be a union of SCCs
    for (int p = 0; p < ns; ++p) {
        const auto& scc = cond.sets()[static_cast<std::size_t>(p)];
        const int b0 = user_of[static_cast<std::size_t>(scc.front())];
        for (int v : scc) {
            if (user_of[static_cast<std::size_t>(v)] != b0) {
                out.push_back({MorseViolation::Kind::SplitsScc, scc.front(), v, -1});
                break;
            }
        }
    }
    if (!out.empty()) return out;

    // block of each SCC (well defined now)
    std::vector<int> block_of_scc(static_cast<std::size_t>(ns));
    std::vector<std::vector<int>> sccs_of_block(static_cast<std::size_t>(m));
    for (int p = 0; p < ns; ++p) {
        const int b = user_of[static_cast<std::size_t>(cond.sets()[static_cast<std::size_t>(p)].front())];
        block_of_scc[static_cast<std::size_t>(p)] = b;
        sccs_of_block[static_cast<std::size_t>(b)].push_back(p);
    }

    auto scc_min = [&](int p) { return cond.sets()[static_cast<std::size_t>(p)].front(); };

    // path convexity: no path may leave a block and come back
    for (int b = 0; b < m; ++b) {
        for (int c = 0; c < ns; ++c) {
            if (block_of_scc[static_cast<std::size_t>(c)] == b) continue;
            int from = -1, back = -1;
            for (int a : sccs_of_block[static_cast<std::size_t>(b)]) {
                if (cond.leq(c, a)) { // c reachable from a
                    from = a;
                    break;
                }
            }
            if (from == -1) continue;
            for (int e : sccs_of_block[static_cast<std::size_t>(b)]) {
                if (cond.leq(e, c)) { // e reachable from c
                    back = e;
                    break;
                }
            }
            if (back != -1) {
                out.push_back({MorseViolation::Kind::NotPathConvex, scc_min(from), scc_min(c),
                               scc_min(back)});
                break;
            }
        }
    }
    if (!out.empty()) return out;

    // induced relation on blocks must be a partial order (Morse sets may
    // be unions of SCCs, so transitivity is not automatic)
    std::vector<std::vector<bool>> flows(static_cast<std::size_t>(m),
                                         std::vector<bool>(static_cast<std::size_t>(m), false));
    for (int a = 0; a < ns; ++a)
        for (int c = 0; c < ns; ++c)
            if (cond.leq(c, a))
                flows[static_cast<std::size_t>(block_of_scc[static_cast<std::size_t>(a)])]
                     [static_cast<std::size_t>(block_of_scc[static_cast<std::size_t>(c)])] = true;
    auto block_min = [&](int b) {
        int best = g.n_nodes();
        for (int p : sccs_of_block[static_cast<std::size_t>(b)]) best = std::min(best, scc_min(p));
        return best;
    };
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a != b && flows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                flows[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) {
                out.push_back({MorseViolation::Kind::NotPartialOrder, block_min(a), block_min(b), -1});
                return out;
            }
        }
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (flows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                    flows[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
                    !flows[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]) {
                    out.push_back({MorseViolation::Kind::NotPartialOrder, block_min(a),
                                   block_min(b), block_min(c)});
                    return out;
                }
    return out;
}

MorseDecomposition morse_decomposition_from_partition(const FlowDigraph& g,
                                                      const std::vector<std::vector<int>>& user_sets) {
    auto violations = check_morse_partition(g, user_sets);
    if (!violations.empty())
        throw validation_error("invalid Morse partition (" +
                               std::to_string(violations.size()) + " violation(s))");

    const int n = g.n_nodes();
    MorseDecomposition d;
    d.sets_ = sort_sets(user_sets);
    const int k = d.n_sets();
    d.set_of_.assign(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < k; ++p)
        for (int v : d.sets_[static_cast<std::size_t>(p)])
            d.set_of_[static_cast<std::size_t>(v)] = p;

    d.dag_.assign(static_cast<std::size_t>(k), {});
    for (int v = 0; v < n; ++v) {
        const int p = d.set_of_[static_cast<std::size_t>(v)];
        for (int w : g.succ[static_cast<std::size_t>(v)]) {
            const int q = d.set_of_[static_cast<std::size_t>(w)];
            if (p != q) d.dag_[static_cast<std::size_t>(p)].push_back(q);
        }
    }
    for (auto& adj : d.dag_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }

    // the honest relation: block q flows into block p via SCC reachability
    const auto sccs = strongly_connected_components(g);
    const MorseDecomposition cond = condensation_order(g, sccs);
    d.reach_.assign(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
    for (int a = 0; a < cond.n_sets(); ++a) {
        const int qa = d.set_of_[static_cast<std::size_t>(cond.sets()[static_cast<std::size_t>(a)].front())];
        for (int c = 0; c < cond.n_sets(); ++c) {
            if (!cond.leq(c, a)) continue;
            const int pc = d.set_of_[static_cast<std::size_t>(cond.sets()[static_cast<std::size_t>(c)].front())];
            d.reach_[static_cast<std::size_t>(qa)][static_cast<std::size_t>(pc)] = true;
        }
    }
    for (int q = 0; q < k; ++q) d.reach_[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)] = true;
    return d;
}

} // namespace conmat
