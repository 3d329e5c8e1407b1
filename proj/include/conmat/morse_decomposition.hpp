#pragma once

// Morse decompositions of a multivector field: minimal Morse sets as the
// strongly connected components of the flow digraph, the condensation
// partial order, and validation of user-supplied coarser partitions.
//
// Order convention: p <= q holds iff M_p is reachable from M_q along the
// flow, so attractors are minimal. This is the direction under which the
// assembled boundary matrix is filtered; assembly asserts it.

#include <string>
#include <utility>
#include <vector>

#include "conmat/multivector_field.hpp"

namespace conmat {

// SCC partition of the digraph. Output is deterministic: sets are sorted
// by their smallest member, members ascending.
std::vector<std::vector<int>> strongly_connected_components(const FlowDigraph& g);

struct MorseViolation {
    enum class Kind { SplitsScc, NotPathConvex, NotPartialOrder };
    Kind kind;
    int a = -1; // simplex-id witnesses, meaning depends on kind
    int b = -1;
    int c = -1;
    std::string describe(const SimplicialComplex& k) const;
};

class MorseDecomposition {
public:
    int n_sets() const { return static_cast<int>(sets_.size()); }
    const std::vector<std::vector<int>>& sets() const { return sets_; }
    const std::vector<int>& set(int p) const;
    int set_of(int simplex_id) const;

    // p <= q: M_p reachable from M_q (reflexive).
    bool leq(int p, int q) const;
    bool lt(int p, int q) const { return p != q && leq(p, q); }

    // Covering relation of the order, pairs (p, q) with p covered by q.
    std::vector<std::pair<int, int>> covering_pairs() const;

    friend MorseDecomposition condensation_order(const FlowDigraph& g,
                                                 const std::vector<std::vector<int>>& sccs);
    friend MorseDecomposition morse_decomposition_from_partition(
        const FlowDigraph& g, const std::vector<std::vector<int>>& user_sets);

private:
    std::vector<std::vector<int>> sets_;
    std::vector<int> set_of_;
    // direct condensation edges q -> p (flow from M_q into M_p), sorted
    std::vector<std::vector<int>> dag_;
    // reach_[q][p] == true iff p <= q
    std::vector<std::vector<bool>> reach_;
};

// Builds the decomposition indexed by the condensation of the SCC
// partition. sccs must be the partition produced by
// strongly_connected_components(g).
MorseDecomposition condensation_order(const FlowDigraph& g,
                                      const std::vector<std::vector<int>>& sccs);

MorseDecomposition minimal_morse_decomposition(const FlowDigraph& g);

// Checks a user partition: every block must be a union of SCCs, be
// path-convex (no path may leave a block and return), and the induced
// reachability relation on blocks must be a partial order.
std::vector<MorseViolation> check_morse_partition(const FlowDigraph& g,
                                                  const std::vector<std::vector<int>>& user_sets);

// Validating constructor for user partitions; throws validation_error
// with witnesses on failure.
MorseDecomposition morse_decomposition_from_partition(const FlowDigraph& g,
                                                      const std::vector<std::vector<int>>& user_sets);

} // namespace conmat
