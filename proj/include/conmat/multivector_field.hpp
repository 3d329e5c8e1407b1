#pragma once

// Multivector fields: partitions of a simplicial complex into blocks
// that are convex in the face poset, and the induced flow digraph whose
// successors of a simplex are its block together with its closure.

#include <random>
#include <string>
#include <vector>

#include "conmat/simplicial_complex.hpp"

namespace conmat {

struct FieldViolation {
    enum class Kind { UnknownSimplex, Uncovered, DoubleCovered, NotConvex };
    Kind kind;
    // Simplex-id witnesses. NotConvex reports a triple a <= b <= c with
    // a, c in the block and b outside it.
    int a = -1;
    int b = -1;
    int c = -1;
    std::string describe(const SimplicialComplex& k) const;
};

// Checks that the blocks partition the complex and that each block is
// convex: empty result means the field is valid.
std::vector<FieldViolation> validate_field(const SimplicialComplex& k,
                                           const std::vector<std::vector<int>>& blocks);

class MultivectorField {
public:
    // Validates; throws validation_error listing the first violations.
    MultivectorField(const SimplicialComplex& k, std::vector<std::vector<int>> blocks);

    static MultivectorField singletons(const SimplicialComplex& k);

    int n_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int b) const;
    int block_of(int simplex_id) const;

    // Every block has at most two simplices.
    bool is_forman() const;

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> owner_;
};

struct FlowDigraph {
    // succ[v] is sorted ascending and always contains v itself.
    std::vector<std::vector<int>> succ;
    int n_nodes() const { return static_cast<int>(succ.size()); }
};

FlowDigraph flow_digraph(const SimplicialComplex& k, const MultivectorField& v);

using Rng = std::mt19937_64;

// Random acyclic Forman matching built from a sequence of elementary
// collapses; simplices left unmatched become critical singletons. The
// result is always a gradient field.
std::vector<std::vector<int>> random_forman_blocks(const SimplicialComplex& k, Rng& rng);

// Random multivector field grown from singletons by merging face-adjacent
// blocks and closing the union under face-poset intervals. Merges that
// would exceed max_block simplices are skipped.
std::vector<std::vector<int>> random_multivector_blocks(const SimplicialComplex& k, Rng& rng,
                                                        int merge_steps, int max_block = 12);

std::vector<std::vector<int>> singleton_blocks(const SimplicialComplex& k);

} // namespace conmat
