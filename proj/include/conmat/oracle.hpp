#pragma once

// Brute-force verification, kept independent of the reduction path: GF(2)
// homology by rank-nullity, Conley indices as homology of quotient
// complexes, elementary chain reductions with the explicit chain maps,
// and full certification of connection matrices. Everything here is
// dense; it certifies desk-scale outputs and refuses larger inputs.

#include "conmat/connection_matrix.hpp"

namespace conmat {

struct HomologyProfile {
    std::vector<Index> betti; // by dimension, trailing zeros trimmed

    Index at(std::size_t q) const { return q < betti.size() ? betti[q] : 0; }
    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
        return a.betti == b.betti;
    }
};

struct OracleOptions {
    // The oracle is a certifier, not a production path.
    Index max_n = 2000;
};

// GF(2) Betti numbers of a chain complex given by its boundary matrix and
// the dimension of each position. Requires the matrix to square to zero
// and entries to drop dimension by exactly one.
HomologyProfile betti_numbers(const SparseGF2Matrix& boundary, const std::vector<int>& dims,
                              const OracleOptions& options = {});

// Boundary matrix of the whole complex in canonical simplex order.
SparseGF2Matrix canonical_boundary_matrix(const SimplicialComplex& k);
std::vector<int> canonical_dims(const SimplicialComplex& k);

// Conley index of a Morse set: homology of the chain complex spanned by
// the set with boundary entries landing outside dropped (the quotient of
// cl(M) by its mouth).
HomologyProfile conley_index_dims(const SimplicialComplex& k, const std::vector<int>& morse_set,
                                  const OracleOptions& options = {});

// One elementary reduction of a chain complex at a reduction pair
// (i0, j0): the collapsed boundary together with the projection,
// inclusion and homotopy, all as matrices. Verifies the chain identities
//   pi * iota = id  and  iota * pi = id + d*gamma + gamma*d
// exactly and throws validation_error if any fails.
struct ReductionPairMaps {
    DenseGF2Matrix d_bar; // (n-2) x (n-2)
    DenseGF2Matrix pi;    // (n-2) x n
    DenseGF2Matrix iota;  // n x (n-2)
    DenseGF2Matrix gamma; // n x n, a single 1 at (j0, i0)
    std::vector<Index> kept;
};

ReductionPairMaps single_reduction(const DenseGF2Matrix& d, Index i0, Index j0);

struct Certificate {
    struct Check {
        std::string name;
        bool ok;
        std::string witness;
    };
    std::vector<Check> checks;

    bool ok() const;
    const Check* find(const std::string& name) const;
};

// Runs every certification check, reporting each separately:
//   cropped, square_zero, diagonal_blocks, filtered, conley_index_counts,
//   global_betti, reduction_replay.
Certificate verify_connection_matrix(const ConnectionMatrix& cm, const SimplicialComplex& k,
                                     const MorseDecomposition& decomp,
                                     const FilteredBoundaryMatrix& fm, const ReductionState& st,
                                     const OracleOptions& options = {});

} // namespace conmat
