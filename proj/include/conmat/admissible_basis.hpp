#pragma once

// Admissible bases: a linear extension of the Morse poset (Kahn's
// algorithm with a pluggable tie break) together with an intra-set
// ordering of simplices, such that the boundary matrix written in the
// resulting basis is filtered and strictly upper triangular. Assembly
// verifies both properties instead of assuming them.

#include <cstdint>
#include <map>

#include "conmat/gf2_matrix.hpp"
#include "conmat/morse_decomposition.hpp"

namespace conmat {

struct TieBreak {
    enum class Policy { MinSetId, Seeded };
    Policy policy = Policy::MinSetId;
    std::uint64_t seed = 0;

    static TieBreak min_set_id() { return {}; }
    static TieBreak seeded(std::uint64_t seed) { return {Policy::Seeded, seed}; }
};

// Total order on Morse set ids extending the decomposition order,
// attractors first.
std::vector<int> linear_extension(const MorseDecomposition& decomp,
                                  const TieBreak& tie = TieBreak::min_set_id());

struct AdmissibleBasis {
    std::vector<int> order;  // order[p-1] = simplex id at position p (1-based)
    std::vector<int> pos_of; // simplex id -> position
    std::vector<int> nu;     // nu[p-1] = Morse set id of position p
    std::vector<int> homdim; // homdim[p-1] = simplex dimension at position p
    std::vector<int> linext; // Morse set ids in basis order

    Index n() const { return static_cast<Index>(order.size()); }
    int simplex_at(Index pos) const { return order[static_cast<std::size_t>(pos - 1)]; }
    int nu_at(Index pos) const { return nu[static_cast<std::size_t>(pos - 1)]; }
    int dim_at(Index pos) const { return homdim[static_cast<std::size_t>(pos - 1)]; }
};

// Explicit per-set simplex orders; sets not listed use the default
// dimension-then-lexicographic order.
using IntraOrders = std::map<int, std::vector<int>>;

AdmissibleBasis build_admissible_basis(const SimplicialComplex& k,
                                       const MorseDecomposition& decomp,
                                       const std::vector<int>& linext,
                                       const IntraOrders& intra = {});

struct FilteredBoundaryMatrix {
    SparseGF2Matrix matrix;
    AdmissibleBasis basis;
};

// Boundary matrix in the given basis. Throws internal_error if the
// result is not strictly upper triangular or not filtered with respect
// to the decomposition order (those indicate an ordering bug upstream).
FilteredBoundaryMatrix assemble(const SimplicialComplex& k, const MorseDecomposition& decomp,
                                AdmissibleBasis basis);

} // namespace conmat
