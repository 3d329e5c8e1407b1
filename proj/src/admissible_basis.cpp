#include "conmat/admissible_basis.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace conmat {

std::vector<int> linear_extension(const MorseDecomposition& decomp, const TieBreak& tie) {
    const int k = decomp.n_sets();
    // dependency edges p -> q whenever p < q (p must be emitted first);
    // covering pairs are enough
    std::vector<std::vector<int>> dependents(static_cast<std::size_t>(k));
    std::vector<int> missing(static_cast<std::size_t>(k), 0);
    for (auto [p, q] : decomp.covering_pairs()) {
        dependents[static_cast<std::size_t>(p)].push_back(q);
        ++missing[static_cast<std::size_t>(q)];
    }

    std::vector<int> available;
    for (int p = 0; p < k; ++p)
        if (missing[static_cast<std::size_t>(p)] == 0) available.push_back(p);

    std::mt19937_64 rng(tie.seed);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    while (!available.empty()) {
        std::size_t pick = 0;
        if (tie.policy == TieBreak::Policy::MinSetId) {
            pick = static_cast<std::size_t>(
                std::min_element(available.begin(), available.end()) - available.begin());
        } else {
            pick = static_cast<std::size_t>(rng() % available.size());
        }
        const int p = available[pick];
        available.erase(available.begin() + static_cast<std::ptrdiff_t>(pick));
        out.push_back(p);
        for (int q : dependents[static_cast<std::size_t>(p)])
            if (--missing[static_cast<std::size_t>(q)] == 0) available.push_back(q);
    }
    if (static_cast<int>(out.size()) != k)
        throw internal_error("Morse order contains a cycle"); // cannot happen for a valid condensation
    return out;
}

AdmissibleBasis build_admissible_basis(const SimplicialComplex& k,
                                       const MorseDecomposition& decomp,
                                       const std::vector<int>& linext,
                                       const IntraOrders& intra) {
    const int ns = decomp.n_sets();
    if (static_cast<int>(linext.size()) != ns)
        throw validation_error("linear extension must list every Morse set exactly once");
    {
        std::vector<bool> seen(static_cast<std::size_t>(ns), false);
        for (int p : linext) {
            if (p < 0 || p >= ns || seen[static_cast<std::size_t>(p)])
                throw validation_error("linear extension must list every Morse set exactly once");
            seen[static_cast<std::size_t>(p)] = true;
        }
    }
    // must extend the partial order
    for (std::size_t i = 0; i < linext.size(); ++i)
        for (std::size_t j = i + 1; j < linext.size(); ++j)
            if (decomp.lt(linext[j], linext[i]))
                throw validation_error("ordering of Morse sets contradicts the Morse order");

    AdmissibleBasis basis;
    basis.linext = linext;
    basis.pos_of.assign(static_cast<std::size_t>(k.size()), 0);
    for (int p : linext) {
        std::vector<int> members = decomp.set(p); // ascending ids = dimension-then-lex
        auto it = intra.find(p);
        if (it != intra.end()) {
            const std::vector<int>& user = it->second;
            std::set<int> want(members.begin(), members.end());
            std::set<int> got(user.begin(), user.end());
            if (want != got || user.size() != members.size())
                throw validation_error("intra-set order for Morse set " + std::to_string(p) +
                                       " does not list exactly its simplices");
            members = user;
        }
        for (int id : members) {
            basis.order.push_back(id);
            basis.nu.push_back(p);
            basis.homdim.push_back(k.simplex(id).dim());
            basis.pos_of[static_cast<std::size_t>(id)] = static_cast<int>(basis.order.size());
        }
    }

    // strict upper triangularity: every boundary face must come earlier
    for (Index j = 1; j <= basis.n(); ++j) {
        const int id = basis.simplex_at(j);
        for (int f : k.boundary_faces(id)) {
            const Index i = basis.pos_of[static_cast<std::size_t>(f)];
            if (i < j) continue;
            if (decomp.set_of(f) == decomp.set_of(id))
                throw validation_error(
                    "intra-set order is not admissible: boundary entry (" +
                    k.simplex(f).to_string() + ", " + k.simplex(id).to_string() +
                    ") would lie on or below the diagonal");
            throw internal_error("boundary face ordered after its coface across Morse sets");
        }
    }
    return basis;
}

FilteredBoundaryMatrix assemble(const SimplicialComplex& k, const MorseDecomposition& decomp,
                                AdmissibleBasis basis) {
    const Index n = basis.n();
    SparseGF2Matrix m(n, n);
    for (Index j = 1; j <= n; ++j)
        for (int f : k.boundary_faces(basis.simplex_at(j)))
            m.set(basis.pos_of[static_cast<std::size_t>(f)], j, true);

    if (!m.is_strictly_upper_triangular())
        throw internal_error("assembled boundary matrix is not strictly upper triangular");
    for (Index j = 1; j <= n; ++j)
        for (Index i : m.column(j))
            if (!decomp.leq(basis.nu_at(i), basis.nu_at(j)))
                throw internal_error(
                    "assembled boundary matrix is not filtered; the Morse order direction is wrong");
    return {std::move(m), std::move(basis)};
}

} // namespace conmat
