#pragma once

// Shared fixtures. The main one is the two-triangle disk whose flow has
// an attracting boundary orbit, a saddle edge CA and two repelling
// triangles; it exercises every stage of the pipeline with values small
// enough to check by hand.

#include <set>
#include <string>
#include <vector>

#include "conmat/connection_matrix.hpp"
#include "conmat/generators.hpp"
#include "conmat/oracle.hpp"

namespace testutil {

using namespace conmat;

inline Simplex sx(std::vector<std::string> verts) { return Simplex(std::move(verts)); }

inline int id_of(const SimplicialComplex& k, std::vector<std::string> verts) {
    auto id = k.find(Simplex(std::move(verts)));
    REQUIRE(id.has_value());
    return *id;
}

// Vertices A..D, edges AB, BC, CA, CD, DA, triangles ABC, CDA.
inline SimplicialComplex annulus_complex() {
    return SimplicialComplex::from_facets({
        sx({"A", "B", "C"}),
        sx({"A", "C", "D"}),
        sx({"A", "B"}),
        sx({"B", "C"}),
        sx({"C", "D"}),
        sx({"A", "D"}),
    });
}

// V = {{A,AB},{B,BC},{C,CD},{D,DA},{CA},{ABC},{CDA}}
inline std::vector<std::vector<int>> annulus_blocks(const SimplicialComplex& k) {
    return {
        {id_of(k, {"A"}), id_of(k, {"A", "B"})},
        {id_of(k, {"B"}), id_of(k, {"B", "C"})},
        {id_of(k, {"C"}), id_of(k, {"C", "D"})},
        {id_of(k, {"D"}), id_of(k, {"A", "D"})},
        {id_of(k, {"A", "C"})},
        {id_of(k, {"A", "B", "C"})},
        {id_of(k, {"A", "C", "D"})},
    };
}

// Intra-orbit order A, B, AB, C, BC, D, CD, DA (keyed by the orbit's
// Morse set id, which is 0 because the orbit contains vertex A).
inline IntraOrders annulus_intra(const SimplicialComplex& k) {
    return {{0,
             {id_of(k, {"A"}), id_of(k, {"B"}), id_of(k, {"A", "B"}), id_of(k, {"C"}),
              id_of(k, {"B", "C"}), id_of(k, {"D"}), id_of(k, {"C", "D"}),
              id_of(k, {"A", "D"})}}};
}

inline PipelineResult annulus_pipeline(const SimplicialComplex& k) {
    PipelineOptions opt;
    opt.intra = annulus_intra(k);
    opt.reduce.debug_checks = true;
    return compute_connection_matrix(k, MultivectorField(k, annulus_blocks(k)), opt);
}

// Connection-matrix entries as (row label, column label) strings, which
// makes outputs comparable across different bases.
inline std::set<std::pair<std::string, std::string>> entry_labels(const ConnectionMatrix& cm) {
    std::set<std::pair<std::string, std::string>> out;
    for (Index b = 1; b <= cm.size(); ++b)
        for (Index i : cm.entries.column(b))
            out.insert({cm.labels[static_cast<std::size_t>(i - 1)].to_string(),
                        cm.labels[static_cast<std::size_t>(b - 1)].to_string()});
    return out;
}

inline std::set<std::string> surviving_labels(const ConnectionMatrix& cm) {
    std::set<std::string> out;
    for (const Simplex& s : cm.labels) out.insert(s.to_string());
    return out;
}

// Random valid inputs for property tests: mixed Forman and multivector
// fields on random complexes.
inline SimplicialComplex small_random_complex(Rng& rng) {
    const int nv = 5 + static_cast<int>(rng() % 5);
    const int nf = 4 + static_cast<int>(rng() % 6);
    return random_complex(rng, nv, nf, 4);
}

inline std::vector<std::vector<int>> random_blocks(const SimplicialComplex& k, Rng& rng) {
    if (rng() % 2 == 0) return random_forman_blocks(k, rng);
    return random_multivector_blocks(k, rng, k.size() / 2);
}

} // namespace testutil
