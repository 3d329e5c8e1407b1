#pragma once

// JSON encodings shared by the CLI and the tests. A simplex is an array
// of vertex strings; a complex is {"facets": [...]} or {"simplices":
// [...]} (the latter must already be closed). Every document carries
// "format": 1.

#include <json.hpp>

#include "conmat/connection_matrix.hpp"
#include "conmat/oracle.hpp"

namespace conmat {

struct ProblemInput {
    SimplicialComplex complex;
    std::vector<std::vector<int>> multivectors;
    std::optional<std::vector<std::vector<int>>> morse_sets;
    // Intra-set orders either keyed by Morse set id or unkeyed (resolved
    // against the decomposition by membership).
    std::map<int, std::vector<int>> keyed_intra;
    std::vector<std::vector<int>> unkeyed_intra;
    std::optional<std::uint64_t> linext_seed;
};

nlohmann::json simplex_to_json(const Simplex& s);
Simplex simplex_from_json(const nlohmann::json& j);

SimplicialComplex complex_from_json(const nlohmann::json& j);

ProblemInput parse_problem(const nlohmann::json& j);
ProblemInput load_problem(const std::string& path);

// Resolves parsed intra-order lists against a decomposition; unkeyed
// lists are matched to the Morse set with the same membership.
IntraOrders resolve_intra_orders(const ProblemInput& input, const MorseDecomposition& decomp);

nlohmann::json morse_to_json(const MorseDecomposition& decomp, const SimplicialComplex& k);

nlohmann::json connection_to_json(const PipelineResult& result, const SimplicialComplex& k,
                                  bool emit_trace = false, bool emit_matrix = false);

struct LoadedConnection {
    std::vector<Simplex> basis;
    std::vector<int> grades;
    std::vector<Index> surviving;
    std::vector<std::pair<Index, Index>> entries;
};

LoadedConnection connection_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);

nlohmann::json violations_to_json(const SimplicialComplex& k,
                                  const std::vector<FieldViolation>& field,
                                  const std::vector<MorseViolation>& morse);

} // namespace conmat
