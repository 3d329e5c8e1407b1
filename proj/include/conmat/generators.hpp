#pragma once

// Deterministic instance generators for tests and the benchmark harness.

#include "conmat/multivector_field.hpp"

namespace conmat {

// Triangulated k x k torus grid: k^2 vertices, 3k^2 edges, 2k^2
// triangles. Requires k >= 3.
SimplicialComplex torus_grid_complex(int k);

// Closure of n_facets random facets with up to max_facet_vertices
// vertices drawn from a pool of n_vertices names.
SimplicialComplex random_complex(Rng& rng, int n_vertices, int n_facets,
                                 int max_facet_vertices);

// Instance kinds understood by the benchmark harness.
enum class BenchGenerator { TorusGrid, RandomForman, RandomMultivector, Singleton };

struct BenchInstance {
    SimplicialComplex complex;
    std::vector<std::vector<int>> blocks;
};

// target_size is a hint; the actual complex size is reported by the run.
BenchInstance make_bench_instance(BenchGenerator kind, int target_size, std::uint64_t seed);

} // namespace conmat
