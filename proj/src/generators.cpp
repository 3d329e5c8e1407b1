#include "conmat/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace conmat {

namespace {

std::string grid_vertex(int i, int j) {
    auto pad = [](int x) {
        std::string s = std::to_string(x);
        while (s.size() < 3) s.insert(s.begin(), '0');
        return s;
    };
    return "v" + pad(i) + "_" + pad(j);
}

std::string pool_vertex(int i) {
    std::string s = std::to_string(i);
    while (s.size() < 3) s.insert(s.begin(), '0');
    return "v" + s;
}

} // namespace

SimplicialComplex torus_grid_complex(int k) {
    if (k < 3) throw validation_error("torus grid requires k >= 3");
    std::vector<Simplex> facets;
    facets.reserve(static_cast<std::size_t>(2 * k * k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const int i1 = (i + 1) % k;
            const int j1 = (j + 1) % k;
            facets.push_back(Simplex({grid_vertex(i, j), grid_vertex(i1, j), grid_vertex(i1, j1)}));
            facets.push_back(Simplex({grid_vertex(i, j), grid_vertex(i, j1), grid_vertex(i1, j1)}));
        }
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex random_complex(Rng& rng, int n_vertices, int n_facets,
                                 int max_facet_vertices) {
    if (n_vertices < 1 || n_facets < 1 || max_facet_vertices < 1)
        throw validation_error("random complex parameters must be positive");
    std::vector<Simplex> facets;
    for (int f = 0; f < n_facets; ++f) {
        const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_facet_vertices));
        std::set<std::string> verts;
        while (static_cast<int>(verts.size()) < size)
            verts.insert(pool_vertex(static_cast<int>(rng() % static_cast<std::uint64_t>(n_vertices))));
        facets.push_back(Simplex({verts.begin(), verts.end()}));
    }
    return SimplicialComplex::from_facets(facets);
}

BenchInstance make_bench_instance(BenchGenerator kind, int target_size, std::uint64_t seed) {
    Rng rng(seed);
    switch (kind) {
        case BenchGenerator::TorusGrid: {
            const int k = std::max(3, static_cast<int>(std::lround(std::sqrt(target_size / 6.0))));
            SimplicialComplex complex = torus_grid_complex(k);
            auto blocks = random_forman_blocks(complex, rng);
            return {std::move(complex), std::move(blocks)};
        }
        case BenchGenerator::RandomForman: {
            const int nv = std::max(6, static_cast<int>(std::lround(1.6 * std::sqrt(target_size))));
            SimplicialComplex complex = random_complex(rng, nv, std::max(2, target_size / 5), 4);
            auto blocks = random_forman_blocks(complex, rng);
            return {std::move(complex), std::move(blocks)};
        }
        case BenchGenerator::RandomMultivector: {
            const int nv = std::max(6, static_cast<int>(std::lround(1.6 * std::sqrt(target_size))));
            SimplicialComplex complex = random_complex(rng, nv, std::max(2, target_size / 5), 4);
            auto blocks = random_multivector_blocks(complex, rng, complex.size() / 3);
            return {std::move(complex), std::move(blocks)};
        }
        case BenchGenerator::Singleton: {
            const int nv = std::max(6, static_cast<int>(std::lround(1.6 * std::sqrt(target_size))));
            SimplicialComplex complex = random_complex(rng, nv, std::max(2, target_size / 5), 4);
            auto blocks = singleton_blocks(complex);
            return {std::move(complex), std::move(blocks)};
        }
    }
    throw internal_error("unknown bench generator");
}

} // namespace conmat
