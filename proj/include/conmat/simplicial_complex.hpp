#pragma once

// Finite simplicial complexes over named vertices, with face/coface
// access and the GF(2) boundary operator. Complexes are immutable after
// construction and keep their simplices in a canonical order (dimension,
// then lexicographic on the vertex tuple), so simplex ids are stable and
// reproducible across runs.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conmat/errors.hpp"

namespace conmat {

class Simplex {
public:
    // Vertices are sorted on construction; duplicates or an empty tuple
    // are rejected.
    explicit Simplex(std::vector<std::string> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<std::string>& vertices() const { return vertices_; }

    bool has_face(const Simplex& face) const;
    std::string to_string() const;

    friend bool operator==(const Simplex& a, const Simplex& b) {
        return a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }
    // Canonical order: dimension first, then lexicographic.
    friend bool operator<(const Simplex& a, const Simplex& b) {
        if (a.vertices_.size() != b.vertices_.size())
            return a.vertices_.size() < b.vertices_.size();
        return a.vertices_ < b.vertices_;
    }

private:
    std::vector<std::string> vertices_;
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Closure of the given facets, canonically ordered.
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);
    // The list must already be closed under faces.
    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

    int size() const { return static_cast<int>(simplices_.size()); }
    const Simplex& simplex(int id) const;
    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::optional<int> find(const Simplex& s) const;

    // Ids of the codimension-1 faces of the given simplex (ascending).
    std::vector<int> boundary_faces(int id) const;
    // Union of all faces of the given simplices (ascending ids).
    std::vector<int> closure(const std::vector<int>& ids) const;

    int max_dim() const;

private:
    std::vector<Simplex> simplices_;
    std::map<std::vector<std::string>, int> index_;
};

} // namespace conmat
