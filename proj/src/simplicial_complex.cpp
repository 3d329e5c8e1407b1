#include "conmat/simplicial_complex.hpp"

#include <algorithm>
#include <set>

namespace conmat {

namespace {

constexpr int kMaxFacetVertices = 20;

// All nonempty proper and improper faces of a vertex tuple.
std::vector<std::vector<std::string>> all_faces(const std::vector<std::string>& verts) {
    const std::size_t k = verts.size();
    std::vector<std::vector<std::string>> out;
    out.reserve((std::size_t{1} << k) - 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        std::vector<std::string> face;
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::uint32_t{1} << b)) face.push_back(verts[b]);
        out.push_back(std::move(face));
    }
    return out;
}

} // namespace

Simplex::Simplex(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw validation_error("simplex must have at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw validation_error("simplex has a duplicate vertex: " + to_string());
}

bool Simplex::has_face(const Simplex& face) const {
    return std::includes(vertices_.begin(), vertices_.end(),
                         face.vertices_.begin(), face.vertices_.end());
}

std::string Simplex::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ",";
        out += vertices_[i];
    }
    out += "}";
    return out;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
    std::set<Simplex> all;
    for (const Simplex& f : facets) {
        if (f.dim() + 1 > kMaxFacetVertices)
            throw validation_error("facet " + f.to_string() + " has too many vertices");
        for (auto& verts : all_faces(f.vertices())) all.insert(Simplex(std::move(verts)));
    }
    SimplicialComplex k;
    k.simplices_.assign(all.begin(), all.end());
    for (int id = 0; id < k.size(); ++id)
        k.index_.emplace(k.simplices_[id].vertices(), id);
    return k;
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
    std::set<Simplex> given(simplices.begin(), simplices.end());
    if (given.size() != simplices.size())
        throw validation_error("simplex list contains duplicates");
    SimplicialComplex k = from_facets(simplices);
    if (k.size() != static_cast<int>(simplices.size())) {
        for (const Simplex& s : k.simplices_)
            if (!given.count(s))
                throw validation_error("simplex list is not closed: missing face " +
                                       s.to_string());
    }
    return k;
}

const Simplex& SimplicialComplex::simplex(int id) const {
    if (id < 0 || id >= size())
        throw std::out_of_range("simplex id out of range");
    return simplices_[static_cast<std::size_t>(id)];
}

std::optional<int> SimplicialComplex::find(const Simplex& s) const {
    auto it = index_.find(s.vertices());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> SimplicialComplex::boundary_faces(int id) const {
    const Simplex& s = simplex(id);
    std::vector<int> out;
    if (s.dim() == 0) return out;
    const auto& verts = s.vertices();
    for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<std::string> face;
        face.reserve(verts.size() - 1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (i != drop) face.push_back(verts[i]);
        auto it = index_.find(face);
        if (it == index_.end())
            throw internal_error("complex not closed: missing face of " + s.to_string());
        out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SimplicialComplex::closure(const std::vector<int>& ids) const {
    std::vector<bool> seen(static_cast<std::size_t>(size()), false);
    for (int id : ids) {
        const Simplex& s = simplex(id);
        for (auto& verts : all_faces(s.vertices())) {
            auto it = index_.find(verts);
            if (it == index_.end())
                throw internal_error("complex not closed: missing face of " + s.to_string());
            seen[static_cast<std::size_t>(it->second)] = true;
        }
    }
    std::vector<int> out;
    for (int id = 0; id < size(); ++id)
        if (seen[static_cast<std::size_t>(id)]) out.push_back(id);
    return out;
}

int SimplicialComplex::max_dim() const {
    return simplices_.empty() ? -1 : simplices_.back().dim();
}

} // namespace conmat
