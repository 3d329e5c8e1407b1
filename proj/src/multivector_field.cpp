#include "conmat/multivector_field.hpp"

#include <algorithm>
#include <set>

namespace conmat {

namespace {

// Simplices mu with a <= mu <= c, excluding the endpoints, in canonical
// order (dimension, then lexicographic).
std::vector<int> strict_interval(const SimplicialComplex& k, int a, int c) {
    const auto& lo = k.simplex(a).vertices();
    const auto& hi = k.simplex(c).vertices();
    std::vector<std::string> extra;
    std::set_difference(hi.begin(), hi.end(), lo.begin(), lo.end(),
                        std::back_inserter(extra));
    std::vector<int> out;
    const std::size_t m = extra.size();
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << m); ++mask) {
        std::vector<std::string> verts = lo;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::uint32_t{1} << b)) verts.push_back(extra[b]);
        auto id = k.find(Simplex(std::move(verts)));
        if (!id)
            throw internal_error("complex not closed while checking convexity");
        out.push_back(*id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::string FieldViolation::describe(const SimplicialComplex& k) const {
    auto name = [&](int id) { return k.simplex(id).to_string(); };
    switch (kind) {
        case Kind::UnknownSimplex:
            return "block references a simplex id outside the complex";
        case Kind::Uncovered:
            return "simplex " + name(a) + " is not covered by any multivector";
        case Kind::DoubleCovered:
            return "simplex " + name(a) + " is covered by more than one multivector";
        case Kind::NotConvex:
            return "multivector is not convex: " + name(a) + " <= " + name(b) +
                   " <= " + name(c) + " but " + name(b) + " is outside the block";
    }
    return "unknown violation";
}

std::vector<FieldViolation> validate_field(const SimplicialComplex& k,
                                           const std::vector<std::vector<int>>& blocks) {
    std::vector<FieldViolation> out;
    std::vector<int> cover(static_cast<std::size_t>(k.size()), 0);
    for (const auto& block : blocks) {
        for (int id : block) {
            if (id < 0 || id >= k.size()) {
                out.push_back({FieldViolation::Kind::UnknownSimplex, id, -1, -1});
                return out;
            }
            ++cover[static_cast<std::size_t>(id)];
        }
    }
    for (int id = 0; id < k.size(); ++id) {
        if (cover[static_cast<std::size_t>(id)] == 0)
            out.push_back({FieldViolation::Kind::Uncovered, id, -1, -1});
        else if (cover[static_cast<std::size_t>(id)] > 1)
            out.push_back({FieldViolation::Kind::DoubleCovered, id, -1, -1});
    }

    for (const auto& block : blocks) {
        std::set<int> members(block.begin(), block.end());
        for (int a : block) {
            for (int c : block) {
                if (k.simplex(a).dim() + 2 > k.simplex(c).dim()) continue;
                if (!k.simplex(c).has_face(k.simplex(a))) continue;
                for (int mu : strict_interval(k, a, c)) {
                    if (!members.count(mu)) {
                        out.push_back({FieldViolation::Kind::NotConvex, a, mu, c});
                        break; // one witness per pair is enough
                    }
                }
            }
        }
    }
    return out;
}

MultivectorField::MultivectorField(const SimplicialComplex& k,
                                   std::vector<std::vector<int>> blocks) {
    auto violations = validate_field(k, blocks);
    if (!violations.empty()) {
        std::string msg = "invalid multivector field:";
        for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
            msg += "\n  " + violations[i].describe(k);
        if (violations.size() > 5)
            msg += "\n  (" + std::to_string(violations.size() - 5) + " more)";
        throw validation_error(msg);
    }
    blocks_ = std::move(blocks);
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end());
    blocks_.erase(std::remove_if(blocks_.begin(), blocks_.end(),
                                 [](const auto& b) { return b.empty(); }),
                  blocks_.end());
    owner_.assign(static_cast<std::size_t>(k.size()), -1);
    for (int b = 0; b < n_blocks(); ++b)
        for (int id : blocks_[static_cast<std::size_t>(b)])
            owner_[static_cast<std::size_t>(id)] = b;
}

MultivectorField MultivectorField::singletons(const SimplicialComplex& k) {
    return MultivectorField(k, singleton_blocks(k));
}

const std::vector<int>& MultivectorField::block(int b) const {
    if (b < 0 || b >= n_blocks())
        throw std::out_of_range("block id out of range");
    return blocks_[static_cast<std::size_t>(b)];
}

int MultivectorField::block_of(int simplex_id) const {
    if (simplex_id < 0 || simplex_id >= static_cast<int>(owner_.size()))
        throw std::out_of_range("simplex id out of range");
    return owner_[static_cast<std::size_t>(simplex_id)];
}

bool MultivectorField::is_forman() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const auto& b) { return b.size() <= 2; });
}

FlowDigraph flow_digraph(const SimplicialComplex& k, const MultivectorField& v) {
    FlowDigraph g;
    g.succ.resize(static_cast<std::size_t>(k.size()));
    for (int id = 0; id < k.size(); ++id) {
        std::vector<int> s = k.closure({id});
        const auto& block = v.block(v.block_of(id));
        s.insert(s.end(), block.begin(), block.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        g.succ[static_cast<std::size_t>(id)] = std::move(s);
    }
    return g;
}

std::vector<std::vector<int>> singleton_blocks(const SimplicialComplex& k) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(k.size()));
    for (int id = 0; id < k.size(); ++id) blocks.push_back({id});
    return blocks;
}

std::vector<std::vector<int>> random_forman_blocks(const SimplicialComplex& k, Rng& rng) {
    const int n = k.size();
    // proper-coface lists
    std::vector<std::vector<int>> cofaces(static_cast<std::size_t>(n));
    for (int id = 0; id < n; ++id) {
        for (int f : k.closure({id}))
            if (f != id) cofaces[static_cast<std::size_t>(f)].push_back(id);
    }
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<int> alive_cofaces(static_cast<std::size_t>(n));
    for (int id = 0; id < n; ++id)
        alive_cofaces[static_cast<std::size_t>(id)] =
            static_cast<int>(cofaces[static_cast<std::size_t>(id)].size());

    auto remove = [&](int id) {
        alive[static_cast<std::size_t>(id)] = false;
        for (int f : k.closure({id}))
            if (f != id) --alive_cofaces[static_cast<std::size_t>(f)];
    };

    std::vector<std::vector<int>> blocks;
    int remaining = n;
    while (remaining > 0) {
        // free faces: alive simplices contained in exactly one other alive simplex
        std::vector<int> free_faces;
        for (int id = 0; id < n; ++id)
            if (alive[static_cast<std::size_t>(id)] &&
                alive_cofaces[static_cast<std::size_t>(id)] == 1)
                free_faces.push_back(id);
        if (!free_faces.empty()) {
            int sigma = free_faces[rng() % free_faces.size()];
            int tau = -1;
            for (int c : cofaces[static_cast<std::size_t>(sigma)])
                if (alive[static_cast<std::size_t>(c)]) tau = c;
            remove(sigma);
            remove(tau);
            blocks.push_back({sigma, tau});
            remaining -= 2;
        } else {
            // no free face: declare a top-dimensional critical cell
            int best_dim = -1;
            std::vector<int> top;
            for (int id = 0; id < n; ++id) {
                if (!alive[static_cast<std::size_t>(id)]) continue;
                int d = k.simplex(id).dim();
                if (d > best_dim) {
                    best_dim = d;
                    top.clear();
                }
                if (d == best_dim) top.push_back(id);
            }
            int sigma = top[rng() % top.size()];
            remove(sigma);
            blocks.push_back({sigma});
            --remaining;
        }
    }
    return blocks;
}

std::vector<std::vector<int>> random_multivector_blocks(const SimplicialComplex& k, Rng& rng,
                                                        int merge_steps, int max_block) {
    const int n = k.size();
    std::vector<int> owner(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(n));
    for (int id = 0; id < n; ++id) {
        owner[static_cast<std::size_t>(id)] = id;
        groups[static_cast<std::size_t>(id)] = {id};
    }
    std::vector<int> positive; // simplices of dimension >= 1
    for (int id = 0; id < n; ++id)
        if (k.simplex(id).dim() >= 1) positive.push_back(id);
    if (positive.empty()) return groups;

    for (int step = 0; step < merge_steps; ++step) {
        int tau = positive[rng() % positive.size()];
        auto faces = k.boundary_faces(tau);
        int sigma = faces[rng() % faces.size()];
        if (owner[static_cast<std::size_t>(sigma)] == owner[static_cast<std::size_t>(tau)])
            continue;

        // close the union of the two blocks under intervals and block
        // membership until stable
        std::set<int> u;
        auto absorb = [&](int id) {
            const auto& g = groups[static_cast<std::size_t>(owner[static_cast<std::size_t>(id)])];
            bool grew = false;
            for (int m : g) grew |= u.insert(m).second;
            return grew;
        };
        absorb(sigma);
        absorb(tau);
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> members(u.begin(), u.end());
            for (int a : members) {
                for (int c : members) {
                    if (k.simplex(a).dim() + 2 > k.simplex(c).dim()) continue;
                    if (!k.simplex(c).has_face(k.simplex(a))) continue;
                    for (int mu : strict_interval(k, a, c))
                        if (!u.count(mu)) changed |= absorb(mu);
                }
            }
        }
        if (static_cast<int>(u.size()) > max_block) continue;

        int target = owner[static_cast<std::size_t>(sigma)];
        for (int id : u) {
            int old = owner[static_cast<std::size_t>(id)];
            if (old == target) continue;
            owner[static_cast<std::size_t>(id)] = target;
        }
        std::vector<int> merged(u.begin(), u.end());
        for (int id : u)
            groups[static_cast<std::size_t>(id)].clear();
        groups[static_cast<std::size_t>(target)] = std::move(merged);
    }

    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return blocks;
}

} // namespace conmat
