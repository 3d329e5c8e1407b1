#include "conmat/oracle.hpp"

#include <algorithm>
#include <functional>

namespace conmat {

namespace {

void trim(std::vector<Index>& betti) {
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
}

std::string profile_string(const HomologyProfile& p) {
    std::string out = "(";
    for (std::size_t q = 0; q < p.betti.size(); ++q) {
        if (q) out += ",";
        out += std::to_string(p.betti[q]);
    }
    return out + ")";
}

} // namespace

HomologyProfile betti_numbers(const SparseGF2Matrix& boundary, const std::vector<int>& dims,
                              const OracleOptions& options) {
    const Index n = boundary.n_cols();
    if (boundary.n_rows() != n)
        throw validation_error("boundary matrix must be square");
    if (static_cast<Index>(dims.size()) != n)
        throw validation_error("dimension map does not match the matrix");
    if (n > options.max_n)
        throw validation_error("oracle refuses inputs above " + std::to_string(options.max_n) +
                               " columns");

    int max_dim = -1;
    for (int d : dims) {
        if (d < 0) throw validation_error("homological dimensions must be nonnegative");
        max_dim = std::max(max_dim, d);
    }
    for (Index j = 1; j <= n; ++j)
        for (Index i : boundary.column(j))
            if (dims[static_cast<std::size_t>(i - 1)] != dims[static_cast<std::size_t>(j - 1)] - 1)
                throw validation_error("boundary entry does not drop dimension by one");

    const DenseGF2Matrix dense = DenseGF2Matrix::from_sparse(boundary);
    if (!multiply(dense, dense).is_zero())
        throw validation_error("boundary matrix does not square to zero");

    // rank of d restricted to columns of each dimension
    std::vector<Index> rank_q(static_cast<std::size_t>(max_dim) + 2, 0);
    std::vector<Index> count_q(static_cast<std::size_t>(max_dim) + 2, 0);
    for (int q = 0; q <= max_dim; ++q) {
        std::vector<Index> cols;
        for (Index j = 1; j <= n; ++j)
            if (dims[static_cast<std::size_t>(j - 1)] == q) cols.push_back(j);
        count_q[static_cast<std::size_t>(q)] = static_cast<Index>(cols.size());
        if (q == 0) continue; // vertex columns are zero
        DenseGF2Matrix sub(n, static_cast<Index>(cols.size()));
        for (Index c = 1; c <= static_cast<Index>(cols.size()); ++c)
            for (Index i : boundary.column(cols[static_cast<std::size_t>(c - 1)]))
                sub.set(i, c, true);
        rank_q[static_cast<std::size_t>(q)] = gf2_rank(std::move(sub));
    }

    HomologyProfile profile;
    profile.betti.resize(static_cast<std::size_t>(max_dim) + 1, 0);
    for (int q = 0; q <= max_dim; ++q) {
        const Index b = count_q[static_cast<std::size_t>(q)] - rank_q[static_cast<std::size_t>(q)] -
                        rank_q[static_cast<std::size_t>(q) + 1];
        if (b < 0) throw internal_error("negative Betti number");
        profile.betti[static_cast<std::size_t>(q)] = b;
    }
    trim(profile.betti);
    return profile;
}

SparseGF2Matrix canonical_boundary_matrix(const SimplicialComplex& k) {
    const Index n = k.size();
    SparseGF2Matrix m(n, n);
    for (int j = 0; j < k.size(); ++j)
        for (int f : k.boundary_faces(j))
            m.set(static_cast<Index>(f) + 1, static_cast<Index>(j) + 1, true);
    return m;
}

std::vector<int> canonical_dims(const SimplicialComplex& k) {
    std::vector<int> dims;
    dims.reserve(static_cast<std::size_t>(k.size()));
    for (const Simplex& s : k.simplices()) dims.push_back(s.dim());
    return dims;
}

HomologyProfile conley_index_dims(const SimplicialComplex& k, const std::vector<int>& morse_set,
                                  const OracleOptions& options) {
    std::vector<int> members = morse_set;
    std::sort(members.begin(), members.end());
    std::vector<Index> local(static_cast<std::size_t>(k.size()), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || members[i] >= k.size())
            throw validation_error("Morse set references an unknown simplex id");
        local[static_cast<std::size_t>(members[i])] = static_cast<Index>(i) + 1;
    }

    const Index m = static_cast<Index>(members.size());
    SparseGF2Matrix quotient(m, m);
    std::vector<int> dims;
    dims.reserve(members.size());
    for (Index j = 1; j <= m; ++j) {
        const int id = members[static_cast<std::size_t>(j - 1)];
        dims.push_back(k.simplex(id).dim());
        for (int f : k.boundary_faces(id))
            if (local[static_cast<std::size_t>(f)] != 0)
                quotient.set(local[static_cast<std::size_t>(f)], j, true);
    }
    return betti_numbers(quotient, dims, options);
}

ReductionPairMaps single_reduction(const DenseGF2Matrix& d, Index i0, Index j0) {
    const Index n = d.n_rows();
    if (d.n_cols() != n) throw validation_error("single_reduction expects a square matrix");
    if (i0 < 1 || i0 > n || j0 < 1 || j0 > n || i0 == j0)
        throw validation_error("invalid reduction pair indices");
    if (!d.get(i0, j0))
        throw validation_error("(" + std::to_string(i0) + "," + std::to_string(j0) +
                               ") is not a reduction pair");
    if (d.get(i0, i0) || d.get(j0, j0))
        throw validation_error("reduction pair positions must have zero diagonal entries");
    if (!multiply(d, d).is_zero())
        throw validation_error("matrix does not square to zero");

    ReductionPairMaps maps;
    for (Index p = 1; p <= n; ++p)
        if (p != i0 && p != j0) maps.kept.push_back(p);
    const Index m = static_cast<Index>(maps.kept.size());
    auto kept = [&](Index a) { return maps.kept[static_cast<std::size_t>(a - 1)]; };

    maps.d_bar = DenseGF2Matrix(m, m);
    for (Index a = 1; a <= m; ++a)
        for (Index b = 1; b <= m; ++b)
            maps.d_bar.set(a, b,
                           d.get(kept(a), kept(b)) ^
                               (d.get(i0, kept(b)) && d.get(kept(a), j0)));

    maps.pi = DenseGF2Matrix(m, n);
    for (Index a = 1; a <= m; ++a) {
        maps.pi.set(a, kept(a), true);
        maps.pi.set(a, i0, d.get(kept(a), j0));
    }

    maps.iota = DenseGF2Matrix(n, m);
    for (Index b = 1; b <= m; ++b) {
        maps.iota.set(kept(b), b, true);
        maps.iota.set(j0, b, d.get(i0, kept(b)));
    }

    maps.gamma = DenseGF2Matrix(n, n);
    maps.gamma.set(j0, i0, true);

    if (!(multiply(maps.pi, maps.iota) == DenseGF2Matrix::identity(m)))
        throw validation_error("chain identity pi * iota = id failed");
    DenseGF2Matrix lhs = multiply(maps.iota, maps.pi);
    DenseGF2Matrix rhs = DenseGF2Matrix::identity(n);
    const DenseGF2Matrix dg = multiply(d, maps.gamma);
    const DenseGF2Matrix gd = multiply(maps.gamma, d);
    for (Index i = 1; i <= n; ++i)
        for (Index j = 1; j <= n; ++j)
            if (dg.get(i, j) ^ gd.get(i, j)) rhs.toggle(i, j);
    if (!(lhs == rhs))
        throw validation_error("chain identity iota * pi = id + d*gamma + gamma*d failed");
    if (!(multiply(maps.d_bar, maps.pi) == multiply(maps.pi, d)))
        throw validation_error("pi is not a chain map");
    if (!(multiply(d, maps.iota) == multiply(maps.iota, maps.d_bar)))
        throw validation_error("iota is not a chain map");
    return maps;
}

bool Certificate::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

const Certificate::Check* Certificate::find(const std::string& name) const {
    for (const Check& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Certificate verify_connection_matrix(const ConnectionMatrix& cm, const SimplicialComplex& k,
                                     const MorseDecomposition& decomp,
                                     const FilteredBoundaryMatrix& fm, const ReductionState& st,
                                     const OracleOptions& options) {
    if (k.size() > options.max_n)
        throw validation_error("oracle refuses inputs above " + std::to_string(options.max_n) +
                               " simplices");

    Certificate cert;
    auto run = [&](const std::string& name, const std::function<std::string()>& body) {
        std::string witness;
        try {
            witness = body();
        } catch (const std::exception& e) {
            witness = e.what();
        }
        cert.checks.push_back({name, witness.empty(), witness});
    };

    const Index m = cm.size();
    auto label = [&](Index b) { return cm.labels[static_cast<std::size_t>(b - 1)].to_string(); };
    auto grade = [&](Index b) { return cm.grades[static_cast<std::size_t>(b - 1)]; };

    run("basis_consistent", [&]() -> std::string {
        if (st.nu != fm.basis.nu) return "reduction state grades differ from the basis";
        for (Index b = 1; b <= m; ++b) {
            const Index p = cm.surviving[static_cast<std::size_t>(b - 1)];
            if (p < 1 || p > fm.basis.n()) return "surviving position out of range";
            if (cm.grades[static_cast<std::size_t>(b - 1)] != fm.basis.nu_at(p) ||
                cm.dims[static_cast<std::size_t>(b - 1)] != fm.basis.dim_at(p) ||
                !(cm.labels[static_cast<std::size_t>(b - 1)] ==
                  k.simplex(fm.basis.simplex_at(p))))
                return "metadata of surviving position " + std::to_string(p) +
                       " disagrees with the basis";
        }
        return "";
    });

    run("cropped", [&]() -> std::string {
        for (Index b = 1; b <= m; ++b) {
            const Index l = cm.entries.low(b);
            if (l != 0 && grade(l) == grade(b))
                return "column " + label(b) + " is homogeneous (low " + label(l) + ")";
        }
        return "";
    });

    run("square_zero", [&]() -> std::string {
        const DenseGF2Matrix dense = DenseGF2Matrix::from_sparse(cm.entries);
        if (!multiply(dense, dense).is_zero()) return "entries do not square to zero";
        return "";
    });

    run("diagonal_blocks", [&]() -> std::string {
        for (Index b = 1; b <= m; ++b)
            for (Index i : cm.entries.column(b))
                if (grade(i) == grade(b))
                    return "entry (" + label(i) + ", " + label(b) + ") lies in a diagonal block";
        return "";
    });

    run("filtered", [&]() -> std::string {
        for (Index b = 1; b <= m; ++b)
            for (Index i : cm.entries.column(b))
                if (!decomp.leq(grade(i), grade(b)))
                    return "entry (" + label(i) + ", " + label(b) + ") violates the Morse order";
        return "";
    });

    run("conley_index_counts", [&]() -> std::string {
        for (int p = 0; p < decomp.n_sets(); ++p) {
            const HomologyProfile want = conley_index_dims(k, decomp.set(p), options);
            std::vector<Index> got;
            for (Index b = 1; b <= m; ++b) {
                if (grade(b) != p) continue;
                const std::size_t q = static_cast<std::size_t>(cm.dims[static_cast<std::size_t>(b - 1)]);
                if (got.size() <= q) got.resize(q + 1, 0);
                ++got[q];
            }
            trim(got);
            if (!(got == want.betti)) {
                HomologyProfile got_p{got};
                return "Morse set " + std::to_string(p) + " has surviving generator counts " +
                       profile_string(got_p) + " but Conley index " + profile_string(want);
            }
        }
        return "";
    });

    run("global_betti", [&]() -> std::string {
        const HomologyProfile input =
            betti_numbers(canonical_boundary_matrix(k), canonical_dims(k), options);
        const HomologyProfile output = betti_numbers(cm.entries, cm.dims, options);
        if (!(input == output))
            return "complex has Betti numbers " + profile_string(input) +
                   " but the connection matrix has " + profile_string(output);
        return "";
    });

    run("reduction_replay", [&]() -> std::string {
        DenseGF2Matrix cur = DenseGF2Matrix::from_sparse(st.matrix);
        std::vector<Index> alive;
        for (Index p = 1; p <= st.matrix.n_cols(); ++p) alive.push_back(p);
        auto nu_alive = [&](Index local) {
            return st.nu[static_cast<std::size_t>(alive[static_cast<std::size_t>(local - 1)] - 1)];
        };

        while (true) {
            const Index cur_n = cur.n_rows();
            Index j0 = 0, i0 = 0;
            for (Index b = 1; b <= cur_n && j0 == 0; ++b) {
                Index l = 0;
                for (Index i = 1; i <= cur_n; ++i)
                    if (cur.get(i, b)) l = i;
                if (l != 0 && nu_alive(l) == nu_alive(b)) {
                    j0 = b;
                    i0 = l;
                }
            }
            if (j0 == 0) break;

            const ReductionPairMaps maps = single_reduction(cur, i0, j0);
            // on a reduced matrix the collapsed boundary must coincide
            // with plain deletion of the pair's row and column
            for (Index a = 1; a <= cur_n - 2; ++a)
                for (Index b = 1; b <= cur_n - 2; ++b)
                    if (maps.d_bar.get(a, b) !=
                        cur.get(maps.kept[static_cast<std::size_t>(a - 1)],
                                maps.kept[static_cast<std::size_t>(b - 1)]))
                        return "collapsed boundary differs from row/column deletion at pair (" +
                               std::to_string(i0) + "," + std::to_string(j0) + ")";
            std::vector<Index> next_alive;
            for (Index p : maps.kept)
                next_alive.push_back(alive[static_cast<std::size_t>(p - 1)]);
            alive = std::move(next_alive);
            cur = maps.d_bar;
        }

        if (alive != cm.surviving)
            return "surviving positions from iterated reductions differ from the output";
        if (!(cur == DenseGF2Matrix::from_sparse(cm.entries)))
            return "iterated reductions do not reproduce the connection matrix entries";
        return "";
    });

    return cert;
}

} // namespace conmat
