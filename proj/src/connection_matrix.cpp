#include "conmat/connection_matrix.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace conmat {

int nu_of(const ReductionState& st, Index pos) {
    if (pos < 1 || pos > static_cast<Index>(st.nu.size()))
        throw std::out_of_range("position out of range");
    return st.nu[static_cast<std::size_t>(pos - 1)];
}

bool is_homogeneous(const SparseGF2Matrix& m, const std::vector<int>& nu, Index j) {
    const Index l = m.low(j);
    if (l == 0) return false;
    return nu[static_cast<std::size_t>(j - 1)] == nu[static_cast<std::size_t>(l - 1)];
}

bool is_homogeneous(const ReductionState& st, Index j) {
    return is_homogeneous(st.matrix, st.nu, j);
}

std::vector<Index> homogeneous_columns(const SparseGF2Matrix& m, const std::vector<int>& nu) {
    std::vector<Index> out;
    for (Index j = 1; j <= m.n_cols(); ++j)
        if (is_homogeneous(m, nu, j)) out.push_back(j);
    return out;
}

std::vector<Index> targetable_positions(const SparseGF2Matrix& m, const std::vector<int>& nu) {
    std::set<Index> out;
    for (Index j : homogeneous_columns(m, nu)) out.insert(m.low(j));
    return {out.begin(), out.end()};
}

std::vector<Index> targetable_positions(const ReductionState& st) {
    return targetable_positions(st.matrix, st.nu);
}

namespace {

// Dense shadow used by the debug path: checks that each event is the
// conjugation A_k = E * A_{k-1} * E with E = I + unit(s, j), and that
// A_k squares to zero.
struct DenseShadow {
    DenseGF2Matrix current;

    void apply_and_check(const SparseGF2Matrix& sparse_after, Index s, Index j) {
        const Index n = current.n_rows();
        DenseGF2Matrix e = DenseGF2Matrix::identity(n);
        e.set(s, j, true);
        current = multiply(multiply(e, current), e); // E is its own inverse over GF(2)
        if (!(current == DenseGF2Matrix::from_sparse(sparse_after)))
            throw internal_error("event (" + std::to_string(s) + "," + std::to_string(j) +
                                 ") is not the conjugation by E(s,j)");
        if (!multiply(current, current).is_zero())
            throw internal_error("matrix no longer squares to zero after event (" +
                                 std::to_string(s) + "," + std::to_string(j) + ")");
    }
};

} // namespace

ReductionState reduce(const FilteredBoundaryMatrix& fm, const MorseDecomposition& decomp,
                      const ReduceOptions& options) {
    ReductionState st{fm.matrix, fm.basis.nu, {}, 0, {}};
    SparseGF2Matrix& a = st.matrix;
    const Index n = a.n_cols();
    const auto& nu = st.nu;
    auto grade = [&](Index pos) { return nu[static_cast<std::size_t>(pos - 1)]; };

    // columns grouped by their current low, so candidate sources for a
    // conflict in row i are found without scanning the whole matrix
    std::vector<std::set<Index>> by_low(static_cast<std::size_t>(n) + 1);
    std::vector<Index> low_of(static_cast<std::size_t>(n) + 1, 0);
    for (Index j = 1; j <= n; ++j) {
        low_of[static_cast<std::size_t>(j)] = a.low(j);
        if (low_of[static_cast<std::size_t>(j)])
            by_low[static_cast<std::size_t>(low_of[static_cast<std::size_t>(j)])].insert(j);
    }
    auto relocate = [&](Index c) {
        const Index nl = a.low(c);
        Index& stored = low_of[static_cast<std::size_t>(c)];
        if (nl == stored) return;
        if (stored) by_low[static_cast<std::size_t>(stored)].erase(c);
        if (nl) by_low[static_cast<std::size_t>(nl)].insert(c);
        stored = nl;
    };

    std::optional<DenseShadow> shadow;
    if (options.debug_checks && n <= options.dense_limit)
        shadow = DenseShadow{DenseGF2Matrix::from_sparse(a)};

    for (Index j = 1; j <= n; ++j) {
        // the loop bound is the value low(j) has on entering the pass;
        // additions inside the pass only touch rows at or below the
        // current i, so no conflict is skipped
        for (Index i = a.low(j); i >= 1; --i) {
            if (!a.get(i, j)) continue;
            // smallest homogeneous column (other than j) whose low is i
            Index s = 0;
            for (Index cand : by_low[static_cast<std::size_t>(i)]) {
                if (cand != j && grade(cand) == grade(i)) {
                    s = cand;
                    break;
                }
            }
            if (s == 0) continue;

            a.add_column(s, j);
            relocate(j);
            const std::vector<Index> row_j = a.row(j); // snapshot before the row addition
            a.add_row(j, s);
            for (Index c : row_j) {
                relocate(c);
                if (c <= s && a.get(s, c))
                    st.warnings.push_back("entry (" + std::to_string(s) + "," +
                                          std::to_string(c) +
                                          ") on or below the diagonal after event (" +
                                          std::to_string(s) + "," + std::to_string(j) + ")");
            }

            ++st.event_count;
            if (options.record_trace) st.trace.push_back({s, j});
            if (shadow) {
                // source legality: the source is homogeneous in grade
                // nu(i), and cross-set sources must come from the left
                if (!decomp.leq(grade(s), grade(j)))
                    throw internal_error("event source grade is not below the target grade");
                if (grade(s) != grade(j) && s >= j)
                    throw internal_error("cross-set source column is not to the left of its target");
                shadow->apply_and_check(a, s, j);
            }
        }
    }

    if (st.event_count > static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw internal_error("event count exceeded n^2");
    return st;
}

ReducedReport check_reduced(const ReductionState& st) {
    const SparseGF2Matrix& a = st.matrix;
    ReducedReport rep;
    rep.r1 = rep.r2 = rep.r3 = true;

    const std::vector<Index> hom = homogeneous_columns(a, st.nu);
    std::map<Index, Index> hom_by_low; // low -> homogeneous column
    for (Index j : hom) {
        const Index l = a.low(j);
        rep.pairing.push_back({j, l});
        auto [it, inserted] = hom_by_low.emplace(l, j);
        if (!inserted && rep.r1) {
            rep.r1 = false;
            rep.witness = "columns " + std::to_string(it->second) + " and " + std::to_string(j) +
                          " are homogeneous with the same low " + std::to_string(l);
        }
    }

    std::set<Index> hom_set(hom.begin(), hom.end());
    for (auto [l, j] : hom_by_low) {
        (void)j;
        if (hom_set.count(l)) {
            rep.r2 = false;
            if (rep.witness.empty())
                rep.witness = "position " + std::to_string(l) + " is homogeneous and targetable";
            break;
        }
    }

    for (Index j = 1; j <= a.n_cols() && rep.r3; ++j) {
        for (Index i : a.column(j)) {
            auto it = hom_by_low.find(i);
            if (it != hom_by_low.end() && it->second != j) {
                rep.r3 = false;
                if (rep.witness.empty())
                    rep.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") conflicts with homogeneous column " +
                                  std::to_string(it->second);
                break;
            }
        }
    }
    return rep;
}

ConnectionMatrix extract(const ReductionState& st, const FilteredBoundaryMatrix& fm,
                         const SimplicialComplex& k) {
    const ReducedReport rep = check_reduced(st);
    if (!rep.pass())
        throw internal_error("final matrix is not reduced: " + rep.witness);

    const SparseGF2Matrix& a = st.matrix;
    const Index n = a.n_cols();
    std::vector<bool> dropped(static_cast<std::size_t>(n) + 1, false);
    for (auto [j, l] : rep.pairing) {
        dropped[static_cast<std::size_t>(j)] = true;
        dropped[static_cast<std::size_t>(l)] = true;
    }

    ConnectionMatrix cm;
    std::vector<Index> local(static_cast<std::size_t>(n) + 1, 0);
    for (Index p = 1; p <= n; ++p) {
        if (dropped[static_cast<std::size_t>(p)]) continue;
        cm.surviving.push_back(p);
        local[static_cast<std::size_t>(p)] = static_cast<Index>(cm.surviving.size());
        cm.labels.push_back(k.simplex(fm.basis.simplex_at(p)));
        cm.grades.push_back(fm.basis.nu_at(p));
        cm.dims.push_back(fm.basis.dim_at(p));
    }

    const Index m = cm.size();
    cm.entries = SparseGF2Matrix(m, m);
    for (Index b = 1; b <= m; ++b) {
        const Index col = cm.surviving[static_cast<std::size_t>(b - 1)];
        for (Index r : a.column(col)) {
            if (dropped[static_cast<std::size_t>(r)])
                throw internal_error("surviving column " + std::to_string(col) +
                                     " has an entry in dropped row " + std::to_string(r));
            cm.entries.set(local[static_cast<std::size_t>(r)], b, true);
        }
    }

    // the restriction of a reduced matrix must be cropped
    for (Index b = 1; b <= m; ++b) {
        const Index l = cm.entries.low(b);
        if (l != 0 && cm.grades[static_cast<std::size_t>(l - 1)] ==
                          cm.grades[static_cast<std::size_t>(b - 1)])
            throw internal_error("extracted matrix has a homogeneous column");
    }
    return cm;
}

PipelineResult compute_connection_matrix(const SimplicialComplex& k, const MultivectorField& v,
                                         const PipelineOptions& options) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    const auto t_total = clock::now();
    auto t = clock::now();
    const FlowDigraph g = flow_digraph(k, v);
    MorseDecomposition decomp =
        options.morse_sets ? morse_decomposition_from_partition(g, *options.morse_sets)
                           : minimal_morse_decomposition(g);
    RunReport report;
    report.morse_ms = ms_since(t);

    t = clock::now();
    const std::vector<int> linext = linear_extension(decomp, options.linext);
    FilteredBoundaryMatrix fm =
        assemble(k, decomp, build_admissible_basis(k, decomp, linext, options.intra));
    report.assemble_ms = ms_since(t);

    t = clock::now();
    ReductionState st = reduce(fm, decomp, options.reduce);
    report.reduce_ms = ms_since(t);

    t = clock::now();
    ConnectionMatrix cm = extract(st, fm, k);
    report.extract_ms = ms_since(t);

    report.total_ms = ms_since(t_total);
    report.n = fm.basis.n();
    report.n_sets = decomp.n_sets();
    report.n_surviving = cm.size();
    report.events = st.event_count;

    return {std::move(decomp), std::move(fm), std::move(st), std::move(cm), report};
}

} // namespace conmat
