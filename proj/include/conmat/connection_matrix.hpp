#pragma once

// The single-pass reduction and connection-matrix extraction.
//
// The reduction sweeps columns left to right. For column j it walks row
// indices downward from the value low(j) had on entry. Whenever the
// current entry A[i,j] is 1 and some other column s is homogeneous with
// low(s) = i, the smallest such s is added into column j and row j is
// added into row s, so the two operations together conjugate the matrix
// by the elementary addition matrix E(s,j). Afterwards the matrix is
// reduced; dropping all homogeneous and targetable positions yields the
// connection matrix.

#include <optional>
#include <string>

#include "conmat/admissible_basis.hpp"

namespace conmat {

// Column source added into column target, paired with the corresponding
// row addition (target row into source row).
struct TraceEvent {
    Index source;
    Index target;
};

struct ReduceOptions {
    bool record_trace = true;
    // Replays every event against a dense mirror: conjugation identity
    // and A^2 = 0 after each step. Only honored for n <= dense_limit.
    bool debug_checks = false;
    Index dense_limit = kDenseCheckLimit;
};

struct ReductionState {
    SparseGF2Matrix matrix;  // final state of A
    std::vector<int> nu;     // nu[p-1] = Morse set id of position p
    std::vector<TraceEvent> trace;
    std::size_t event_count = 0;
    // The proofs implicitly keep the matrix strictly upper triangular
    // throughout the run. We monitor instead of assuming; any entry
    // created on or below the diagonal is reported here.
    std::vector<std::string> warnings;
};

int nu_of(const ReductionState& st, Index pos);
bool is_homogeneous(const SparseGF2Matrix& m, const std::vector<int>& nu, Index j);
bool is_homogeneous(const ReductionState& st, Index j);
std::vector<Index> homogeneous_columns(const SparseGF2Matrix& m, const std::vector<int>& nu);
std::vector<Index> targetable_positions(const SparseGF2Matrix& m, const std::vector<int>& nu);
std::vector<Index> targetable_positions(const ReductionState& st);

ReductionState reduce(const FilteredBoundaryMatrix& fm, const MorseDecomposition& decomp,
                      const ReduceOptions& options = {});

// (R1) low restricted to homogeneous columns is a bijection onto the
// targetable positions, (R2) the two sets are disjoint, (R3) no entry
// shares its row with the low of another homogeneous column.
struct ReducedReport {
    bool r1 = false;
    bool r2 = false;
    bool r3 = false;
    std::vector<std::pair<Index, Index>> pairing; // homogeneous column -> its low
    std::string witness;
    bool pass() const { return r1 && r2 && r3; }
};

ReducedReport check_reduced(const ReductionState& st);

struct ConnectionMatrix {
    std::vector<Index> surviving; // original positions, ascending
    std::vector<Simplex> labels;  // per surviving position
    std::vector<int> grades;      // Morse set ids per surviving position
    std::vector<int> dims;        // homological dimensions per surviving position
    SparseGF2Matrix entries;      // |J| x |J|, indexed by surviving order

    Index size() const { return static_cast<Index>(surviving.size()); }
};

ConnectionMatrix extract(const ReductionState& st, const FilteredBoundaryMatrix& fm,
                         const SimplicialComplex& k);

struct PipelineOptions {
    std::optional<std::vector<std::vector<int>>> morse_sets; // simplex-id blocks
    TieBreak linext = TieBreak::min_set_id();
    IntraOrders intra;
    ReduceOptions reduce;
};

struct RunReport {
    Index n = 0;
    int n_sets = 0;
    Index n_surviving = 0;
    std::size_t events = 0;
    double morse_ms = 0;
    double assemble_ms = 0;
    double reduce_ms = 0;
    double extract_ms = 0;
    double total_ms = 0;
};

struct PipelineResult {
    MorseDecomposition decomp;
    FilteredBoundaryMatrix input;
    ReductionState state;
    ConnectionMatrix connection;
    RunReport report;
};

PipelineResult compute_connection_matrix(const SimplicialComplex& k, const MultivectorField& v,
                                         const PipelineOptions& options = {});

} // namespace conmat
