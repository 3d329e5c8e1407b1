#include <doctest.h>

#include <set>

#include "test_util.hpp"

using namespace conmat;
using testutil::annulus_blocks;
using testutil::annulus_complex;
using testutil::annulus_intra;
using testutil::id_of;

namespace {

struct AnnulusFixture {
    SimplicialComplex k = annulus_complex();
    MultivectorField v{k, annulus_blocks(k)};
    MorseDecomposition d = minimal_morse_decomposition(flow_digraph(k, v));
};

std::vector<std::string> basis_labels(const SimplicialComplex& k, const AdmissibleBasis& b) {
    std::vector<std::string> out;
    for (Index p = 1; p <= b.n(); ++p) out.push_back(k.simplex(b.simplex_at(p)).to_string());
    return out;
}

} // namespace

TEST_CASE("linear extension of the worked example") {
    AnnulusFixture f;
    CHECK(linear_extension(f.d) == std::vector<int>{0, 1, 2, 3});

    // every seeded extension is a valid one; the two triangles are the
    // only incomparable pair, so only the last two positions may swap
    std::set<std::vector<int>> seen;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        auto ext = linear_extension(f.d, TieBreak::seeded(seed));
        CHECK(ext[0] == 0);
        CHECK(ext[1] == 1);
        seen.insert(ext);
        CHECK(ext == linear_extension(f.d, TieBreak::seeded(seed))); // deterministic
    }
    CHECK(seen.size() == 2);
    CHECK(seen.count({0, 1, 2, 3}) == 1);
    CHECK(seen.count({0, 1, 3, 2}) == 1);
}

TEST_CASE("default basis groups sets in extension order, dimension-then-lex inside") {
    AnnulusFixture f;
    AdmissibleBasis b = build_admissible_basis(f.k, f.d, linear_extension(f.d));
    CHECK(basis_labels(f.k, b) ==
          std::vector<std::string>{"{A}", "{B}", "{C}", "{D}", "{A,B}", "{A,D}", "{B,C}",
                                   "{C,D}", "{A,C}", "{A,B,C}", "{A,C,D}"});
    for (Index p = 1; p <= b.n(); ++p) CHECK(b.dim_at(p) == f.k.simplex(b.simplex_at(p)).dim());
    CHECK(b.nu == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3});
}

TEST_CASE("user intra-set orders are accepted when admissible") {
    AnnulusFixture f;
    AdmissibleBasis b = build_admissible_basis(f.k, f.d, linear_extension(f.d), annulus_intra(f.k));
    CHECK(basis_labels(f.k, b) ==
          std::vector<std::string>{"{A}", "{B}", "{A,B}", "{C}", "{B,C}", "{D}", "{C,D}",
                                   "{A,D}", "{A,C}", "{A,B,C}", "{A,C,D}"});
}

TEST_CASE("user orders violating triangularity are rejected with a witness") {
    AnnulusFixture f;
    // CD before D: the boundary entry (D, CD) would sit below the diagonal
    IntraOrders intra = {{0,
                          {id_of(f.k, {"A"}), id_of(f.k, {"B"}), id_of(f.k, {"A", "B"}),
                           id_of(f.k, {"C"}), id_of(f.k, {"B", "C"}), id_of(f.k, {"C", "D"}),
                           id_of(f.k, {"D"}), id_of(f.k, {"A", "D"})}}};
    CHECK_THROWS_WITH_AS(build_admissible_basis(f.k, f.d, linear_extension(f.d), intra),
                         doctest::Contains("{D}, {C,D}"), validation_error);

    // wrong membership
    IntraOrders bad = {{0, {id_of(f.k, {"A"})}}};
    CHECK_THROWS_AS(build_admissible_basis(f.k, f.d, linear_extension(f.d), bad),
                    validation_error);

    // an ordering of sets contradicting the Morse order
    CHECK_THROWS_AS(build_admissible_basis(f.k, f.d, {1, 0, 2, 3}), validation_error);
    CHECK_THROWS_AS(build_admissible_basis(f.k, f.d, {0, 1, 2}), validation_error);
}

TEST_CASE("assembled matrix of the worked example") {
    AnnulusFixture f;
    FilteredBoundaryMatrix fm =
        assemble(f.k, f.d, build_admissible_basis(f.k, f.d, linear_extension(f.d), annulus_intra(f.k)));
    // order: A B AB C BC D CD DA CA ABC CDA
    CHECK(fm.matrix.column(3) == std::vector<Index>{1, 2});
    CHECK(fm.matrix.column(5) == std::vector<Index>{2, 4});
    CHECK(fm.matrix.column(7) == std::vector<Index>{4, 6});
    CHECK(fm.matrix.column(8) == std::vector<Index>{1, 6});
    CHECK(fm.matrix.column(9) == std::vector<Index>{1, 4});
    CHECK(fm.matrix.column(10) == std::vector<Index>{3, 5, 9});
    CHECK(fm.matrix.column(11) == std::vector<Index>{7, 8, 9});
    for (Index j : {1, 2, 4, 6}) CHECK(fm.matrix.column(j).empty());
}

TEST_CASE("low is strictly below the diagonal in every assembled matrix") {
    Rng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex k = testutil::small_random_complex(rng);
        MultivectorField v(k, testutil::random_blocks(k, rng));
        MorseDecomposition d = minimal_morse_decomposition(flow_digraph(k, v));
        auto linext = linear_extension(d, TieBreak::seeded(rng()));
        FilteredBoundaryMatrix fm = assemble(k, d, build_admissible_basis(k, d, linext));
        for (Index j = 1; j <= fm.matrix.n_cols(); ++j) CHECK(fm.matrix.low(j) < j);
    }
}

TEST_CASE("swapping incomparable sets permutes the matrix symmetrically") {
    AnnulusFixture f;
    FilteredBoundaryMatrix fm1 =
        assemble(f.k, f.d, build_admissible_basis(f.k, f.d, {0, 1, 2, 3}));
    FilteredBoundaryMatrix fm2 =
        assemble(f.k, f.d, build_admissible_basis(f.k, f.d, {0, 1, 3, 2}));
    for (Index j = 1; j <= fm1.basis.n(); ++j) {
        const int sj = fm1.basis.simplex_at(j);
        const Index j2 = fm2.basis.pos_of[static_cast<std::size_t>(sj)];
        for (Index i = 1; i <= fm1.basis.n(); ++i) {
            const Index i2 = fm2.basis.pos_of[static_cast<std::size_t>(fm1.basis.simplex_at(i))];
            CHECK(fm1.matrix.get(i, j) == fm2.matrix.get(i2, j2));
        }
    }
}

TEST_CASE("empty complex assembles to a 0x0 matrix") {
    SimplicialComplex k = SimplicialComplex::from_facets({});
    MultivectorField v(k, {});
    MorseDecomposition d = minimal_morse_decomposition(flow_digraph(k, v));
    FilteredBoundaryMatrix fm = assemble(k, d, build_admissible_basis(k, d, {}));
    CHECK(fm.matrix.n_cols() == 0);
    CHECK(fm.basis.n() == 0);
}
