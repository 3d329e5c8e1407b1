#include <doctest.h>

#include "conmat/oracle.hpp"
#include "test_util.hpp"

using namespace conmat;
using testutil::annulus_complex;
using testutil::id_of;
using testutil::sx;

TEST_CASE("simplex construction canonicalizes and validates") {
    Simplex s({"C", "A", "B"});
    CHECK(s.vertices() == std::vector<std::string>{"A", "B", "C"});
    CHECK(s.dim() == 2);
    CHECK(s.to_string() == "{A,B,C}");
    CHECK_THROWS_AS(Simplex({"A", "A"}), validation_error);
    CHECK_THROWS_AS(Simplex({}), validation_error);
}

TEST_CASE("from_facets builds the closure in canonical order") {
    SimplicialComplex k = annulus_complex();
    CHECK(k.size() == 11);
    // dimension first, then lexicographic on the sorted vertex tuples
    CHECK(k.simplex(0).to_string() == "{A}");
    CHECK(k.simplex(3).to_string() == "{D}");
    CHECK(k.simplex(4).to_string() == "{A,B}");
    CHECK(k.simplex(5).to_string() == "{A,C}");
    CHECK(k.simplex(6).to_string() == "{A,D}");
    CHECK(k.simplex(7).to_string() == "{B,C}");
    CHECK(k.simplex(8).to_string() == "{C,D}");
    CHECK(k.simplex(9).to_string() == "{A,B,C}");
    CHECK(k.simplex(10).to_string() == "{A,C,D}");

    CHECK(SimplicialComplex::from_facets({sx({"A"})}).size() == 1);
    SimplicialComplex edge = SimplicialComplex::from_facets({sx({"A", "B"})});
    CHECK(edge.size() == 3);
    CHECK(edge.find(sx({"A"})).has_value());
    CHECK(edge.find(sx({"B"})).has_value());
    CHECK(edge.find(sx({"A", "B"})).has_value());
    CHECK_FALSE(edge.find(sx({"C"})).has_value());
}

TEST_CASE("from_simplices requires a closed list") {
    CHECK_THROWS_WITH_AS(SimplicialComplex::from_simplices({sx({"A", "B"})}),
                         doctest::Contains("not closed"), validation_error);
    CHECK_THROWS_AS(SimplicialComplex::from_simplices({sx({"A"}), sx({"A"})}),
                    validation_error);
    SimplicialComplex k =
        SimplicialComplex::from_simplices({sx({"A"}), sx({"B"}), sx({"A", "B"})});
    CHECK(k.size() == 3);
    CHECK(SimplicialComplex::from_simplices({}).size() == 0);
}

TEST_CASE("closure") {
    SimplicialComplex k = annulus_complex();
    const int abc = id_of(k, {"A", "B", "C"});
    auto cl = k.closure({abc});
    CHECK(cl == std::vector<int>{id_of(k, {"A"}), id_of(k, {"B"}), id_of(k, {"C"}),
                                 id_of(k, {"A", "B"}), id_of(k, {"A", "C"}),
                                 id_of(k, {"B", "C"}), abc});
    CHECK(k.closure({}).empty());
    auto cd_da = k.closure({id_of(k, {"C", "D"}), id_of(k, {"A", "D"})});
    CHECK(cd_da == std::vector<int>{id_of(k, {"A"}), id_of(k, {"C"}), id_of(k, {"D"}),
                                    id_of(k, {"A", "D"}), id_of(k, {"C", "D"})});
}

TEST_CASE("boundary_faces") {
    SimplicialComplex k = annulus_complex();
    CHECK(k.boundary_faces(id_of(k, {"A", "B"})) ==
          std::vector<int>{id_of(k, {"A"}), id_of(k, {"B"})});
    CHECK(k.boundary_faces(id_of(k, {"A"})).empty());
    CHECK(k.boundary_faces(id_of(k, {"A", "C", "D"})) ==
          std::vector<int>{id_of(k, {"A", "C"}), id_of(k, {"A", "D"}), id_of(k, {"C", "D"})});
    CHECK_THROWS_AS(k.boundary_faces(11), std::out_of_range);
}

TEST_CASE("every generated complex is closed with a vanishing boundary square") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        SimplicialComplex k = testutil::small_random_complex(rng);
        for (int id = 0; id < k.size(); ++id) {
            const Simplex& s = k.simplex(id);
            CHECK(static_cast<int>(k.boundary_faces(id).size()) ==
                  (s.dim() == 0 ? 0 : s.dim() + 1));
        }
        const SparseGF2Matrix boundary = canonical_boundary_matrix(k);
        const DenseGF2Matrix dense = DenseGF2Matrix::from_sparse(boundary);
        CHECK(multiply(dense, dense).is_zero());
    }
}
