#include "doctest.h"

#include <utility>
#include <vector>

#include "lapmult/graph.hpp"
#include "lapmult/matrix.hpp"
#include "lapmult/spectrum.hpp"

using namespace lapmult;

namespace {

using IntPart = std::vector<std::pair<long long, int>>;

}  // namespace

TEST_CASE("integral spectra extract completely") {
    ExactSpectrum s = graph_spectrum(complete(5));
    CHECK(s.order == 5);
    CHECK(s.integer_part == IntPart{{5, 4}, {0, 1}});
    CHECK(s.integral());
    CHECK(s.multiplicity_of(5) == 4);
    CHECK(s.multiplicity_of(0) == 1);
    CHECK(s.multiplicity_of(3) == 0);

    CHECK(graph_spectrum(star(5)).integer_part == IntPart{{5, 1}, {1, 3}, {0, 1}});
    CHECK(graph_spectrum(cycle(4)).integer_part == IntPart{{4, 1}, {2, 2}, {0, 1}});
    CHECK(graph_spectrum(complete_bipartite(2, 4)).integer_part ==
          IntPart{{6, 1}, {4, 1}, {2, 3}, {0, 1}});
    CHECK(graph_spectrum(eq1_graph(4)).integer_part == IntPart{{4, 1}, {3, 1}, {1, 1}, {0, 1}});
}

TEST_CASE("irrational parts stay as a residual") {
    ExactSpectrum p4 = graph_spectrum(path(4));
    CHECK(p4.order == 4);
    CHECK(p4.integer_part == IntPart{{2, 1}, {0, 1}});
    REQUIRE(p4.residual.has_value());
    CHECK(*p4.residual == IntPoly{2, -4, 1});

    ExactSpectrum c5 = graph_spectrum(cycle(5));
    CHECK(c5.integer_part == IntPart{{0, 1}});
    REQUIRE(c5.residual.has_value());
    CHECK(*c5.residual == mul(IntPoly{5, -5, 1}, IntPoly{5, -5, 1}));

    ExactSpectrum g6 = graph_spectrum(gnr(3, 1));
    CHECK(g6.integer_part == IntPart{{3, 3}, {0, 1}});
    REQUIRE(g6.residual.has_value());
    CHECK(*g6.residual == IntPoly{8, -7, 1});
}

TEST_CASE("a residual whose discriminant is a square never appears") {
    // The quadratic factor for this member splits over the integers.
    ExactSpectrum s = graph_spectrum(gnr(5, 2));
    CHECK(s.order == 10);
    CHECK(s.integral());
    CHECK(s.integer_part == IntPart{{9, 1}, {5, 7}, {2, 1}, {0, 1}});
}

TEST_CASE("expand and compare") {
    for (const Graph& g : {path(4), cycle(5), complete(6), gnr(3, 1)}) {
        ExactSpectrum s = graph_spectrum(g);
        CHECK(expand_spectrum(s) == laplacian_charpoly(g));
    }
    CHECK(spectra_equal(graph_spectrum(cycle(4)), graph_spectrum(complete_bipartite(2, 2))));
    CHECK_FALSE(spectra_equal(graph_spectrum(cycle(4)), graph_spectrum(path(4))));
}

TEST_CASE("extract rejects non-monic input") {
    CHECK_THROWS_AS(extract_spectrum(IntPoly{0, 2}), std::invalid_argument);
}

TEST_CASE("distinct count and max nonzero multiplicity") {
    CHECK(distinct_eigenvalue_count(graph_spectrum(complete(5))) == 2);
    CHECK(distinct_eigenvalue_count(graph_spectrum(path(4))) == 4);
    CHECK(distinct_eigenvalue_count(graph_spectrum(cycle(5))) == 3);
    CHECK(distinct_eigenvalue_count(graph_spectrum(gnr(3, 1))) == 4);

    CHECK(max_nonzero_multiplicity(graph_spectrum(complete(6))) == 5);
    CHECK(max_nonzero_multiplicity(graph_spectrum(path(4))) == 1);
    CHECK(max_nonzero_multiplicity(graph_spectrum(cycle(5))) == 2);
    CHECK(max_nonzero_multiplicity(graph_spectrum(cycle(4))) == 2);
    CHECK(max_nonzero_multiplicity(graph_spectrum(gnr(3, 1))) == 3);
}

TEST_CASE("residual multiplicities") {
    ExactSpectrum c5 = graph_spectrum(cycle(5));
    REQUIRE(c5.residual.has_value());
    auto levels = residual_multiplicities(*c5.residual);
    REQUIRE(levels.size() == 1);
    CHECK(levels[0] == std::pair<int, int>{2, 2});  // two roots, each twice

    ExactSpectrum p4 = graph_spectrum(path(4));
    levels = residual_multiplicities(*p4.residual);
    REQUIRE(levels.size() == 1);
    CHECK(levels[0] == std::pair<int, int>{2, 1});
}

TEST_CASE("complement spectrum") {
    // Star complement: K_{n-1} plus an isolated vertex.
    ExactSpectrum co = complement_spectrum(graph_spectrum(star(5)));
    CHECK(co.order == 5);
    CHECK(co.integer_part == IntPart{{4, 3}, {0, 2}});
    CHECK(expand_spectrum(co) == laplacian_charpoly(complement(star(5))));

    // Self-complementary case.
    ExactSpectrum c4co = complement_spectrum(graph_spectrum(cycle(4)));
    CHECK(expand_spectrum(c4co) == laplacian_charpoly(complement(cycle(4))));

    CHECK_THROWS_AS(complement_spectrum(graph_spectrum(path(4))), std::invalid_argument);
}

TEST_CASE("join spectrum") {
    // Wheel: apex over a 4-cycle.
    ExactSpectrum w4 = join_spectrum(graph_spectrum(complete(1)), graph_spectrum(cycle(4)));
    CHECK(w4.order == 5);
    CHECK(expand_spectrum(w4) == laplacian_charpoly(join(complete(1), cycle(4))));
    CHECK(w4.integer_part == IntPart{{5, 2}, {3, 2}, {0, 1}});

    ExactSpectrum s = join_spectrum(graph_spectrum(complete(2)), graph_spectrum(empty_graph(3)));
    CHECK(expand_spectrum(s) == laplacian_charpoly(join(complete(2), empty_graph(3))));

    // Join of two disconnected parts.
    ExactSpectrum t = join_spectrum(graph_spectrum(empty_graph(2)), graph_spectrum(empty_graph(3)));
    CHECK(expand_spectrum(t) == laplacian_charpoly(complete_bipartite(2, 3)));

    CHECK_THROWS_AS(join_spectrum(graph_spectrum(path(4)), graph_spectrum(complete(2))),
                    std::invalid_argument);
}

TEST_CASE("square divisibility") {
    CHECK(divides_square(IntPoly{4, -4, 1}, 2));                       // (x-2)^2
    CHECK(divides_square(mul(IntPoly{4, -4, 1}, IntPoly{-1, 1}), 2));  // (x-2)^2 (x-1)
    CHECK_FALSE(divides_square(IntPoly{0, -2, 1}, 2));                 // x(x-2)
    CHECK_FALSE(divides_square(IntPoly{4, -4, 1}, 1));
}

TEST_CASE("submatrix divisibility") {
    // Complete graph: eigenvalue n with multiplicity n-1 = n-m for m = 1.
    CHECK(submatrix_divisibility_check(complete(6), 6, 1));
    // Star: eigenvalue 1 with multiplicity n-2.
    CHECK(submatrix_divisibility_check(star(6), 1, 2));
    // Multiplicity mismatch is a contract violation.
    CHECK_THROWS_AS(submatrix_divisibility_check(complete(6), 6, 2), std::invalid_argument);
    CHECK_THROWS_AS(submatrix_divisibility_check(complete(5), 5, 1), std::invalid_argument);
}
