#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "lapmult/canonical.hpp"
#include "lapmult/enumerate.hpp"
#include "lapmult/errors.hpp"
#include "lapmult/graph.hpp"

using namespace lapmult;

TEST_CASE("unlabeled graph counts") {
    const std::uint64_t counts[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        CHECK(all_graphs(n).size() == counts[n - 1]);
    }
}

TEST_CASE("connected graph counts") {
    const std::uint64_t counts[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(connected_graphs(n).size() == counts[n - 1]);
    }
}

TEST_CASE("enumeration yields canonical representatives without repeats") {
    auto graphs = all_graphs(5);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CHECK(graphs[i] == canonical_representative(graphs[i]));
        if (i > 0) CHECK(canonical_form(graphs[i - 1]) < canonical_form(graphs[i]));
    }
}

TEST_CASE("enumeration bounds") {
    CHECK_THROWS_AS(all_graphs(0), std::invalid_argument);
    CHECK_THROWS_AS(all_graphs(10), LimitError);
}

TEST_CASE("worker count does not change the result") {
    auto lone = all_graphs(6);
    EnumerateOptions opts;
    opts.jobs = 3;
    auto multi = all_graphs(6, opts);
    REQUIRE(lone.size() == multi.size());
    for (std::size_t i = 0; i < lone.size(); ++i) CHECK(lone[i] == multi[i]);
}

TEST_CASE("cache round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "lapmult-cache-test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    EnumerateOptions opts;
    opts.cache_dir = dir.string();
    auto first = all_graphs(5, opts);
    CHECK(fs::exists(dir / "graphs-n5-v1.bin"));
    auto second = all_graphs(5, opts);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);

    // A damaged cache is ignored, not trusted.
    {
        std::ofstream out(dir / "graphs-n4-v1.bin", std::ios::binary);
        out << "junk";
    }
    CHECK(all_graphs(4, opts).size() == 11);

    fs::remove_all(dir);
}

TEST_CASE("spectrum buckets") {
    auto buckets4 = spectrum_buckets(4);
    // All six connected graphs of order 4 have distinct spectra.
    CHECK(buckets4.size() == 6);
    for (const auto& [poly, graphs] : buckets4) CHECK(graphs.size() == 1);

    auto buckets2 = spectrum_buckets(2);
    CHECK(buckets2.size() == 1);

    // Bucket contents partition the connected graphs.
    std::size_t total = 0;
    auto buckets6 = spectrum_buckets(6);
    for (const auto& [poly, graphs] : buckets6) {
        CHECK_FALSE(graphs.empty());
        total += graphs.size();
    }
    CHECK(total == 112);
    // Cospectral mates exist by order 7 at the latest.
    bool collision = buckets6.size() < 112;
    if (!collision) {
        auto buckets7 = spectrum_buckets(7);
        std::size_t t7 = 0;
        for (const auto& [poly, graphs] : buckets7) t7 += graphs.size();
        CHECK(t7 == 853);
        collision = buckets7.size() < 853;
    }
    CHECK(collision);
}

TEST_CASE("membership census at order 4") {
    EnumerationSummary s = verify_theorem(4);
    CHECK(s.order == 4);
    CHECK(s.total_graphs == 11);
    CHECK(s.connected_graphs == 6);
    CHECK(s.found_members.size() == 2);
    CHECK(s.catalog_members.size() == 2);
    CHECK(s.set_equal);
    CHECK(s.dls_checked);
    CHECK(s.dls_violations.empty());
    CHECK(s.lemma_violations.empty());

    std::vector<std::string> expect = {to_graph6(canonical_representative(path(4))),
                                       to_graph6(canonical_representative(star_plus_edge(4)))};
    std::sort(expect.begin(), expect.end());
    CHECK(s.found_members == expect);
}

TEST_CASE("membership census at order 5 exceeds the short list") {
    // The catalog names three graphs; the census finds more, among them the
    // wheel and the complete bipartite K_{2,3}.
    EnumerationSummary s = verify_theorem(5);
    CHECK(s.total_graphs == 34);
    CHECK(s.connected_graphs == 21);
    CHECK(s.catalog_members.size() == 3);
    CHECK(s.found_members.size() == 8);
    CHECK_FALSE(s.set_equal);
    CHECK(s.dls_violations.empty());
    CHECK(s.lemma_violations.empty());

    auto has = [&](const Graph& g) {
        std::string code = to_graph6(canonical_representative(g));
        return std::find(s.found_members.begin(), s.found_members.end(), code) !=
               s.found_members.end();
    };
    CHECK(has(cycle(5)));
    CHECK(has(join(complete(1), cycle(4))));
    CHECK(has(complete_bipartite(2, 3)));
    CHECK(has(eq1_graph(5)));
    // Every catalog member is found.
    for (const std::string& code : s.catalog_members) {
        CHECK(std::find(s.found_members.begin(), s.found_members.end(), code) !=
              s.found_members.end());
    }
}

TEST_CASE("verify options") {
    CHECK_THROWS_AS(verify_theorem(3), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(10), LimitError);
    CHECK_THROWS_AS(verify_theorem(9), LimitError);  // needs the explicit opt-in

    VerifyOptions opts;
    opts.skip_dls = true;
    EnumerationSummary s = verify_theorem(4, opts);
    CHECK_FALSE(s.dls_checked);
    CHECK(s.dls_violations.empty());
    CHECK(s.set_equal);
}

TEST_CASE("literal predicate census at order 4") {
    VerifyOptions opts;
    opts.predicate = MultiplicityPredicate::Literal;
    EnumerationSummary s = verify_theorem(4, opts);
    CHECK(s.predicate == MultiplicityPredicate::Literal);
    // Every connected order-4 graph except K_4 carries some nonzero
    // eigenvalue of multiplicity exactly 1, so the literal reading admits
    // five graphs where the maximum-multiplicity reading admits two.
    CHECK(s.found_members.size() == 5);
    CHECK_FALSE(s.set_equal);
}
