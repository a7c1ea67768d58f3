#include "doctest.h"

#include <string>
#include <vector>

#include "lapmult/classify.hpp"
#include "lapmult/enumerate.hpp"
#include "lapmult/graph.hpp"
#include "lapmult/report.hpp"

using namespace lapmult;

TEST_CASE("spectrum json") {
    json s = spectrum_json(graph_spectrum(path(4)));
    CHECK(s["order"] == 4);
    CHECK(s["integer_eigenvalues"] == json::array({json::array({2, 1}), json::array({0, 1})}));
    CHECK(s["residual"] == json::array({"2", "-4", "1"}));

    json t = spectrum_json(graph_spectrum(complete(4)));
    CHECK(t["integer_eigenvalues"] == json::array({json::array({4, 3}), json::array({0, 1})}));
    CHECK(t["residual"].is_null());
}

TEST_CASE("spectrum report") {
    json r = spectrum_report(path(4));
    CHECK(r["order"] == 4);
    CHECK(r["charpoly"] == json::array({"0", "-4", "10", "-6", "1"}));
    CHECK(r["distinct_count"] == 4);
    CHECK(r["k_max"] == 1);
    REQUIRE(r["numeric_eigenvalues"].is_array());
    CHECK(r["numeric_eigenvalues"].size() == 4);
    double top = r["numeric_eigenvalues"][0].get<double>();
    CHECK(top > 3.41);
    CHECK(top < 3.42);
}

TEST_CASE("classification json") {
    json c = classification_json(classify(complete_bipartite(2, 4)));
    CHECK(c["order"] == 6);
    CHECK(c["class"] == "G5");
    CHECK(c["k_max"] == 3);
    CHECK(c["predicate"] == "max-multiplicity");
    REQUIRE(c["matched_family"].is_object());
    CHECK(c["matched_family"]["family"] == "complete_bipartite");
    CHECK(c["matched_family"]["params"] == json::array({2, 4}));
    CHECK(c["matched_family"]["source"] == "G5.1");

    json miss = classification_json(classify(path(6)));
    CHECK(miss["class"] == "not-in-G(n,n-3)");
    CHECK(miss["matched_family"].is_null());

    json lit = classification_json(classify(cycle(4), MultiplicityPredicate::Literal));
    CHECK(lit["predicate"] == "literal");
}

TEST_CASE("catalog json") {
    json c = catalog_json(6, 3);
    CHECK(c["n"] == 6);
    CHECK(c["k"] == 3);
    REQUIRE(c["entries"].is_array());
    CHECK(c["entries"].size() == 12);
    for (const json& e : c["entries"]) {
        CHECK(e.contains("family"));
        CHECK(e.contains("graph6"));
        CHECK(e.contains("predicted_spectrum"));
        CHECK(e.contains("computed_spectrum"));
        CHECK(e["match"] == true);
        CHECK(from_graph6(e["graph6"].get<std::string>()).order() == 6);
    }
}

TEST_CASE("summary json") {
    json s = summary_json(verify_theorem(4));
    CHECK(s["order"] == 4);
    CHECK(s["total_graphs"] == 11);
    CHECK(s["connected_graphs"] == 6);
    CHECK(s["set_equal"] == true);
    CHECK(s["dls_checked"] == true);
    CHECK(s["dls_violations"].is_array());
    CHECK(s["lemma_violations"].is_array());
    CHECK(s["found_members"].size() == 2);
    CHECK(s["predicate"] == "max-multiplicity");
}

TEST_CASE("families json") {
    json f = families_json();
    REQUIRE(f.is_array());
    CHECK(f.size() == family_table().size());
    bool saw_gnr = false;
    for (const json& row : f) {
        CHECK(row.contains("name"));
        CHECK(row.contains("params"));
        CHECK(row.contains("constraints"));
        if (row["name"] == "gnr") saw_gnr = true;
    }
    CHECK(saw_gnr);
}

TEST_CASE("envelope") {
    json inner = json::object({{"x", 1}});
    json e = envelope("spectrum", inner, json::object({{"y", 2}}), 12.5);
    CHECK(e["command"] == "spectrum");
    CHECK(e["input"] == inner);
    CHECK(e["result"]["y"] == 2);
    CHECK(e["timing_ms"] == 12.5);
    CHECK(e["version"] == kVersion);

    // Identical content serializes identically.
    json again = envelope("spectrum", inner, json::object({{"y", 2}}), 12.5);
    CHECK(e.dump() == again.dump());
}

TEST_CASE("predicate names") {
    CHECK(std::string(predicate_name(MultiplicityPredicate::MaxMultiplicity)) ==
          "max-multiplicity");
    CHECK(std::string(predicate_name(MultiplicityPredicate::Literal)) == "literal");
}
