#include "lapmult/report.hpp"

#include "lapmult/canonical.hpp"
#include "lapmult/numeric.hpp"

namespace lapmult {

const char* predicate_name(MultiplicityPredicate pred) {
    return pred == MultiplicityPredicate::MaxMultiplicity ? "max-multiplicity" : "literal";
}

json spectrum_json(const ExactSpectrum& s) {
    json integer = json::array();
    for (const auto& [v, m] : s.integer_part) integer.push_back({v, m});
    json residual;
    if (s.residual) residual = coeff_strings(*s.residual);
    return {{"order", s.order}, {"integer_eigenvalues", integer}, {"residual", residual}};
}

json spectrum_report(const Graph& g) {
    const IntPoly poly = laplacian_charpoly(g);
    const ExactSpectrum s = extract_spectrum(poly);
    json out = spectrum_json(s);
    out["charpoly"] = coeff_strings(poly);
    out["numeric_eigenvalues"] = numeric_laplacian_eigenvalues(g);
    out["distinct_count"] = distinct_eigenvalue_count(s);
    out["k_max"] = k_max(s);
    return out;
}

namespace {

json matched_json(const std::optional<MatchedFamily>& matched) {
    if (!matched) return nullptr;
    return {{"family", matched->family}, {"params", matched->params}, {"source", matched->source}};
}

}  // namespace

json classification_json(const ClassificationReport& rep) {
    return {{"order", rep.order},
            {"class", rep.family_class},
            {"k_max", rep.k_max},
            {"distinct_count", rep.distinct_count},
            {"spectrum", spectrum_json(rep.spectrum)},
            {"matched_family", matched_json(rep.matched_family)},
            {"predicate", predicate_name(rep.predicate)}};
}

json catalog_entry_json(const CatalogEntry& e) {
    const ExactSpectrum computed = graph_spectrum(e.graph);
    return {{"family", e.family},
            {"params", e.params},
            {"source", e.source},
            {"graph6", to_graph6(e.graph)},
            {"predicted_spectrum", spectrum_json(e.predicted_spectrum)},
            {"computed_spectrum", spectrum_json(computed)},
            {"match", spectra_equal(computed, e.predicted_spectrum)}};
}

json catalog_json(int n, int k) {
    json entries = json::array();
    for (const CatalogEntry& e : catalog(n, k)) entries.push_back(catalog_entry_json(e));
    return {{"n", n}, {"k", k}, {"entries", entries}};
}

json summary_json(const EnumerationSummary& s) {
    json dls = json::array();
    for (const DlsViolation& v : s.dls_violations)
        dls.push_back({{"charpoly", coeff_strings(v.charpoly)}, {"graphs", v.graphs}});
    json lemma = json::array();
    for (const LemmaViolation& v : s.lemma_violations)
        lemma.push_back({{"lemma", v.lemma}, {"graph6", v.graph6}, {"detail", v.detail}});
    return {{"order", s.order},
            {"total_graphs", s.total_graphs},
            {"connected_graphs", s.connected_graphs},
            {"found_members", s.found_members},
            {"catalog_members", s.catalog_members},
            {"set_equal", s.set_equal},
            {"dls_checked", s.dls_checked},
            {"dls_violations", dls},
            {"lemma_violations", lemma},
            {"predicate", predicate_name(s.predicate)}};
}

json families_json() {
    json out = json::array();
    for (const FamilyInfo& f : family_table())
        out.push_back({{"name", f.name},
                       {"arity", f.arity},
                       {"params", f.params},
                       {"constraints", f.constraints}});
    return out;
}

json envelope(const std::string& command, json input, json result, double timing_ms) {
    return {{"command", command},
            {"input", std::move(input)},
            {"result", std::move(result)},
            {"timing_ms", timing_ms},
            {"version", kVersion}};
}

}  // namespace lapmult
