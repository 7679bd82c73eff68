// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#include <doctest.h>

#include "helpers.hpp"

using namespace itelos;

namespace {

Purpose fixture_purpose() { return parse_purpose(testutil::fixture("purpose.json")); }

CompetencyQuery mini_cq(int id, Category cat, std::vector<std::string> etypes,
                        std::vector<RequiredProperty> props = {}) {
    CompetencyQuery cq;
    cq.id = id;
    cq.category = cat;
    cq.target_etypes = std::move(etypes);
    cq.required_properties = std::move(props);
    return cq;
}

}  // namespace

TEST_CASE("similarity components on the worked pairs") {
    const NameSimilarity sim = name_similarity("cases", "total_number_of_cases");
    CHECK(sim.containment == 1.0);  // {cases} is contained in the longer name
    CHECK(sim.jaccard == doctest::Approx(0.25));
    CHECK(sim.score() == 1.0);

    CHECK(name_similarity("location_type", "locationType").score() == 1.0);  // same canonical form
    CHECK(name_similarity("alpha", "alpha").score() == 1.0);
    CHECK(name_similarity("home_care_cases", "number_of_home_care_cases").containment == 1.0);

    // levenshtein backs off gracefully for token-disjoint names
    const NameSimilarity lev = name_similarity("location", "place");
    CHECK(lev.containment == 0.0);
    CHECK(lev.jaccard == 0.0);
    CHECK(lev.levenshtein ==
          doctest::Approx(1.0 - static_cast<double>(testutil::lev_oracle("location", "place")) / 8.0));
}

TEST_CASE("collect_candidates on CQ 1 extracts its etypes and properties") {
    const Purpose p = fixture_purpose();
    const CandidateSet cands = collect_candidates({p.cqs[0]}, p.display_names);
    const auto etypes = cands.all_etypes();
    CHECK(etypes.members == std::set<std::string>{"covid_status", "location"});
    CHECK(cands.all_properties().members.count("total_number_of_cases") == 1);
    CHECK(cands.all_properties().size() == 6);
    CHECK(cands.etype_provenance.at("location") == std::vector<int>{1});
    CHECK(cands.display("covid_status") == "Covid_status");
}

TEST_CASE("collect_candidates of an empty CQ list is empty") {
    const CandidateSet cands = collect_candidates({});
    CHECK(cands.empty());
    CHECK(cands.all_properties().empty());
}

TEST_CASE("members inherit the most reusable category among their CQs") {
    const auto cands = collect_candidates({
        mini_cq(1, Category::Core, {"location"}, {{"location", "p"}}),
        mini_cq(2, Category::Contextual, {"location"}, {{"location", "p"}}),
    });
    CHECK(cands.etype_category("location") == Category::Core);
    CHECK(cands.property_category("p") == Category::Core);
    CHECK(cands.etype_provenance.at("location") == std::vector<int>{1, 2});
}

TEST_CASE("collect_candidates is idempotent and order-insensitive") {
    const Purpose p = fixture_purpose();
    std::vector<CompetencyQuery> reversed(p.cqs.rbegin(), p.cqs.rend());
    const CandidateSet a = collect_candidates(p.cqs, p.display_names);
    const CandidateSet b = collect_candidates(reversed, p.display_names);
    const CandidateSet c = collect_candidates(p.cqs, p.display_names);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a.etypes_by_category[i].members == b.etypes_by_category[i].members);
        CHECK(a.properties_by_category[i].members == b.properties_by_category[i].members);
        CHECK(a.etypes_by_category[i].members == c.etypes_by_category[i].members);
    }
    CHECK(a.etype_provenance == b.etype_provenance);
}

TEST_CASE("fixture candidates: six etypes, fifteen properties") {
    const Purpose p = fixture_purpose();
    const CandidateSet cands = collect_candidates(p.cqs, p.display_names);
    CHECK(cands.all_etypes().members ==
          std::set<std::string>{"case_information", "case_projections", "covid_status", "location",
                                "restriction", "rsa_cases"});
    CHECK(cands.all_properties().size() == 15);
    // location is mentioned by a Core CQ, so it lands in the Core bucket
    CHECK(cands.etype_category("location") == Category::Core);
    CHECK(cands.etype_category("covid_status") == Category::Contextual);
    CHECK(cands.property_category("date") == Category::Core);
}

TEST_CASE("match_schema retains the worked pair cases -> total_number_of_cases") {
    const Purpose p = fixture_purpose();
    const CandidateSet cands = collect_candidates(p.cqs, p.display_names);
    const auto annotations =
        parse_annotations(testutil::fixture("covid_cases.annotations.json"), "annotations");
    const Dataset ds =
        load_dataset_csv(testutil::fixture("covid_cases.csv"), annotations, "covid_cases");
    const SchemaMatch match = match_schema(ds.schema, cands, p.thresholds.etr_match);

    const MatchPair* cases = nullptr;
    for (const auto& pair : match.pairs)
        if (pair.attribute == "cases") cases = &pair;
    REQUIRE(cases != nullptr);
    CHECK(cases->property == "total_number_of_cases");
    CHECK(cases->score == 1.0);
    CHECK(cases->etype == "covid_status");
}

TEST_CASE("an attribute identical to a property scores 1.0") {
    const auto cands = collect_candidates({mini_cq(1, Category::Core, {"t"}, {{"t", "exact_name"}})});
    DatasetSchema schema;
    schema.dataset_id = "d";
    Attribute a;
    a.raw_name = "exact_name";
    a.name = "exact_name";
    schema.attributes.push_back(a);
    const SchemaMatch match = match_schema(schema, cands, 0.5);
    REQUIRE(match.pairs.size() == 1);
    CHECK(match.pairs[0].score == 1.0);
    CHECK(match.cov_properties == Ratio::one());
}

TEST_CASE("a schema disjoint from the candidates yields no pairs and zero coverage") {
    const auto cands = collect_candidates({mini_cq(1, Category::Core, {"t"}, {{"t", "zzz_qqq"}})});
    DatasetSchema schema;
    schema.dataset_id = "d";
    Attribute a;
    a.raw_name = "unrelated";
    a.name = "unrelated";
    schema.attributes.push_back(a);
    const SchemaMatch match = match_schema(schema, cands, 0.5);
    CHECK(match.pairs.empty());
    CHECK(match.cov_properties == Ratio::zero());
}

TEST_CASE("every kept pair satisfies the threshold, re-checked independently") {
    const Purpose p = fixture_purpose();
    const CandidateSet cands = collect_candidates(p.cqs, p.display_names);
    for (const auto& name : {"covid_cases", "covid_projections", "restrictions", "rsa_cases"}) {
        const auto annotations = parse_annotations(
            testutil::fixture(std::string(name) + ".annotations.json"), "annotations");
        const Dataset ds = load_dataset_csv(testutil::fixture(std::string(name) + ".csv"),
                                            annotations, name);
        const SchemaMatch match = match_schema(ds.schema, cands, p.thresholds.etr_match);
        for (const auto& pair : match.pairs) {
            CHECK(name_similarity(pair.attribute, pair.property).score() >= 0.5);
            CHECK(pair.score <= 1.0);
        }
        // the reported coverage is exactly the shared metric on the same sets
        CHECK(match.cov_properties ==
              coverage(cands.all_properties(), ElementSet::properties(match.matched_properties())));
        CHECK(match.cov_etypes ==
              coverage(cands.all_etypes(), ElementSet::etypes(match.matched_etypes())));
    }
}

TEST_CASE("order_by_category puts Common first and keeps input order") {
    struct Item {
        std::string name;
        Category cat;
    };
    const std::vector<Item> mixed = {{"x", Category::Contextual}, {"y", Category::Common},
                                     {"z", Category::Core}, {"w", Category::Common}};
    const auto batches = order_by_category(mixed, [](const Item& i) { return i.cat; });
    REQUIRE(batches.common.size() == 2);
    CHECK(batches.common[0].name == "y");
    CHECK(batches.common[1].name == "w");
    CHECK(batches.core.size() == 1);
    CHECK(batches.contextual.size() == 1);

    const std::vector<Item> contextual_only = {{"a", Category::Contextual}, {"b", Category::Contextual}};
    const auto alone = order_by_category(contextual_only, [](const Item& i) { return i.cat; });
    CHECK(alone.common.empty());
    CHECK(alone.core.empty());
    CHECK(alone.contextual.size() == 2);
}

TEST_CASE("fixture attribute table orders (year, month, day | cases, deaths | countries)") {
    // attributes listed in the order of the published table
    const auto annotations =
        parse_annotations(testutil::fixture("covid_cases.annotations.json"), "annotations");
    const Dataset ds =
        load_dataset_csv(testutil::fixture("covid_cases.csv"), annotations, "covid_cases");
    const auto batches = order_by_category(ds.schema.attributes);
    std::vector<std::string> common, core, contextual;
    for (const auto& a : batches.common) common.push_back(a.name);
    for (const auto& a : batches.core) core.push_back(a.name);
    for (const auto& a : batches.contextual) contextual.push_back(a.name);
    CHECK(common == std::vector<std::string>{"year", "month", "day"});
    CHECK(core == std::vector<std::string>{"cases", "deaths"});
    CHECK(contextual == std::vector<std::string>{"countries_and_territories"});
}
