#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "semdiff/semdiff.hpp"

using namespace semdiff;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(SEMDIFF_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ClassDiagram fixture_cd(const std::string& name) {
    ClassDiagram cd = parse_cd(slurp(name));
    REQUIRE(check_context_conditions(cd).empty());
    return cd;
}

Witness make_witness(const ObjectModel& om) {
    Witness w;
    w.om = om;
    w.canonical = canonicalize(om);
    return w;
}

std::vector<Witness> filtered_diff(const ClassDiagram& a,
                                   const ClassDiagram& b, unsigned scope,
                                   FilterKind filter) {
    DiffConfig cfg;
    cfg.scope = scope;
    cfg.max_witnesses = 1u << 20;
    cfg.filter = filter;
    return diff(a, b, cfg);
}

} // namespace

TEST_CASE("profiles summarize witness structure") {
    ObjectModel om = parse_od(slurp("om1.od"));
    WitnessProfile p = profile(om);
    CHECK(p.class_set == std::set<std::string>{"Employee", "Task"});
    CHECK(p.assoc_set == std::set<std::string>{"worksOn", "doneBy"});
    CHECK(p.combo_set.count({"Employee", "worksOn", "Task"}) == 1);
}

TEST_CASE("fresh filter states accept witnesses with novel profiles") {
    ObjectModel om = parse_od(slurp("om4.od"));
    for (FilterKind k : {FilterKind::None, FilterKind::NNC}) {
        FilterState st{k};
        CHECK(accept(st, make_witness(om)));
    }
    // NNCA keys on class-association combinations, so a link-free witness
    // has an empty profile and is rejected even by a fresh state, exactly
    // like NNA.
    FilterState st{FilterKind::NNCA};
    CHECK_FALSE(accept(st, make_witness(om)));
    CHECK(accept(st, make_witness(parse_od(slurp("om1.od")))));
}

TEST_CASE("NNA rejects link-free witnesses even when fresh") {
    // An empty association profile is a subset of anything, including the
    // initial empty seen-set: documented consequence of the subset rule.
    FilterState st{FilterKind::NNA};
    CHECK_FALSE(accept(st, make_witness(parse_od(slurp("om4.od")))));
    // A witness with links passes and seeds the state.
    CHECK(accept(st, make_witness(parse_od(slurp("om1.od")))));
    // Further witnesses over the same association types are rejected.
    CHECK_FALSE(accept(st, make_witness(parse_od(slurp("om1.od")))));
}

TEST_CASE("NNC saturates once all classes are seen") {
    FilterState st{FilterKind::NNC};
    CHECK(accept(st, make_witness(parse_od(slurp("om1.od")))));
    // Employee and Task are now seen; a manager is still novel.
    CHECK(accept(st, make_witness(parse_od(slurp("om2.od")))));
    // After {Employee, Task, Manager}, anything over those classes drops.
    ObjectModel repeat = parse_od(slurp("om1.od"));
    CHECK_FALSE(accept(st, make_witness(repeat)));
}

TEST_CASE("NNC accepts at most one witness per unseen class (growth)") {
    ClassDiagram v2 = fixture_cd("cd1v2.cd");
    ClassDiagram v1 = fixture_cd("cd1v1.cd");
    auto unfiltered = filtered_diff(v2, v1, 4, FilterKind::None);
    auto nnc = filtered_diff(v2, v1, 4, FilterKind::NNC);
    CHECK_FALSE(nnc.empty());
    CHECK(nnc.size() <= 3); // |class_names| of the pair
    CHECK(nnc.size() <= unfiltered.size());
    std::set<std::string> seen;
    for (const auto& w : nnc) {
        WitnessProfile p = profile(w);
        bool novel = false;
        for (const auto& c : p.class_set) novel |= seen.insert(c).second;
        CHECK(novel);
    }
}

TEST_CASE("NNA and NNCA grow strictly on their profile component") {
    ClassDiagram v2 = fixture_cd("cd1v2.cd");
    ClassDiagram v1 = fixture_cd("cd1v1.cd");
    auto nna = filtered_diff(v2, v1, 4, FilterKind::NNA);
    std::set<std::string> seen_assocs;
    for (const auto& w : nna) {
        WitnessProfile p = profile(w);
        bool novel = false;
        for (const auto& a : p.assoc_set) novel |= seen_assocs.insert(a).second;
        CHECK(novel);
    }
    auto nnca = filtered_diff(v2, v1, 4, FilterKind::NNCA);
    std::set<ClassAssocCombo> seen_combos;
    for (const auto& w : nnca) {
        WitnessProfile p = profile(w);
        bool novel = false;
        for (const auto& c : p.combo_set) novel |= seen_combos.insert(c).second;
        CHECK(novel);
    }
    CHECK_FALSE(nnca.empty());
}

TEST_CASE("filtering is a pure subsequence of the unfiltered stream") {
    ClassDiagram v2 = fixture_cd("cd3v2.cd");
    ClassDiagram v1 = fixture_cd("cd3v1.cd");
    auto all = filtered_diff(v2, v1, 4, FilterKind::None);
    std::set<std::string> all_forms;
    for (const auto& w : all) all_forms.insert(w.canonical.canonical_text);
    for (FilterKind k : {FilterKind::NNC, FilterKind::NNA, FilterKind::NNCA,
                         FilterKind::Static}) {
        for (const auto& w : filtered_diff(v2, v1, 4, k))
            CHECK(all_forms.count(w.canonical.canonical_text) == 1);
    }
}

TEST_CASE("static filter keeps one representative per class set") {
    ClassDiagram v2 = fixture_cd("cd3v2.cd");
    ClassDiagram v1 = fixture_cd("cd3v1.cd");
    auto all = filtered_diff(v2, v1, 4, FilterKind::None);
    auto reps = filtered_diff(v2, v1, 4, FilterKind::Static);

    std::set<std::set<std::string>> distinct;
    std::map<std::set<std::string>, std::string> first_of_group;
    for (const auto& w : all) {
        auto cs = profile(w).class_set;
        distinct.insert(cs);
        first_of_group.try_emplace(cs, w.canonical.canonical_text);
    }
    REQUIRE(reps.size() == distinct.size());
    std::set<std::set<std::string>> rep_sets;
    for (const auto& w : reps) {
        auto cs = profile(w).class_set;
        CHECK(rep_sets.insert(cs).second);
        // each representative is the first witness of its group
        CHECK(first_of_group.at(cs) == w.canonical.canonical_text);
    }
}

TEST_CASE("abstract_attributes keeps enum attributes and drops primitives") {
    ClassDiagram cd = fixture_cd("cd1v1.cd");
    ClassDiagram abs = abstract_attributes(cd);
    CHECK(abs.find_class("Task")->attributes.empty()); // Date startDate
    REQUIRE(abs.find_class("Employee")->attributes.size() == 1);
    CHECK(abs.find_class("Employee")->attributes[0].name == "kind");
    CHECK(abs.enums.size() == 1);
    // associations and hierarchy untouched
    CHECK(abs.associations == cd.associations);
}

TEST_CASE("filtered witnesses remain sound") {
    ClassDiagram v2 = fixture_cd("cd1v2.cd");
    ClassDiagram v1 = fixture_cd("cd1v1.cd");
    DiffConfig cfg;
    cfg.scope = 4;
    cfg.max_witnesses = 100;
    DiffProblem p = encode_pair(v2, v1, cfg);
    for (FilterKind k : {FilterKind::NNC, FilterKind::NNA, FilterKind::NNCA,
                         FilterKind::Static}) {
        cfg.filter = k;
        for (const auto& w : diff(v2, v1, cfg)) {
            CHECK(evaluate(p.left, w.om).satisfied);
            CHECK_FALSE(evaluate(p.right, w.om).satisfied);
        }
    }
}
