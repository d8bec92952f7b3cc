#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
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

std::set<std::string> witness_forms(const std::vector<Witness>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(w.canonical.canonical_text);
    return out;
}

// Exhausts the stream without a cap or filter.
std::vector<Witness> full_diff(const ClassDiagram& a, const ClassDiagram& b,
                               unsigned scope) {
    DiffConfig cfg;
    cfg.scope = scope;
    cfg.max_witnesses = 1u << 20;
    return diff(a, b, cfg);
}

// Random CD pairs over a shared signature, kept tiny so the brute-force
// oracle stays tractable.
ClassDiagram random_small_cd(std::mt19937& rng, const std::string& name) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> d3(1, 3);
    ClassDiagram cd;
    cd.name = name;
    int nc = d3(rng);
    bool with_enum = coin(rng);
    if (with_enum) {
        EnumDecl e;
        e.name = "Color";
        e.literals = {"red", "green"};
        if (coin(rng)) e.literals.push_back("blue");
        cd.enums.push_back(e);
    }
    for (int i = 0; i < nc; ++i) {
        ClassDecl c;
        c.name = "C" + std::to_string(i);
        if (coin(rng) && coin(rng)) c.is_singleton = true;
        // at most 2 attributes in total across the diagram
        if (with_enum && i == 0 && coin(rng))
            c.attributes.push_back({"col", {AttrTypeKind::Enum, "Color"}});
        if (i == nc - 1 && coin(rng))
            c.attributes.push_back({"x", {AttrTypeKind::Primitive, "T"}});
        cd.classes.push_back(c);
    }
    std::uniform_int_distribution<int> pick(0, nc - 1);
    // Budget: at most one association per source class, and narrow field
    // multiplicities, so the brute-force oracle's cell space stays small.
    int nassoc = std::min(coin(rng) + coin(rng), nc);
    for (int i = 0; i < nassoc; ++i) {
        AssocDecl a;
        if (coin(rng) && coin(rng)) a.kind = AssocKind::Composition;
        bool bidi = i == 0 && nc >= 2 && coin(rng);
        a.navigability =
            bidi ? Navigability::Bidirectional : Navigability::LeftToRight;
        a.left_type = "C" + std::to_string(i);
        a.right_type = "C" + std::to_string(pick(rng));
        a.right_role = "r" + std::to_string(i);
        if (bidi) a.left_role = "l" + std::to_string(i);
        switch (d3(rng)) {
        case 1: a.right_mult = Multiplicity{0, 1}; break;
        case 2: a.right_mult = Multiplicity{1, 1}; break;
        default: a.right_mult = bidi ? Multiplicity{0, 1}
                                     : Multiplicity{0, 2}; break;
        }
        if (bidi)
            a.left_mult = Multiplicity{0, 1};
        else if (coin(rng))
            a.left_mult = Multiplicity{0, 2};
        cd.associations.push_back(a);
    }
    return cd;
}

} // namespace

TEST_CASE("example I: both directions contain witnesses") {
    ClassDiagram v1 = fixture_cd("cd1v1.cd");
    ClassDiagram v2 = fixture_cd("cd1v2.cd");

    // Nonemptiness at scope 5 with the default cap; the pattern searches
    // exhaust scope 4, whose stream is a subset of the scope-5 stream.
    DiffConfig capped;
    capped.scope = 5;
    REQUIRE_FALSE(diff(v1, v2, capped).empty());
    REQUIRE_FALSE(diff(v2, v1, capped).empty());
    auto forward = full_diff(v1, v2, 4);
    auto backward = full_diff(v2, v1, 4);

    // om1 pattern: one employee working on three tasks.
    bool om1_pattern = false;
    for (const auto& w : forward) {
        int employees = 0, tasks = 0, links = 0;
        for (const auto& [id, cls] : w.om.objects) {
            if (cls == "Employee") ++employees;
            if (cls == "Task") ++tasks;
        }
        for (const auto& s : w.om.slots)
            if (s.field == "worksOn") ++links;
        if (employees == 1 && tasks == 3 && links == 3) om1_pattern = true;
    }
    CHECK(om1_pattern);

    // om2 pattern: a manager marked external, or a manager-managed manager.
    bool om2_pattern = false;
    for (const auto& w : backward) {
        for (const auto& s : w.om.slots) {
            bool external = s.field == "kind" &&
                            s.value == SlotValue::enum_lit("PosKnd", "external");
            bool self_mng = s.field == "mngBy" &&
                            w.om.objects.at(s.object) == "Manager";
            if (external || self_mng) om2_pattern = true;
        }
    }
    CHECK(om2_pattern);

    CHECK(compare(v1, v2, 5).verdict ==
          CompareResult::Verdict::Incomparable);
}

TEST_CASE("example II: relaxation only adds models") {
    ClassDiagram v1 = fixture_cd("cd3v1.cd");
    ClassDiagram v2 = fixture_cd("cd3v2.cd");

    CHECK(full_diff(v1, v2, 5).empty());
    auto backward = full_diff(v2, v1, 5);
    REQUIRE_FALSE(backward.empty());

    // om3 and om4 are among the backward witnesses.
    ObjectModel om3 = parse_od(slurp("om3.od"));
    ObjectModel om4 = parse_od(slurp("om4.od"));
    auto forms = witness_forms(backward);
    CHECK(forms.count(canonicalize(om3).canonical_text) == 1);
    CHECK(forms.count(canonicalize(om4).canonical_text) == 1);

    CHECK(compare(v1, v2, 5).verdict ==
          CompareResult::Verdict::LeftRefinesRight);
    CHECK(compare(v2, v1, 5).verdict ==
          CompareResult::Verdict::RightRefinesLeft);
}

TEST_CASE("example III: refactoring is semantics-preserving") {
    ClassDiagram v1 = fixture_cd("cd5v1.cd");
    ClassDiagram v2 = fixture_cd("cd5v2.cd");
    for (unsigned k : {5u, 10u}) {
        CHECK(full_diff(v1, v2, k).empty());
        CHECK(full_diff(v2, v1, k).empty());
        CHECK(compare(v1, v2, k).verdict ==
              CompareResult::Verdict::Equivalent);
    }
}

TEST_CASE("diff of a diagram with itself is empty") {
    for (const char* f : {"cd1v1.cd", "cd3v1.cd", "cd5v2.cd"}) {
        ClassDiagram cd = fixture_cd(f);
        CHECK(full_diff(cd, cd, 4).empty());
    }
}

TEST_CASE("witness soundness and stream properties") {
    ClassDiagram v2 = fixture_cd("cd1v2.cd");
    ClassDiagram v1 = fixture_cd("cd1v1.cd");
    DiffConfig cfg;
    cfg.scope = 4;
    cfg.max_witnesses = 1u << 20;
    DiffProblem p = encode_pair(v2, v1, cfg);
    FlatClassDiagram left = p.left, right = p.right;

    std::set<std::string> seen;
    std::size_t prev_size = 0;
    while (auto w = next_witness(p)) {
        // soundness relative to the encoded (stripped) pair
        CHECK(evaluate(left, w->om).satisfied);
        CHECK_FALSE(evaluate(right, w->om).satisfied);
        // pairwise non-isomorphic
        CHECK(seen.insert(w->canonical.canonical_text).second);
        // non-decreasing size
        CHECK(w->om.size() >= prev_size);
        prev_size = w->om.size();
        // witness objects stay within scope
        CHECK(w->om.size() <= 4);
    }
    CHECK_FALSE(seen.empty());
}

TEST_CASE("scope monotonicity") {
    ClassDiagram v2 = fixture_cd("cd3v2.cd");
    ClassDiagram v1 = fixture_cd("cd3v1.cd");
    auto k2 = witness_forms(full_diff(v2, v1, 2));
    auto k3 = witness_forms(full_diff(v2, v1, 3));
    auto k4 = witness_forms(full_diff(v2, v1, 4));
    CHECK(std::includes(k3.begin(), k3.end(), k2.begin(), k2.end()));
    CHECK(std::includes(k4.begin(), k4.end(), k3.begin(), k3.end()));
    CHECK(k2.size() < k4.size());
}

TEST_CASE("determinism of the witness sequence") {
    ClassDiagram v2 = fixture_cd("cd1v2.cd");
    ClassDiagram v1 = fixture_cd("cd1v1.cd");
    DiffConfig cfg;
    cfg.scope = 4;
    cfg.max_witnesses = 50;
    auto run1 = diff(v2, v1, cfg);
    auto run2 = diff(v2, v1, cfg);
    REQUIRE(run1.size() == run2.size());
    for (std::size_t i = 0; i < run1.size(); ++i) {
        CHECK(run1[i].om == run2[i].om);
        CHECK(run1[i].canonical.canonical_text ==
              run2[i].canonical.canonical_text);
    }
}

TEST_CASE("max_witnesses caps the stream") {
    ClassDiagram v2 = fixture_cd("cd3v2.cd");
    ClassDiagram v1 = fixture_cd("cd3v1.cd");
    DiffConfig cfg;
    cfg.scope = 5;
    cfg.max_witnesses = 3;
    CHECK(diff(v2, v1, cfg).size() == 3);
}

TEST_CASE("oracle equivalence on random pairs") {
    std::mt19937 rng(424242);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        ClassDiagram a = random_small_cd(rng, "a");
        ClassDiagram b = random_small_cd(rng, "b");
        if (!check_context_conditions(a).empty()) continue;
        if (!check_context_conditions(b).empty()) continue;
        DiffConfig cfg;
        cfg.scope = 3;
        cfg.max_witnesses = 1u << 20;
        cfg.strip_common = false;
        SignatureUniverse u;
        try {
            u = build_universe(a, b);
        } catch (const TypeKindClash&) {
            continue;
        }
        FlatClassDiagram fa = flatten(a), fb = flatten(b);
        std::set<std::string> oracle;
        for (const auto& om : enumerate_oms(u, 3))
            if (evaluate(fa, om).satisfied && !evaluate(fb, om).satisfied)
                oracle.insert(canonicalize(om).canonical_text);
        auto engine = witness_forms(diff(a, b, cfg));
        INFO("trial " << trial << "\n" << render_cd(a) << render_cd(b));
        CHECK(engine == oracle);
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("evolution labels the fixture history") {
    std::vector<ClassDiagram> versions = {
        fixture_cd("cd5v1.cd"), fixture_cd("cd5v2.cd"),
        fixture_cd("cd5v1.cd"),
    };
    auto steps = evolution(versions, 4);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].verdict == CompareResult::Verdict::Equivalent);
    CHECK(std::string(evolution_label(steps[0].verdict)) ==
          "semantics-preserving change");
    CHECK(std::string(evolution_label(
              CompareResult::Verdict::LeftRefinesRight)) ==
          "introduced new possible implementations");
    CHECK(std::string(evolution_label(
              CompareResult::Verdict::RightRefinesLeft)) ==
          "eliminated possible implementations");
}

TEST_CASE("abstraction drops primitive-only differences") {
    ClassDiagram a = fixture_cd("cdattr1.cd");
    ClassDiagram b = fixture_cd("cdattr2.cd");
    DiffConfig plain;
    plain.scope = 3;
    plain.max_witnesses = 100;
    CHECK_FALSE(diff(a, b, plain).empty());
    DiffConfig abs = plain;
    abs.abstract_attributes = true;
    CHECK(diff(a, b, abs).empty());

    // A multiplicity difference survives abstraction.
    ClassDiagram m1 = fixture_cd("cd1v1.cd");
    ClassDiagram m2 = fixture_cd("cd1v2.cd");
    DiffConfig plain4 = plain, abs4 = abs;
    plain4.scope = abs4.scope = 4;
    plain4.max_witnesses = abs4.max_witnesses = 20;
    CHECK_FALSE(diff(m1, m2, abs4).empty());
    CHECK_FALSE(diff(m1, m2, plain4).empty());
}
