#ifndef SEMDIFF_DIFF_HPP
#define SEMDIFF_DIFF_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semdiff/canonical.hpp"
#include "semdiff/cd_flatten.hpp"
#include "semdiff/enumerate.hpp"
#include "semdiff/evaluate.hpp"
#include "semdiff/filters.hpp"
#include "semdiff/universe.hpp"
#include "semdiff/witness.hpp"

namespace semdiff {

// The bounded search "instance of left and not of right" with a total
// object count of at most `scope`.  Single-owner: exclusions and the
// streaming cursor mutate as witnesses are drawn.
struct DiffProblem {
    FlatClassDiagram left;
    FlatClassDiagram right;
    SignatureUniverse universe;
    unsigned scope = 5;
    std::set<std::string> exclusions; // canonical forms already emitted

    // streaming state: witnesses are produced in non-decreasing object
    // count, canonical-lexicographic within a count
    unsigned next_size = 0;
    std::vector<Witness> buffer;
    std::size_t buffer_pos = 0;
};

inline DiffProblem encode_pair(const ClassDiagram& cd1, const ClassDiagram& cd2,
                               const DiffConfig& cfg) {
    ClassDiagram a = cfg.abstract_attributes ? abstract_attributes(cd1) : cd1;
    ClassDiagram b = cfg.abstract_attributes ? abstract_attributes(cd2) : cd2;
    if (cfg.strip_common) {
        auto [sa, sb] = strip_common(a, b);
        a = std::move(sa);
        b = std::move(sb);
    }
    DiffProblem p;
    p.universe = build_universe(a, b);
    p.left = flatten(a);
    p.right = flatten(b);
    p.scope = cfg.scope;
    return p;
}

namespace detail {

// Exhaustive search over the models of the left diagram with exactly n
// objects.  Left satisfaction is built into the generator (attribute slots
// are forced, link relations respect the left multiplicities); right
// violation is decided by the independent evaluator.
class SizedWitnessSearch {
public:
    SizedWitnessSearch(const DiffProblem& p, unsigned n)
        : left_(p.left), right_(p.right), n_(n), exclusions_(p.exclusions) {}

    std::vector<Witness> run() {
        std::vector<std::string> classes(left_.concrete_classes.begin(),
                                         left_.concrete_classes.end());
        std::vector<std::string> assign;
        choose_classes(classes, 0, n_, assign);
        std::vector<Witness> out;
        out.reserve(found_.size());
        for (auto& [text, w] : found_) out.push_back(std::move(w));
        return out;
    }

private:
    void choose_classes(const std::vector<std::string>& classes,
                        std::size_t from, unsigned remaining,
                        std::vector<std::string>& assign) {
        if (remaining == 0) {
            try_assignment(assign);
            return;
        }
        for (std::size_t i = from; i < classes.size(); ++i) {
            assign.push_back(classes[i]);
            choose_classes(classes, i, remaining - 1, assign);
            assign.pop_back();
        }
    }

    void try_assignment(const std::vector<std::string>& assign) {
        // Singleton instance counts are fixed by the class assignment.
        for (const auto& s : left_.singletons) {
            const auto& subs = left_.subtypes(s);
            std::size_t cnt = 0;
            for (const auto& c : assign)
                if (subs.count(c)) ++cnt;
            if (cnt != 1) return;
        }
        ObjectModel om;
        ids_.clear();
        for (std::size_t i = 0; i < assign.size(); ++i) {
            std::string id = "o" + std::to_string(i + 1);
            ids_.push_back(id);
            om.add_object(id, assign[i]);
            for (const auto& a : left_.flat_attrs.at(assign[i]))
                if (a.type.kind == AttrTypeKind::Primitive)
                    om.add_slot(id, a.name, SlotValue::primitive(a.type.name));
        }
        // Per-class candidate tuples of enum attribute values.
        std::map<std::string, std::vector<std::vector<Slot>>> tuple_space;
        for (const auto& cls : assign) {
            if (tuple_space.count(cls)) continue;
            std::vector<std::vector<Slot>> tuples{{}};
            for (const auto& a : left_.flat_attrs.at(cls)) {
                if (a.type.kind != AttrTypeKind::Enum) continue;
                std::vector<std::vector<Slot>> next;
                for (const auto& t : tuples)
                    for (const auto& lit : left_.enum_values.at(a.type.name)) {
                        auto u = t;
                        u.push_back({"", a.name,
                                     SlotValue::enum_lit(a.type.name, lit)});
                        next.push_back(std::move(u));
                    }
                tuples = std::move(next);
            }
            tuple_space.emplace(cls, std::move(tuples));
        }
        fill_enum_tuples(om, assign, tuple_space, 0, 0);
    }

    // Objects of the same class are contiguous and interchangeable before
    // any links exist; requiring non-decreasing tuple indices within each
    // class group skips labelings that only permute such objects.  The link
    // stage enumerates all subsets, so every isomorphism class survives.
    void fill_enum_tuples(
        ObjectModel& om, const std::vector<std::string>& assign,
        const std::map<std::string, std::vector<std::vector<Slot>>>& space,
        std::size_t obj, std::size_t min_idx) {
        if (obj == assign.size()) {
            fill_assoc(om, 0);
            return;
        }
        const auto& tuples = space.at(assign[obj]);
        if (obj == 0 || assign[obj - 1] != assign[obj]) min_idx = 0;
        for (std::size_t ti = min_idx; ti < tuples.size(); ++ti) {
            for (const auto& s : tuples[ti])
                om.add_slot(ids_[obj], s.field, s.value);
            fill_enum_tuples(om, assign, space, obj + 1, ti);
            for (const auto& s : tuples[ti])
                om.slots.erase({ids_[obj], s.field, s.value});
        }
    }

    struct ReverseBounds {
        unsigned lower = 0;
        std::optional<unsigned> upper;
    };

    ReverseBounds reverse_bounds(const LoweredAssoc& a) const {
        ReverseBounds rb{a.src_mult.lower, a.src_mult.upper};
        if (a.kind == AssocKind::Composition) {
            rb.lower = std::max(rb.lower, 1u);
            rb.upper = rb.upper ? std::min(*rb.upper, 1u) : 1u;
        }
        return rb;
    }

    void fill_assoc(ObjectModel& om, std::size_t ai) {
        if (ai == left_.assocs.size()) {
            finish(om);
            return;
        }
        const LoweredAssoc& a = left_.assocs[ai];
        std::vector<std::string> sources, targets;
        for (const auto& id : ids_) {
            if (a.src_classes.count(om.objects.at(id))) sources.push_back(id);
            if (a.tgt_classes.count(om.objects.at(id))) targets.push_back(id);
        }
        std::vector<unsigned> incoming(targets.size(), 0);
        fill_assoc_sources(om, ai, a, sources, targets, incoming, 0);
    }

    void fill_assoc_sources(ObjectModel& om, std::size_t ai,
                            const LoweredAssoc& a,
                            const std::vector<std::string>& sources,
                            const std::vector<std::string>& targets,
                            std::vector<unsigned>& incoming, std::size_t si) {
        ReverseBounds rb = reverse_bounds(a);
        if (si == sources.size()) {
            for (unsigned c : incoming)
                if (c < rb.lower) return;
            fill_assoc(om, ai + 1);
            return;
        }
        const std::string& src = sources[si];
        unsigned lb = a.tgt_mult.lower;
        std::size_t ub = targets.size();
        if (a.tgt_mult.upper && *a.tgt_mult.upper < ub)
            ub = *a.tgt_mult.upper;
        if (lb > targets.size()) return; // no admissible subset
        for (unsigned mask = 0; mask < (1u << targets.size()); ++mask) {
            std::size_t cnt =
                static_cast<std::size_t>(__builtin_popcount(mask));
            if (cnt < lb || cnt > ub) continue;
            bool ok = true;
            for (std::size_t t = 0; t < targets.size() && ok; ++t)
                if ((mask & (1u << t)) && rb.upper &&
                    incoming[t] + 1 > *rb.upper)
                    ok = false;
            if (!ok) continue;
            for (std::size_t t = 0; t < targets.size(); ++t)
                if (mask & (1u << t)) {
                    ++incoming[t];
                    om.link(src, a.src_role, targets[t]);
                    if (!a.partner_role.empty())
                        om.link(targets[t], a.partner_role, src);
                }
            fill_assoc_sources(om, ai, a, sources, targets, incoming, si + 1);
            for (std::size_t t = 0; t < targets.size(); ++t)
                if (mask & (1u << t)) {
                    --incoming[t];
                    om.slots.erase(
                        {src, a.src_role, SlotValue::object(targets[t])});
                    if (!a.partner_role.empty())
                        om.slots.erase({targets[t], a.partner_role,
                                        SlotValue::object(src)});
                }
        }
    }

    void finish(ObjectModel& om) {
        SatisfactionReport right_rep = evaluate(right_, om);
        if (right_rep.satisfied) return;
        SatisfactionReport left_rep = evaluate(left_, om);
        if (!left_rep.satisfied) return; // generator invariant; never expected
        CanonicalForm form = canonicalize(om);
        if (exclusions_.count(form.canonical_text)) return;
        if (found_.count(form.canonical_text)) return;
        Witness w;
        w.om = om;
        w.om.name = "w";
        w.canonical = form;
        w.left_report = std::move(left_rep);
        w.right_report = std::move(right_rep);
        found_.emplace(form.canonical_text, std::move(w));
    }

    const FlatClassDiagram& left_;
    const FlatClassDiagram& right_;
    unsigned n_;
    const std::set<std::string>& exclusions_;
    std::vector<std::string> ids_;
    std::map<std::string, Witness> found_; // canonical text -> witness
};

} // namespace detail

// Draws the next non-isomorphic diff witness, or nothing once no witness of
// size <= scope remains.  Sound and complete for the scope; enumeration
// order is non-decreasing object count, then canonical-form lexicographic.
inline std::optional<Witness> next_witness(DiffProblem& p) {
    while (p.buffer_pos >= p.buffer.size()) {
        if (p.next_size > p.scope) return std::nullopt;
        detail::SizedWitnessSearch search(p, p.next_size);
        p.buffer = search.run();
        p.buffer_pos = 0;
        ++p.next_size;
    }
    Witness w = p.buffer[p.buffer_pos++];
    p.exclusions.insert(w.canonical.canonical_text);
    return w;
}

// The bounded directed difference with the configured filter and witness
// cap applied.
inline std::vector<Witness> diff(const ClassDiagram& cd1,
                                 const ClassDiagram& cd2,
                                 const DiffConfig& cfg) {
    DiffProblem p = encode_pair(cd1, cd2, cfg);
    std::vector<Witness> out;
    if (cfg.filter == FilterKind::Static) {
        while (out.size() < cfg.max_witnesses) {
            auto w = next_witness(p);
            if (!w) break;
            out.push_back(std::move(*w));
        }
        return static_representatives(out);
    }
    FilterState st{cfg.filter};
    while (out.size() < cfg.max_witnesses) {
        auto w = next_witness(p);
        if (!w) break;
        if (accept(st, *w)) out.push_back(std::move(*w));
    }
    return out;
}

struct CompareResult {
    enum class Verdict {
        LeftRefinesRight, // <_k : forward diff empty, backward nonempty
        RightRefinesLeft, // >_k
        Equivalent,       // ≡_k
        Incomparable      // <>_k
    };
    Verdict verdict = Verdict::Equivalent;
    unsigned scope = 0;
    std::optional<Witness> left_to_right; // witness of diff(left, right)
    std::optional<Witness> right_to_left;
};

inline const char* verdict_symbol(CompareResult::Verdict v) {
    switch (v) {
    case CompareResult::Verdict::LeftRefinesRight: return "<";
    case CompareResult::Verdict::RightRefinesLeft: return ">";
    case CompareResult::Verdict::Equivalent: return "≡";
    case CompareResult::Verdict::Incomparable: return "<>";
    }
    return "?";
}

inline CompareResult compare(const ClassDiagram& cd1, const ClassDiagram& cd2,
                             unsigned k) {
    DiffConfig cfg;
    cfg.scope = k;
    CompareResult r;
    r.scope = k;
    DiffProblem fwd = encode_pair(cd1, cd2, cfg);
    DiffProblem bwd = encode_pair(cd2, cd1, cfg);
    r.left_to_right = next_witness(fwd);
    r.right_to_left = next_witness(bwd);
    using V = CompareResult::Verdict;
    if (r.left_to_right)
        r.verdict = r.right_to_left ? V::Incomparable : V::RightRefinesLeft;
    else
        r.verdict = r.right_to_left ? V::LeftRefinesRight : V::Equivalent;
    return r;
}

// Step labels for the evolution report: old <_k new means the new version
// admits strictly more implementations within the scope.
inline const char* evolution_label(CompareResult::Verdict v) {
    switch (v) {
    case CompareResult::Verdict::LeftRefinesRight:
        return "introduced new possible implementations";
    case CompareResult::Verdict::RightRefinesLeft:
        return "eliminated possible implementations";
    case CompareResult::Verdict::Incomparable:
        return "both introduced and eliminated possible implementations";
    case CompareResult::Verdict::Equivalent:
        return "semantics-preserving change";
    }
    return "?";
}

inline std::vector<CompareResult>
evolution(const std::vector<ClassDiagram>& versions, unsigned k) {
    std::vector<CompareResult> out;
    for (std::size_t i = 0; i + 1 < versions.size(); ++i)
        out.push_back(compare(versions[i], versions[i + 1], k));
    return out;
}

} // namespace semdiff

#endif
