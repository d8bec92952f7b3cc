#ifndef SEMDIFF_FILTERS_HPP
#define SEMDIFF_FILTERS_HPP

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "semdiff/cd_ast.hpp"
#include "semdiff/witness.hpp"

namespace semdiff {

using ClassAssocCombo = std::tuple<std::string, std::string, std::string>;

// What a witness exhibits: the classes it instantiates, the association
// roles used in object-to-object slots, and their combinations.
struct WitnessProfile {
    std::set<std::string> class_set;
    std::set<std::string> assoc_set;
    std::set<ClassAssocCombo> combo_set; // (source class, role, target class)
};

inline WitnessProfile profile(const ObjectModel& om) {
    WitnessProfile p;
    for (const auto& [id, cls] : om.objects) p.class_set.insert(cls);
    for (const auto& s : om.slots)
        if (s.value.kind == SlotValue::Kind::Object) {
            p.assoc_set.insert(s.field);
            p.combo_set.insert({om.objects.at(s.object), s.field,
                                om.objects.at(s.value.a)});
        }
    return p;
}

inline WitnessProfile profile(const Witness& w) { return profile(w.om); }

// Incremental filter state.  seen_* are the unions of the profiles of all
// accepted witnesses; rejected candidates leave the state untouched.
struct FilterState {
    FilterKind kind = FilterKind::None;
    std::set<std::string> seen_classes;
    std::set<std::string> seen_assocs;
    std::set<ClassAssocCombo> seen_combos;
};

namespace detail {

template <typename T>
inline bool subset_of(const std::set<T>& a, const std::set<T>& b) {
    for (const auto& e : a)
        if (!b.count(e)) return false;
    return true;
}

} // namespace detail

// NNC keeps a witness iff it instantiates an unseen class, NNA iff it uses
// an unseen association role, NNCA iff it uses an unseen class/role/class
// combination.  On keep the profile is unioned into the state.
inline bool accept(FilterState& state, const Witness& w) {
    WitnessProfile p = profile(w);
    bool keep = true;
    switch (state.kind) {
    case FilterKind::None:
    case FilterKind::Static: // static filtering is a post-pass
        break;
    case FilterKind::NNC:
        keep = !detail::subset_of(p.class_set, state.seen_classes);
        break;
    case FilterKind::NNA:
        keep = !detail::subset_of(p.assoc_set, state.seen_assocs);
        break;
    case FilterKind::NNCA:
        keep = !detail::subset_of(p.combo_set, state.seen_combos);
        break;
    }
    if (keep) {
        state.seen_classes.insert(p.class_set.begin(), p.class_set.end());
        state.seen_assocs.insert(p.assoc_set.begin(), p.assoc_set.end());
        state.seen_combos.insert(p.combo_set.begin(), p.combo_set.end());
    }
    return keep;
}

// Static class-set filter: one representative per distinct instantiated
// class set, first in engine order.
inline std::vector<Witness> static_representatives(const std::vector<Witness>& ws) {
    std::vector<Witness> out;
    std::set<std::set<std::string>> seen;
    for (const auto& w : ws)
        if (seen.insert(profile(w).class_set).second) out.push_back(w);
    return out;
}

// Attribute abstraction: drop every attribute of a primitive (library)
// type; enum-typed attributes are user-declared model elements and stay.
inline ClassDiagram abstract_attributes(const ClassDiagram& cd) {
    ClassDiagram out = cd;
    for (auto& c : out.classes) {
        std::vector<Attribute> kept;
        for (const auto& a : c.attributes)
            if (a.type.kind == AttrTypeKind::Enum) kept.push_back(a);
        c.attributes = std::move(kept);
    }
    return out;
}

} // namespace semdiff

#endif
