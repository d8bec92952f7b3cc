#ifndef SEMDIFF_ENUMERATE_HPP
#define SEMDIFF_ENUMERATE_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "semdiff/canonical.hpp"
#include "semdiff/errors.hpp"
#include "semdiff/om.hpp"
#include "semdiff/universe.hpp"

namespace semdiff {

namespace detail {

struct EnumCell {
    std::string object;
    std::string field;
    std::vector<std::vector<SlotValue>> options; // includes the empty option
};

struct Enumerator {
    const SignatureUniverse& u;
    unsigned scope;
    std::function<void(const ObjectModel&)> sink;
    std::set<std::string> seen;

    void run() {
        std::vector<std::string> classes(u.instantiable_classes.begin(),
                                         u.instantiable_classes.end());
        for (unsigned n = 0; n <= scope; ++n) {
            std::vector<std::string> assign;
            choose_classes(classes, 0, n, assign);
        }
    }

    // Non-decreasing class assignment == one order per class multiset.
    void choose_classes(const std::vector<std::string>& classes,
                        std::size_t from, unsigned remaining,
                        std::vector<std::string>& assign) {
        if (remaining == 0) {
            emit_models(assign);
            return;
        }
        for (std::size_t i = from; i < classes.size(); ++i) {
            assign.push_back(classes[i]);
            choose_classes(classes, i, remaining - 1, assign);
            assign.pop_back();
        }
    }

    void emit_models(const std::vector<std::string>& assign) {
        ObjectModel base;
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < assign.size(); ++i) {
            ids.push_back("o" + std::to_string(i + 1));
            base.add_object(ids[i], assign[i]);
        }

        // Stage 1 enumerates the non-object parts of all cells as one tuple
        // per object.  Objects of the same class are contiguous in `assign`
        // and interchangeable until links exist, so only non-decreasing
        // tuple indices within a class group are visited; stage 2 then
        // assigns object-valued contents exhaustively, which restores every
        // isomorphism class.
        std::map<std::string, std::vector<std::vector<Slot>>> tuple_space;
        for (const auto& cls : assign) {
            if (tuple_space.count(cls)) continue;
            std::vector<std::vector<Slot>> tuples{{}};
            auto cf = u.class_fields.find(cls);
            if (cf != u.class_fields.end())
                for (const auto& field : cf->second) {
                    std::vector<std::vector<Slot>> next;
                    for (const auto& t : tuples)
                        for (const auto& opt : scalar_options(field)) {
                            auto nt = t;
                            for (const auto& v : opt)
                                nt.push_back({"", field, v});
                            next.push_back(std::move(nt));
                        }
                    tuples = std::move(next);
                }
            tuple_space.emplace(cls, std::move(tuples));
        }
        fill_tuples(base, assign, ids, tuple_space, 0, 0);
    }

    // The empty option plus every single-value non-object content.
    std::vector<std::vector<SlotValue>>
    scalar_options(const std::string& field) {
        std::vector<std::vector<SlotValue>> opts;
        opts.push_back({});
        const FieldProfile& p = u.field_profiles.at(field);
        for (const auto& e : p.enum_types)
            for (const auto& lit : u.enum_domains.at(e))
                opts.push_back({SlotValue::enum_lit(e, lit)});
        for (const auto& pt : p.prim_types)
            opts.push_back({SlotValue::primitive(pt)});
        return opts;
    }

    void fill_tuples(
        ObjectModel& om, const std::vector<std::string>& assign,
        const std::vector<std::string>& ids,
        const std::map<std::string, std::vector<std::vector<Slot>>>& space,
        std::size_t obj, std::size_t min_idx) {
        if (obj == assign.size()) {
            std::vector<EnumCell> cells;
            for (std::size_t i = 0; i < assign.size(); ++i) {
                auto cf = u.class_fields.find(assign[i]);
                if (cf == u.class_fields.end()) continue;
                for (const auto& field : cf->second) {
                    if (!u.field_profiles.at(field).object_valued) continue;
                    if (!om.values(ids[i], field).empty()) continue;
                    cells.push_back(
                        {ids[i], field, object_options(om, field)});
                }
            }
            fill_cells(om, cells, 0);
            return;
        }
        const auto& tuples = space.at(assign[obj]);
        if (obj == 0 || assign[obj - 1] != assign[obj]) min_idx = 0;
        for (std::size_t ti = min_idx; ti < tuples.size(); ++ti) {
            for (const auto& s : tuples[ti])
                om.add_slot(ids[obj], s.field, s.value);
            fill_tuples(om, assign, ids, space, obj + 1, ti);
            for (const auto& s : tuples[ti])
                om.slots.erase({ids[obj], s.field, s.value});
        }
    }

    // The shapes the object-valued part of a cell can take: nothing, or a
    // nonempty set of objects of a possible target class (size capped by
    // the largest upper bound either diagram states for the field).
    std::vector<std::vector<SlotValue>>
    object_options(const ObjectModel& base, const std::string& field) {
        std::vector<std::vector<SlotValue>> opts;
        opts.push_back({}); // empty
        const FieldProfile& p = u.field_profiles.at(field);
        std::vector<std::string> targets;
        for (const auto& [id, cls] : base.objects)
            if (p.target_classes.count(cls)) targets.push_back(id);
        std::size_t cap = targets.size();
        if (p.max_upper && *p.max_upper < cap) cap = *p.max_upper;
        for (unsigned mask = 1; mask < (1u << targets.size()); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) > cap)
                continue;
            std::vector<SlotValue> vals;
            for (std::size_t t = 0; t < targets.size(); ++t)
                if (mask & (1u << t))
                    vals.push_back(SlotValue::object(targets[t]));
            opts.push_back(std::move(vals));
        }
        return opts;
    }

    void fill_cells(ObjectModel& om, const std::vector<EnumCell>& cells,
                    std::size_t idx) {
        if (idx == cells.size()) {
            auto form = canonicalize(om);
            if (seen.insert(form.canonical_text).second) sink(om);
            return;
        }
        const EnumCell& cell = cells[idx];
        for (const auto& opt : cell.options) {
            for (const auto& v : opt) om.add_slot(cell.object, cell.field, v);
            fill_cells(om, cells, idx + 1);
            for (const auto& v : opt)
                om.slots.erase({cell.object, cell.field, v});
        }
    }
};

} // namespace detail

inline constexpr unsigned kDefaultEnumerationCeiling = 4;

// Exhaustive, isomorphism-free enumeration of object models over the
// universe with at most `scope` objects.  Semantic checks are the caller's
// job; this is the brute-force oracle the diff engine is tested against.
inline void enumerate_oms(const SignatureUniverse& u, unsigned scope,
                          const std::function<void(const ObjectModel&)>& sink,
                          unsigned ceiling = kDefaultEnumerationCeiling) {
    if (scope > ceiling)
        throw ScopeTooLarge("enumeration scope " + std::to_string(scope) +
                            " exceeds the ceiling " + std::to_string(ceiling));
    detail::Enumerator en{u, scope, sink, {}};
    en.run();
}

inline std::vector<ObjectModel>
enumerate_oms(const SignatureUniverse& u, unsigned scope,
              unsigned ceiling = kDefaultEnumerationCeiling) {
    std::vector<ObjectModel> out;
    enumerate_oms(
        u, scope, [&](const ObjectModel& om) { out.push_back(om); }, ceiling);
    return out;
}

} // namespace semdiff

#endif
