#ifndef SEMDIFF_EVALUATE_HPP
#define SEMDIFF_EVALUATE_HPP

#include <string>
#include <vector>

#include "semdiff/cd_flatten.hpp"
#include "semdiff/om.hpp"

namespace semdiff {

struct RuleViolation {
    std::string rule;    // R1..R8
    std::string subject; // offending elements
};

struct SatisfactionReport {
    bool satisfied = true;
    std::vector<RuleViolation> violations;

    void flag(std::string rule, std::string subject) {
        satisfied = false;
        violations.push_back({std::move(rule), std::move(subject)});
    }

    bool flag(const std::string& rule) const {
        for (const auto& v : violations)
            if (v.rule == rule) return true;
        return false;
    }
};

// Decides om ∈ sem(cd) under complete interpretation.  Total and
// deterministic; any structurally valid object model is accepted as input.
inline SatisfactionReport evaluate(const FlatClassDiagram& fcd,
                                   const ObjectModel& om) {
    SatisfactionReport rep;

    // R1: only concrete classes of this CD are instantiable.
    for (const auto& [id, cls] : om.objects)
        if (!fcd.concrete_classes.count(cls))
            rep.flag("R1-typing", id + ":" + cls);

    // R2: singleton classes have exactly one (conforming) instance.
    for (const auto& s : fcd.singletons) {
        const auto& subs = fcd.subtypes(s);
        std::size_t n = 0;
        for (const auto& [id, cls] : om.objects)
            if (subs.count(cls)) ++n;
        if (n != 1) rep.flag("R2-singleton", s);
    }

    auto conforming = [&](const std::set<std::string>& classes) {
        std::vector<std::string> ids;
        for (const auto& [id, cls] : om.objects)
            if (classes.count(cls)) ids.push_back(id);
        return ids;
    };

    // R3: exactly one correctly-typed slot per flattened attribute.
    // R4: no slot outside the allowed field set of the object's class.
    for (const auto& [id, cls] : om.objects) {
        auto fa = fcd.flat_attrs.find(cls);
        if (fa == fcd.flat_attrs.end()) continue; // R1 already flagged
        for (const auto& attr : fa->second) {
            auto vals = om.values(id, attr.name);
            if (vals.size() != 1) {
                rep.flag("R3-attribute", id + "." + attr.name);
                continue;
            }
            const SlotValue& v = vals.front();
            bool ok;
            if (attr.type.kind == AttrTypeKind::Enum) {
                auto ev = fcd.enum_values.find(attr.type.name);
                ok = v.kind == SlotValue::Kind::Enum && v.a == attr.type.name &&
                     ev != fcd.enum_values.end() &&
                     std::find(ev->second.begin(), ev->second.end(), v.b) !=
                         ev->second.end();
            } else {
                ok = v.kind == SlotValue::Kind::Primitive &&
                     v.a == attr.type.name;
            }
            if (!ok) rep.flag("R3-attribute", id + "." + attr.name);
        }
        const auto& allowed = fcd.allowed_fields.at(cls);
        for (const auto& s : om.slots)
            if (s.object == id && !allowed.count(s.field))
                rep.flag("R4-completeness", id + "." + s.field);
    }

    for (const auto& a : fcd.assocs) {
        // R5: role typing and multiplicity on each navigable end.
        auto check_role = [&](const std::set<std::string>& owners,
                              const std::string& role,
                              const std::set<std::string>& targets,
                              const Multiplicity& mult) {
            for (const auto& id : conforming(owners)) {
                auto vals = om.values(id, role);
                for (const auto& v : vals) {
                    bool ok = v.kind == SlotValue::Kind::Object &&
                              om.objects.count(v.a) &&
                              targets.count(om.objects.at(v.a));
                    if (!ok) rep.flag("R5-role-typing", id + "." + role);
                }
                if (!mult.admits(vals.size()))
                    rep.flag("R5-multiplicity", id + "." + role);
            }
        };
        check_role(a.src_classes, a.src_role, a.tgt_classes, a.tgt_mult);

        if (a.navigability == Navigability::Bidirectional) {
            check_role(a.tgt_classes, a.partner_role, a.src_classes,
                       a.src_mult);
            // R7: the two role relations are mutual inverses.
            for (const auto& id : conforming(a.src_classes))
                for (const auto& v : om.values(id, a.src_role))
                    if (v.kind == SlotValue::Kind::Object &&
                        !om.slots.count({v.a, a.partner_role,
                                         SlotValue::object(id)}))
                        rep.flag("R7-bidirectional",
                                 id + "." + a.src_role + "->" + v.a);
            for (const auto& id : conforming(a.tgt_classes))
                for (const auto& v : om.values(id, a.partner_role))
                    if (v.kind == SlotValue::Kind::Object &&
                        !om.slots.count(
                            {v.a, a.src_role, SlotValue::object(id)}))
                        rep.flag("R7-bidirectional",
                                 id + "." + a.partner_role + "->" + v.a);
        } else {
            // R6: reverse multiplicity of a uni-directional association.
            for (const auto& tgt : conforming(a.tgt_classes)) {
                std::size_t incoming = 0;
                for (const auto& src : conforming(a.src_classes))
                    if (om.slots.count({src, a.src_role,
                                        SlotValue::object(tgt)}))
                        ++incoming;
                if (!a.src_mult.admits(incoming))
                    rep.flag("R6-reverse-multiplicity", tgt + "." + a.src_role);
            }
        }

        // R8: parts of a composition belong to exactly one whole.
        if (a.kind == AssocKind::Composition) {
            for (const auto& part : conforming(a.tgt_classes)) {
                std::size_t wholes = 0;
                for (const auto& w : conforming(a.src_classes))
                    if (om.slots.count({w, a.src_role,
                                        SlotValue::object(part)}))
                        ++wholes;
                if (wholes != 1)
                    rep.flag("R8-composition", part + "." + a.src_role);
            }
        }
    }
    return rep;
}

} // namespace semdiff

#endif
