#ifndef SEMDIFF_CD_FLATTEN_HPP
#define SEMDIFF_CD_FLATTEN_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "semdiff/cd_ast.hpp"
#include "semdiff/cd_check.hpp"
#include "semdiff/cd_printer.hpp"

namespace semdiff {

// One association lowered onto concrete class sets.  src_role is the field
// stored on src-side objects, partner_role (bidirectional only) the inverse
// field on tgt-side objects.  tgt_mult bounds targets per source object,
// src_mult bounds sources per target object.
struct LoweredAssoc {
    AssocKind kind = AssocKind::Plain;
    Navigability navigability = Navigability::LeftToRight;
    std::string src_type; // declared end type names
    std::string tgt_type;
    std::string src_role;
    std::string partner_role; // empty unless bidirectional
    std::set<std::string> src_classes;
    std::set<std::string> tgt_classes;
    Multiplicity tgt_mult;
    Multiplicity src_mult;

    friend bool operator==(const LoweredAssoc&, const LoweredAssoc&) = default;
};

struct FlatClassDiagram {
    std::string name;
    std::set<std::string> concrete_classes;
    std::set<std::string> singletons;
    std::map<std::string, std::vector<Attribute>> flat_attrs; // concrete only
    std::map<std::string, std::set<std::string>> subtype_sets; // all types
    std::map<std::string, std::vector<std::string>> enum_values;
    std::vector<LoweredAssoc> assocs;
    // All fields an object of a concrete class may carry: flattened
    // attribute names plus roles navigable from it.
    std::map<std::string, std::set<std::string>> allowed_fields;

    const std::set<std::string>& subtypes(const std::string& ty) const {
        static const std::set<std::string> empty;
        auto it = subtype_sets.find(ty);
        return it == subtype_sets.end() ? empty : it->second;
    }
};

// Pre: check_context_conditions(cd) is empty.
inline FlatClassDiagram flatten(const ClassDiagram& cd) {
    detail::Hierarchy h(cd);
    FlatClassDiagram f;
    f.name = cd.name;

    for (const auto& c : cd.classes) {
        if (!c.is_abstract) f.concrete_classes.insert(c.name);
        if (c.is_singleton) f.singletons.insert(c.name);
    }
    for (const auto& e : cd.enums) f.enum_values[e.name] = e.literals;

    auto subtypes_of = [&](const std::string& ty) {
        std::set<std::string> s;
        for (const auto& c : f.concrete_classes)
            if (h.conforms(c, ty)) s.insert(c);
        return s;
    };
    for (const auto& c : cd.classes) f.subtype_sets[c.name] = subtypes_of(c.name);
    for (const auto& i : cd.interfaces)
        f.subtype_sets[i.name] = subtypes_of(i.name);

    for (const auto& c : f.concrete_classes) {
        // Identical redeclarations collapse, so flattening a hand-flattened
        // diagram is a no-op.
        std::vector<Attribute> attrs;
        std::set<std::string> seen;
        for (const auto& a : detail::raw_flat_attrs(cd, c))
            if (seen.insert(a.name).second) attrs.push_back(a);
        f.flat_attrs[c] = std::move(attrs);
        auto& fields = f.allowed_fields[c];
        for (const auto& a : f.flat_attrs[c]) fields.insert(a.name);
    }

    for (const auto& a : cd.associations) {
        LoweredAssoc la;
        la.kind = a.kind;
        la.navigability = a.navigability;
        la.src_type = a.left_type;
        la.tgt_type = a.right_type;
        la.src_role = a.right_role.value_or("");
        if (a.navigability == Navigability::Bidirectional)
            la.partner_role = a.left_role.value_or("");
        la.src_classes = f.subtype_sets[a.left_type];
        la.tgt_classes = f.subtype_sets[a.right_type];
        la.tgt_mult = a.right_mult;
        la.src_mult = a.left_mult;
        for (const auto& c : la.src_classes)
            f.allowed_fields[c].insert(la.src_role);
        if (!la.partner_role.empty())
            for (const auto& c : la.tgt_classes)
                f.allowed_fields[c].insert(la.partner_role);
        f.assocs.push_back(std::move(la));
    }
    return f;
}

// Human-readable inventory of the lowered constraint set, each entry tagged
// with the predicate it realizes.  Deterministic; useful for debugging and
// for asserting what a diff problem actually encodes.
inline std::vector<std::string> constraint_inventory(const FlatClassDiagram& f) {
    std::vector<std::string> out;
    auto set_str = [](const std::set<std::string>& s) {
        std::string r = "{";
        for (const auto& e : s) r += (r.size() > 1 ? "+" : "") + e;
        return r + "}";
    };
    for (const auto& c : f.concrete_classes) {
        for (const auto& a : f.flat_attrs.at(c))
            out.push_back("ObjAttrib[" + c + ", " + a.name + ", " +
                          (a.type.kind == AttrTypeKind::Enum
                               ? a.type.name + "Enum"
                               : "type_" + a.type.name) +
                          "]");
        std::string fields;
        for (const auto& fn : f.allowed_fields.at(c))
            fields += " - " + fn;
        out.push_back("ObjNoFName[" + c + ", FName" + fields + "]");
        if (f.singletons.count(c)) out.push_back("One[" + c + "]");
    }
    for (const auto& a : f.assocs) {
        std::string src = set_str(a.src_classes), tgt = set_str(a.tgt_classes);
        out.push_back("ObjLUAttrib[" + src + ", " + a.src_role + ", " + tgt +
                      ", " + render_mult(a.tgt_mult) + "]");
        if (a.navigability == Navigability::Bidirectional) {
            out.push_back("BidiAssoc[" + src + ", " + a.src_role + ", " + tgt +
                          ", " + a.partner_role + "]");
            out.push_back("ObjLUAttrib[" + tgt + ", " + a.partner_role + ", " +
                          src + ", " + render_mult(a.src_mult) + "]");
        } else {
            out.push_back("ObjLU[" + src + ", " + a.src_role + ", " + tgt +
                          ", " + render_mult(a.src_mult) + "]");
        }
        if (a.kind == AssocKind::Composition)
            out.push_back("Composition[" + src + ", " + a.src_role + ", " +
                          tgt + "]");
    }
    return out;
}

} // namespace semdiff

#endif
