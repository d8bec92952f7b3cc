#ifndef SEMDIFF_UNIVERSE_HPP
#define SEMDIFF_UNIVERSE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semdiff/cd_ast.hpp"
#include "semdiff/cd_flatten.hpp"
#include "semdiff/errors.hpp"

namespace semdiff {

// How a field name may be used across the two diagrams.  Drives the oracle
// enumerator: a slot shape outside this profile cannot occur in any object
// model admitted by either diagram.
struct FieldProfile {
    std::set<std::string> enum_types;
    std::set<std::string> prim_types;
    bool object_valued = false;
    std::optional<unsigned> max_upper = 0; // nullopt = unbounded
    std::set<std::string> target_classes;
};

struct SignatureUniverse {
    std::set<std::string> class_names;   // classes of both CDs, abstract too
    std::set<std::string> field_names;   // attribute and role names
    std::set<std::string> primitive_types;
    std::set<std::string> enum_literals; // namespaced, e.g. PosKnd::external
    // classes concrete in at least one CD; only these can carry instances
    std::set<std::string> instantiable_classes;
    std::map<std::string, std::set<std::string>> enum_domains; // enum -> lits
    std::map<std::string, std::set<std::string>> class_fields; // cls -> fields
    std::map<std::string, FieldProfile> field_profiles;
};

namespace detail {

inline void merge_upper(std::optional<unsigned>& acc,
                        const std::optional<unsigned>& u) {
    if (!u) {
        acc = std::nullopt;
    } else if (acc) {
        acc = std::max(*acc, *u);
    }
}

inline void absorb_flat(SignatureUniverse& u, const FlatClassDiagram& f) {
    for (const auto& [cls, attrs] : f.flat_attrs) {
        for (const auto& a : attrs) {
            u.field_names.insert(a.name);
            auto& p = u.field_profiles[a.name];
            if (a.type.kind == AttrTypeKind::Enum)
                p.enum_types.insert(a.type.name);
            else {
                p.prim_types.insert(a.type.name);
                u.primitive_types.insert(a.type.name);
            }
        }
    }
    for (const auto& [e, lits] : f.enum_values) {
        for (const auto& l : lits) {
            u.enum_literals.insert(e + "::" + l);
            u.enum_domains[e].insert(l);
        }
    }
    for (const auto& [cls, fields] : f.allowed_fields)
        u.class_fields[cls].insert(fields.begin(), fields.end());
    for (const auto& a : f.assocs) {
        u.field_names.insert(a.src_role);
        auto& p = u.field_profiles[a.src_role];
        if (!p.object_valued) {
            p.object_valued = true;
            p.max_upper = 0;
        }
        merge_upper(p.max_upper, a.tgt_mult.upper);
        p.target_classes.insert(a.tgt_classes.begin(), a.tgt_classes.end());
        if (!a.partner_role.empty()) {
            u.field_names.insert(a.partner_role);
            auto& q = u.field_profiles[a.partner_role];
            if (!q.object_valued) {
                q.object_valued = true;
                q.max_upper = 0;
            }
            merge_upper(q.max_upper, a.src_mult.upper);
            q.target_classes.insert(a.src_classes.begin(), a.src_classes.end());
        }
    }
}

} // namespace detail

// Shared signature universe of a CD pair.  Same-named elements are matched
// by exact name equality; a name whose declaration kind differs between the
// two diagrams has no consistent signature and is rejected.
inline SignatureUniverse build_universe(const ClassDiagram& cd1,
                                        const ClassDiagram& cd2) {
    using detail::TypeKind;
    auto kind_name = [](TypeKind k) {
        switch (k) {
        case TypeKind::Class: return "class";
        case TypeKind::Interface: return "interface";
        case TypeKind::Enum: return "enum";
        default: return "unknown";
        }
    };
    std::set<std::string> names;
    for (const ClassDiagram* cd : {&cd1, &cd2}) {
        for (const auto& c : cd->classes) names.insert(c.name);
        for (const auto& i : cd->interfaces) names.insert(i.name);
        for (const auto& e : cd->enums) names.insert(e.name);
    }
    for (const auto& n : names) {
        TypeKind k1 = detail::kind_of(cd1, n), k2 = detail::kind_of(cd2, n);
        if (k1 != TypeKind::Unknown && k2 != TypeKind::Unknown && k1 != k2)
            throw TypeKindClash("'" + n + "' is a " + kind_name(k1) + " in " +
                                cd1.name + " but a " + kind_name(k2) + " in " +
                                cd2.name);
    }

    SignatureUniverse u;
    for (const ClassDiagram* cd : {&cd1, &cd2})
        for (const auto& c : cd->classes) {
            u.class_names.insert(c.name);
            if (!c.is_abstract) u.instantiable_classes.insert(c.name);
        }
    detail::absorb_flat(u, flatten(cd1));
    detail::absorb_flat(u, flatten(cd2));
    return u;
}

namespace detail {

// Attribute equality for stripping: same name and type, and for enum types
// the two diagrams must declare identical literal sets (partial literal
// overlap keeps the attribute, since the value domains differ).
inline bool attrs_strip_equal(const Attribute& a, const Attribute& b,
                              const ClassDiagram& cd1, const ClassDiagram& cd2) {
    if (a.name != b.name || !(a.type == b.type)) return false;
    if (a.type.kind == AttrTypeKind::Enum) {
        const EnumDecl* e1 = cd1.find_enum(a.type.name);
        const EnumDecl* e2 = cd2.find_enum(a.type.name);
        if (!e1 || !e2) return false;
        std::set<std::string> s1(e1->literals.begin(), e1->literals.end());
        std::set<std::string> s2(e2->literals.begin(), e2->literals.end());
        return s1 == s2;
    }
    return true;
}

// Is attribute `name` common (per attrs_strip_equal) to the flattened
// attribute sets of class `cls` in both diagrams?
inline bool common_in_flat(const std::string& cls, const std::string& name,
                           const ClassDiagram& cd1, const ClassDiagram& cd2) {
    if (!cd1.find_class(cls) || !cd2.find_class(cls)) return false;
    const Attribute* a1 = nullptr;
    const Attribute* a2 = nullptr;
    auto f1 = raw_flat_attrs(cd1, cls);
    auto f2 = raw_flat_attrs(cd2, cls);
    for (const auto& a : f1)
        if (a.name == name) a1 = &a;
    for (const auto& a : f2)
        if (a.name == name) a2 = &a;
    return a1 && a2 && attrs_strip_equal(*a1, *a2, cd1, cd2);
}

inline ClassDiagram strip_one(const ClassDiagram& self,
                              const ClassDiagram& other) {
    Hierarchy h(self);
    ClassDiagram out = self;
    for (auto& c : out.classes) {
        std::vector<Attribute> kept;
        for (const auto& a : c.attributes) {
            // Concrete classes that inherit or own this declaration; the
            // attribute is removable only if it is common for all of them.
            bool removable = true;
            for (const auto& d : self.classes) {
                if (d.is_abstract) continue;
                if (!h.conforms(d.name, c.name)) continue;
                bool cm = (&self == &other)
                              ? true
                              : common_in_flat(d.name, a.name, self, other);
                if (!cm) {
                    removable = false;
                    break;
                }
            }
            if (!removable) kept.push_back(a);
        }
        c.attributes = std::move(kept);
    }
    // Drop enums no longer referenced by any remaining attribute.
    std::set<std::string> used;
    for (const auto& c : out.classes)
        for (const auto& a : c.attributes)
            if (a.type.kind == AttrTypeKind::Enum) used.insert(a.type.name);
    std::vector<EnumDecl> enums;
    for (const auto& e : out.enums)
        if (used.count(e.name)) enums.push_back(e);
    out.enums = std::move(enums);
    return out;
}

} // namespace detail

// Removes attributes that are syntactically equal in the flattened attribute
// sets of same-named classes of both diagrams, symmetrically from both.
// The results are for diff computation only, never shown to users.
inline std::pair<ClassDiagram, ClassDiagram>
strip_common(const ClassDiagram& cd1, const ClassDiagram& cd2) {
    return {detail::strip_one(cd1, cd2), detail::strip_one(cd2, cd1)};
}

} // namespace semdiff

#endif
