#ifndef SEMDIFF_CD_CHECK_HPP
#define SEMDIFF_CD_CHECK_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "semdiff/cd_ast.hpp"

namespace semdiff {

struct Violation {
    std::string rule;    // e.g. "InheritanceCycle"
    std::string subject; // offending element
    std::string message;
};

namespace detail {

enum class TypeKind { Class, Interface, Enum, Unknown };

inline TypeKind kind_of(const ClassDiagram& cd, const std::string& name) {
    if (cd.find_class(name)) return TypeKind::Class;
    if (cd.find_interface(name)) return TypeKind::Interface;
    if (cd.find_enum(name)) return TypeKind::Enum;
    return TypeKind::Unknown;
}

// Hierarchy queries over a (possibly ill-formed) diagram.  Traversals are
// cycle- and dangling-reference-safe so the checker can report violations
// instead of looping.
class Hierarchy {
public:
    explicit Hierarchy(const ClassDiagram& cd) : cd_(cd) {}

    // Proper ancestors along the superclass chain.
    std::vector<std::string> ancestors(const std::string& cls) const {
        std::vector<std::string> out;
        std::set<std::string> seen{cls};
        const ClassDecl* c = cd_.find_class(cls);
        while (c && c->superclass) {
            if (seen.count(*c->superclass)) break; // cycle
            seen.insert(*c->superclass);
            out.push_back(*c->superclass);
            c = cd_.find_class(*c->superclass);
        }
        return out;
    }

    // All interfaces a class conforms to (own + inherited, closed over
    // interface extension).
    std::set<std::string> interfaces_of(const std::string& cls) const {
        std::set<std::string> out;
        std::vector<std::string> chain = ancestors(cls);
        chain.insert(chain.begin(), cls);
        for (const auto& cn : chain) {
            const ClassDecl* c = cd_.find_class(cn);
            if (!c) continue;
            for (const auto& i : c->interfaces) close_interface(i, out);
        }
        return out;
    }

    // Does class `cls` conform to type `ty` (class or interface)?
    bool conforms(const std::string& cls, const std::string& ty) const {
        if (cls == ty) return true;
        for (const auto& a : ancestors(cls))
            if (a == ty) return true;
        return interfaces_of(cls).count(ty) > 0;
    }

    bool has_class_cycle(const std::string& cls) const {
        std::set<std::string> seen{cls};
        const ClassDecl* c = cd_.find_class(cls);
        while (c && c->superclass) {
            if (seen.count(*c->superclass)) return true;
            seen.insert(*c->superclass);
            c = cd_.find_class(*c->superclass);
        }
        return false;
    }

    bool has_interface_cycle(const std::string& itf) const {
        std::set<std::string> seen;
        return itf_cycle_from(itf, itf, seen);
    }

private:
    void close_interface(const std::string& itf, std::set<std::string>& out) const {
        if (out.count(itf)) return;
        out.insert(itf);
        if (const InterfaceDecl* d = cd_.find_interface(itf))
            for (const auto& e : d->extends) close_interface(e, out);
    }

    bool itf_cycle_from(const std::string& root, const std::string& cur,
                        std::set<std::string>& seen) const {
        if (seen.count(cur)) return cur == root || false;
        seen.insert(cur);
        const InterfaceDecl* d = cd_.find_interface(cur);
        if (!d) return false;
        for (const auto& e : d->extends) {
            if (e == root) return true;
            if (itf_cycle_from(root, e, seen)) return true;
        }
        return false;
    }

    const ClassDiagram& cd_;
};

// Flattened attribute list of a class: inherited first (root-most ancestor
// first), then own.  Cycle-safe; duplicates are kept so the checker can see
// them.
inline std::vector<Attribute> raw_flat_attrs(const ClassDiagram& cd,
                                             const std::string& cls) {
    Hierarchy h(cd);
    std::vector<Attribute> out;
    auto chain = h.ancestors(cls);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        if (const ClassDecl* c = cd.find_class(*it))
            for (const auto& a : c->attributes) out.push_back(a);
    if (const ClassDecl* c = cd.find_class(cls))
        for (const auto& a : c->attributes) out.push_back(a);
    return out;
}

} // namespace detail

inline std::vector<Violation> check_context_conditions(const ClassDiagram& cd) {
    using detail::TypeKind;
    std::vector<Violation> out;
    auto add = [&](std::string rule, std::string subject, std::string msg) {
        out.push_back({std::move(rule), std::move(subject), std::move(msg)});
    };
    detail::Hierarchy h(cd);

    // Type names pairwise distinct across classes, interfaces and enums.
    std::map<std::string, int> name_count;
    for (const auto& c : cd.classes) ++name_count[c.name];
    for (const auto& i : cd.interfaces) ++name_count[i.name];
    for (const auto& e : cd.enums) ++name_count[e.name];
    for (const auto& [n, cnt] : name_count)
        if (cnt > 1)
            add("DuplicateTypeName", n, "type name declared " +
                                            std::to_string(cnt) + " times");

    for (const auto& e : cd.enums) {
        std::set<std::string> lits;
        for (const auto& l : e.literals)
            if (!lits.insert(l).second)
                add("DuplicateEnumLiteral", e.name + "::" + l,
                    "enum literal repeated");
    }

    std::set<std::string> cycle_classes;
    for (const auto& c : cd.classes) {
        if (c.is_abstract && c.is_singleton)
            add("AbstractAndSingleton", c.name,
                "a class cannot be both abstract and singleton");
        if (c.superclass) {
            TypeKind k = detail::kind_of(cd, *c.superclass);
            if (k == TypeKind::Unknown)
                add("UnresolvedReference", c.name,
                    "superclass '" + *c.superclass + "' is not declared");
            else if (k != TypeKind::Class)
                add("NotAClass", c.name,
                    "'" + *c.superclass + "' is not a class");
        }
        for (const auto& i : c.interfaces) {
            TypeKind k = detail::kind_of(cd, i);
            if (k == TypeKind::Unknown)
                add("UnresolvedReference", c.name,
                    "interface '" + i + "' is not declared");
            else if (k != TypeKind::Interface)
                add("NotAnInterface", c.name, "'" + i + "' is not an interface");
        }
        if (h.has_class_cycle(c.name) && !cycle_classes.count(c.name)) {
            add("InheritanceCycle", c.name,
                "class inheritance chain contains a cycle");
            cycle_classes.insert(c.name);
        }
        for (const auto& a : c.attributes) {
            TypeKind k = detail::kind_of(cd, a.type.name);
            if (k == TypeKind::Class || k == TypeKind::Interface)
                add("InvalidAttributeType", c.name + "." + a.name,
                    "attribute types must be primitive tokens or enums, not "
                    "'" + a.type.name + "'");
        }
    }

    for (const auto& i : cd.interfaces) {
        for (const auto& e : i.extends) {
            TypeKind k = detail::kind_of(cd, e);
            if (k == TypeKind::Unknown)
                add("UnresolvedReference", i.name,
                    "interface '" + e + "' is not declared");
            else if (k != TypeKind::Interface)
                add("NotAnInterface", i.name, "'" + e + "' is not an interface");
        }
        if (h.has_interface_cycle(i.name))
            add("InheritanceCycle", i.name,
                "interface extension contains a cycle");
    }

    // Flattened attribute name uniqueness (only meaningful without cycles).
    for (const auto& c : cd.classes) {
        if (h.has_class_cycle(c.name)) continue;
        std::set<std::string> names;
        for (const auto& a : detail::raw_flat_attrs(cd, c.name))
            if (!names.insert(a.name).second)
                add("DuplicateAttribute", c.name + "." + a.name,
                    "attribute name repeated in the flattened attribute set");
    }

    for (std::size_t ai = 0; ai < cd.associations.size(); ++ai) {
        const AssocDecl& a = cd.associations[ai];
        std::string subject =
            a.left_type + (a.navigability == Navigability::Bidirectional
                               ? " <-> "
                               : " -> ") +
            a.right_type;
        for (const std::string* end : {&a.left_type, &a.right_type}) {
            TypeKind k = detail::kind_of(cd, *end);
            if (k == TypeKind::Unknown)
                add("UnresolvedReference", subject,
                    "association end '" + *end + "' is not declared");
            else if (k == TypeKind::Enum)
                add("InvalidAssociationEnd", subject,
                    "association end '" + *end + "' is an enum");
        }
        if (!a.right_role)
            add("MissingRoleName", subject,
                "association needs a role name for the field stored on " +
                    a.left_type + " objects");
        if (a.navigability == Navigability::Bidirectional && !a.left_role)
            add("MissingRoleName", subject,
                "bidirectional association needs both role names");
        for (const Multiplicity* m : {&a.left_mult, &a.right_mult})
            if (m->upper && m->lower > *m->upper)
                add("InvalidMultiplicity", subject,
                    "lower bound " + std::to_string(m->lower) +
                        " exceeds upper bound " + std::to_string(*m->upper));
    }

    // Field collisions: for every class, the flattened attribute names plus
    // every role attached to a type it conforms to must be pairwise distinct.
    for (const auto& c : cd.classes) {
        if (h.has_class_cycle(c.name)) continue;
        std::map<std::string, int> fields; // 0 = attribute, 1 = role
        for (const auto& a : detail::raw_flat_attrs(cd, c.name))
            fields.emplace(a.name, 0);
        auto attach = [&](const std::string& role) {
            auto [it, fresh] = fields.try_emplace(role, 1);
            if (!fresh && it->second == 0)
                add("FieldCollision", c.name + "." + role,
                    "role name collides with an attribute");
            else if (!fresh)
                add("FieldCollision", c.name + "." + role,
                    "role name attached twice to the same class");
        };
        for (const auto& a : cd.associations) {
            if (a.right_role && h.conforms(c.name, a.left_type))
                attach(*a.right_role);
            if (a.navigability == Navigability::Bidirectional && a.left_role &&
                h.conforms(c.name, a.right_type))
                attach(*a.left_role);
        }
    }

    return out;
}

} // namespace semdiff

#endif
