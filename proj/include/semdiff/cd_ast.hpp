#ifndef SEMDIFF_CD_AST_HPP
#define SEMDIFF_CD_AST_HPP

#include <optional>
#include <string>
#include <vector>

namespace semdiff {

// Attribute types are either opaque primitive tokens (Date, String, ...)
// or enumerations declared in the same diagram.
enum class AttrTypeKind { Primitive, Enum };

struct AttrType {
    AttrTypeKind kind = AttrTypeKind::Primitive;
    std::string name;

    friend bool operator==(const AttrType&, const AttrType&) = default;
};

struct Attribute {
    std::string name;
    AttrType type;

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct EnumDecl {
    std::string name;
    std::vector<std::string> literals; // nonempty, pairwise distinct

    friend bool operator==(const EnumDecl&, const EnumDecl&) = default;
};

struct ClassDecl {
    std::string name;
    bool is_abstract = false;
    bool is_singleton = false;
    std::optional<std::string> superclass;
    std::vector<std::string> interfaces;
    std::vector<Attribute> attributes;

    friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

struct InterfaceDecl {
    std::string name;
    std::vector<std::string> extends;

    friend bool operator==(const InterfaceDecl&, const InterfaceDecl&) = default;
};

// Multiplicity upper bound: nullopt means unbounded (*).
struct Multiplicity {
    unsigned lower = 0;
    std::optional<unsigned> upper; // nullopt = *

    static Multiplicity unbounded() { return {0, std::nullopt}; }
    static Multiplicity exactly(unsigned n) { return {n, n}; }
    static Multiplicity range(unsigned lo, unsigned hi) { return {lo, hi}; }

    bool admits(std::size_t n) const {
        return n >= lower && (!upper || n <= *upper);
    }

    friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

enum class AssocKind { Plain, Aggregation, Composition };
enum class Navigability { LeftToRight, Bidirectional };

// association [KIND] LType [lMult] [(lRole)] ARROW [(rRole)] [rMult] RType ;
//
// right_role is the field stored on left-type objects and points at
// right-type objects; left_role (bidirectional only) is the inverse field
// on right-type objects.  right_mult bounds right-objects per left-object,
// left_mult bounds left-objects per right-object.  For compositions the
// left end is the whole and the right end the part.
struct AssocDecl {
    AssocKind kind = AssocKind::Plain;
    Navigability navigability = Navigability::LeftToRight;
    std::string left_type;
    std::string right_type;
    std::optional<std::string> left_role;
    std::optional<std::string> right_role;
    Multiplicity left_mult = Multiplicity::unbounded();
    Multiplicity right_mult = Multiplicity::unbounded();

    friend bool operator==(const AssocDecl&, const AssocDecl&) = default;
};

struct ClassDiagram {
    std::string name;
    std::vector<ClassDecl> classes;
    std::vector<InterfaceDecl> interfaces;
    std::vector<EnumDecl> enums;
    std::vector<AssocDecl> associations;

    const ClassDecl* find_class(const std::string& n) const {
        for (const auto& c : classes)
            if (c.name == n) return &c;
        return nullptr;
    }
    const InterfaceDecl* find_interface(const std::string& n) const {
        for (const auto& i : interfaces)
            if (i.name == n) return &i;
        return nullptr;
    }
    const EnumDecl* find_enum(const std::string& n) const {
        for (const auto& e : enums)
            if (e.name == n) return &e;
        return nullptr;
    }

    friend bool operator==(const ClassDiagram&, const ClassDiagram&) = default;
};

} // namespace semdiff

#endif
