#ifndef SEMDIFF_CD_PRINTER_HPP
#define SEMDIFF_CD_PRINTER_HPP

#include <sstream>
#include <string>

#include "semdiff/cd_ast.hpp"

namespace semdiff {

inline std::string render_mult(const Multiplicity& m) {
    if (m.lower == 0 && !m.upper) return "*";
    if (!m.upper) return std::to_string(m.lower) + "..*";
    if (m.lower == *m.upper) return std::to_string(m.lower);
    return std::to_string(m.lower) + ".." + std::to_string(*m.upper);
}

// Deterministic pretty-printer for the .cd format: two-space indent,
// declaration order preserved. parse_cd(render_cd(cd)) == cd.
inline std::string render_cd(const ClassDiagram& cd) {
    std::ostringstream os;
    os << "classdiagram " << cd.name << " {\n";
    for (const auto& e : cd.enums) {
        os << "  enum " << e.name << " { ";
        for (std::size_t i = 0; i < e.literals.size(); ++i)
            os << (i ? ", " : "") << e.literals[i];
        os << " }\n";
    }
    for (const auto& c : cd.classes) {
        os << "  ";
        if (c.is_abstract) os << "abstract ";
        if (c.is_singleton) os << "singleton ";
        os << "class " << c.name;
        if (c.superclass) os << " extends " << *c.superclass;
        if (!c.interfaces.empty()) {
            os << " implements ";
            for (std::size_t i = 0; i < c.interfaces.size(); ++i)
                os << (i ? ", " : "") << c.interfaces[i];
        }
        if (c.attributes.empty()) {
            os << ";\n";
        } else {
            os << " {\n";
            for (const auto& a : c.attributes)
                os << "    " << a.type.name << " " << a.name << ";\n";
            os << "  }\n";
        }
    }
    for (const auto& it : cd.interfaces) {
        os << "  interface " << it.name;
        if (!it.extends.empty()) {
            os << " extends ";
            for (std::size_t i = 0; i < it.extends.size(); ++i)
                os << (i ? ", " : "") << it.extends[i];
        }
        os << ";\n";
    }
    for (const auto& a : cd.associations) {
        os << "  association ";
        if (a.kind == AssocKind::Composition) os << "composition ";
        if (a.kind == AssocKind::Aggregation) os << "aggregation ";
        os << a.left_type;
        if (!(a.left_mult == Multiplicity::unbounded()))
            os << " " << render_mult(a.left_mult);
        if (a.left_role) os << " (" << *a.left_role << ")";
        os << (a.navigability == Navigability::Bidirectional ? " <-> " : " -> ");
        if (a.right_role) os << "(" << *a.right_role << ") ";
        if (!(a.right_mult == Multiplicity::unbounded()))
            os << render_mult(a.right_mult) << " ";
        os << a.right_type << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace semdiff

#endif
