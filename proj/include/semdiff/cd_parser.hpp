#ifndef SEMDIFF_CD_PARSER_HPP
#define SEMDIFF_CD_PARSER_HPP

#include <string>

#include "semdiff/cd_ast.hpp"
#include "semdiff/lexer.hpp"

namespace semdiff {

namespace detail {

class CdParser {
public:
    explicit CdParser(const std::string& src) : cur_(tokenize(src)) {}

    ClassDiagram parse() {
        cur_.expect_kw("classdiagram");
        cd_.name = cur_.expect(TokKind::Ident, "diagram name").text;
        cur_.expect(TokKind::LBrace, "'{'");
        while (!cur_.at(TokKind::RBrace)) {
            if (cur_.at_kw("enum"))
                parse_enum();
            else if (cur_.at_kw("class") || cur_.at_kw("abstract") ||
                     cur_.at_kw("singleton"))
                parse_class();
            else if (cur_.at_kw("interface"))
                parse_interface();
            else if (cur_.at_kw("association"))
                parse_assoc();
            else
                throw SyntaxError(cur_.peek().pos,
                                  "expected enum, class, interface or "
                                  "association declaration, found '" +
                                      cur_.peek().text + "'");
        }
        cur_.expect(TokKind::RBrace, "'}'");
        cur_.expect(TokKind::End, "end of input");
        resolve_attr_types();
        return cd_;
    }

private:
    void parse_enum() {
        cur_.expect_kw("enum");
        EnumDecl e;
        e.name = cur_.expect(TokKind::Ident, "enum name").text;
        cur_.expect(TokKind::LBrace, "'{'");
        e.literals.push_back(cur_.expect(TokKind::Ident, "enum literal").text);
        while (cur_.accept(TokKind::Comma))
            e.literals.push_back(
                cur_.expect(TokKind::Ident, "enum literal").text);
        cur_.expect(TokKind::RBrace, "'}'");
        cd_.enums.push_back(std::move(e));
    }

    void parse_class() {
        ClassDecl c;
        if (cur_.accept_kw("abstract"))
            c.is_abstract = true;
        else if (cur_.accept_kw("singleton"))
            c.is_singleton = true;
        cur_.expect_kw("class");
        c.name = cur_.expect(TokKind::Ident, "class name").text;
        if (cur_.accept_kw("extends"))
            c.superclass = cur_.expect(TokKind::Ident, "superclass name").text;
        if (cur_.accept_kw("implements")) {
            c.interfaces.push_back(
                cur_.expect(TokKind::Ident, "interface name").text);
            while (cur_.accept(TokKind::Comma))
                c.interfaces.push_back(
                    cur_.expect(TokKind::Ident, "interface name").text);
        }
        if (cur_.accept(TokKind::LBrace)) {
            while (!cur_.at(TokKind::RBrace)) {
                Attribute a;
                a.type.name = cur_.expect(TokKind::Ident, "attribute type").text;
                a.name = cur_.expect(TokKind::Ident, "attribute name").text;
                cur_.expect(TokKind::Semi, "';'");
                c.attributes.push_back(std::move(a));
            }
            cur_.expect(TokKind::RBrace, "'}'");
        } else {
            cur_.expect(TokKind::Semi, "';'");
        }
        cd_.classes.push_back(std::move(c));
    }

    void parse_interface() {
        cur_.expect_kw("interface");
        InterfaceDecl it;
        it.name = cur_.expect(TokKind::Ident, "interface name").text;
        if (cur_.accept_kw("extends")) {
            it.extends.push_back(
                cur_.expect(TokKind::Ident, "interface name").text);
            while (cur_.accept(TokKind::Comma))
                it.extends.push_back(
                    cur_.expect(TokKind::Ident, "interface name").text);
        }
        cur_.expect(TokKind::Semi, "';'");
        cd_.interfaces.push_back(std::move(it));
    }

    bool at_mult() const {
        return cur_.at(TokKind::Star) || cur_.at(TokKind::Number);
    }

    Multiplicity parse_mult() {
        if (cur_.accept(TokKind::Star)) return Multiplicity::unbounded();
        unsigned lo = parse_number();
        if (cur_.accept(TokKind::DotDot)) {
            if (cur_.accept(TokKind::Star)) return {lo, std::nullopt};
            return {lo, parse_number()};
        }
        return Multiplicity::exactly(lo);
    }

    unsigned parse_number() {
        Token t = cur_.expect(TokKind::Number, "number");
        return static_cast<unsigned>(std::stoul(t.text));
    }

    void parse_assoc() {
        cur_.expect_kw("association");
        AssocDecl a;
        if (cur_.accept_kw("composition"))
            a.kind = AssocKind::Composition;
        else if (cur_.accept_kw("aggregation"))
            a.kind = AssocKind::Aggregation;
        a.left_type = cur_.expect(TokKind::Ident, "type name").text;
        if (at_mult()) a.left_mult = parse_mult();
        if (cur_.accept(TokKind::LParen)) {
            a.left_role = cur_.expect(TokKind::Ident, "role name").text;
            cur_.expect(TokKind::RParen, "')'");
        }
        if (cur_.accept(TokKind::BidiArrow))
            a.navigability = Navigability::Bidirectional;
        else if (cur_.accept(TokKind::Arrow))
            a.navigability = Navigability::LeftToRight;
        else
            throw SyntaxError(cur_.peek().pos, "expected '->' or '<->', found '" +
                                                   cur_.peek().text + "'");
        if (cur_.accept(TokKind::LParen)) {
            a.right_role = cur_.expect(TokKind::Ident, "role name").text;
            cur_.expect(TokKind::RParen, "')'");
        }
        if (at_mult()) a.right_mult = parse_mult();
        a.right_type = cur_.expect(TokKind::Ident, "type name").text;
        cur_.expect(TokKind::Semi, "';'");
        cd_.associations.push_back(std::move(a));
    }

    // Attribute types naming a declared enum are enum-typed; everything else
    // is an opaque primitive token.  Class-typed attributes are rejected
    // later by the context conditions.
    void resolve_attr_types() {
        for (auto& c : cd_.classes)
            for (auto& a : c.attributes)
                a.type.kind = cd_.find_enum(a.type.name) ? AttrTypeKind::Enum
                                                         : AttrTypeKind::Primitive;
    }

    TokenCursor cur_;
    ClassDiagram cd_;
};

} // namespace detail

inline ClassDiagram parse_cd(const std::string& text) {
    return detail::CdParser(text).parse();
}

} // namespace semdiff

#endif
