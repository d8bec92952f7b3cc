#ifndef SEMDIFF_OM_TEXT_HPP
#define SEMDIFF_OM_TEXT_HPP

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "semdiff/lexer.hpp"
#include "semdiff/om.hpp"

namespace semdiff {

// Textual object-diagram format:
//
//   objectdiagram NAME {
//     id : ClassName { attr = VALUE; ... };
//     link ROLE idA -> idB;
//   }
//
// VALUE is <TypeName> for primitive placeholders or Enum::literal.
// Object-valued slots are rendered as link lines.
inline std::string render_od(const ObjectModel& om) {
    std::ostringstream os;
    os << "objectdiagram " << om.name << " {";
    if (om.objects.empty() && om.slots.empty()) {
        os << " }\n";
        return os.str();
    }
    os << "\n";
    for (const auto& [id, cls] : om.objects) {
        os << "  " << id << " : " << cls;
        std::string attrs;
        for (const auto& s : om.slots)
            if (s.object == id && s.value.kind != SlotValue::Kind::Object)
                attrs += " " + s.field + " = " + s.value.text() + ";";
        if (!attrs.empty()) os << " {" << attrs << " }";
        os << ";\n";
    }
    for (const auto& s : om.slots)
        if (s.value.kind == SlotValue::Kind::Object)
            os << "  link " << s.field << " " << s.object << " -> " << s.value.a
               << ";\n";
    os << "}\n";
    return os.str();
}

inline ObjectModel parse_od(const std::string& text) {
    TokenCursor cur(tokenize(text));
    ObjectModel om;
    cur.expect_kw("objectdiagram");
    om.name = cur.expect(TokKind::Ident, "diagram name").text;
    cur.expect(TokKind::LBrace, "'{'");
    while (!cur.at(TokKind::RBrace)) {
        if (cur.accept_kw("link")) {
            std::string role = cur.expect(TokKind::Ident, "role name").text;
            std::string from = cur.expect(TokKind::Ident, "object id").text;
            cur.expect(TokKind::Arrow, "'->'");
            std::string to = cur.expect(TokKind::Ident, "object id").text;
            cur.expect(TokKind::Semi, "';'");
            om.link(from, role, to);
            continue;
        }
        std::string id = cur.expect(TokKind::Ident, "object id").text;
        cur.expect(TokKind::Colon, "':'");
        std::string cls = cur.expect(TokKind::Ident, "class name").text;
        om.add_object(id, cls);
        if (cur.accept(TokKind::LBrace)) {
            while (!cur.at(TokKind::RBrace)) {
                std::string field =
                    cur.expect(TokKind::Ident, "attribute name").text;
                cur.expect(TokKind::Equals, "'='");
                if (cur.accept(TokKind::Less)) {
                    std::string ty =
                        cur.expect(TokKind::Ident, "type name").text;
                    cur.expect(TokKind::Greater, "'>'");
                    om.add_slot(id, field, SlotValue::primitive(ty));
                } else {
                    std::string en =
                        cur.expect(TokKind::Ident, "enum name").text;
                    cur.expect(TokKind::ColonColon, "'::'");
                    std::string lit =
                        cur.expect(TokKind::Ident, "enum literal").text;
                    om.add_slot(id, field, SlotValue::enum_lit(en, lit));
                }
                cur.expect(TokKind::Semi, "';'");
            }
            cur.expect(TokKind::RBrace, "'}'");
        }
        cur.expect(TokKind::Semi, "';'");
    }
    cur.expect(TokKind::RBrace, "'}'");
    cur.expect(TokKind::End, "end of input");
    if (!om.structurally_valid())
        throw SyntaxError({1, 1}, "object diagram references undeclared "
                                  "object ids");
    return om;
}

// JSON mirror of the OD structure.
inline nlohmann::json om_to_json(const ObjectModel& om) {
    nlohmann::json objects = nlohmann::json::array();
    for (const auto& [id, cls] : om.objects)
        objects.push_back({{"id", id}, {"class", cls}});
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& s : om.slots) {
        nlohmann::json v;
        switch (s.value.kind) {
        case SlotValue::Kind::Object:
            v = {{"kind", "object"}, {"target", s.value.a}};
            break;
        case SlotValue::Kind::Enum:
            v = {{"kind", "enum"}, {"enum", s.value.a}, {"literal", s.value.b}};
            break;
        case SlotValue::Kind::Primitive:
            v = {{"kind", "primitive"}, {"type", s.value.a}};
            break;
        }
        slots.push_back(
            {{"object", s.object}, {"field", s.field}, {"value", v}});
    }
    return {{"name", om.name}, {"objects", objects}, {"slots", slots}};
}

inline ObjectModel om_from_json(const nlohmann::json& j) {
    ObjectModel om;
    om.name = j.value("name", "om");
    for (const auto& o : j.at("objects"))
        om.add_object(o.at("id"), o.at("class"));
    for (const auto& s : j.at("slots")) {
        const auto& v = s.at("value");
        std::string kind = v.at("kind");
        SlotValue sv;
        if (kind == "object")
            sv = SlotValue::object(v.at("target"));
        else if (kind == "enum")
            sv = SlotValue::enum_lit(v.at("enum"), v.at("literal"));
        else
            sv = SlotValue::primitive(v.at("type"));
        om.add_slot(s.at("object"), s.at("field"), sv);
    }
    return om;
}

} // namespace semdiff

#endif
