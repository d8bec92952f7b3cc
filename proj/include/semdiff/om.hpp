#ifndef SEMDIFF_OM_HPP
#define SEMDIFF_OM_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace semdiff {

// A slot value: a reference to another object, a concrete enum literal, or
// the per-type primitive placeholder.  Two objects never differ by primitive
// value, only by presence and type of the slot.
struct SlotValue {
    enum class Kind { Object, Enum, Primitive };
    Kind kind = Kind::Primitive;
    std::string a; // object id / enum name / primitive type
    std::string b; // enum literal

    static SlotValue object(std::string id) {
        return {Kind::Object, std::move(id), ""};
    }
    static SlotValue enum_lit(std::string en, std::string lit) {
        return {Kind::Enum, std::move(en), std::move(lit)};
    }
    static SlotValue primitive(std::string ty) {
        return {Kind::Primitive, std::move(ty), ""};
    }

    std::string text() const {
        switch (kind) {
        case Kind::Object: return a;
        case Kind::Enum: return a + "::" + b;
        case Kind::Primitive: return "<" + a + ">";
        }
        return "";
    }

    friend auto operator<=>(const SlotValue&, const SlotValue&) = default;
};

struct Slot {
    std::string object;
    std::string field;
    SlotValue value;

    friend auto operator<=>(const Slot&, const Slot&) = default;
};

// A finite object model: typed objects plus a set of slot triples.
struct ObjectModel {
    std::string name = "om";
    std::map<std::string, std::string> objects; // id -> class name
    std::set<Slot> slots;

    void add_object(const std::string& id, const std::string& cls) {
        objects[id] = cls;
    }
    void add_slot(const std::string& id, const std::string& field,
                  SlotValue v) {
        slots.insert({id, field, std::move(v)});
    }
    void link(const std::string& from, const std::string& role,
              const std::string& to) {
        add_slot(from, role, SlotValue::object(to));
    }

    std::vector<SlotValue> values(const std::string& id,
                                  const std::string& field) const {
        std::vector<SlotValue> out;
        // Kind::Object is the least SlotValue kind, so this probe sorts
        // before every value of the field.
        for (auto it = slots.lower_bound(
                 {id, field, {SlotValue::Kind::Object, "", ""}});
             it != slots.end() && it->object == id && it->field == field; ++it)
            out.push_back(it->value);
        return out;
    }

    std::size_t size() const { return objects.size(); }

    // Every ObjRef target must exist.
    bool structurally_valid() const {
        for (const auto& s : slots) {
            if (!objects.count(s.object)) return false;
            if (s.value.kind == SlotValue::Kind::Object &&
                !objects.count(s.value.a))
                return false;
        }
        return true;
    }

    friend bool operator==(const ObjectModel& x, const ObjectModel& y) {
        return x.objects == y.objects && x.slots == y.slots;
    }
};

} // namespace semdiff

#endif
