#ifndef SEMDIFF_CANONICAL_HPP
#define SEMDIFF_CANONICAL_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "semdiff/om.hpp"

namespace semdiff {

// A renaming-invariant serialization identifying the isomorphism class of
// an object model.  Two models have equal canonical_text iff they are
// related by an object-id bijection preserving classes and slots.
struct CanonicalForm {
    std::string canonical_text;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

struct CanonWork {
    std::vector<std::string> ids;
    std::vector<std::string> node_text; // class + sorted non-object slots
    // object-valued slots as index pairs
    std::vector<std::vector<std::pair<std::string, int>>> out, in;
    std::vector<int> color;

    explicit CanonWork(const ObjectModel& om) {
        std::map<std::string, int> index;
        for (const auto& [id, cls] : om.objects) {
            index[id] = static_cast<int>(ids.size());
            ids.push_back(id);
        }
        std::size_t n = ids.size();
        node_text.resize(n);
        out.resize(n);
        in.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            node_text[i] = om.objects.at(ids[i]);
        std::vector<std::vector<std::string>> nonobj(n);
        for (const auto& s : om.slots) {
            int src = index.at(s.object);
            if (s.value.kind == SlotValue::Kind::Object) {
                int tgt = index.at(s.value.a);
                out[src].push_back({s.field, tgt});
                in[tgt].push_back({s.field, src});
            } else {
                nonobj[src].push_back(s.field + "=" + s.value.text());
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::sort(nonobj[i].begin(), nonobj[i].end());
            for (const auto& t : nonobj[i]) node_text[i] += "|" + t;
        }
        refine();
    }

    // Iterative refinement: color by (previous color key, multiset of
    // outgoing/incoming (field, neighbor color)) until stable.
    void refine() {
        std::size_t n = ids.size();
        std::vector<std::string> key(n);
        for (std::size_t i = 0; i < n; ++i) key[i] = node_text[i];
        std::size_t classes = assign_colors(key);
        for (;;) {
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::string> sig;
                for (const auto& [f, j] : out[i])
                    sig.push_back(">" + f + "#" + std::to_string(color[j]));
                for (const auto& [f, j] : in[i])
                    sig.push_back("<" + f + "#" + std::to_string(color[j]));
                std::sort(sig.begin(), sig.end());
                key[i] = std::to_string(color[i]);
                for (const auto& s : sig) key[i] += "|" + s;
            }
            std::size_t next = assign_colors(key);
            if (next == classes) break;
            classes = next;
        }
    }

    std::size_t assign_colors(const std::vector<std::string>& key) {
        std::vector<std::string> sorted = key;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        color.resize(key.size());
        for (std::size_t i = 0; i < key.size(); ++i)
            color[i] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), key[i]) -
                sorted.begin());
        return sorted.size();
    }

    std::string serialize(const std::vector<int>& order) const {
        std::size_t n = order.size();
        std::vector<int> pos(n);
        for (std::size_t p = 0; p < n; ++p) pos[order[p]] = static_cast<int>(p);
        std::string text;
        for (std::size_t p = 0; p < n; ++p)
            text += std::to_string(p) + ":" + node_text[order[p]] + "\n";
        std::vector<std::string> links;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [f, j] : out[i])
                links.push_back(std::to_string(pos[i]) + "-" + f + "->" +
                                std::to_string(pos[j]));
        std::sort(links.begin(), links.end());
        for (const auto& l : links) text += l + "\n";
        return text;
    }

    // Raw fingerprint used to collapse trivially automorphic candidates:
    // objects with identical outgoing and incoming slot structure (down to
    // concrete ids) are interchangeable.
    std::string fingerprint(int i) const {
        std::vector<std::string> parts;
        for (const auto& [f, j] : out[i])
            parts.push_back(">" + f + "#" + std::to_string(j == i ? -1 : j));
        for (const auto& [f, j] : in[i])
            parts.push_back("<" + f + "#" + std::to_string(j == i ? -1 : j));
        std::sort(parts.begin(), parts.end());
        std::string fp = node_text[i];
        for (const auto& p : parts) fp += "|" + p;
        return fp;
    }
};

inline void canon_search(const CanonWork& w, std::vector<int>& order,
                         std::vector<bool>& used, std::string& best,
                         bool& have_best) {
    std::size_t n = w.ids.size();
    if (order.size() == n) {
        std::string text = w.serialize(order);
        if (!have_best || text < best) {
            best = std::move(text);
            have_best = true;
        }
        return;
    }
    // Candidates: unused objects of the minimal remaining color, one per
    // interchangeability group.
    int min_color = -1;
    for (std::size_t i = 0; i < n; ++i)
        if (!used[i] && (min_color < 0 || w.color[i] < min_color))
            min_color = w.color[i];
    std::set<std::string> tried;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i] || w.color[i] != min_color) continue;
        if (!tried.insert(w.fingerprint(static_cast<int>(i))).second) continue;
        used[i] = true;
        order.push_back(static_cast<int>(i));
        canon_search(w, order, used, best, have_best);
        order.pop_back();
        used[i] = false;
    }
}

} // namespace detail

inline CanonicalForm canonicalize(const ObjectModel& om) {
    detail::CanonWork w(om);
    std::size_t n = w.ids.size();
    std::vector<int> order;
    std::vector<bool> used(n, false);
    std::string best;
    bool have_best = false;
    detail::canon_search(w, order, used, best, have_best);
    if (!have_best) best = ""; // empty model
    return {best};
}

} // namespace semdiff

#endif
