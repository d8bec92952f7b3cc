#ifndef SEMDIFF_WITNESS_HPP
#define SEMDIFF_WITNESS_HPP

#include <cstddef>

#include "semdiff/canonical.hpp"
#include "semdiff/evaluate.hpp"
#include "semdiff/om.hpp"

namespace semdiff {

// A diff witness: an object model in sem(left) \ sem(right).
struct Witness {
    ObjectModel om;
    CanonicalForm canonical;
    SatisfactionReport left_report;  // satisfied
    SatisfactionReport right_report; // not satisfied
};

enum class FilterKind { None, NNC, NNA, NNCA, Static };

struct DiffConfig {
    unsigned scope = 5;
    std::size_t max_witnesses = 20;
    FilterKind filter = FilterKind::None;
    bool abstract_attributes = false;
    bool strip_common = true;
};

} // namespace semdiff

#endif
