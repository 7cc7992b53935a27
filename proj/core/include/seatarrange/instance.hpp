#pragma once

#include "seatarrange/preferences.hpp"
#include "seatarrange/seat_graph.hpp"

namespace seat {

// A seat graph plus a preference profile of matching cardinality.
struct Instance {
    SeatGraph graph;
    PreferenceProfile profile;

    Instance() = default;
    Instance(SeatGraph g, PreferenceProfile p);

    [[nodiscard]] int size() const { return graph.vertex_count(); }
};

}  // namespace seat
