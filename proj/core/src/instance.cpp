#include "seatarrange/instance.hpp"

#include <string>

namespace seat {

Instance::Instance(SeatGraph g, PreferenceProfile p)
    : graph(std::move(g)), profile(std::move(p)) {
    if (graph.vertex_count() != profile.agent_count()) {
        throw ArgumentError("seat count " + std::to_string(graph.vertex_count()) +
                            " != agent count " + std::to_string(profile.agent_count()));
    }
}

}  // namespace seat
