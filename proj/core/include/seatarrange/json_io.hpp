#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "seatarrange/arrangement.hpp"
#include "seatarrange/instance.hpp"
#include "seatarrange/rational.hpp"

namespace seat::json_io {

// Optional sidecar data carried alongside an instance.
struct Metadata {
    std::optional<std::string> name;
    std::optional<std::string> problem;  // "mwa" | "mua" | "sta" | "efa"
    std::optional<int> k;
    std::optional<Rational> target;
    std::optional<Arrangement> start_arrangement;

    [[nodiscard]] bool empty() const {
        return !name && !problem && !k && !target && !start_arrangement;
    }
};

struct InstanceDocument {
    Instance instance;
    std::optional<Arrangement> arrangement;
    Metadata metadata;
};

// Throws SchemaError with a field-precise message on any violation; the
// document must carry "format": 1.
InstanceDocument load_instance(std::istream& in);
InstanceDocument load_instance(const std::string& text);
InstanceDocument load_instance_file(const std::string& path);

// Canonical serialization: fixed key order, two-space indent, integral
// preference values as numbers, non-integral ones as "p/q" strings, trailing
// newline. load(save(doc)) reproduces doc exactly.
std::string save_instance(const InstanceDocument& doc);
void save_instance_file(const InstanceDocument& doc, const std::string& path);

}  // namespace seat::json_io
