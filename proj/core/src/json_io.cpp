#include "seatarrange/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seatarrange/errors.hpp"

namespace seat::json_io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
    return *it;
}

int as_int(const json& value, const std::string& where) {
    if (!value.is_number_integer()) fail(where, "expected an integer");
    const auto wide = value.get<std::int64_t>();
    if (wide < INT32_MIN || wide > INT32_MAX) fail(where, "integer out of range");
    return static_cast<int>(wide);
}

Rational as_rational(const json& value, const std::string& where) {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_string()) {
        try {
            return Rational::parse(value.get<std::string>());
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected an integer or a \"p/q\" string");
}

Arrangement as_arrangement(const json& value, int n, const std::string& where) {
    if (!value.is_array() || static_cast<int>(value.size()) != n) {
        fail(where, "expected an array of length " + std::to_string(n));
    }
    std::vector<int> seat_of;
    seat_of.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        seat_of.push_back(as_int(value[i], where + "[" + std::to_string(i) + "]"));
    }
    try {
        return Arrangement(std::move(seat_of));
    } catch (const Error& e) {
        fail(where, e.what());
    }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) fail(where, "unknown key '" + key + "'");
    }
}

InstanceDocument from_json(const json& doc) {
    if (!doc.is_object()) fail("document", "expected a JSON object");
    reject_unknown_keys(doc, {"format", "agents", "preferences", "seat_graph", "arrangement",
                              "metadata"},
                        "document");
    if (as_int(require(doc, "format", "document"), "format") != 1) {
        fail("format", "unsupported document format; expected 1");
    }
    const int n = as_int(require(doc, "agents", "document"), "agents");
    if (n < 0) fail("agents", "agent count must be non-negative");

    const json& prefs = require(doc, "preferences", "document");
    if (!prefs.is_array() || static_cast<int>(prefs.size()) != n) {
        fail("preferences", "expected " + std::to_string(n) + " rows");
    }
    PreferenceProfile profile(n);
    for (int p = 0; p < n; ++p) {
        const json& row = prefs[static_cast<std::size_t>(p)];
        const std::string row_where = "preferences[" + std::to_string(p) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            fail(row_where, "expected " + std::to_string(n) + " entries");
        }
        for (int q = 0; q < n; ++q) {
            const std::string cell = row_where + "[" + std::to_string(q) + "]";
            const Rational value = as_rational(row[static_cast<std::size_t>(q)], cell);
            if (p == q) {
                if (value != Rational(0)) fail(cell, "diagonal entries must be 0");
                continue;
            }
            profile.set_value(p, q, value);
        }
    }

    const json& sg = require(doc, "seat_graph", "document");
    if (!sg.is_object()) fail("seat_graph", "expected an object");
    reject_unknown_keys(sg, {"vertices", "edges"}, "seat_graph");
    const int vertices = as_int(require(sg, "vertices", "seat_graph"), "seat_graph.vertices");
    if (vertices != n) {
        fail("seat_graph.vertices", "vertex count must equal the agent count " +
                                        std::to_string(n));
    }
    const json& edges_json = require(sg, "edges", "seat_graph");
    if (!edges_json.is_array()) fail("seat_graph.edges", "expected an array");
    std::vector<Edge> edges;
    edges.reserve(edges_json.size());
    for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const json& e = edges_json[i];
        const std::string where = "seat_graph.edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2) fail(where, "expected a [u, v] pair");
        edges.emplace_back(as_int(e[0], where + "[0]"), as_int(e[1], where + "[1]"));
    }

    InstanceDocument result;
    try {
        result.instance = Instance(SeatGraph(vertices, std::move(edges)), std::move(profile));
    } catch (const Error& e) {
        fail("seat_graph", e.what());
    }

    if (const auto it = doc.find("arrangement"); it != doc.end()) {
        result.arrangement = as_arrangement(*it, n, "arrangement");
    }

    if (const auto it = doc.find("metadata"); it != doc.end()) {
        const json& meta = *it;
        if (!meta.is_object()) fail("metadata", "expected an object");
        reject_unknown_keys(meta, {"name", "problem", "k", "target", "start_arrangement"},
                            "metadata");
        if (const auto f = meta.find("name"); f != meta.end()) {
            if (!f->is_string()) fail("metadata.name", "expected a string");
            result.metadata.name = f->get<std::string>();
        }
        if (const auto f = meta.find("problem"); f != meta.end()) {
            if (!f->is_string()) fail("metadata.problem", "expected a string");
            const auto problem = f->get<std::string>();
            if (problem != "mwa" && problem != "mua" && problem != "sta" && problem != "efa") {
                fail("metadata.problem", "expected one of mwa, mua, sta, efa");
            }
            result.metadata.problem = problem;
        }
        if (const auto f = meta.find("k"); f != meta.end()) {
            result.metadata.k = as_int(*f, "metadata.k");
        }
        if (const auto f = meta.find("target"); f != meta.end()) {
            result.metadata.target = as_rational(*f, "metadata.target");
        }
        if (const auto f = meta.find("start_arrangement"); f != meta.end()) {
            result.metadata.start_arrangement =
                as_arrangement(*f, n, "metadata.start_arrangement");
        }
    }
    return result;
}

ordered_json rational_to_json(const Rational& value) {
    if (value.is_integer()) return ordered_json(value.num());
    return ordered_json(value.to_string());
}

ordered_json arrangement_to_json(const Arrangement& arrangement) {
    return ordered_json(arrangement.seat_of());
}

}  // namespace

InstanceDocument load_instance(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("parse error: ") + e.what());
    }
    return from_json(doc);
}

InstanceDocument load_instance(const std::string& text) {
    std::istringstream in(text);
    return load_instance(in);
}

InstanceDocument load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    return load_instance(in);
}

std::string save_instance(const InstanceDocument& doc) {
    const int n = doc.instance.size();
    ordered_json out;
    out["format"] = 1;
    out["agents"] = n;
    ordered_json prefs = ordered_json::array();
    for (int p = 0; p < n; ++p) {
        ordered_json row = ordered_json::array();
        for (int q = 0; q < n; ++q) {
            row.push_back(p == q ? ordered_json(0)
                                 : rational_to_json(doc.instance.profile.value(p, q)));
        }
        prefs.push_back(std::move(row));
    }
    out["preferences"] = std::move(prefs);
    ordered_json sg;
    sg["vertices"] = n;
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : doc.instance.graph.edges()) {
        edges.push_back(ordered_json::array({u, v}));
    }
    sg["edges"] = std::move(edges);
    out["seat_graph"] = std::move(sg);
    if (doc.arrangement) out["arrangement"] = arrangement_to_json(*doc.arrangement);
    if (!doc.metadata.empty()) {
        ordered_json meta;
        if (doc.metadata.name) meta["name"] = *doc.metadata.name;
        if (doc.metadata.problem) meta["problem"] = *doc.metadata.problem;
        if (doc.metadata.k) meta["k"] = *doc.metadata.k;
        if (doc.metadata.target) meta["target"] = rational_to_json(*doc.metadata.target);
        if (doc.metadata.start_arrangement) {
            meta["start_arrangement"] = arrangement_to_json(*doc.metadata.start_arrangement);
        }
        out["metadata"] = std::move(meta);
    }
    return out.dump(2) + "\n";
}

void save_instance_file(const InstanceDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw SchemaError("cannot open file for writing: " + path);
    out << save_instance(doc);
    if (!out) throw SchemaError("write failed: " + path);
}

}  // namespace seat::json_io
