#pragma once

#include "zeta/graph.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeta {

// Raised on malformed input documents; the message carries a location
// (byte offset or the offending key/id).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The graph input document. JSON with keys:
//   rank      integer >= 0
//   vertices  list of string ids
//   edges     list of {id, from, to, voltage?}; voltage is an integer array
//             of length rank (may be omitted when rank = 0)
//   vertex_weights, edge_weights
//             optional maps id -> stabilizer order (>= 1), consumed by the
//             weighted Euler characteristic
// Each record is one geometric edge; both orientations are materialized.
struct GraphDocument {
    struct EdgeRecord {
        std::string id;
        std::string from;
        std::string to;
        VoltageVector voltage;
    };

    int rank = 0;
    std::vector<std::string> vertices;
    std::vector<EdgeRecord> edges;
    std::map<std::string, long long> vertex_weights;
    std::map<std::string, long long> edge_weights;
};

GraphDocument parse_graph_document(const std::string& text);

std::string document_to_json(const GraphDocument& doc, int indent = 2);

// Semantic validation plus conversion; throws ParseError naming the
// offending element.
VoltageGraph document_to_voltage_graph(const GraphDocument& doc);

// Inverse conversion with synthesized names (v0, v1, ... / e0, e1, ...).
GraphDocument graph_to_document(const VoltageGraph& vg);

// Stabilizer orders aligned with document order; absent ids default to 1.
std::vector<long long> document_vertex_orders(const GraphDocument& doc);
std::vector<long long> document_edge_orders(const GraphDocument& doc);

// FNV-1a hash of the canonical serialization, as a hex string.
std::string document_digest(const GraphDocument& doc);

} // namespace zeta
