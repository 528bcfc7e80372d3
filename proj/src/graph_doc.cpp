#include "zeta/graph_doc.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace zeta {

using nlohmann::json;

namespace {

long long to_weight(const json& j, const std::string& id) {
    if (!j.is_number_integer())
        throw ParseError("weight for '" + id + "' must be an integer");
    long long w = j.get<long long>();
    if (w < 1) throw ParseError("weight for '" + id + "' must be >= 1");
    return w;
}

} // namespace

GraphDocument parse_graph_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("document is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document root must be an object");

    GraphDocument doc;
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw ParseError("missing or non-integer 'rank'");
    doc.rank = j["rank"].get<int>();
    if (doc.rank < 0) throw ParseError("'rank' must be >= 0");

    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("missing or non-array 'vertices'");
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex ids must be strings");
        doc.vertices.push_back(v.get<std::string>());
    }

    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("missing or non-array 'edges'");
    for (const auto& e : j["edges"]) {
        if (!e.is_object()) throw ParseError("edge records must be objects");
        GraphDocument::EdgeRecord rec;
        for (const char* key : {"id", "from", "to"}) {
            if (!e.contains(key) || !e[key].is_string())
                throw ParseError(std::string("edge record missing string '") + key + "'");
        }
        rec.id = e["id"].get<std::string>();
        rec.from = e["from"].get<std::string>();
        rec.to = e["to"].get<std::string>();
        if (e.contains("voltage")) {
            if (!e["voltage"].is_array())
                throw ParseError("voltage of edge '" + rec.id + "' must be an array");
            for (const auto& x : e["voltage"]) {
                if (!x.is_number_integer())
                    throw ParseError("voltage of edge '" + rec.id + "' must be integers");
                rec.voltage.push_back(x.get<long long>());
            }
        }
        doc.edges.push_back(std::move(rec));
    }

    if (j.contains("vertex_weights")) {
        if (!j["vertex_weights"].is_object()) throw ParseError("'vertex_weights' must be an object");
        for (const auto& [id, w] : j["vertex_weights"].items())
            doc.vertex_weights[id] = to_weight(w, id);
    }
    if (j.contains("edge_weights")) {
        if (!j["edge_weights"].is_object()) throw ParseError("'edge_weights' must be an object");
        for (const auto& [id, w] : j["edge_weights"].items())
            doc.edge_weights[id] = to_weight(w, id);
    }
    return doc;
}

std::string document_to_json(const GraphDocument& doc, int indent) {
    json j;
    j["rank"] = doc.rank;
    j["vertices"] = doc.vertices;
    j["edges"] = json::array();
    for (const auto& e : doc.edges) {
        json rec;
        rec["id"] = e.id;
        rec["from"] = e.from;
        rec["to"] = e.to;
        if (doc.rank > 0) rec["voltage"] = e.voltage;
        j["edges"].push_back(rec);
    }
    if (!doc.vertex_weights.empty()) j["vertex_weights"] = doc.vertex_weights;
    if (!doc.edge_weights.empty()) j["edge_weights"] = doc.edge_weights;
    return j.dump(indent);
}

VoltageGraph document_to_voltage_graph(const GraphDocument& doc) {
    std::map<std::string, int> vertex_index;
    for (const auto& v : doc.vertices) {
        if (!vertex_index.emplace(v, static_cast<int>(vertex_index.size())).second)
            throw ParseError("duplicate vertex id '" + v + "'");
    }

    VoltageGraph vg;
    vg.base.vertex_count = static_cast<int>(doc.vertices.size());
    vg.rank = doc.rank;

    std::set<std::string> edge_ids;
    for (const auto& e : doc.edges) {
        if (!edge_ids.insert(e.id).second) throw ParseError("duplicate edge id '" + e.id + "'");
        auto from = vertex_index.find(e.from);
        auto to = vertex_index.find(e.to);
        if (from == vertex_index.end())
            throw ParseError("edge '" + e.id + "' references unknown vertex '" + e.from + "'");
        if (to == vertex_index.end())
            throw ParseError("edge '" + e.id + "' references unknown vertex '" + e.to + "'");
        VoltageVector v = e.voltage;
        if (doc.rank == 0 && v.empty()) v = {};
        if (static_cast<int>(v.size()) != doc.rank)
            throw ParseError("edge '" + e.id + "' has voltage length " +
                             std::to_string(v.size()) + ", expected " + std::to_string(doc.rank));
        add_geometric_edge(vg, from->second, to->second, std::move(v));
    }

    for (const auto& [id, w] : doc.vertex_weights) {
        (void)w;
        if (!vertex_index.count(id)) throw ParseError("weight references unknown vertex '" + id + "'");
    }
    for (const auto& [id, w] : doc.edge_weights) {
        (void)w;
        if (!edge_ids.count(id)) throw ParseError("weight references unknown edge '" + id + "'");
    }
    return vg;
}

GraphDocument graph_to_document(const VoltageGraph& vg) {
    GraphDocument doc;
    doc.rank = vg.rank;
    for (int v = 0; v < vg.base.vertex_count; ++v) doc.vertices.push_back("v" + std::to_string(v));
    for (int e = 0; e < vg.base.edge_count(); ++e) {
        if (vg.base.edge_reversal[e] < e) continue; // emit one orientation per pair
        GraphDocument::EdgeRecord rec;
        rec.id = "e" + std::to_string(e / 2);
        rec.from = "v" + std::to_string(vg.base.edge_origin[e]);
        rec.to = "v" + std::to_string(vg.base.edge_terminus[e]);
        rec.voltage = vg.voltage[e];
        doc.edges.push_back(std::move(rec));
    }
    return doc;
}

std::vector<long long> document_vertex_orders(const GraphDocument& doc) {
    std::vector<long long> orders;
    for (const auto& v : doc.vertices) {
        auto it = doc.vertex_weights.find(v);
        orders.push_back(it == doc.vertex_weights.end() ? 1 : it->second);
    }
    return orders;
}

std::vector<long long> document_edge_orders(const GraphDocument& doc) {
    std::vector<long long> orders;
    for (const auto& e : doc.edges) {
        auto it = doc.edge_weights.find(e.id);
        orders.push_back(it == doc.edge_weights.end() ? 1 : it->second);
    }
    return orders;
}

std::string document_digest(const GraphDocument& doc) {
    std::string canon = document_to_json(doc, -1);
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

} // namespace zeta
