#ifndef CGK_DIAGRAM_JSON_HPP
#define CGK_DIAGRAM_JSON_HPP

#include <string>

#include <json.hpp>

#include "cgk/diagram.hpp"

namespace cgk {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using json = nlohmann::ordered_json;

inline json provenance_to_json(const Provenance& m) {
    json j = json::object();
    if (!m.builder.empty()) j["builder"] = m.builder;
    if (!m.params.empty()) {
        json p = json::array();
        for (const auto& [k, v] : m.params) p.push_back(json::array({k, v}));
        j["params"] = p;
    }
    return j;
}

inline Provenance provenance_from_json(const json& j) {
    Provenance m;
    if (j.contains("builder")) m.builder = j.at("builder").get<std::string>();
    if (j.contains("params"))
        for (const auto& p : j.at("params")) m.params.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    return m;
}

inline json diagram_to_json(const Diagram& d) {
    json j;
    j["n"] = d.n;
    json edges = json::array();
    for (size_t ei = 0; ei < d.walks.size(); ++ei) {
        Edge e = edge_of_index(static_cast<int>(ei), d.n);
        json walk = json::array();
        for (const Passage& p : d.walks[ei]) walk.push_back(json::array({p.crossing, std::string(1, role_char(p.role))}));
        edges.push_back(json{{"u", e.u}, {"v", e.v}, {"walk", walk}});
    }
    j["edges"] = edges;
    json crossings = json::array();
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        const Crossing& x = d.crossings[c];
        crossings.push_back(json{{"id", static_cast<int>(c)},
                                 {"over", json::array({x.over_edge.u, x.over_edge.v})},
                                 {"under", json::array({x.under_edge.u, x.under_edge.v})},
                                 {"sign", x.sign}});
    }
    j["crossings"] = crossings;
    if (!d.meta.builder.empty() || !d.meta.params.empty()) j["meta"] = provenance_to_json(d.meta);
    return j;
}

inline std::string serialize(const Diagram& d) { return diagram_to_json(d).dump(2) + "\n"; }

inline Diagram diagram_from_json(const json& j) {
    auto fail = [](const std::string& m) -> void { throw parse_error("diagram: " + m); };
    if (!j.is_object()) fail("document must be an object");
    if (!j.contains("n") || !j.at("n").is_number_integer()) fail("missing integer field 'n'");
    const int n = j.at("n").get<int>();
    if (n < 3) fail("'n' must be >= 3");
    Diagram d = empty_diagram(n);

    if (!j.contains("crossings") || !j.at("crossings").is_array()) fail("missing array field 'crossings'");
    d.crossings.resize(j.at("crossings").size());
    std::vector<bool> seen(d.crossings.size(), false);
    for (const auto& cj : j.at("crossings")) {
        if (!cj.contains("id") || !cj.contains("over") || !cj.contains("under") || !cj.contains("sign"))
            fail("crossing entry needs fields id, over, under, sign");
        const long long id = cj.at("id").get<long long>();
        if (id < 0 || id >= static_cast<long long>(d.crossings.size()))
            fail("crossing id " + std::to_string(id) + " out of dense range [0," +
                 std::to_string(d.crossings.size()) + ")");
        if (seen[id]) fail("duplicate crossing id " + std::to_string(id));
        seen[id] = true;
        auto rd_edge = [&](const json& ej, const char* fname) {
            if (!ej.is_array() || ej.size() != 2) fail(std::string("crossing ") + std::to_string(id) + ": '" + fname + "' must be [u,v]");
            int u = ej.at(0).get<int>(), v = ej.at(1).get<int>();
            if (u < 1 || v < 1 || u == v || std::max(u, v) > n)
                fail("crossing " + std::to_string(id) + ": edge endpoints out of range");
            return make_edge(u, v);
        };
        const int sign = cj.at("sign").get<int>();
        if (sign != 1 && sign != -1) fail("crossing " + std::to_string(id) + ": sign must be 1 or -1");
        d.crossings[id] = Crossing{rd_edge(cj.at("over"), "over"), rd_edge(cj.at("under"), "under"), sign};
    }

    if (!j.contains("edges") || !j.at("edges").is_array()) fail("missing array field 'edges'");
    std::vector<bool> edge_seen(d.walks.size(), false);
    for (const auto& ej : j.at("edges")) {
        if (!ej.contains("u") || !ej.contains("v") || !ej.contains("walk")) fail("edge entry needs fields u, v, walk");
        int u = ej.at("u").get<int>(), v = ej.at("v").get<int>();
        if (u < 1 || v <= u || v > n) fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of K_n");
        int ei = edge_index(Edge{u, v}, n);
        if (edge_seen[ei]) fail("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        edge_seen[ei] = true;
        for (const auto& pj : ej.at("walk")) {
            if (!pj.is_array() || pj.size() != 2) fail("walk entries must be [crossing_id, \"O\"|\"U\"]");
            const long long cid = pj.at(0).get<long long>();
            const std::string role = pj.at(1).get<std::string>();
            if (cid < 0 || cid >= static_cast<long long>(d.crossings.size()))
                fail("walk of edge {" + std::to_string(u) + "," + std::to_string(v) + "} references unknown crossing " +
                     std::to_string(cid));
            if (role != "O" && role != "U") fail("walk role must be \"O\" or \"U\", got '" + role + "'");
            d.walks[ei].push_back(Passage{static_cast<int>(cid), role == "O" ? Role::over : Role::under});
        }
    }
    for (size_t ei = 0; ei < d.walks.size(); ++ei)
        if (!edge_seen[ei]) {
            Edge e = edge_of_index(static_cast<int>(ei), n);
            fail("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} missing from document");
        }

    if (j.contains("meta")) d.meta = provenance_from_json(j.at("meta"));
    return d;
}

inline Diagram deserialize(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("diagram: ") + e.what());
    }
    try {
        return diagram_from_json(j);
    } catch (const parse_error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("diagram: malformed field: ") + e.what());
    }
}

} // namespace cgk

#endif
