#include "matkit/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace matkit {

using nlohmann::json;

std::string matroid_to_json(const Matroid& m, const std::string& name) {
    json doc;
    doc["name"] = name;
    doc["ground"] = m.ground().labels();
    doc["rank"] = m.rank();
    std::vector<std::vector<std::string>> bases;
    for (Mask b : m.bases()) {
        auto labels = m.ground().labels_of(b);
        std::sort(labels.begin(), labels.end());
        bases.push_back(std::move(labels));
    }
    std::sort(bases.begin(), bases.end());
    doc["bases"] = bases;
    return doc.dump();
}

Matroid matroid_from_json(const std::string& text, std::string* name_out) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw BadParameters(std::string("invalid matroid JSON: ") + ex.what());
    }
    if (!doc.contains("ground") || !doc.contains("bases"))
        throw BadParameters("matroid document needs 'ground' and 'bases'");
    if (name_out && doc.contains("name")) *name_out = doc["name"].get<std::string>();

    GroundSet ground(doc["ground"].get<std::vector<std::string>>());
    std::vector<Mask> bases;
    for (const auto& b : doc["bases"])
        bases.push_back(ground.mask_of(b.get<std::vector<std::string>>()));

    Matroid m(ground, std::move(bases));  // validates the axioms
    if (doc.contains("rank") && doc["rank"].get<int>() != m.rank())
        throw InvalidMatroid("declared rank disagrees with the basis family");
    return m;
}

std::string matrix_to_json(const MatrixRep& a) {
    json doc;
    doc["q"] = a.q;
    doc["rows"] = a.rows;
    doc["columns"] = a.columns;
    doc["entries"] = a.entries;
    return doc.dump();
}

MatrixRep matrix_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw BadParameters(std::string("invalid matrix JSON: ") + ex.what());
    }
    MatrixRep a;
    a.q = doc.at("q").get<int>();
    a.rows = doc.at("rows").get<int>();
    a.columns = doc.at("columns").get<std::vector<std::string>>();
    a.entries = doc.at("entries").get<std::vector<std::vector<std::uint8_t>>>();
    validate_matrix(a);
    return a;
}

PoolSpec pool_spec_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw BadSpec(std::string("invalid pool spec JSON: ") + ex.what());
    }
    PoolSpec spec;
    if (!doc.contains("sources") || !doc["sources"].is_array())
        throw BadSpec("pool spec needs a 'sources' array");
    for (const auto& s : doc["sources"]) {
        PoolSource src;
        const std::string kind = s.at("kind").get<std::string>();
        if (kind == "catalog") {
            src.kind = PoolSource::Kind::catalog;
        } else if (kind == "pg") {
            src.kind = PoolSource::Kind::pg;
            src.geometry = s.at("geometry").get<std::string>();
            if (s.contains("min_size")) src.min_size = s["min_size"].get<int>();
            if (s.contains("max_size")) src.max_size = s["max_size"].get<int>();
        } else if (kind == "relaxations") {
            src.kind = PoolSource::Kind::relaxations;
            if (s.contains("of"))
                src.of = s["of"].get<std::vector<std::string>>();
            else
                src.of = {"catalog"};
        } else if (kind == "gpc") {
            src.kind = PoolSource::Kind::gpc;
        } else if (kind == "extensions") {
            src.kind = PoolSource::Kind::extensions;
        } else {
            throw BadSpec("unknown pool source kind: " + kind);
        }
        spec.sources.push_back(std::move(src));
    }
    if (doc.contains("filters")) {
        const auto& f = doc["filters"];
        if (f.contains("simple")) spec.filter.simple = f["simple"].get<bool>();
        if (f.contains("three_connected"))
            spec.filter.three_connected = f["three_connected"].get<bool>();
        if (f.contains("min_size")) spec.filter.min_size = f["min_size"].get<int>();
        if (f.contains("max_size")) spec.filter.max_size = f["max_size"].get<int>();
        if (f.contains("modular_line_points") && !f["modular_line_points"].is_null())
            spec.filter.modular_line_points = f["modular_line_points"].get<int>();
    }
    if (doc.contains("max_candidates_per_source"))
        spec.max_candidates_per_source =
            doc["max_candidates_per_source"].get<std::uint64_t>();
    if (doc.contains("seed")) spec.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("max_results"))
        spec.max_results = doc["max_results"].get<std::size_t>();
    return spec;
}

std::string pool_entry_to_json(const PoolEntry& e) {
    json doc = json::parse(matroid_to_json(e.matroid, e.provenance));
    doc["provenance"] = e.provenance;
    return doc.dump();
}

std::string report_to_json(const VerificationReport& r) {
    json doc;
    doc["claim"] = r.claim;
    doc["instance"] = r.instance;
    doc["verdict"] = to_string(r.verdict);
    doc["witness"] = r.witness;
    doc["ms"] = r.ms;
    return doc.dump();
}

}  // namespace matkit
