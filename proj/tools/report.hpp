#pragma once

#include <openssl/evp.h>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <z2k/z2k.hpp>

namespace z2k::cli {

using json = nlohmann::json;

/// Exit codes shared by every command.
enum Exit : int {
    kOk = 0,
    kViolated = 1,
    kInputError = 2,
    kNotInImage = 3,
    kResourceCap = 4,
};

inline std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

/// Skeleton ReportDocument. Keys serialize in sorted order, so identical
/// inputs give identical bytes.
inline json make_report(const std::string& command, const json& input) {
    json doc;
    doc["command"] = command;
    doc["input_digest"] = sha256_hex(input.dump());
    doc["values"] = json::object();
    doc["witnesses"] = json::array();
    doc["notes"] = json::array();
    return doc;
}

inline std::string join(const std::vector<int>& v, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::vector<int> parse_vector(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw Error("not an integer: '" + item + "'");
        }
        if (pos != item.size()) throw Error("not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error("empty vector");
    return out;
}

inline json type_json(const MixedGroupType& t) {
    json blocks = json::array();
    for (const auto& b : t.blocks()) blocks.push_back({{"modulus", b.modulus}, {"length", b.length}});
    return blocks;
}

/// Parses a CodeSpecDocument:
///   {"blocks": [{"modulus": M, "length": L}, ...], "generators": [[...], ...]}
inline GeneratorSpec parse_spec(const json& doc) {
    if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array())
        throw Error("spec needs a \"blocks\" array");
    std::vector<Block> blocks;
    for (const auto& b : doc["blocks"]) {
        if (!b.is_object() || !b.contains("modulus") || !b.contains("length") || !b["modulus"].is_number_integer() ||
            !b["length"].is_number_integer())
            throw Error("each block needs integer \"modulus\" and \"length\"");
        blocks.push_back(Block{b["modulus"].get<int>(), b["length"].get<int>()});
    }
    GeneratorSpec spec{MixedGroupType(std::move(blocks)), {}};
    if (doc.contains("generators")) {
        if (!doc["generators"].is_array()) throw Error("\"generators\" must be an array");
        for (const auto& g : doc["generators"]) {
            if (!g.is_array()) throw Error("each generator must be an array of integers");
            MixedVector v;
            for (const auto& c : g) {
                if (!c.is_number_integer()) throw Error("generator coordinates must be integers");
                v.push_back(c.get<int>());
            }
            spec.generators.push_back(std::move(v));
        }
    }
    spec.validate();
    return spec;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
}

inline json spec_json(const GeneratorSpec& spec) {
    return {{"blocks", type_json(spec.type)}, {"generators", spec.generators}};
}

inline json minimization_json(const TypeMinimization& m) {
    json blocks = json::array();
    for (const auto& b : m.blocks)
        blocks.push_back({{"declared_modulus", b.declared_modulus},
                          {"reduced_modulus", b.reduced_modulus},
                          {"scale", b.scale},
                          {"evenness_restored", b.evenness_restored}});
    return {{"type", m.type.to_string()}, {"blocks", blocks}};
}

inline json perfectness_json(const PerfectnessReport& r) {
    json j = {{"length", r.length},
              {"codewords", r.codewords},
              {"sphere_packing_holds", r.sphere_packing_holds},
              {"covering_radius_checked", r.covering_radius_checked},
              {"verdict", r.verdict}};
    j["min_distance"] = r.min_distance ? json(*r.min_distance) : json(nullptr);
    j["covering_verdict"] = r.covering_verdict ? json(*r.covering_verdict) : json(nullptr);
    return j;
}

inline json neighbors_json(const NeighborScan& s) {
    json within = json::array();
    for (const auto& w : s.within_one) within.push_back(w.to_string());
    return {{"word", s.word.to_string()}, {"within_one", within}};
}

inline json obstruction_json(const ObstructionReport& r) {
    json j = {{"minimized_type", r.minimized_type.to_string()},
              {"block_index", r.block_index + 1},
              {"modulus", r.modulus},
              {"coordinate_is_full", r.coordinate_is_full},
              {"min_weight", r.min_weight},
              {"x", neighbors_json(r.x)},
              {"found", r.found},
              {"reasons", r.reasons}};
    if (r.u) j["u"] = neighbors_json(*r.u);
    if (r.v) j["v"] = neighbors_json(*r.v);
    if (r.u_block_neighbor) j["u_block_neighbor"] = r.u_block_neighbor->to_string();
    if (r.v_block_neighbor) j["v_block_neighbor"] = r.v_block_neighbor->to_string();
    if (r.block_neighbor_distance) j["block_neighbor_distance"] = *r.block_neighbor_distance;
    return j;
}

}  // namespace z2k::cli
