#include "kripkit/frame_io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace kripkit {

using nlohmann::json;

std::string FrameDocument::world_name(int w) const {
    if (!world_names.empty()) return world_names.at(static_cast<std::size_t>(w));
    return std::to_string(w);
}

int FrameDocument::resolve_world(const std::string& token) const {
    for (std::size_t i = 0; i < world_names.size(); ++i)
        if (world_names[i] == token) return static_cast<int>(i);
    try {
        std::size_t used = 0;
        const int w = std::stoi(token, &used);
        if (used == token.size() && w >= 0 && w < frame.worlds()) return w;
    } catch (const std::exception&) {
    }
    throw Error("unknown world '" + token + "'");
}

namespace {

int world_from_json(const json& j, int n, const std::vector<std::string>& names,
                    const std::map<std::string, int>& index_of) {
    if (j.is_number_integer()) {
        const int w = j.get<int>();
        if (w < 0 || w >= n) throw Error("world index " + std::to_string(w) + " out of range");
        return w;
    }
    if (j.is_string()) {
        const auto it = index_of.find(j.get<std::string>());
        if (it == index_of.end()) throw Error("unknown world name '" + j.get<std::string>() + "'");
        return it->second;
    }
    (void)names;
    throw Error("worlds must be indices or declared names");
}

}  // namespace

FrameDocument load_frame_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(std::string("invalid frame document: ") + e.what());
    }
    if (!j.is_object()) throw Error("frame document must be a JSON object");
    if (!j.contains("alphabet") || !j.contains("worlds") || !j.contains("relations"))
        throw Error("frame document needs 'alphabet', 'worlds' and 'relations'");

    std::vector<std::string> labels;
    for (const auto& l : j.at("alphabet")) labels.push_back(l.get<std::string>());
    const Alphabet alphabet(labels);

    int n = 0;
    std::vector<std::string> names;
    std::map<std::string, int> index_of;
    const json& worlds = j.at("worlds");
    if (worlds.is_number_integer()) {
        n = worlds.get<int>();
    } else if (worlds.is_array()) {
        for (const auto& w : worlds) {
            const std::string name = w.get<std::string>();
            if (!index_of.emplace(name, static_cast<int>(names.size())).second)
                throw Error("duplicate world name '" + name + "'");
            names.push_back(name);
        }
        n = static_cast<int>(names.size());
    } else {
        throw Error("'worlds' must be a count or a list of names");
    }

    std::vector<EdgeList> edges(static_cast<std::size_t>(alphabet.size()));
    for (const auto& [label, pairs] : j.at("relations").items()) {
        const int idx = alphabet.index_of(label);
        for (const auto& pair : pairs) {
            if (!pair.is_array() || pair.size() != 2)
                throw Error("relation entries must be [from, to] pairs");
            edges[static_cast<std::size_t>(idx)].emplace_back(
                world_from_json(pair[0], n, names, index_of),
                world_from_json(pair[1], n, names, index_of));
        }
    }

    FrameDocument doc(j.value("name", ""), Frame(n, alphabet, std::move(edges)));
    doc.world_names = std::move(names);
    if (j.contains("valuations")) {
        for (const auto& [key, worlds_json] : j.at("valuations").items()) {
            if (key.size() < 2 || key[0] != 'p' ||
                key.find_first_not_of("0123456789", 1) != std::string::npos)
                throw Error("valuation keys look like 'p0', got '" + key + "'");
            const int var = std::stoi(key.substr(1));
            std::vector<int>& list = doc.valuations[var];
            for (const auto& w : worlds_json)
                list.push_back(world_from_json(w, n, doc.world_names, index_of));
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }
    return doc;
}

FrameDocument load_frame_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open frame file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_frame_document(buffer.str());
}

std::string save_frame_document(const FrameDocument& doc) {
    json j;
    if (!doc.name.empty()) j["name"] = doc.name;
    j["alphabet"] = doc.frame.alphabet().labels();
    if (doc.world_names.empty())
        j["worlds"] = doc.frame.worlds();
    else
        j["worlds"] = doc.world_names;
    json rels = json::object();
    for (int m = 0; m < doc.frame.modalities(); ++m) {
        json pairs = json::array();
        for (const auto& [a, b] : doc.frame.edges(m)) {  // already sorted
            if (doc.world_names.empty())
                pairs.push_back(json::array({a, b}));
            else
                pairs.push_back(json::array({doc.world_names[static_cast<std::size_t>(a)],
                                             doc.world_names[static_cast<std::size_t>(b)]}));
        }
        rels[doc.frame.alphabet().label(m)] = std::move(pairs);
    }
    j["relations"] = std::move(rels);
    if (!doc.valuations.empty()) {
        json vals = json::object();
        for (const auto& [var, worlds] : doc.valuations) {
            json list = json::array();
            for (int w : worlds) {
                if (doc.world_names.empty())
                    list.push_back(w);
                else
                    list.push_back(doc.world_names[static_cast<std::size_t>(w)]);
            }
            vals["p" + std::to_string(var)] = std::move(list);
        }
        j["valuations"] = std::move(vals);
    }
    return j.dump(2) + "\n";
}

void save_frame_file(const FrameDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write frame file: " + path);
    out << save_frame_document(doc);
}

std::string to_dot(const FrameDocument& doc) {
    static const char* kStyles[] = {"solid", "dashed", "dotted", "bold"};
    std::string out = "digraph \"" + (doc.name.empty() ? std::string("frame") : doc.name) + "\" {\n";
    for (int w = 0; w < doc.frame.worlds(); ++w)
        out += "  n" + std::to_string(w) + " [label=\"" + doc.world_name(w) + "\"];\n";
    for (int m = 0; m < doc.frame.modalities(); ++m) {
        const std::string& label = doc.frame.alphabet().label(m);
        const char* style = kStyles[static_cast<std::size_t>(m) % 4];
        for (const auto& [a, b] : doc.frame.edges(m))
            out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [label=\"" + label +
                   "\", style=" + style + "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace kripkit
