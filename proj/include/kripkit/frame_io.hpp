#pragma once

#include <map>
#include <string>
#include <vector>

#include "kripkit/frame.hpp"

// Frame file format: a JSON document with keys
//   name       optional string
//   alphabet   list of modality labels
//   worlds     world count, or a list of distinct world names
//   relations  label -> list of [from, to] pairs (indices, or names when
//              worlds is a name list)
//   valuations optional, "p<k>" -> list of worlds
// Keys and pair lists are emitted sorted, so saves are byte-stable.

namespace kripkit {

struct FrameDocument {
    std::string name;
    Frame frame;
    std::vector<std::string> world_names;  // empty: worlds are plain indices
    std::map<int, std::vector<int>> valuations;

    FrameDocument(std::string doc_name, Frame f)
        : name(std::move(doc_name)), frame(std::move(f)) {}

    std::string world_name(int w) const;
    // Resolves a decimal index or a declared world name.
    int resolve_world(const std::string& token) const;
};

FrameDocument load_frame_document(const std::string& json_text);
FrameDocument load_frame_file(const std::string& path);
std::string save_frame_document(const FrameDocument& doc);
void save_frame_file(const FrameDocument& doc, const std::string& path);

// Deterministic DOT digraph, one edge style per modality.
std::string to_dot(const FrameDocument& doc);

}  // namespace kripkit
