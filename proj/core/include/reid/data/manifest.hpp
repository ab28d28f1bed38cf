#pragma once

#include <filesystem>

#include "reid/data/records.hpp"

namespace reid::data {

// Reads and validates a dataset manifest (JSON; schema below), then
// relabels train pids and camids to contiguous 0-based values. The original
// labels are kept in the split's sidecar vectors. Query/gallery labels are
// left untouched.
//
//   { "modality": "image"|"video", "dataset_tag": str,
//     "train": [record...], "query": [...], "gallery": [...] }
//   image record: {"path": str, "pid": int, "camid": int}
//   video record: {"paths": [str...], "pid": int, "camid": int}
//
// Field names are exact; unknown fields are rejected. Throws ParseError for
// syntax/schema problems (message carries the field path) and
// ValidationError for semantic ones: negative labels, duplicate image refs
// within a partition, or an empty partition.
DatasetSplit load_manifest(const std::filesystem::path& path);

// Writes a split back to manifest JSON. Train labels are denormalized
// through the sidecar mappings when present, so load -> save -> load is an
// identity.
void save_manifest(const std::filesystem::path& path, const DatasetSplit& split);

}  // namespace reid::data
