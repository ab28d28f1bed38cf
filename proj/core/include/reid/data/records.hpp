#pragma once

#include <string>
#include <vector>

namespace reid::data {

enum class Modality { image, video };

// One observation of one person from one camera. Image records hold exactly
// one path; video tracklets hold an ordered frame sequence of length >= 1.
// All frames of a tracklet share pid and camid.
struct Record {
  std::vector<std::string> image_refs;
  int pid = 0;
  int camid = 0;
  std::string dataset_tag;

  const std::string& path() const { return image_refs.front(); }

  bool operator==(const Record&) const = default;
};

inline Record person_record(std::string path, int pid, int camid,
                            std::string dataset_tag) {
  return Record{{std::move(path)}, pid, camid, std::move(dataset_tag)};
}

inline Record tracklet_record(std::vector<std::string> paths, int pid,
                              int camid, std::string dataset_tag) {
  return Record{std::move(paths), pid, camid, std::move(dataset_tag)};
}

// Train/query/gallery partitions of one dataset (or of several combined
// datasets). Train pids and camids are contiguous 0-based labels;
// num_train_pids and num_train_cams count the distinct values. Query and
// gallery labels are never relabeled.
struct DatasetSplit {
  Modality modality = Modality::image;
  std::string dataset_tag;
  std::vector<Record> train;
  std::vector<Record> query;
  std::vector<Record> gallery;
  int num_train_pids = 0;
  int num_train_cams = 0;
  // Sidecar mappings for splits loaded from a single manifest:
  // index = normalized train label, value = label in the source file.
  // Empty for combined splits.
  std::vector<int> original_train_pids;
  std::vector<int> original_train_camids;

  bool operator==(const DatasetSplit&) const = default;
};

inline const char* modality_name(Modality m) {
  return m == Modality::image ? "image" : "video";
}

}  // namespace reid::data
