#include "reid/data/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "reid/error.hpp"

namespace reid::data {

namespace {

using nlohmann::json;

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
  for (const char* key : keys) {
    if (!obj.contains(key)) {
      throw ParseError("manifest: missing field '" + std::string(key) + "' at " +
                       where);
    }
  }
  for (const auto& [key, _] : obj.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) {
          return key == k;
        }) == keys.end()) {
      throw ParseError("manifest: unknown field '" + key + "' at " + where);
    }
  }
}

int read_label(const json& obj, const char* field, const std::string& where) {
  const json& v = obj.at(field);
  if (!v.is_number_integer()) {
    throw ParseError("manifest: field '" + std::string(field) + "' at " + where +
                     " is not an integer");
  }
  const auto value = v.get<std::int64_t>();
  if (value < 0) {
    throw ValidationError("manifest: field '" + std::string(field) + "' at " +
                          where + " must be >= 0, got " + std::to_string(value));
  }
  return static_cast<int>(value);
}

std::string ref_at(const json& v, const std::string& where) {
  if (!v.is_string() || v.get<std::string>().empty()) {
    throw ParseError("manifest: image path at " + where +
                     " is not a non-empty string");
  }
  return v.get<std::string>();
}

Record read_record(const json& obj, Modality modality, const std::string& tag,
                   const std::string& where) {
  if (!obj.is_object()) {
    throw ParseError("manifest: record at " + where + " is not an object");
  }
  Record rec;
  rec.dataset_tag = tag;
  if (modality == Modality::image) {
    require_keys(obj, {"path", "pid", "camid"}, where);
    rec.image_refs.push_back(ref_at(obj.at("path"), where + ".path"));
  } else {
    require_keys(obj, {"paths", "pid", "camid"}, where);
    const json& paths = obj.at("paths");
    if (!paths.is_array() || paths.empty()) {
      throw ParseError("manifest: field 'paths' at " + where +
                       " must be a non-empty array");
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      rec.image_refs.push_back(
          ref_at(paths[i], where + ".paths[" + std::to_string(i) + "]"));
    }
  }
  rec.pid = read_label(obj, "pid", where);
  rec.camid = read_label(obj, "camid", where);
  return rec;
}

std::vector<Record> read_partition(const json& root, const char* name,
                                   Modality modality, const std::string& tag) {
  const json& arr = root.at(name);
  if (!arr.is_array()) {
    throw ParseError("manifest: '" + std::string(name) + "' is not an array");
  }
  if (arr.empty()) {
    throw ValidationError("manifest: partition '" + std::string(name) +
                          "' is empty");
  }
  std::vector<Record> records;
  records.reserve(arr.size());
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where =
        std::string(name) + "[" + std::to_string(i) + "]";
    Record rec = read_record(arr[i], modality, tag, where);
    for (const auto& ref : rec.image_refs) {
      if (!seen.insert(ref).second) {
        throw ValidationError("manifest: duplicate image ref '" + ref +
                              "' in partition '" + name + "'");
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

// Relabels train pids/camids to contiguous 0-based values in ascending
// order of the original labels, and records the inverse mapping.
void normalize_train_labels(DatasetSplit& split) {
  std::set<int> pids;
  std::set<int> cams;
  for (const Record& r : split.train) {
    pids.insert(r.pid);
    cams.insert(r.camid);
  }
  std::map<int, int> pid_map;
  std::map<int, int> cam_map;
  split.original_train_pids.clear();
  split.original_train_camids.clear();
  for (int pid : pids) {
    pid_map[pid] = static_cast<int>(split.original_train_pids.size());
    split.original_train_pids.push_back(pid);
  }
  for (int cam : cams) {
    cam_map[cam] = static_cast<int>(split.original_train_camids.size());
    split.original_train_camids.push_back(cam);
  }
  for (Record& r : split.train) {
    r.pid = pid_map.at(r.pid);
    r.camid = cam_map.at(r.camid);
  }
  split.num_train_pids = static_cast<int>(pids.size());
  split.num_train_cams = static_cast<int>(cams.size());
}

json record_to_json(const Record& rec, Modality modality, int pid, int camid) {
  json obj = json::object();
  if (modality == Modality::image) {
    obj["path"] = rec.image_refs.front();
  } else {
    obj["paths"] = rec.image_refs;
  }
  obj["pid"] = pid;
  obj["camid"] = camid;
  return obj;
}

}  // namespace

DatasetSplit load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open manifest: " + path.string());
  }
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("manifest " + path.string() + ": " + e.what());
  }
  if (!root.is_object()) {
    throw ParseError("manifest: top level is not an object");
  }
  require_keys(root, {"modality", "dataset_tag", "train", "query", "gallery"},
               "top level");

  DatasetSplit split;
  const json& modality = root.at("modality");
  if (!modality.is_string()) {
    throw ParseError("manifest: 'modality' is not a string");
  }
  const std::string mod = modality.get<std::string>();
  if (mod == "image") {
    split.modality = Modality::image;
  } else if (mod == "video") {
    split.modality = Modality::video;
  } else {
    throw ParseError("manifest: 'modality' must be \"image\" or \"video\", got \"" +
                     mod + "\"");
  }
  const json& tag = root.at("dataset_tag");
  if (!tag.is_string() || tag.get<std::string>().empty()) {
    throw ValidationError("manifest: 'dataset_tag' must be a non-empty string");
  }
  split.dataset_tag = tag.get<std::string>();

  split.train = read_partition(root, "train", split.modality, split.dataset_tag);
  split.query = read_partition(root, "query", split.modality, split.dataset_tag);
  split.gallery =
      read_partition(root, "gallery", split.modality, split.dataset_tag);

  normalize_train_labels(split);
  return split;
}

void save_manifest(const std::filesystem::path& path, const DatasetSplit& split) {
  json root = json::object();
  root["modality"] = modality_name(split.modality);
  root["dataset_tag"] = split.dataset_tag;

  const bool has_sidecar = !split.original_train_pids.empty();
  json train = json::array();
  for (const Record& r : split.train) {
    const int pid = has_sidecar ? split.original_train_pids.at(r.pid) : r.pid;
    const int camid =
        has_sidecar ? split.original_train_camids.at(r.camid) : r.camid;
    train.push_back(record_to_json(r, split.modality, pid, camid));
  }
  root["train"] = std::move(train);
  for (const char* name : {"query", "gallery"}) {
    const auto& part = std::string(name) == "query" ? split.query : split.gallery;
    json arr = json::array();
    for (const Record& r : part) {
      arr.push_back(record_to_json(r, split.modality, r.pid, r.camid));
    }
    root[name] = std::move(arr);
  }

  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  out << root.dump(2) << "\n";
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

}  // namespace reid::data
