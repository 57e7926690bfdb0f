#include "fusionscope/ring_document.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "fusionscope/errors.hpp"

namespace fusionscope {

namespace {

using json = nlohmann::json;
using PathStep = std::variant<std::string, std::size_t>;
using Path = std::vector<PathStep>;

/// Minimal JSON scanner used only for diagnostics: finds the byte offset of
/// the value at a path and reports duplicate object keys, both of which the
/// DOM parser discards.
class PositionScanner {
 public:
  explicit PositionScanner(std::string_view text) : text_(text) {}

  std::optional<std::size_t> offset_of(const Path& path) {
    pos_ = 0;
    target_ = &path;
    found_.reset();
    duplicate_.reset();
    skip_ws();
    value(0, true);
    return found_;
  }

  /// Offset and name of the first repeated key in any object.
  std::optional<std::pair<std::size_t, std::string>> first_duplicate_key() {
    Path none;
    offset_of(none);
    return duplicate_;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\r' ||
                                   text_[pos_] == '\t'))
      ++pos_;
  }

  std::string string_token() {
    std::string out;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        out += text_[pos_++];
      }
      if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;
    return out;
  }

  // depth = number of path steps already matched; on_path = whether the
  // path so far matches.
  void value(std::size_t depth, bool on_path) {
    if (on_path && depth == target_->size() && !found_) found_ = pos_;
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      std::set<std::string> keys;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        const std::size_t key_pos = pos_;
        const std::string key = string_token();
        if (!keys.insert(key).second && !duplicate_) duplicate_ = {key_pos, key};
        skip_ws();
        ++pos_;  // colon
        skip_ws();
        const bool next = on_path && depth < target_->size() &&
                          std::holds_alternative<std::string>((*target_)[depth]) &&
                          std::get<std::string>((*target_)[depth]) == key;
        value(depth + 1, next);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      std::size_t index = 0;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != ']') {
        const bool next = on_path && depth < target_->size() &&
                          std::holds_alternative<std::size_t>((*target_)[depth]) &&
                          std::get<std::size_t>((*target_)[depth]) == index;
        value(depth + 1, next);
        ++index;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && std::string_view(",]} \n\r\t").find(text_[pos_]) == std::string_view::npos)
        ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Path* target_ = nullptr;
  std::optional<std::size_t> found_;
  std::optional<std::pair<std::size_t, std::string>> duplicate_;
};

std::string line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string path_string(const Path& path) {
  std::string out;
  for (const auto& step : path) {
    if (std::holds_alternative<std::string>(step)) out += "/" + std::get<std::string>(step);
    else out += "/" + std::to_string(std::get<std::size_t>(step));
  }
  return out.empty() ? "/" : out;
}

class DocumentReader {
 public:
  explicit DocumentReader(std::string_view text) : text_(text), scanner_(text) {}

  [[noreturn]] void fail(const Path& path, const std::string& message) {
    std::string where = path_string(path);
    if (auto off = scanner_.offset_of(path)) where = line_col(text_, *off) + " (" + where + ")";
    throw MalformedInput(where + ": " + message);
  }

  RingDocument read() {
    json root;
    try {
      root = json::parse(text_);
    } catch (const json::parse_error& e) {
      throw MalformedInput(line_col(text_, e.byte > 0 ? e.byte - 1 : 0) + ": syntax error: " + e.what());
    }
    if (auto dup = scanner_.first_duplicate_key())
      throw MalformedInput(line_col(text_, dup->first) + ": duplicate key \"" + dup->second + "\"");
    if (!root.is_object()) fail({}, "expected an object");

    static const std::set<std::string> allowed{"dual", "fusion", "labels", "metadata", "name", "rank", "unit"};
    for (const auto& [key, value] : root.items())
      if (!allowed.contains(key)) fail({key}, "unknown field \"" + key + "\"");
    for (const char* key : {"dual", "fusion", "labels", "name", "rank", "unit"})
      if (!root.contains(key)) fail({}, std::string("missing field \"") + key + "\"");

    RingDocument doc;
    doc.name = require_string(root["name"], {"name"});
    doc.rank = static_cast<int>(require_int(root["rank"], {"rank"}));
    if (doc.rank < 1) fail({"rank"}, "rank must be positive");

    const auto& labels = require_array(root["labels"], {"labels"});
    if (static_cast<int>(labels.size()) != doc.rank)
      fail({"labels"}, "expected " + std::to_string(doc.rank) + " labels, found " + std::to_string(labels.size()));
    std::set<std::string> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto label = require_string(labels[i], {"labels", i});
      if (label.empty()) fail({"labels", i}, "empty label");
      if (!seen.insert(label).second) fail({"labels", i}, "repeated label \"" + label + "\"");
      doc.labels.push_back(std::move(label));
    }

    doc.unit = index_in_range(root["unit"], {"unit"}, doc.rank);

    const auto& dual = require_array(root["dual"], {"dual"});
    if (static_cast<int>(dual.size()) != doc.rank)
      fail({"dual"}, "expected " + std::to_string(doc.rank) + " dual entries, found " + std::to_string(dual.size()));
    for (std::size_t i = 0; i < dual.size(); ++i) doc.dual.push_back(index_in_range(dual[i], {"dual", i}, doc.rank));

    const auto& fusion = require_array(root["fusion"], {"fusion"});
    std::vector<std::pair<std::array<std::int64_t, 4>, std::size_t>> quads;
    for (std::size_t i = 0; i < fusion.size(); ++i) {
      const Path at{"fusion", i};
      const auto& quad = require_array(fusion[i], at);
      if (quad.size() != 4) fail(at, "fusion entries are [p, q, r, m] quadruples");
      std::array<std::int64_t, 4> v{};
      for (std::size_t k = 0; k < 3; ++k) v[k] = index_in_range(quad[k], {"fusion", i, k}, doc.rank);
      v[3] = require_int(quad[3], {"fusion", i, std::size_t{3}});
      if (v[3] < 1) fail({"fusion", i, std::size_t{3}}, "multiplicity must be >= 1");
      if (v[0] > v[1]) std::swap(v[0], v[1]);
      quads.emplace_back(v, i);
    }
    std::sort(quads.begin(), quads.end());
    for (std::size_t i = 1; i < quads.size(); ++i) {
      const auto& a = quads[i - 1].first;
      const auto& b = quads[i].first;
      if (a[0] == b[0] && a[1] == b[1] && a[2] == b[2]) {
        const std::size_t later = std::max(quads[i - 1].second, quads[i].second);
        const std::size_t earlier = std::min(quads[i - 1].second, quads[i].second);
        fail({"fusion", later}, "duplicate entry for (" + std::to_string(a[0]) + ", " + std::to_string(a[1]) + ", " +
                                    std::to_string(a[2]) + "), first given as fusion[" + std::to_string(earlier) +
                                    "]");
      }
    }
    for (auto& [v, i] : quads) doc.fusion.push_back(v);

    // Unit rows may be left out: a pair (unit, q) without entries means
    // chi_unit * chi_q = chi_q.
    for (std::int64_t q = 0; q < doc.rank; ++q) {
      const std::int64_t lo = std::min<std::int64_t>(doc.unit, q);
      const std::int64_t hi = std::max<std::int64_t>(doc.unit, q);
      const bool listed = std::any_of(doc.fusion.begin(), doc.fusion.end(),
                                      [&](const auto& v) { return v[0] == lo && v[1] == hi; });
      if (!listed) doc.fusion.push_back({lo, hi, q, 1});
    }
    std::sort(doc.fusion.begin(), doc.fusion.end());

    if (root.contains("metadata")) read_metadata(root["metadata"], doc);
    return doc;
  }

 private:
  void read_metadata(const json& meta, RingDocument& doc) {
    if (!meta.is_object()) fail({"metadata"}, "expected an object");
    for (const auto& [key, value] : meta.items()) {
      const Path at{"metadata", key};
      if (key == "complete_below") {
        const auto v = require_int(value, at);
        if (v < 0) fail(at, "complete_below must be nonnegative");
        doc.metadata.complete_below = static_cast<int>(v);
      } else if (key == "connected") {
        if (!value.is_boolean()) fail(at, "expected a boolean");
        doc.metadata.connected = value.get<bool>();
      } else if (key == "fs_indicators") {
        if (!value.is_object()) fail(at, "expected an object");
        for (const auto& [label, fs] : value.items()) {
          const Path fat{"metadata", key, label};
          if (std::find(doc.labels.begin(), doc.labels.end(), label) == doc.labels.end())
            fail(fat, "unknown label \"" + label + "\"");
          if (!fs.is_string()) fail(fat, "expected \"real\", \"complex\" or \"pseudoreal\"");
          auto parsed = parse_fs_indicator(fs.get<std::string>());
          if (!parsed) fail(fat, "expected \"real\", \"complex\" or \"pseudoreal\"");
          doc.metadata.fs_indicators[label] = *parsed;
        }
      } else {
        fail(at, "unknown metadata field \"" + key + "\"");
      }
    }
  }

  std::string require_string(const json& v, const Path& at) {
    if (!v.is_string()) fail(at, "expected a string");
    return v.get<std::string>();
  }

  std::int64_t require_int(const json& v, const Path& at) {
    if (!v.is_number_integer()) fail(at, "expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      fail(at, "integer too large");
    return v.get<std::int64_t>();
  }

  Index index_in_range(const json& v, const Path& at, int rank) {
    const auto i = require_int(v, at);
    if (i < 0 || i >= rank) fail(at, "index " + std::to_string(i) + " out of range [0, " + std::to_string(rank) + ")");
    return static_cast<Index>(i);
  }

  const json& require_array(const json& v, const Path& at) {
    if (!v.is_array()) fail(at, "expected an array");
    return v;
  }

  std::string_view text_;
  PositionScanner scanner_;
};

std::string quoted(const std::string& s) { return json(s).dump(-1, ' ', true); }

}  // namespace

RingDocument parse_ring_document(std::string_view text) { return DocumentReader(text).read(); }

std::string serialize_ring_document(const RingDocument& doc) {
  std::ostringstream os;
  auto join = [](const auto& items, auto&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + fmt(items[i]);
    return out;
  };
  auto sorted = doc.fusion;
  for (auto& q : sorted)
    if (q[0] > q[1]) std::swap(q[0], q[1]);
  std::sort(sorted.begin(), sorted.end());

  os << "{\n";
  os << "  \"dual\": [" << join(doc.dual, [](Index d) { return std::to_string(d); }) << "],\n";
  if (sorted.empty()) {
    os << "  \"fusion\": [],\n";
  } else {
    os << "  \"fusion\": [\n";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const auto& q = sorted[i];
      os << "    [" << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << "]"
         << (i + 1 < sorted.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
  }
  os << "  \"labels\": [" << join(doc.labels, quoted) << "],\n";

  std::vector<std::string> items;
  if (doc.metadata.complete_below) items.push_back("    \"complete_below\": " + std::to_string(*doc.metadata.complete_below));
  if (doc.metadata.connected) items.push_back(std::string("    \"connected\": ") + (*doc.metadata.connected ? "true" : "false"));
  if (!doc.metadata.fs_indicators.empty()) {
    std::string fs = "    \"fs_indicators\": {\n";
    std::size_t i = 0;
    for (const auto& [label, value] : doc.metadata.fs_indicators) {
      fs += "      " + quoted(label) + ": " + quoted(std::string(to_string(value)));
      fs += (++i < doc.metadata.fs_indicators.size()) ? ",\n" : "\n";
    }
    fs += "    }";
    items.push_back(fs);
  }
  if (items.empty()) {
    os << "  \"metadata\": {},\n";
  } else {
    os << "  \"metadata\": {\n";
    for (std::size_t i = 0; i < items.size(); ++i) os << items[i] << (i + 1 < items.size() ? ",\n" : "\n");
    os << "  },\n";
  }
  os << "  \"name\": " << quoted(doc.name) << ",\n";
  os << "  \"rank\": " << doc.rank << ",\n";
  os << "  \"unit\": " << doc.unit << "\n";
  os << "}\n";
  return os.str();
}

FusionRing to_ring(const RingDocument& doc) {
  std::vector<FusionEntry> entries;
  entries.reserve(doc.fusion.size());
  for (const auto& q : doc.fusion)
    entries.push_back({static_cast<Index>(q[0]), static_cast<Index>(q[1]), static_cast<Index>(q[2]), q[3]});
  return FusionRing(doc.name, doc.labels, doc.unit, doc.dual, std::move(entries), doc.metadata);
}

RingDocument from_ring(const FusionRing& ring) {
  RingDocument doc;
  doc.name = ring.name();
  doc.rank = ring.rank();
  doc.labels = ring.labels();
  doc.unit = ring.unit();
  doc.dual = ring.dual_map();
  for (const auto& e : ring.entries()) doc.fusion.push_back({e.p, e.q, e.r, e.m});
  doc.metadata = ring.metadata();
  return doc;
}

RingDocument read_ring_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ring_document(buf.str());
  } catch (const MalformedInput& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

FusionRing read_ring_file(const std::string& path) {
  const auto doc = read_ring_document_file(path);
  try {
    return to_ring(doc);
  } catch (const MalformedInput& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

}  // namespace fusionscope
