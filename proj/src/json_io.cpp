#include "mdisc/json_io.hpp"

#include <fstream>
#include <set>

namespace mdisc {

std::vector<PointConfig> parse_configs(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("input is not a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw InputError("missing or invalid field: n");
  const long n = doc["n"].get<long>();
  if (n < 1) throw InputError("n must be at least 1");
  if (!doc.contains("configs") || !doc["configs"].is_array())
    throw InputError("missing or invalid field: configs");
  const auto& blocks = doc["configs"];
  if (static_cast<long>(blocks.size()) != n)
    throw InputError("expected " + std::to_string(n) + " configuration blocks, got " +
                     std::to_string(blocks.size()));
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      throw InputError("missing or invalid field: labels");
    for (const auto& l : doc["labels"]) labels.push_back(l.get<std::string>());
  }

  std::vector<PointConfig> out;
  for (long b = 0; b < n; ++b) {
    const auto& blk = blocks[static_cast<size_t>(b)];
    if (!blk.is_array() || blk.empty())
      throw InputError("block " + std::to_string(b + 1) + " must be a nonempty point list");
    PointConfig c;
    c.dim = n;
    c.label = static_cast<size_t>(b) < labels.size() ? labels[static_cast<size_t>(b)]
                                                     : "A" + std::to_string(b + 1);
    c.points.resize(n, static_cast<Index>(blk.size()));
    std::set<std::vector<Int>> seen;
    for (size_t j = 0; j < blk.size(); ++j) {
      const auto& pt = blk[j];
      if (!pt.is_array() || static_cast<long>(pt.size()) != n)
        throw InputError("dimension mismatch in block " + std::to_string(b + 1));
      std::vector<Int> key;
      for (long i = 0; i < n; ++i) {
        if (!pt[static_cast<size_t>(i)].is_number_integer())
          throw InputError("non-integer coordinate in block " + std::to_string(b + 1));
        Int v(pt[static_cast<size_t>(i)].get<long long>());
        c.points(i, static_cast<Index>(j)) = v;
        key.push_back(v);
      }
      if (!seen.insert(key).second)
        throw InputError("duplicate point in block " + std::to_string(b + 1));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PointConfig> load_configs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_configs(doc);
}

nlohmann::json configs_to_json(const std::vector<PointConfig>& configs) {
  nlohmann::json doc;
  doc["n"] = configs.size();
  nlohmann::json blocks = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& c : configs) {
    nlohmann::json blk = nlohmann::json::array();
    for (Index j = 0; j < c.count(); ++j) {
      nlohmann::json pt = nlohmann::json::array();
      for (Index i = 0; i < c.dim; ++i)
        pt.push_back(static_cast<long long>(c.points(i, j)));
      blk.push_back(pt);
    }
    blocks.push_back(blk);
    labels.push_back(c.label);
  }
  doc["configs"] = blocks;
  doc["labels"] = labels;
  return doc;
}

}  // namespace mdisc
