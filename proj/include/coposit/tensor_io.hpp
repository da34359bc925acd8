#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "multi_index.hpp"
#include "rational.hpp"
#include "sym_tensor.hpp"

namespace coposit {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A parsed tensor document: exact when every entry is an integer or a
/// fraction string, float as soon as any value is written with a decimal
/// point or exponent.
using ParsedTensor = std::variant<RationalTensor, FloatTensor>;

inline bool is_exact(const ParsedTensor& t) {
  return std::holds_alternative<RationalTensor>(t);
}

namespace iodetail {

using json = nlohmann::json;

/// Parses while rejecting duplicate object keys, which json object semantics
/// would otherwise silently collapse.
inline json parse_checked(std::string_view text) {
  std::vector<std::vector<std::string>> key_stack;
  auto callback = [&](int /*depth*/, json::parse_event_t event, json& parsed) -> bool {
    switch (event) {
      case json::parse_event_t::object_start:
        key_stack.emplace_back();
        break;
      case json::parse_event_t::key: {
        const std::string key = parsed.get<std::string>();
        auto& keys = key_stack.back();
        for (const std::string& seen : keys)
          if (seen == key) throw ParseError("duplicate key \"" + key + "\"");
        keys.push_back(key);
        break;
      }
      case json::parse_event_t::object_end:
        key_stack.pop_back();
        break;
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text, callback);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

inline MultiIndex parse_key(const std::string& key, int order, int dim) {
  if (static_cast<int>(key.size()) != order)
    throw ParseError("entry key \"" + key + "\" has " + std::to_string(key.size()) +
                     " digits, expected " + std::to_string(order));
  MultiIndex idx;
  idx.reserve(key.size());
  for (char ch : key) {
    if (ch < '1' || ch > '9')
      throw ParseError("entry key \"" + key + "\" contains a non-digit label");
    const int label = ch - '0';
    if (label > dim)
      throw ParseError("entry key \"" + key + "\" uses label " + std::to_string(label) +
                       " beyond dimension " + std::to_string(dim));
    idx.push_back(label);
  }
  if (!is_canonical(idx))
    throw ParseError("entry key \"" + key + "\" is not canonical (labels must be sorted)");
  return idx;
}

}  // namespace iodetail

inline ParsedTensor parse_tensor(std::string_view text) {
  using json = nlohmann::json;
  const json doc = iodetail::parse_checked(text);
  if (!doc.is_object()) throw ParseError("top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "order" && key != "dim" && key != "entries")
      throw ParseError("unknown field \"" + key + "\"");
  if (!doc.contains("order") || !doc["order"].is_number_integer())
    throw ParseError("missing or non-integer \"order\"");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError("missing or non-integer \"dim\"");
  if (!doc.contains("entries") || !doc["entries"].is_object())
    throw ParseError("missing \"entries\" object");

  const long long order = doc["order"].get<long long>();
  const long long dim = doc["dim"].get<long long>();
  if (order < 1 || order > 16) throw ParseError("\"order\" must be in 1..16");
  if (dim < 1 || dim > 9) throw ParseError("\"dim\" must be in 1..9");

  struct RawEntry {
    MultiIndex idx;
    bool exact;
    Rational exact_value;
    double float_value;
  };
  std::vector<RawEntry> raw;
  bool all_exact = true;
  for (const auto& [key, value] : doc["entries"].items()) {
    RawEntry entry;
    entry.idx = iodetail::parse_key(key, static_cast<int>(order), static_cast<int>(dim));
    if (value.is_number_integer()) {
      entry.exact = true;
      entry.exact_value = Rational(static_cast<long>(value.get<long long>()));
      entry.float_value = static_cast<double>(value.get<long long>());
    } else if (value.is_string()) {
      try {
        entry.exact_value = parse_rational(value.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError("entry \"" + key + "\": " + e.what());
      }
      entry.exact = true;
      entry.float_value = to_double(entry.exact_value);
    } else if (value.is_number_float()) {
      entry.exact = false;
      entry.float_value = value.get<double>();
      all_exact = false;
    } else {
      throw ParseError("entry \"" + key + "\" must be a number or a fraction string");
    }
    raw.push_back(std::move(entry));
  }

  if (all_exact) {
    std::vector<RationalTensor::Entry> entries;
    for (auto& e : raw) entries.emplace_back(std::move(e.idx), std::move(e.exact_value));
    return RationalTensor(static_cast<int>(order), static_cast<int>(dim), entries);
  }
  std::vector<FloatTensor::Entry> entries;
  for (auto& e : raw) entries.emplace_back(std::move(e.idx), e.float_value);
  return FloatTensor(static_cast<int>(order), static_cast<int>(dim), entries);
}

inline ParsedTensor load_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tensor(buffer.str());
}

inline std::string serialize(const RationalTensor& T) {
  nlohmann::ordered_json doc;
  doc["order"] = T.order();
  doc["dim"] = T.dim();
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [idx, value] : T.entries()) {
    if (is_integral(value) && value.get_num().fits_slong_p())
      entries[index_key(idx)] = static_cast<long long>(value.get_num().get_si());
    else
      entries[index_key(idx)] = to_string(value);
  }
  doc["entries"] = entries;
  return doc.dump();
}

inline std::string serialize(const FloatTensor& T) {
  nlohmann::ordered_json doc;
  doc["order"] = T.order();
  doc["dim"] = T.dim();
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [idx, value] : T.entries()) entries[index_key(idx)] = value;
  doc["entries"] = entries;
  return doc.dump();
}

inline std::string serialize(const ParsedTensor& t) {
  return std::visit([](const auto& tensor) { return serialize(tensor); }, t);
}

}  // namespace coposit
