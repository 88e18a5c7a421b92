#pragma once

// File formats consumed by the CLI: Cayley tables as JSON objects
// { "order": n, "table": [[...]] } with 0-based element indices; the identity
// is inferred and every group axiom is verified on load.

#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradcount/errors.hpp"
#include "gradcount/group.hpp"

namespace gradcount {

inline CayleyGroup load_cayley_table(std::istream& in, std::size_t size_cap = 512) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("invalid Cayley JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw data_error("Cayley JSON must be an object with 'order' and 'table'");
  if (!j["order"].is_number_unsigned()) throw data_error("'order' must be a nonnegative integer");
  std::size_t n = j["order"].get<std::size_t>();
  if (!j["table"].is_array() || j["table"].size() != n)
    throw data_error("'table' must be an array of 'order' rows");
  std::vector<std::vector<unsigned>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j["table"][i];
    if (!row.is_array() || row.size() != n)
      throw data_error("row " + std::to_string(i) + " must have 'order' entries");
    table[i].reserve(n);
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
        throw data_error("row " + std::to_string(i) + " has an entry outside 0..order-1");
      table[i].push_back(v.get<unsigned>());
    }
  }
  return CayleyGroup(std::move(table), size_cap);
}

inline CayleyGroup load_cayley_file(const std::string& path, std::size_t size_cap = 512) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open Cayley table file '" + path + "'");
  return load_cayley_table(in, size_cap);
}

}  // namespace gradcount
