#include "moufang/loop_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace moufang {

using nlohmann::json;

std::string to_json(const Magma& m, std::optional<Element> neutral) {
  const std::size_t n = m.order();
  std::ostringstream out;
  out << "{\n  \"order\": " << n << ",\n  \"names\": [";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out << ", ";
    out << json(m.names()[i]).dump();
  }
  out << "],\n  \"neutral\": ";
  if (neutral) {
    out << *neutral;
  } else {
    out << "null";
  }
  out << ",\n  \"table\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "    [";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ", ";
      out << m.cells()[i * n + j];
    }
    out << (i + 1 < n ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

TableFile table_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructureError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("order").get<std::size_t>();
    std::vector<std::string> names;
    if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
    const auto& rows = doc.at("table");
    if (!rows.is_array() || rows.size() != n) throw StructureError("table must have `order` rows");
    std::vector<Element> cells;
    cells.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw StructureError("each row must have `order` entries");
      for (const auto& v : row) cells.push_back(v.get<Element>());
    }
    TableFile file{Magma(n, std::move(cells), std::move(names)), std::nullopt};
    if (doc.contains("neutral") && !doc.at("neutral").is_null()) {
      file.neutral = doc.at("neutral").get<Element>();
      if (*file.neutral < 0 || static_cast<std::size_t>(*file.neutral) >= n) throw StructureError("neutral out of range");
    }
    return file;
  } catch (const json::exception& e) {
    throw StructureError(std::string("malformed table document: ") + e.what());
  }
}

Loop loop_from_json(std::string_view text) {
  auto file = table_from_json(text);
  if (!file.neutral) throw StructureError("table document has no neutral element");
  return Loop(std::move(file.magma), *file.neutral);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace moufang
