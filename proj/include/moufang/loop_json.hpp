#pragma once

// JSON Cayley-table format:
//   { "order": n, "names": [...], "neutral": i, "table": [[...], ...] }
// "neutral" may be null for tables that are not loops.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "moufang/loop.hpp"

namespace moufang {

struct TableFile {
  Magma magma;
  std::optional<Element> neutral;
};

// Serialized text is deterministic: one table row per line, trailing newline.
std::string to_json(const Magma& m, std::optional<Element> neutral);
inline std::string to_json(const Loop& l) { return to_json(l.magma(), l.neutral()); }

// Throws StructureError on malformed documents or out-of-range entries.
TableFile table_from_json(std::string_view text);
// Like table_from_json but additionally requires a valid loop.
Loop loop_from_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace moufang
