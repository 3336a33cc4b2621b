#include "doctest.h"
#include "moufang/catalog.hpp"
#include "moufang/chein.hpp"
#include "moufang/loop_json.hpp"

using namespace moufang;

TEST_CASE("round trip") {
  const Loop m = chein_construct(catalog("symmetric3"));
  const std::string text = to_json(m);
  CHECK(text.back() == '\n');
  const Loop back = loop_from_json(text);
  CHECK(back.magma().cells() == m.magma().cells());
  CHECK(back.names() == m.names());
  CHECK(back.neutral() == m.neutral());
  CHECK(to_json(back) == text);
}

TEST_CASE("null neutral") {
  const Magma q(3, {0, 2, 1, 2, 1, 0, 1, 0, 2});
  const TableFile f = table_from_json(to_json(q, std::nullopt));
  CHECK_FALSE(f.neutral.has_value());
  CHECK(f.magma.cells() == q.cells());
  CHECK_THROWS_AS(loop_from_json(to_json(q, std::nullopt)), StructureError);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(table_from_json("not json"), StructureError);
  CHECK_THROWS_AS(table_from_json(R"({"order": 2})"), StructureError);
  CHECK_THROWS_AS(table_from_json(R"({"order": 2, "table": [[0, 1], [1, 5]]})"), StructureError);
  CHECK_THROWS_AS(table_from_json(R"({"order": 2, "table": [[0, 1]]})"), StructureError);
  CHECK_THROWS_AS(table_from_json(R"({"order": 2, "table": [[0, 1], [1, 0]], "neutral": 7})"), StructureError);
  CHECK_NOTHROW(table_from_json(R"({"order": 2, "table": [[0, 1], [1, 0]]})"));
}
