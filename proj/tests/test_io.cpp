#include <doctest.h>

#include <cstring>
#include <sstream>

#include "hyperdisc/io.hpp"
#include "test_util.hpp"

using namespace hyperdisc;
using hyperdisc::testing::random_weighting;

TEST_CASE("parse a small weighting") {
  auto w = parse_weighting_text("3 2\n1 2 1.0\n1 3 -0.5\n");
  CHECK(w.n() == 3);
  CHECK(w.k() == 2);
  CHECK(w[rank_kset(std::vector<int>{0, 1}, 3)] == 1.0);
  CHECK(w[rank_kset(std::vector<int>{0, 2}, 3)] == -0.5);
  CHECK(w[rank_kset(std::vector<int>{1, 2}, 3)] == 0.0);  // unlisted
}

TEST_CASE("comments and blank lines are ignored") {
  auto w = parse_weighting_text(
      "# a weighted graph\n\n  4 2   # header\n"
      "1 2 3.5\n   # nothing here\n2 4 -1 # trailing note\n");
  CHECK(w.n() == 4);
  CHECK(w[rank_kset(std::vector<int>{0, 1}, 4)] == 3.5);
  CHECK(w[rank_kset(std::vector<int>{1, 3}, 4)] == -1.0);
}

TEST_CASE("parse errors name the offending line") {
  auto check_message = [](const char* text, const char* needle) {
    try {
      parse_weighting_text(text, "bad.whg");
      FAIL_CHECK("expected input_error for: " << text);
    } catch (const input_error& e) {
      CHECK(std::strstr(e.what(), needle) != nullptr);
    }
  };
  check_message("3 2\n1 2 1.0\n1 2 2.0\n", "bad.whg:3");   // duplicate edge
  check_message("3 2\n1 2 1.0\n1 2 2.0\n", "twice");
  check_message("3 2\n0 2 1.0\n", "vertex 0");             // 1-indexed files
  check_message("3 2\n2 1 1.0\n", "increasing");
  check_message("3 2\n1 2\n", "tokens");                   // missing weight
  check_message("3 2\n1 2 3 4.0\n", "tokens");             // too many
  check_message("3 2\n1 2 abc\n", "bad.whg:2");
  check_message("3 2\n1 4 1.0\n", "outside");
  check_message("3\n", "header");
  check_message("3 2\n1 2 inf\n", "finite");
  CHECK_THROWS_AS(parse_weighting_text("# only comments\n"), input_error);
  CHECK_THROWS_AS(parse_weighting_text("2 3\n"), input_error);  // k > n
}

TEST_CASE("k = 0 scalars are representable") {
  auto w = parse_weighting_text("5 0\n2.25\n");
  CHECK(w.k() == 0);
  CHECK(w[0] == 2.25);
}

TEST_CASE("write-then-parse reproduces weights bit-exactly") {
  auto w = random_weighting(7, 3, 42);
  w[0] = 0.0;            // dropped from the listing
  w[1] = -0.0;           // kept, must survive with its sign
  w[2] = 1.0 / 3.0;
  w[3] = 1e-300;
  std::ostringstream out;
  write_weighting(w, out);
  auto back = parse_weighting_text(out.str());
  REQUIRE(back.edge_count() == w.edge_count());
  for (std::int64_t r = 0; r < w.edge_count(); ++r) {
    CHECK(back[r] == w[r]);
    CHECK(std::signbit(back[r]) == std::signbit(w[r]));
  }
}

TEST_CASE("writer emits colexicographic order with 1-indexed vertices") {
  Weighting w(4, 2);
  w[rank_kset(std::vector<int>{2, 3}, 4)] = 2.0;
  w[rank_kset(std::vector<int>{0, 1}, 4)] = 1.0;
  std::ostringstream out;
  write_weighting(w, out);
  CHECK(out.str() == "4 2\n1 2 1\n3 4 2\n");
}

TEST_CASE("file round trip") {
  auto dir = std::filesystem::temp_directory_path();
  auto path = dir / "hyperdisc_io_test.whg";
  auto w = random_weighting(6, 2, 7);
  write_weighting(w, path);
  auto back = parse_weighting(path);
  CHECK(back.weights() == w.weights());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_weighting(dir / "does_not_exist.whg"), input_error);
}
