#include "hankel/lgv.hpp"
#include "hankel/render.hpp"

#include "support.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace hankel;

namespace {

// Set HANKEL_UPDATE_GOLDEN=1 to rewrite the snapshots after an intended change.
void check_golden(const std::string& name, const std::string& actual) {
  const std::string path = std::string(HANKEL_GOLDEN_DIR) + "/" + name;
  if (std::getenv("HANKEL_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
  }
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream expected;
  expected << in.rdbuf();
  CHECK(expected.str() == actual);
}

PathFamily words(const PathSystemConfig& c, std::initializer_list<const char*> w) {
  PathFamily f;
  std::size_t i = 0;
  for (const char* s : w) f.push_back(LatticePath::from_word(c.starts[i++], s));
  return f;
}

}  // namespace

TEST_CASE("worked example, full paths") {
  auto c = thm6_config(std::vector<long>{0, 1, 2, 3}, 3, 5, 4);
  auto f = words(c, {"RRURRUR", "RRRRRURRURUU", "RRRRRRRRRURRUUUU", "RRRRRRRRRRRRRRUUUUUUU"});
  check_golden("figure1.txt", render_ascii(c, f));
}

TEST_CASE("worked example without forced steps") {
  auto c = reduce_forced(thm6_config(std::vector<long>{0, 1, 2, 3}, 3, 5, 4));
  auto f = words(c, {"RRURRUR", "RRRRRURRURU", "RRRRRRRRRURRUUU", "RRRRRRRRRRRRRRUUUUU"});
  check_golden("figure2.txt", render_ascii(c, f));
}

TEST_CASE("points only, no constraint") {
  auto c = prop8_config(-1, 1, 3, std::vector<long>{0, 2}, 2);
  check_golden("prop8_points.txt", render_ascii(c));
}

TEST_CASE("rendering is deterministic") {
  auto c = thm9_reduced_config(3, 1, 1, 3);
  CHECK(render_ascii(c) == render_ascii(c));
  CHECK(render_ascii(c).back() == '\n');
}
