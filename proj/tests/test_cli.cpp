#include "tplactic/cli.hpp"
#include "tplactic/notation.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tplactic;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tplactic");
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const std::string& text) { return Json::parse(text); }

const char* const kExampleWord =
    "3^0.82 5^0.08 2^0.45 6^0.64 5^0.94 1^0.15 5^0.09 1^0.52 4^0.29 1^0.59 3^0.97 4^0.42 "
    "2^0.61 1^0.07 4^0.55";

} // namespace

TEST_CASE("insert") {
  const Result r = run({"insert", "3421153"});
  CHECK(r.code == 0);
  CHECK(r.out == "113\n245\n3\nshape: (3,3,1)\n");
  const Result j = run({"--json", "insert", "3421153"});
  CHECK(json_of(j.out)["tableau"].dump() == R"({"rows":[[1,1,3],[2,4,5],[3]]})");
  const Result steps = run({"insert", "--json", "--steps", "3421153"});
  CHECK(json_of(steps.out)["steps"].size() == 7);
  const Result timed = run({"insert", "--json", kExampleWord});
  CHECK(json_of(timed.out)["shape"].dump() ==
        R"(["16/5","193/100","109/100","61/100","29/100","7/100"])");
}

TEST_CASE("greene") {
  const Result r = run({"greene", "--json", "--oracle", "3421153"});
  CHECK(r.code == 0);
  CHECK(json_of(r.out).dump() ==
        R"({"agreement":true,"kind":"classical","mode":"both","profile":["3","6","7"]})");
  const Result fast = run({"greene", "--json", "3421153"});
  CHECK(json_of(fast.out)["mode"] == "fast");
  CHECK(json_of(fast.out)["agreement"].is_null());
  const Result only = run({"greene", "--json", "--oracle-only", "3421153"});
  CHECK(json_of(only.out)["mode"] == "oracle");
  CHECK(json_of(only.out)["profile"].dump() == R"(["3","6","7"])");
  const Result timed = run({"greene", "--json", "--oracle", kExampleWord});
  CHECK(timed.code == 0);
  CHECK(json_of(timed.out)["profile"].dump() ==
        R"(["16/5","513/100","311/50","683/100","178/25","719/100"])");
  CHECK(json_of(timed.out)["agreement"] == true);
  CHECK(run({"greene", "3421153"}).out == "profile: 3 6 7\nmode: fast\n");
}

TEST_CASE("equiv") {
  const Result yes = run({"equiv", "3421153", "3245113"});
  CHECK(yes.code == 0);
  CHECK(yes.out.rfind("equivalent=true", 0) == 0);
  const Result no = run({"equiv", "--assert", "12", "21"});
  CHECK(no.code == 1);
  CHECK(no.out.rfind("equivalent=false", 0) == 0);
  CHECK(run({"equiv", "12", "21"}).code == 0);
  const Result bfs = run({"equiv", "--json", "--bfs", "1000", "3421153", "3245113"});
  CHECK(json_of(bfs.out)["bfs_equivalent"] == true);

  const std::string move =
      R"({"kind":"k2","u_len":"3.18","y_len":"0.73","x_len":"0.73","z_len":"1.47","direction":"reverse"})";
  const Result moved = run({"equiv", "--json", "--assert", "--move", move,
                            "5^1.10 3^2.19 4^0.89 5^1.20 1^0.32 2^0.44",
                            "5^1.10 3^2.19 4^0.62 1^0.32 2^0.41 4^0.27 5^1.20 2^0.03"});
  CHECK(moved.code == 0);
  CHECK(json_of(moved.out)["equivalent"] == true);
  CHECK(json_of(moved.out)["move_matches"] == true);
  const std::string bad_move = R"({"kind":"k1","u_len":"0","x_len":"1","y_len":"1","z_len":"1"})";
  const Result invalid = run({"--json", "equiv", "--move", bad_move, "3^1 1^1 2^1"});
  CHECK(invalid.code == 1);
  CHECK(json_of(invalid.err)["error"]["kind"] == "invalid_move");
}

TEST_CASE("render") {
  const auto path = std::filesystem::temp_directory_path() / "tplactic_cli_test.svg";
  const Result r = run({"render", "3^0.82 5^0.08", "--svg", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("<rect") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("errors and exit codes") {
  const Result bad = run({"--json", "insert", "3^0"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  const Json e = json_of(bad.err);
  CHECK(e["error"]["kind"] == "parse");
  CHECK(e["error"]["message"].get<std::string>().find("offset 2") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(json_of(run({"--json", "bogus"}).err)["error"]["kind"] == "usage");
  CHECK(run({"insert"}).code == 2);
  CHECK(run({"equiv", "12"}).code == 2);
  CHECK(run({"greene", "--refine", "0", "1^1"}).code == 2);
  CHECK(run({"insert", "x"}).err.rfind("error: ", 0) == 0);
}

TEST_CASE("random and check are reproducible") {
  ::unsetenv("TIMED_PLACTIC_SEED");
  const Result a = run({"random", "--runs", "6", "--letters", "5", "--max-den", "7", "--seed", "9"});
  const Result b = run({"random", "--runs", "6", "--letters", "5", "--max-den", "7", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(parse_timed_word(a.out).runs().size() == 6);
  const Result c = run({"random", "--runs", "6", "--seed", "10"});
  CHECK(c.out != a.out);

  ::setenv("TIMED_PLACTIC_SEED", "9", 1);
  const Result env = run({"random", "--runs", "6", "--letters", "5", "--max-den", "7", "--seed", "123"});
  CHECK(env.out == a.out);
  ::setenv("TIMED_PLACTIC_SEED", "nope", 1);
  CHECK(run({"random"}).code == 2);
  ::unsetenv("TIMED_PLACTIC_SEED");

  const Result k1 = run({"check", "--json", "--iters", "20", "--seed", "5"});
  const Result k2 = run({"check", "--json", "--iters", "20", "--seed", "5"});
  CHECK(k1.code == 0);
  CHECK(k1.out == k2.out);
}
