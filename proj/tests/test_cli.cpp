#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "tinlab/cli.hpp"
#include "tinlab/io.hpp"

using namespace tinlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& out) {
  std::vector<nlohmann::json> lines;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) lines.push_back(nlohmann::json::parse(line));
  return lines;
}

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("tinlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    put("c4.gr", "p tw 4 4\n1 2\n2 3\n3 4\n1 4\n");
    put("c4.td", "s td 2 3 4\nb 1 1 2 3\nb 2 1 3 4\n1 2\n");
    put("bad.td", "s td 2 2 4\nb 1 1 2 3\nb 2 1 3\n1 2\n");
    put("c4.fam", "f 4\nh 1: 1\nh 1: 2\nh 1: 3\nh 1.5: 4\n");
    put("c4.lists", "1 1\n2 1\n3 1 2\n4 2\n");
    put("p3.gr", "p tw 3 2\n1 2\n2 3\n");
  }
  ~Workspace() { fs::remove_all(dir); }
  void put(const std::string& name, const std::string& text) { io::write_file((dir / name).string(), text); }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("verify") {
  Workspace w;
  auto ok = run({"verify", "--graph", w("c4.gr"), "--td", w("c4.td")});
  CHECK(ok.code == 0);
  auto lines = records(ok.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["record"] == "command");
  CHECK(lines[1]["files"]["graph"]["sha256"].get<std::string>().size() == 64);
  CHECK(lines[2]["payload"]["alpha"] == 2);
  CHECK(lines[3]["checks"]["td_valid"] == "pass");

  auto bad = run({"verify", "--graph", w("c4.gr"), "--td", w("bad.td")});
  CHECK(bad.code == 1);
  CHECK(records(bad.out)[2]["payload"]["axiom"] == "edge-uncovered");
}

TEST_CASE("pack") {
  Workspace w;
  auto r = run({"pack", "--graph", w("c4.gr"), "--td", w("c4.td"), "--family", w("c4.fam")});
  CHECK(r.code == 0);
  auto lines = records(r.out);
  CHECK(lines[2]["payload"]["weight"] == "2.5");
  CHECK(lines[2]["payload"]["chosen"] == nlohmann::json::array({2, 4}));
  CHECK(lines[3]["checks"]["packing_feasible"] == "pass");
  CHECK(lines[3]["all_pass"] == true);

  auto odd = run({"pack", "--graph", w("c4.gr"), "--td", w("c4.td"), "--family", w("c4.fam"), "--distance", "3"});
  CHECK(odd.code == 1);
  CHECK(odd.err.find("NP-hard") != std::string::npos);

  auto budget = run({"pack", "--graph", w("c4.gr"), "--td", w("c4.td"), "--family", w("c4.fam"), "--kcap", "1"});
  CHECK(budget.code == 1);
}

TEST_CASE("power and lift") {
  Workspace w;
  auto r = run({"power", "--k", "3", "--graph", w("p3.gr"), "--td", w("p3.gr"), "--out", w("x")});
  CHECK(r.code == 1);
  w.put("p3.td", "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
  r = run({"power", "--k", "3", "--graph", w("p3.gr"), "--td", w("p3.td"), "--out", w("cube")});
  CHECK(r.code == 0);
  CHECK(io::read_file(w("cube.gr")) == "p tw 3 3\n1 2\n1 3\n2 3\n");
  CHECK(fs::exists(w("cube.td")));
  CHECK(records(r.out)[3]["checks"]["power_td_valid"] == "pass");
  CHECK(run({"power", "--k", "2", "--graph", w("p3.gr"), "--td", w("p3.td")}).code == 1);
  CHECK(run({"power", "--k", "2", "--graph", w("p3.gr")}).code == 0);

  auto lift = run({"lift", "--graph", w("c4.gr"), "--td", w("c4.td"), "--family", w("c4.fam")});
  CHECK(lift.code == 0);
  CHECK(records(lift.out)[3]["checks"]["lifted_td_valid"] == "pass");
}

TEST_CASE("solve") {
  Workspace w;
  auto r = run({"solve", "--graph", w("c4.gr"), "--td", w("c4.td"), "--property", "bipartite"});
  CHECK(r.code == 0);
  auto payload = records(r.out)[2]["payload"];
  CHECK(payload["weight"] == "4");
  CHECK(payload["F"].size() == 4);

  auto listed = run({"solve", "--graph", w("c4.gr"), "--td", w("c4.td"), "--property", "listcolor:2", "--lists",
                     w("c4.lists")});
  CHECK(listed.code == 0);
  CHECK(records(listed.out)[2]["payload"]["weight"] == "3");
  CHECK(records(listed.out)[3]["checks"]["property"] == "pass");

  auto target = run({"solve", "--graph", w("c4.gr"), "--td", w("c4.td"), "--property", "forest", "--target"});
  CHECK(target.code == 0);
  CHECK(records(target.out)[2]["payload"]["weight"] == "2");
  CHECK(records(target.out)[3]["checks"]["property_and_target"] == "pass");

  CHECK(run({"solve", "--graph", w("c4.gr"), "--td", w("c4.td"), "--property", "listcolor:2"}).code == 1);
  CHECK(run({"solve", "--graph", w("c4.gr"), "--td", w("c4.td"), "--property", "color:9"}).code == 1);
}

TEST_CASE("gen and oracle") {
  Workspace w;
  auto g = run({"gen", "chordal", "--n", "10", "--density", "0.4", "--seed", "5", "--out", w("ch")});
  CHECK(g.code == 0);
  CHECK(records(g.out)[3]["checks"]["chordal"] == "pass");
  CHECK(run({"verify", "--graph", w("ch.gr"), "--td", w("ch.td")}).code == 0);

  auto arcs = run({"gen", "circular-arc", "--points", "6", "--arcs", "0:2,1:2,2:2,3:2,4:2,5:2"});
  CHECK(arcs.code == 0);
  CHECK(records(arcs.out)[2]["payload"]["td_alpha"] == 2);

  w.put("c5.gr", "p tw 5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
  auto forked = run({"gen", "forked", "--pattern", w("c5.gr"), "--k", "4"});
  CHECK(forked.code == 0);
  CHECK(records(forked.out)[3]["checks"]["power_restricted_isomorphic_to_h"] == "pass");

  for (const char* kind : {"split", "kab", "path", "cycle"}) {
    std::vector<std::string> args{"gen", kind};
    if (std::string(kind) == "split") args.insert(args.end(), {"--clique", "3", "--independent", "4"});
    if (std::string(kind) == "kab") args.insert(args.end(), {"--a", "2", "--b", "3"});
    if (std::string(kind) == "path" || std::string(kind) == "cycle") args.insert(args.end(), {"--n", "5"});
    CHECK(run(args).code == 0);
  }

  auto tin = run({"oracle", "tin", "--graph", w("c4.gr")});
  CHECK(tin.code == 0);
  CHECK(records(tin.out)[2]["payload"]["tin"] == 2);
  auto induced = run({"oracle", "induced", "--graph", w("c4.gr"), "--property", "forest"});
  CHECK(records(induced.out)[2]["payload"]["weight"] == "3");
  auto packing = run({"oracle", "packing", "--graph", w("c4.gr"), "--family", w("c4.fam")});
  CHECK(records(packing.out)[2]["payload"]["weight"] == "2.5");
}

TEST_CASE("usage errors and determinism") {
  Workspace w;
  CHECK(run({"verify", "--graph", w("c4.gr"), "--td", w("c4.td"), "--bogus"}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"verify", "--graph", w("missing.gr"), "--td", w("c4.td")}).code == 1);
  std::vector<std::string> args{"solve", "--graph", w("c4.gr"), "--td", w("c4.td"), "--property", "color:3"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> gen{"gen", "chordal", "--n", "12", "--seed", "3"};
  CHECK(run(gen).out == run(gen).out);
}
