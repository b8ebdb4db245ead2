#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "kchoose/io.hpp"
#include "kchoose/named_graphs.hpp"

using namespace kchoose;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "kchoose");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("kchoose_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string graph(const std::string& name, const Graph& g) const { return write(name, graph_to_json(g).dump()); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("documented command examples") {
  const Scratch s;
  CHECK(run({"recognize", s.graph("chocolate.json", chocolate().graph), "--problem", "23ch"}).code == 1);
  CHECK(run({"choosable", s.graph("k25.json", complete_bipartite(2, 5)), "--uniform", "2", "--palette", "3"}).code == 0);
  const Run core = run({"core", s.graph("p3.json", path_graph(3))});
  CHECK(core.code == 0);
  const Json k1 = parse_json(core.out);
  CHECK(k1["vertices"].size() == 1);
  CHECK(k1["edges"].empty());
  const Run f1 = run({"verify-paper", "--filter", "F1"});
  CHECK(f1.code == 0);
  const Json report = parse_json(f1.out);
  REQUIRE(report["facts"].size() == 1);
  CHECK(report["facts"][0]["status"] == "pass");
}

TEST_CASE("fact runner with an unmatched filter") {
  const Run r = run({"verify-paper", "--filter", "Z9"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["facts"].empty());
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(run({"verify-paper", "--filter", "("}).code == 2);
}

TEST_CASE("color") {
  const Scratch s;
  const std::string g = s.graph("p3.json", path_graph(3));
  const std::string lists = s.write("l.json", R"({"palette": 3, "lists": {"v1": [1, 2], "v2": [1, 2], "v3": [2, 3]}})");
  const Run ok = run({"color", g, lists});
  CHECK(ok.code == 0);
  CHECK(parse_json(ok.out) == parse_json(R"({"colors": {"v1": 1, "v2": 2, "v3": 3}})"));
  const Run pinned = run({"color", g, lists, "--pin", "v2=1"});
  CHECK(pinned.code == 0);
  CHECK(parse_json(pinned.out)["colors"]["v1"] == 2);
  CHECK(run({"color", g, lists, "--pin", "v2=3"}).code == 2);
  CHECK(run({"color", g, lists, "--pin", "nope=1"}).code == 2);
  CHECK(run({"color", g, lists, "--pin", "v2"}).code == 2);
  const std::string bad = s.write("bad.json", R"({"palette": 1, "lists": {"v1": [1], "v2": [1], "v3": [1]}})");
  CHECK(run({"color", g, bad}).code == 1);
}

TEST_CASE("malformed input reports the position") {
  const Scratch s;
  const std::string broken = s.write("broken.json", R"({"vertices": ["a", "b"], "edges": [["a", "b"]] )");
  const Run r = run({"core", broken});
  CHECK(r.code == 2);
  CHECK(r.err.find("byte") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("choosable verdicts, witness and budget") {
  const Scratch s;
  const Run no = run({"choosable", "chocolate", "--uniform", "2", "--palette", "3"});
  CHECK(no.code == 1);
  const Json j = parse_json(no.out);
  CHECK(j["verdict"] == "not-choosable");
  CHECK(j["witness"]["palette"] == 3);
  CHECK(run({"--budget", "5", "choosable", "kbip:2,5", "--uniform", "2", "--palette", "3"}).code == 3);
  CHECK(run({"choosable", "kbip:2,5", "--uniform", "2", "--palette", "3", "--budget", "5"}).code == 3);
  const std::string sizes = s.write("f.json", R"({"sizes": {"b1": 3}, "default": 2})");
  CHECK(run({"choosable", "kbip:2,2", "--sizes", sizes, "--palette", "3"}).code == 0);
  CHECK(run({"choosable", "kbip:2,2", "--palette", "3"}).code == 2);
  CHECK(run({"choosable", "kbip:2,2", "--uniform", "2", "--sizes", sizes, "--palette", "3"}).code == 2);
  CHECK(run({"choosable", "kbip:2,2", "--uniform", "4", "--palette", "3"}).code == 2);
}

TEST_CASE("critical and recognize") {
  const Scratch s;
  const std::string sizes = s.write("f.json", R"({"sizes": {"b1": 2}, "default": 1})");
  const Run crit = run({"critical", "kbip:1,2", sizes, "--palette", "3", "--subset", "w1,w2"});
  CHECK(crit.code == 0);
  CHECK(parse_json(crit.out)["status"] == "critical");
  const std::string twos = s.write("g.json", R"({"default": 2})");
  CHECK(run({"critical", "cycle:4", twos, "--palette", "3", "--subset", "v1"}).code == 1);
  CHECK(run({"critical", "cycle:4", twos, "--palette", "3", "--subset", "zz"}).code == 2);
  CHECK(run({"recognize", "theta:2,2,4", "--problem", "2ch"}).code == 0);
  CHECK(run({"recognize", "kbip:2,4", "--problem", "2ch"}).code == 1);
  CHECK(run({"recognize", "kbip:2,4", "--problem", "3ch"}).code == 2);
}

TEST_CASE("blocks, export-dot and gadgets") {
  const Scratch s;
  const Json blocks = parse_json(run({"blocks", "gamma:3,3,0"}).out);
  CHECK(blocks["blocks"].size() == 2);
  CHECK(blocks["cut_vertices"].size() == 1);
  CHECK(blocks["block_cactus"] == true);
  const Run dot = run({"export-dot", "cycle:3"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph", 0) == 0);

  const Run h = run({"gadget", "H", "--out", s.path("h.json"), "--lists", s.path("hl.json")});
  CHECK(h.code == 0);
  const Graph hg = load_graph(s.path("h.json"));
  CHECK(hg.order() == 7);
  CHECK(lists_from_json(read_json_file(s.path("hl.json")), hg).palette == 4);
  CHECK(parse_json(h.out)["name"] == "H");
  CHECK(run({"gadget", "transmitter", "3", "1"}).code == 0);
  CHECK(run({"gadget", "transmitter", "3"}).code == 2);
  CHECK(run({"gadget", "G", "E", "H"}).code == 0);
  CHECK(run({"gadget", "bipcrit", "3"}).code == 0);
  const std::string hyper = s.write("h.json", R"({"X": ["a", "b", "c"], "F": [["a", "b"], ["b", "c"]]})");
  CHECK(parse_json(run({"gadget", "hyperred", hyper}).out)["palette"] == 3);
  CHECK(run({"gadget", "c6preext", "kbip:3,1", "b1", "b2", "b3"}).code == 0);
  const Run g3 = run({"gadget", "G3", "--lists", s.path("none.json")});
  CHECK(g3.code == 0);
  CHECK(g3.err.find("warning") != std::string::npos);
  CHECK_FALSE(fs::exists(s.path("none.json")));
  CHECK(run({"gadget", "nosuch"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--jobs", "0", "core", "cycle:3"}).code == 2);
}

TEST_CASE("output is byte-identical across runs and job counts") {
  const std::vector<std::vector<std::string>> commands = {
      {"choosable", "theta:2,2,2,4", "--uniform", "2", "--palette", "3"},
      {"choosable", "kbip:2,4", "--uniform", "2", "--palette", "4"},
      {"choosable", "chocolate", "--uniform", "2", "--palette", "3", "--no-symmetry"},
      {"verify-paper", "--filter", "F(1|3|7|8|12|15)"},
      {"gadget", "candidate148"},
  };
  for (const auto& cmd : commands) {
    std::vector<std::string> one = {"--jobs", "1"};
    std::vector<std::string> many = {"--jobs", "4"};
    one.insert(one.end(), cmd.begin(), cmd.end());
    many.insert(many.end(), cmd.begin(), cmd.end());
    const Run a = run(one), b = run(many), c = run(one);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}
