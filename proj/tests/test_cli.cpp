#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using namespace gbx;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run gbx_run(std::vector<std::string> args) {
  args.insert(args.begin(), "gbx");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(GBX_DATA_DIR) + "/" + name; }

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("gbx_cli_test_" + std::to_string(::getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const char* name, const char* content) {
    std::ofstream(dir / name) << content;
    return (dir / name).string();
  }
};

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

std::string section(const std::string& out, const std::string& title) {
  auto start = out.find("== " + title + " ==\n");
  if (start == std::string::npos) return "<missing>";
  start = out.find('\n', start) + 1;
  auto end = out.find("== ", start);
  return out.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

TEST_CASE("compute example1") {
  Run r = gbx_run({"compute", data("example1.txt")});
  CHECK(r.code == cli::kOk);
  CHECK(r.err.empty());
  CHECK(section(r.out, "rgb") == "x+3/2*y-1/2*z\ny^2-1/3*y*z+1/18*z^2-1/18*z\n");
  CHECK(contains(section(r.out, "start"), "f1 = -4x^2-9y^2+z\n"));
  CHECK(contains(section(r.out, "gb"), "g3 = x+3/2*y-1/2*z\n"));
  CHECK(section(r.out, "mgb") == "x+3/2*y-1/2*z\ny^2-1/3*y*z+1/18*z^2-1/18*z\n");
  CHECK(contains(section(r.out, "trace"), "[buchberger] add g4 = y^2-1/3*y*z+1/18*z^2-1/18*z\n"));
}

TEST_CASE("compute options") {
  Scratch s;
  Run single = gbx_run({"compute", s.file("x.txt", "x\n")});
  CHECK(single.code == 0);
  CHECK(section(single.out, "trace").empty());
  CHECK(section(single.out, "rgb") == "x\n");

  Run off = gbx_run({"compute", data("example2.txt"), "--trace", "off"});
  CHECK_FALSE(contains(off.out, "== trace =="));
  CHECK(section(off.out, "rgb") == "x+z^3+z-3\ny-z^3-1\n");

  Run json = gbx_run({"compute", data("example2.txt"), "--trace", "json"});
  CHECK(contains(section(json.out, "trace"), R"("poly":"x+y+z-4")"));

  Run opt = gbx_run({"compute", data("example1.txt"), "--mode", "optimized", "--trace", "off"});
  CHECK(opt.code == 0);
  CHECK(section(opt.out, "rgb") == section(gbx_run({"compute", data("example1.txt")}).out, "rgb"));
}

TEST_CASE("compute is reproducible") {
  CHECK(gbx_run({"compute", data("example1.txt")}).out == gbx_run({"compute", data("example1.txt")}).out);
}

TEST_CASE("parse and usage errors exit 1") {
  Scratch s;
  Run zero = gbx_run({"compute", s.file("zero.txt", "x-x\n")});
  CHECK(zero.code == cli::kParseError);
  CHECK(zero.out.empty());
  CHECK(contains(zero.err, "line 1"));

  Run bad = gbx_run({"compute", s.file("bad.txt", "x\nx+1.5\n")});
  CHECK(bad.code == cli::kParseError);
  CHECK(contains(bad.err, "line 2, offset 3"));

  CHECK(gbx_run({"compute", s.file("empty.txt", "# nothing\n")}).code == cli::kParseError);
  CHECK(gbx_run({}).code == cli::kParseError);
  CHECK(gbx_run({"frobnicate"}).code == cli::kParseError);
  CHECK(gbx_run({"compute", data("example1.txt"), "--trace", "xml"}).code == cli::kParseError);
  CHECK(gbx_run({"export", data("example1.txt")}).code == cli::kParseError);
  CHECK(gbx_run({"export", data("example1.txt"), "--out", s.dir.string(), "--res", "1"}).code == cli::kParseError);
  CHECK(gbx_run({"export", data("example1.txt"), "--out", s.dir.string(), "--bounds", "3:1"}).code == cli::kParseError);
  CHECK(gbx_run({"export", data("example1.txt"), "--out", s.dir.string(), "--bounds", "a:b"}).code == cli::kParseError);
  CHECK(gbx_run({"--help"}).code == cli::kOk);
}

TEST_CASE("missing file exits 3") {
  Run r = gbx_run({"compute", "/nonexistent/gbx/input.txt"});
  CHECK(r.code == cli::kIoError);
  CHECK(contains(r.err, "/nonexistent/gbx/input.txt"));
  CHECK(gbx_run({"planarity", "/nonexistent/gbx/input.txt"}).code == cli::kIoError);
}

TEST_CASE("planarity exit codes") {
  Run e2 = gbx_run({"planarity", data("example2.txt")});
  CHECK(e2.code == cli::kOk);
  CHECK(contains(e2.out, "witness: x+y+z-4\n"));
  CHECK(contains(e2.out, "witness_provenance: FoundInReduction\n"));

  Run spheres = gbx_run({"planarity", data("spheres.txt")});
  CHECK(spheres.code == cli::kInconsistent);
  CHECK(contains(spheres.out, "consistent: false\n"));

  Run parab = gbx_run({"planarity", data("paraboloids.txt")});
  CHECK(parab.code == cli::kOk);
  CHECK(contains(parab.out, "oracle_form: z\n"));

  Scratch s;
  CHECK(gbx_run({"planarity", s.file("sphere.txt", "x^2+y^2+z^2-1\n")}).code == cli::kNotPlanar);

  Run traced = gbx_run({"planarity", data("example2.txt"), "--trace", "text", "--report", "json"});
  CHECK(contains(traced.out, "== report ==\n{"));
  CHECK(contains(traced.out, "[reduce]"));
}

TEST_CASE("export writes three OBJ files and a manifest") {
  Scratch s;
  fs::path out = s.dir / "scene";
  Run r = gbx_run({"export", data("example2.txt"), "--out", out.string(), "--bounds", "-5:5", "--res", "32"});
  CHECK(r.code == cli::kOk);
  for (const char* name : {"start.obj", "gb.obj", "rgb.obj", "scene.manifest"}) CHECK(fs::exists(out / name));
  std::ifstream rgb(out / "rgb.obj");
  std::stringstream text;
  text << rgb.rdbuf();
  CHECK(contains(text.str(), "o plane_x+y+z-4\n"));
  CHECK(contains(r.out, "rgb.obj"));

  fs::path out1 = s.dir / "ex1";
  CHECK(gbx_run({"export", data("example1.txt"), "--out", out1.string(), "--res", "16"}).code == 0);
  std::ifstream rgb1(out1 / "rgb.obj");
  std::stringstream t1;
  t1 << rgb1.rdbuf();
  std::size_t objects = 0, planes = 0;
  for (std::string line; std::getline(t1, line);) {
    objects += line.rfind("o ", 0) == 0;
    planes += line.rfind("o plane_", 0) == 0;
  }
  CHECK(objects == 3);
  CHECK(planes == 1);
}

TEST_CASE("export of an inconsistent system warns and omits the plane") {
  Scratch s;
  fs::path out = s.dir / "spheres";
  Run r = gbx_run({"export", data("spheres.txt"), "--out", out.string(), "--res", "16"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.err, "warning"));
  CHECK(fs::exists(out / "start.obj"));
  std::ifstream manifest(out / "scene.manifest");
  std::stringstream m;
  m << manifest.rdbuf();
  CHECK_FALSE(contains(m.str(), "kind: plane"));
}

TEST_CASE("export to an unwritable location exits 3") {
  Scratch s;
  std::string blocker = s.file("blocker", "x");
  CHECK(gbx_run({"export", data("example1.txt"), "--out", blocker + "/sub", "--res", "4"}).code == cli::kIoError);
}
