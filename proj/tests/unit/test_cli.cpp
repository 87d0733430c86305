#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "edgecut/corpus.hpp"
#include "edgecut/graph_io.hpp"
#include "edgecut/parallel.hpp"
#include "../support/fixtures.hpp"

using namespace edgecut;
namespace fs = std::filesystem;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("edgecut_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const Multigraph& g) {
  const auto p = scratch() / name;
  write_graph_file(p, g);
  return p.string();
}
}  // namespace

TEST_CASE("analyze") {
  const auto d = run({"analyze", write("d.mg", fixtures::doubled_c4())});
  CHECK(d.code == 0);
  CHECK(d.out.find("\"maximally_edge_connected\": false") != std::string::npos);

  const auto c6 = run({"analyze", write("c6.mg", fixtures::cycle(6))});
  CHECK(c6.out.find("\"super_lambda\": false") != std::string::npos);
  CHECK(c6.out.find("\"lambda_prime_optimal\": true") != std::string::npos);

  const auto star = run({"analyze", write("star.mg", fixtures::star(4))});
  CHECK(star.out.find("\"lambda_prime\": \"undefined\"") != std::string::npos);

  const auto text = run({"analyze", "--text", write("c6.mg", fixtures::cycle(6))});
  CHECK(text.out.find("lambda: 2") != std::string::npos);
}

TEST_CASE("atoms") {
  const auto c6 = run({"atoms", "--kind", "lambda", write("c6.mg", fixtures::cycle(6))});
  CHECK(c6.code == 0);
  CHECK(c6.out.find("\"r\": 1") != std::string::npos);

  const auto k3 = run({"atoms", "--kind", "superatom", write("k3.mg", gen_km_x_k2(3))});
  CHECK(k3.out.find("\"superatom_size\": 3") != std::string::npos);

  const auto k23 = run({"atoms", "--kind", "lambda-prime", write("k23.mg", fixtures::k23())});
  CHECK(k23.out.find("\"r_prime\": 2") != std::string::npos);

  const auto big = run({"atoms", "--exhaustive-limit", "8", write("c10.mg", fixtures::cycle(10))});
  CHECK(big.code == 1);
  CHECK(big.err.find("8") != std::string::npos);
}

TEST_CASE("check and exit codes") {
  CHECK(run({"check", write("d.mg", fixtures::doubled_c4())}).code == 0);
  CHECK(run({"check", write("c8.mg", fixtures::cycle(8))}).code == 0);
  CHECK(run({"check", write("star3.mg", fixtures::star(3))}).code == 2);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"analyze", (scratch() / "missing.mg").string()}).code == 1);

  std::ofstream(scratch() / "bad.mg") << "mgraph 3 1\n0 0 1\n";
  const auto bad = run({"analyze", (scratch() / "bad.mg").string()});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);

  const auto split = run({"analyze", write("split.mg", Multigraph::build(4, {{0, 1, 1}, {2, 3, 1}}))});
  CHECK(split.code == 1);
  CHECK(split.out.find("components") != std::string::npos);
}

TEST_CASE("corpus manifest of even cycles") {
  std::ofstream(scratch() / "manifest.txt") << "# even cycles\ncycle 4\ncycle 6\ncycle 8\nmultiplied_cycle 6 2 1\n";
  const auto out_dir = scratch() / "corpus";
  const auto r = run({"corpus", (scratch() / "manifest.txt").string(), out_dir.string()});
  CHECK(r.code == 0);
  CHECK(fs::exists(out_dir / "summary.tsv"));
  CHECK(fs::exists(out_dir / "000_cycle.mg"));
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(read_graph_file(out_dir / "002_cycle.mg") == fixtures::cycle(8));
}

TEST_CASE("search-xi writes a witness that rechecks") {
  const auto path = (scratch() / "witness.mg").string();
  const auto r = run({"search-xi", "--out", path});
  REQUIRE(r.code == 0);
  const auto a = run({"analyze", path});
  CHECK(a.code == 0);
  CHECK(a.out.find("\"xi_bound_holds\": false") != std::string::npos);
}

TEST_CASE("reports are deterministic across runs and worker counts") {
  const auto p = write("k4.mg", gen_km_x_k2(4));
  set_worker_count(1);
  const auto one = run({"analyze", p});
  set_worker_count(4);
  const auto four = run({"analyze", p});
  set_worker_count(0);
  CHECK(one.out == four.out);
  CHECK(one.out == run({"analyze", p}).out);
}
