#include <filesystem>
#include <fstream>
#include <sstream>

#include "qrb/config.hpp"
#include "qrb/csv.hpp"
#include "qrb/error.hpp"
#include "test_support.hpp"

using namespace qrb;

TEST_CASE("csv format") {
  Table t{{"k", "value"}, {{1, 0.5}, {2, -1e-300}}};
  CHECK(format_csv(t) == "k,value\n1,0.5\n2,-1e-300\n");
  CHECK(format_csv(Table{{"a", "b"}, {}}) == "a,b\n");
}

TEST_CASE("csv round trip") {
  qrb::test::Gen g;
  Table t{{"x", "y", "z"}, {}};
  for (int i = 0; i < 100; ++i) t.rows.push_back({g.uniform(-1e6, 1e6), g.uniform(-1, 1) * 1e-200, double(i)});
  const Table back = parse_csv(format_csv(t));
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
}

TEST_CASE("csv rejects malformed input") {
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), Error);
  CHECK_THROWS_AS(parse_csv("a,b\n1,x\n"), Error);
  CHECK_THROWS_AS(parse_csv(""), Error);
}

TEST_CASE("csv file output") {
  const auto path = std::filesystem::temp_directory_path() / "qrb_csv_test.csv";
  emit_csv(Table{{"h"}, {}}, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "h\n");
  std::filesystem::remove(path);
}

TEST_CASE("key-value parsing") {
  const auto kv = parse_key_values("# comment\n\nK = 3\n  theta=0.5   # trailing\ncenter = 1, -2\n");
  CHECK(kv.size() == 3);
  CHECK(kv.at("K") == "3");
  CHECK(kv.at("theta") == "0.5");
  CHECK_THROWS_AS(parse_key_values("K 3\n"), Error);
  CHECK_THROWS_AS(parse_key_values(" = 3\n"), Error);
  try {
    load_key_values("/nonexistent/qrb.cfg");
    FAIL("expected Config");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfig);
  }
}

TEST_CASE("run config") {
  RunConfig cfg;
  cfg.apply(parse_key_values("K = 3\ncenter = 1, -2\nnx = 10\nsigma = 4\n"));
  CHECK(cfg.K == 3);
  CHECK(cfg.center == cplx(1, -2));
  CHECK(cfg.nx == 10);
  CHECK(cfg.grid().nx == 10);
  const QAMap m = cfg.map();
  CHECK(m.stretch().K() == 3);
  CHECK(cfg.solver(m).sigma == 4);

  RunConfig automatic;
  CHECK(automatic.solver(automatic.map()).sigma == SolverConfig::defaults_for(automatic.map()).sigma);

  // theta is reduced into the half-open interval.
  RunConfig wrapped;
  wrapped.apply({{"theta", "3.14159265358979"}});
  CHECK(std::abs(wrapped.map().stretch().theta()) < 1e-12);

  CHECK_THROWS_AS(RunConfig().apply({{"bogus", "1"}}), Error);
  CHECK_THROWS_AS(RunConfig().apply({{"K", "two"}}), Error);
  CHECK_THROWS_AS(RunConfig().apply({{"nx", "1.5"}}), Error);

  RunConfig shrink;
  shrink.K = 0.5;
  CHECK_THROWS_AS(shrink.map(), Error);
  RunConfig bad_grid;
  bad_grid.nx = 0;
  try {
    bad_grid.grid();
    FAIL("expected Config");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfig);
  }
}
