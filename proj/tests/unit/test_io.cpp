#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cmpoly/error.hpp"
#include "cmpoly/io/serialize.hpp"
#include "cmpoly/io/space_file.hpp"
#include "cmpoly/liegroup/catalog.hpp"
#include "oracles.hpp"

using namespace cmpoly;

TEST(Serialize, RationalsAndPolynomials) {
  EXPECT_EQ(io::to_json(make_rational(-3, 6)), "-1/2");
  EXPECT_EQ(io::rational_from_json("7/2"), make_rational(7, 2));
  EXPECT_EQ(io::rational_from_json(3), make_rational(3));
  oracle::Random rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiPoly p = rng.poly(3, 4, 5);
    EXPECT_EQ(io::poly_from_json(io::to_json(p), 3), p);
  }
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  EXPECT_EQ(io::to_json(x1 * x1 + MultiPoly::constant(2, 1)).dump(), R"([[[2,0],"1"],[[0,0],"1"]])");
  EXPECT_THROW(io::poly_from_json(nlohmann::json::parse(R"([[[1],"1"]])"), 2), UsageError);
}

TEST(SpaceFile, RoundTripsCatalogEntries) {
  for (const auto* spec : {"heisenberg5", "su2_berger(1/2)", "flat_2"}) {
    const auto pres = lie::catalog_from_spec(spec);
    const auto back = io::parse_space(io::space_to_json(pres));
    EXPECT_EQ(back.dim(), pres.dim());
    EXPECT_EQ(back.metric(), pres.metric());
    for (std::size_t i = 0; i < pres.dim(); ++i)
      for (std::size_t j = 0; j < pres.dim(); ++j)
        for (std::size_t k = 0; k < pres.dim(); ++k) EXPECT_EQ(back.structure(i, j, k), pres.structure(i, j, k));
  }
}

TEST(SpaceFile, LoadsFromDiskAndRejectsBadInput) {
  const auto path = std::filesystem::temp_directory_path() / "cmpoly_test_space.json";
  {
    std::ofstream out(path);
    out << R"({"name": "su2+R", "dim": 4,
               "brackets": [[1, 2, ["0", "0", "1", "0"]], [2, 3, ["1", "0", "0", "0"]], [3, 1, ["0", "1", "0", "0"]]],
               "metric": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]})";
  }
  const auto pres = io::load_space(path.string());
  EXPECT_EQ(pres.dim(), 4u);
  EXPECT_EQ(pres.structure(1, 0, 2), -1);
  std::filesystem::remove(path);

  EXPECT_EQ(io::load_space("heisenberg3").dim(), 3u);
  auto bad_index = nlohmann::json::parse(R"({"dim": 2, "brackets": [[0, 1, ["0", "0"]]]})");
  EXPECT_THROW(io::parse_space(bad_index), UsageError);
  auto bad_metric = nlohmann::json::parse(R"({"dim": 2, "brackets": [], "metric": [["1","0"]]})");
  EXPECT_THROW(io::parse_space(bad_metric), UsageError);
  EXPECT_THROW(io::load_space_file("/nonexistent/space.json"), UsageError);
}
