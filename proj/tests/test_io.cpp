#include "mutloop/io.hpp"
#include "mutloop/mutloop.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace mutloop;
using io::Json;

namespace {

std::string data(const std::string& name) { return std::string(MUTLOOP_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Io, SeedFiles) {
  EXPECT_EQ(io::seed_from_json(io::read_json_file(data("a2.json"))), ExchangeMatrix({{0, 1}, {-1, 0}}));
  const auto markov = io::seed_from_json(io::read_json_file(data("markov.json")));
  EXPECT_EQ(markov, triangulation_to_matrix(torus_triangulation()));
  // The other sign convention is read transposed.
  EXPECT_EQ(io::seed_from_json(io::read_json_file(data("markov_fz.json"))), markov);
  EXPECT_EQ(io::seed_from_json(io::to_json(markov)), markov);
}

TEST(Io, SeedErrors) {
  EXPECT_THROW(io::read_json_file(data("missing.json")), std::invalid_argument);
  EXPECT_THROW(io::seed_from_json(Json::parse(R"({"b": [[0, 1], [1, 0]]})")), std::invalid_argument);
  EXPECT_THROW(io::seed_from_json(Json::parse(R"({"b": [[0, 1]]})")), std::invalid_argument);
  EXPECT_THROW(io::seed_from_json(Json::parse(R"({"n": 3, "b": [[0, 1], [-1, 0]]})")), std::invalid_argument);
  EXPECT_THROW(io::seed_from_json(Json::parse(R"({"b": [[0, 1], [-1, 0]], "convention": "xyz"})")), std::invalid_argument);
  EXPECT_THROW(io::seed_from_json(Json::parse(R"({"b": [[0, 1.5], [-1.5, 0]]})")), std::invalid_argument);
  EXPECT_THROW(io::seed_from_json(Json::parse(R"([1, 2])")), std::invalid_argument);
}

TEST(Io, LoopFiles) {
  const auto a2 = io::seed_from_json(io::read_json_file(data("a2.json")));
  const auto pent = io::loop_spec_from_json(io::read_json_file(data("a2_pentagon.json")), 2);
  EXPECT_EQ(pent.path, (MutationPath{0, 1, 0, 1, 0}));
  ASSERT_TRUE(pent.perm);
  EXPECT_EQ(*pent.perm, Permutation({1, 0}));
  EXPECT_NO_THROW(make_loop(a2, pent.path, *pent.perm));
  EXPECT_THROW(io::loop_spec_from_json(io::read_json_file(data("a2_pentagon_bad_perm.json")), 2), std::invalid_argument);
  EXPECT_FALSE(io::loop_spec_from_json(io::read_json_file(data("markov_kk.json")), 3).perm);
  const auto lr = io::loop_spec_from_json(io::read_json_file(data("markov_lr.json")), 3);
  const MutationLoop expected = mapping_class_loop("torus-LR");
  EXPECT_EQ(lr.path, expected.path);
  EXPECT_EQ(*lr.perm, expected.closing_perm);
  EXPECT_THROW(io::loop_spec_from_json(Json::parse(R"({"path": [0]})"), 3), std::invalid_argument);
  EXPECT_THROW(io::loop_spec_from_json(Json::parse(R"({"path": [4]})"), 3), std::invalid_argument);
  EXPECT_THROW(io::loop_spec_from_json(Json::parse(R"({"perm": [1, 2, 3]})"), 3), std::invalid_argument);
}

TEST(Io, PathLists) {
  EXPECT_EQ(io::parse_path_list("1,2,1", 2), (MutationPath{0, 1, 0}));
  EXPECT_TRUE(io::parse_path_list("", 2).empty());
  EXPECT_THROW(io::parse_path_list("1,x", 2), std::invalid_argument);
  EXPECT_THROW(io::parse_path_list("1,3", 2), std::invalid_argument);
  EXPECT_THROW(io::parse_path_list("1,,2", 2), std::invalid_argument);
  EXPECT_THROW(io::parse_path_list("2a", 2), std::invalid_argument);
}

TEST(Io, Points) {
  const auto w = io::point_from_json(io::read_json_file(data("markov_point.json")));
  EXPECT_EQ(w, (TropicalPoint{Rational(1), Rational(1, 2), Rational(-3)}));
  EXPECT_EQ(io::to_json(w).dump(), R"(["1","1/2","-3"])");
  EXPECT_EQ(io::point_from_json(Json::parse("[2, \"-4/6\"]"))[1], Rational(-2, 3));
  EXPECT_THROW(io::point_from_json(Json::parse("[1.5]")), std::invalid_argument);
  EXPECT_THROW(io::point_from_json(Json::parse("[\"1/0\"]")), std::invalid_argument);
  EXPECT_THROW(io::point_from_json(Json::parse("{}")), std::invalid_argument);
}

TEST(Io, BigIntegersBecomeStrings) {
  const BigInt big = BigInt(1) << 80;
  EXPECT_TRUE(io::to_json(big).is_string());
  EXPECT_EQ(io::integer_from_json(io::to_json(big)), big);
  EXPECT_EQ(io::to_json(BigInt(-5)), Json(-5));
  EXPECT_TRUE(io::to_json(std::nan("")).is_null());
}

TEST(Io, Triangulations) {
  const auto torus = io::triangulation_from_json(io::read_json_file(data("torus.json")));
  EXPECT_EQ(torus, torus_triangulation());
  const auto sphere = io::triangulation_from_json(io::read_json_file(data("sphere4.json")));
  EXPECT_EQ(sphere, sphere4_triangulation());
  EXPECT_EQ(io::triangulation_from_json(io::to_json(sphere)), sphere);
  EXPECT_THROW(io::triangulation_from_json(Json::parse(R"({"genus": 1, "punctures": 1, "triangles": [[1, 2, 3], [1, 2, 2]]})")),
               std::invalid_argument);
  EXPECT_THROW(io::triangulation_from_json(Json::parse(R"({"genus": 1, "punctures": 1})")), std::invalid_argument);
}

TEST(Io, ReportsAreDeterministicAndComplete) {
  const MutationLoop lr = mapping_class_loop("torus-LR");
  const auto r = detect_sign_stability(lr);
  const Json j = io::to_json(r, false);
  EXPECT_EQ(j.at("verdict"), "verified-on-samples");
  EXPECT_EQ(j.at("stable_sign"), "-+");
  EXPECT_FALSE(j.contains("rays"));
  EXPECT_TRUE(io::to_json(r, true).contains("rays"));
  EXPECT_EQ(io::to_json(detect_sign_stability(lr), true).dump(), io::to_json(r, true).dump());
  const auto unverified = io::to_json(detect_sign_stability(make_loop(ExchangeMatrix{{0, 1}, {-1, 0}}, {0, 1, 0, 1, 0}, Permutation({1, 0}))), false);
  EXPECT_TRUE(unverified.at("lambda").is_null());
}

TEST(Io, GrowthTraceTsv) {
  const auto t = norm_growth_trace(IntMatrix::identity(1), 2);
  EXPECT_EQ(io::to_tsv(t), "n\tvalue\n1\t0\n2\t0\n");
}

TEST(Io, ReproducerFile) {
  HarnessConfig cfg;
  cfg.count = 1;
  const auto res = run_conjecture_harness(cfg);
  ASSERT_EQ(res.cases.size(), 1u);
  const auto path = std::filesystem::temp_directory_path() / "mutloop_reproducer_test.json";
  io::write_reproducer(path.string(), res.cases[0]);
  const Json j = io::read_json_file(path.string());
  EXPECT_EQ(j.at("family"), res.cases[0].family);
  const auto b = io::seed_from_json(j.at("loop").at("seed"));
  const auto spec = io::loop_spec_from_json(j.at("loop"), b.rank());
  EXPECT_NO_THROW(make_loop(b, spec.path, *spec.perm));
  std::filesystem::remove(path);
}
