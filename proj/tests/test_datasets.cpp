#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace fuzzyshrink;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_csv(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return ParseError(ParseError::Kind::Empty, 0, 0, "");
}

}  // namespace

TEST(Builtins, PrintedRows) {
  const auto d1 = std::get<CrispInputDataset>(load_builtin(BuiltinId::Dataset1).data);
  EXPECT_EQ(d1.x(0, 0), 2.00);
  EXPECT_EQ(d1.x(0, 1), 0.00);
  EXPECT_EQ(d1.x(0, 2), 15.25);
  EXPECT_EQ(d1.y[0], Tfn::symmetric(5.83, 3.56));

  const auto d2 = std::get<CrispInputDataset>(load_builtin(BuiltinId::Dataset2).data);
  EXPECT_EQ(d2.x(3, 0), 4.0);
  EXPECT_EQ(d2.y[3], Tfn::symmetric(13.50, 2.60));

  const auto d3 = std::get<CrispInputDataset>(load_builtin(BuiltinId::Dataset3).data);
  EXPECT_EQ(d3.rows(), 15u);
  EXPECT_EQ(d3.x(11, 0), 6.446);
  EXPECT_EQ(d3.x(11, 1), 7.908);
  EXPECT_EQ(d3.x(11, 2), 1.9);
  EXPECT_EQ(d3.y[11], Tfn::symmetric(57.20, 8.580));
}

TEST(Builtins, Dataset3SpreadsAreFifteenPercent) {
  const auto d3 = std::get<CrispInputDataset>(load_builtin(BuiltinId::Dataset3).data);
  std::vector<double> centers;
  for (const auto& y : d3.y) centers.push_back(y.m());
  const auto expanded = spreads_from_centers(centers);
  for (std::size_t i = 0; i < centers.size(); ++i) EXPECT_NEAR(expanded[i].l(), d3.y[i].l(), 1e-12);
}

TEST(Builtins, Dataset4AnomalyPreservedAndFlagged) {
  const auto b = load_builtin(BuiltinId::Dataset4);
  const auto& d4 = std::get<FuzzyInputDataset>(b.data);
  ASSERT_EQ(d4.rows(), 8u);
  for (std::size_t i = 0; i < d4.rows(); ++i) EXPECT_EQ(d4.y[i], d4.x[i][0]);
  EXPECT_NE(b.notes.find("anomaly"), std::string::npos);
}

TEST(Builtins, IdsAndFixtures) {
  for (auto id : {BuiltinId::Dataset1, BuiltinId::Dataset2, BuiltinId::Dataset3, BuiltinId::Dataset4}) {
    EXPECT_EQ(parse_builtin_id(to_string(id)), id);
    const auto b = load_builtin(id);
    EXPECT_EQ(b.published_fitted.size(), responses(b.data).size());
    EXPECT_EQ(b.published_shrunk.size(), responses(b.data).size());
    EXPECT_EQ(b.fixture_models.size(), 2u);
  }
  EXPECT_THROW(parse_builtin_id("dataset9"), DomainError);
  EXPECT_EQ(load_builtin(BuiltinId::Dataset2).fixture("15a"), nullptr);
}

TEST(Csv, SymmetricCrispInput) {
  const auto d = parse_csv("x1,y_m,y_s\n1,8.00,1.80\n");
  const auto& c = std::get<CrispInputDataset>(d);
  EXPECT_EQ(c.x(0, 0), 1.0);
  EXPECT_EQ(c.y[0], Tfn::symmetric(8.00, 1.80));
  EXPECT_TRUE(c.symmetric);
}

TEST(Csv, FuzzyInputDispatch) {
  const auto d = parse_csv("x_m,x_s,y_m,y_s\n2,0.5,4.68,0.5\n3.5,0.5,5.51,0.5\n");
  const auto& f = std::get<FuzzyInputDataset>(d);
  EXPECT_EQ(f.x[1][0], Tfn::symmetric(3.5, 0.5));
  EXPECT_EQ(f.y[1], Tfn::symmetric(5.51, 0.5));
}

TEST(Csv, CommentsNameAndAsymmetricGroups) {
  const auto table = parse_csv_table(
      "# name: demo data\n# any other comment\nx1,x2,y_l,y_m,y_r,yhat_m,yhat_s\n"
      "1,2,0.5,3,1.5,2.9,0.25\n\n 4 , 5 ,0,6,2,6.1,0\n");
  const auto& c = std::get<CrispInputDataset>(table.data);
  EXPECT_EQ(c.name, "demo data");
  EXPECT_EQ(c.rows(), 2u);
  EXPECT_EQ(c.x(1, 1), 5.0);
  EXPECT_EQ(c.y[0], Tfn(0.5, 3, 1.5));
  EXPECT_FALSE(c.symmetric);
  ASSERT_EQ(table.fitted.size(), 2u);
  EXPECT_EQ(table.fitted[0], Tfn::symmetric(2.9, 0.25));
}

TEST(Csv, MixedInputsEmbedCrispAsZeroSpread) {
  const auto d = parse_csv("a,b_m,b_s,y_m,y_s\n1,2,0.5,3,1\n");
  const auto& f = std::get<FuzzyInputDataset>(d);
  EXPECT_EQ(f.x[0][0], Tfn::crisp(1));
  EXPECT_EQ(f.x[0][1], Tfn::symmetric(2, 0.5));
}

TEST(Csv, ParseErrorsAreDistinctAndLocated) {
  auto neg = parse_failure("x1,y_m,y_s\n1,8.00,-1\n");
  EXPECT_EQ(neg.kind(), ParseError::Kind::NegativeSpread);
  EXPECT_EQ(neg.row(), 1u);
  EXPECT_EQ(neg.column(), 3u);
  EXPECT_NE(std::string(neg.what()).find("negative spread at row 1"), std::string::npos);

  auto missing = parse_failure("x1,y_l,y_m\n1,2,3\n");
  EXPECT_EQ(missing.kind(), ParseError::Kind::MissingColumn);

  auto no_response = parse_failure("x1,x2\n1,2\n");
  EXPECT_EQ(no_response.kind(), ParseError::Kind::MissingColumn);

  auto text = parse_failure("x1,y_m,y_s\n1,8.00,1.8\n2,abc,1.0\n");
  EXPECT_EQ(text.kind(), ParseError::Kind::NonNumeric);
  EXPECT_EQ(text.row(), 2u);
  EXPECT_EQ(text.column(), 2u);

  auto ragged = parse_failure("x1,y_m,y_s\n1,8.00\n");
  EXPECT_EQ(ragged.kind(), ParseError::Kind::RaggedRow);
  EXPECT_EQ(ragged.row(), 1u);

  auto dup = parse_failure("x1,x1,y_m,y_s\n1,1,8,1\n");
  EXPECT_EQ(dup.kind(), ParseError::Kind::BadHeader);

  auto mixed = parse_failure("x1,y_m,y_s,y_l\n1,8,1,1\n");
  EXPECT_EQ(mixed.kind(), ParseError::Kind::BadHeader);

  auto empty = parse_failure("# only a comment\n\n");
  EXPECT_EQ(empty.kind(), ParseError::Kind::Empty);
}

TEST(Csv, RoundTripAllBuiltins) {
  for (auto id : {BuiltinId::Dataset1, BuiltinId::Dataset2, BuiltinId::Dataset3, BuiltinId::Dataset4}) {
    const auto b = load_builtin(id);
    EXPECT_EQ(parse_csv(write_csv(b.data)), b.data) << to_string(id);
    const auto table = parse_csv_table(write_csv(b.data, b.published_fitted));
    EXPECT_EQ(table.data, b.data) << to_string(id);
    EXPECT_EQ(table.fitted, b.published_fitted) << to_string(id);
  }
}

TEST(Csv, FittedColumnsAddYhatGroup) {
  const auto b = load_builtin(BuiltinId::Dataset2);
  const std::string text = write_csv(b.data, b.published_fitted);
  EXPECT_NE(text.find("x1,y_m,y_s,yhat_m,yhat_s\n"), std::string::npos);
  EXPECT_THROW(write_csv(b.data, std::vector<Tfn>{Tfn(0, 0, 0)}), DomainError);
}

TEST(Csv, EmptyDatasetIsHeaderOnly) {
  CrispInputDataset d;
  d.x.resize(0, 2);
  d.symmetric = true;
  const std::string text = write_csv(d);
  EXPECT_EQ(text, "x1,x2,y_m,y_s\n");
  EXPECT_EQ(parse_csv(text), Dataset(d));
}

TEST(CsvProperty, RandomRoundTripAtFullPrecision) {
  fstest::Gen gen(601);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(1, 10);
    if (gen.coin()) {
      CrispInputDataset d;
      d.x = gen.inputs(static_cast<std::size_t>(n), static_cast<std::size_t>(gen.integer(1, 4)), -1e3, 1e3);
      const bool sym = gen.coin();
      for (int i = 0; i < n; ++i) d.y.push_back(sym ? gen.symmetric(1e4, 1e2) : gen.tfn(1e4, 1e2));
      d.symmetric = all_symmetric(d.y);
      d.name = trial % 2 ? "" : "random";
      EXPECT_EQ(parse_csv(write_csv(d)), Dataset(d));
    } else {
      FuzzyInputDataset d;
      const int p = gen.integer(1, 3);
      for (int i = 0; i < n; ++i) {
        std::vector<Tfn> row;
        for (int j = 0; j < p; ++j) row.push_back(gen.tfn(1e-3, 1e-4));
        d.x.push_back(row);
        d.y.push_back(gen.tfn());
      }
      EXPECT_EQ(parse_csv(write_csv(d)), Dataset(d));
    }
  }
}

TEST(Csv, FingerprintIsStableAndSensitive) {
  const auto b = load_builtin(BuiltinId::Dataset2);
  EXPECT_EQ(dataset_fingerprint(b.data), dataset_fingerprint(load_builtin(BuiltinId::Dataset2).data));
  EXPECT_EQ(dataset_fingerprint(b.data).size(), 16u);
  EXPECT_NE(dataset_fingerprint(b.data), dataset_fingerprint(load_builtin(BuiltinId::Dataset1).data));
}
