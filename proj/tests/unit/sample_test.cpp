#include <limits>

#include "test_support.hpp"

using namespace rankcorr;
using rankcorr::testing::vec;

namespace {

ErrorCode code_of(const Vector<double>& xs, const Vector<double>& ys) {
  try {
    validate_sample(xs, ys);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::InvalidConfig;
}

}  // namespace

TEST(ValidateSample, AcceptsWellFormedInput) {
  const auto s = validate_sample(vec({1, 2, 3}), vec({4, 5, 6}));
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.ys()(2), 6.0);
  EXPECT_EQ(s.swapped().xs()(0), 4.0);
}

TEST(ValidateSample, RejectsBadInput) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(code_of(vec({1, 2}), vec({1})), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of(vec({1}), vec({1})), ErrorCode::TooSmall);
  EXPECT_EQ(code_of(vec({1, nan}), vec({2, 3})), ErrorCode::NonFinite);
  EXPECT_EQ(code_of(vec({1, 2}), vec({inf, 3})), ErrorCode::NonFinite);
}

TEST(ValidateSample, AcceptsEigenExpressions) {
  const Vector<double> base = vec({1, 2, 3, 4});
  const auto s = validate_sample(base * 2.0, base.reverse());
  EXPECT_EQ(s.xs()(3), 8.0);
  EXPECT_EQ(s.ys()(0), 4.0);
}

TEST(EstimatorKind, NamesRoundTrip) {
  for (auto kind : kAllEstimators) EXPECT_EQ(parse_estimator(to_string(kind)), kind);
  EXPECT_FALSE(parse_estimator("hoeffding").has_value());
}
