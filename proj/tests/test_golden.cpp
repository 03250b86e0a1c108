#include <gtest/gtest.h>

#include <map>

#include "support/golden.hpp"

using namespace benchviz;

TEST(Golden, AtLeastThreeCapturesPerDialect) {
  std::map<std::string, int> per_dialect;
  for (const auto& c : testkit::golden_cases()) ++per_dialect[c.dialect_dir];
  EXPECT_GE(per_dialect["postgres"], 3);
  EXPECT_GE(per_dialect["mysql"], 3);
  EXPECT_GE(per_dialect["mariadb"], 3);
}

TEST(Golden, PipelineMatchesExpectedBytes) {
  for (const auto& c : testkit::golden_cases()) {
    SCOPED_TRACE(c.capture.string());
    ASSERT_TRUE(std::filesystem::exists(c.expected));
    EXPECT_EQ(testkit::golden_pipeline(testkit::slurp(c.capture)), testkit::slurp(c.expected));
  }
}

TEST(Golden, DialectDetectedFromDirectory) {
  for (const auto& c : testkit::golden_cases()) {
    EXPECT_EQ(to_string(detect_dialect(testkit::slurp(c.capture))), c.dialect_dir) << c.capture;
  }
}

TEST(Golden, HierarchyRoundTrip) {
  for (const auto& c : testkit::golden_cases()) {
    const auto capture = testkit::slurp(c.capture);
    const auto dialect = detect_dialect(capture);
    const auto tree = normalize(parse_plan(capture, dialect), dialect);
    EXPECT_EQ(parse_hierarchy_json(to_hierarchy_json(tree)), tree) << c.capture;
  }
}
