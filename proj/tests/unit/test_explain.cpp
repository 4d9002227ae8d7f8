#include "ahc/explain.hpp"

#include "ahc/cubic_systems.hpp"
#include "ahc/prover.hpp"

#include <gtest/gtest.h>

namespace ahc {
namespace {

std::string narrate(int r, int d, std::int64_t n) {
  Prover prover;
  auto result = prover.prove(r, d, n);
  EXPECT_TRUE(result.ok());
  return explain(*result.certificate);
}

TEST(Explain, DegOneNarration) {
  const auto text = narrate(3, 5, 14);
  EXPECT_NE(text.find("Specialize b=7 nodes to the exceptional component"), std::string::npos) << text;
  EXPECT_NE(text.find("[DEG1]"), std::string::npos);
  EXPECT_NE(text.find("check limit_dim = -1"), std::string::npos) << text;
  EXPECT_NE(text.find("(see #"), std::string::npos);
}

TEST(Explain, TableNamesTheRow) {
  EXPECT_NE(narrate(2, 4, 5).find("Quartic2"), std::string::npos);
  EXPECT_NE(narrate(4, 3, 7).find("Cubic4"), std::string::npos);
}

TEST(Explain, CubicStepListsSubgoals) {
  Prover prover;
  auto result = prover.prove_system(cubic::ah3(8));
  ASSERT_TRUE(result.ok());
  const auto text = explain(*result.certificate);
  EXPECT_NE(text.find("[CUBIC_STEP]"), std::string::npos);
  EXPECT_NE(text.find("[CUBIC_K1]"), std::string::npos);
  EXPECT_NE(text.find("[CUBIC_K2]"), std::string::npos);
  EXPECT_NE(text.find("[CUBIC_MATCHING]"), std::string::npos);
}

}  // namespace
}  // namespace ahc
