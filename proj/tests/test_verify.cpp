#include "canonical.hpp"
#include "doctest.h"
#include "padyn/error.hpp"
#include "padyn/verify.hpp"

using namespace padyn;

namespace {

VerificationReport run(const std::string& tag, long p, long N, const char* a, Budget b = {}) {
  return verify_theorem(tag, FamilyParams::make(p, N, parse_rational(a)), b);
}

bool holds(const VerificationReport& r) {
  for (const auto& e : r.evidence) {
    if (!e.holds) return false;
  }
  return !r.evidence.empty();
}

}  // namespace

TEST_SUITE("verification") {

TEST_CASE("canonical instances pass") {
  for (const auto& c : canonical::instances) {
    CAPTURE(c.tag);
    const auto r = run(c.tag, c.p, c.N, c.a);
    CHECK(r.pass);
    CHECK(holds(r));
    for (const auto& e : r.evidence) {
      if (e.exactness == Exactness::DepthBounded) CHECK(e.depth.has_value());
    }
  }
}

TEST_CASE("further instances") {
  CHECK(run("sy3", 2, 3, "2").pass);
  CHECK(run("sy3", 2, 4, "2").pass);
  CHECK(run("sy3", 2, 2, "2").pass);
  CHECK(run("sy3", 2, 2, "4").pass);
  CHECK(run("sy3", 2, 6, "2").pass);
  CHECK(run("sy4", 5, 2, "1").pass);
  CHECK(run("sy2", 7, 3, "7").pass);
  CHECK(run("sy2", 5, 4, "5").pass);
  CHECK(run("sy1", 3, 4, "1/27").pass);
  CHECK(run("sy1", 5, 3, "1/125").pass);
  CHECK(run("dsy1", 3, 3, "2/9").pass);
  CHECK(run("dsy1", 2, 3, "3/4").pass);
  CHECK(run("dsy1", 5, 2, "1/5").pass);
  CHECK(run("dsy3", 3, 3, "1").pass);
  CHECK(run("dsy3", 3, 6, "1").pass);
  CHECK(run("dsy3", 3, 2, "7").pass);
}

TEST_CASE("hypothesis mismatches") {
  try {
    (void)run("sy1", 5, 2, "1");
    FAIL("expected RegimeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RegimeMismatch);
  }
  CHECK_THROWS_AS(run("dsy2", 3, 2, "1"), Error);
  CHECK_THROWS_AS(run("sy5", 3, 2, "1"), Error);
}

TEST_CASE("seeded runs are reproducible") {
  Budget b;
  b.samples = 30;
  const auto fp = FamilyParams::make(3, 3, parse_rational("1/9"));
  const auto r1 = verify_theorem("sy1", fp, b, 7);
  const auto r2 = verify_theorem("sy1", fp, b, 7);
  REQUIRE(r1.evidence.size() == r2.evidence.size());
  for (size_t i = 0; i < r1.evidence.size(); ++i) {
    CHECK(r1.evidence[i].claim == r2.evidence[i].claim);
    CHECK(r1.evidence[i].data == r2.evidence[i].data);
  }
}

}
