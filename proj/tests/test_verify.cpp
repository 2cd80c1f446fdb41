#include <catch_amalgamated.hpp>

#include <set>

#include "leibniz/errors.hpp"
#include "leibniz/verify.hpp"

using namespace leibniz;

TEST_CASE("natural ordering of claim ids") {
  CHECK(natural_less("a/n=9", "a/n=10"));
  CHECK_FALSE(natural_less("a/n=10", "a/n=9"));
  CHECK(natural_less("F1.x/n=3", "F2.x/n=3"));
  CHECK(natural_less("abc", "abd"));
  CHECK(natural_less("ab", "abc"));
  CHECK_FALSE(natural_less("same", "same"));
}

TEST_CASE("range validation") {
  CHECK_THROWS_AS(run_claims(2, 5), BadParams);
  CHECK_THROWS_AS(run_claims(5, 4), BadParams);
  CHECK_THROWS_AS(run_claims(3, 13), BadParams);
}

TEST_CASE("a short run is sorted, unique and fail-free") {
  const VerificationReport r = run_claims(3, 5);
  REQUIRE_FALSE(r.claims.empty());
  std::set<std::string> ids;
  for (std::size_t i = 0; i < r.claims.size(); ++i) {
    ids.insert(r.claims[i].claim_id);
    if (i > 0) CHECK(natural_less(r.claims[i - 1].claim_id, r.claims[i].claim_id));
    INFO(r.claims[i].claim_id << " expected " << r.claims[i].expected << " computed " << r.claims[i].computed);
    CHECK(r.claims[i].status != ClaimStatus::Fail);
    if (r.claims[i].status == ClaimStatus::DiscrepancyDocumented) {
      CHECK(r.claims[i].claim_id.rfind("F3.hl2_dim/", 0) == 0);
    }
  }
  CHECK(ids.size() == r.claims.size());
  CHECK_FALSE(r.any_fail());
  CHECK(r.count(ClaimStatus::Pass) + r.count(ClaimStatus::DiscrepancyDocumented) == r.claims.size());

  const Claim* z = r.find("F1.zl2_dim/n=4");
  REQUIRE(z != nullptr);
  CHECK(z->computed == "19");
  CHECK(z->status == ClaimStatus::Pass);
  const Claim* h = r.find("F3.hl2_dim/n=4");
  REQUIRE(h != nullptr);
  CHECK(h->expected == "10");
  CHECK(h->computed == "9");
  CHECK(h->status == ClaimStatus::DiscrepancyDocumented);
  CHECK(r.find("no.such/claim") == nullptr);
}

TEST_CASE("reports do not depend on the thread count") {
  const VerificationReport a = run_claims(4, 6, {1, 6});
  const VerificationReport b = run_claims(4, 6, {4, 6});
  CHECK(render_text(a) == render_text(b));
  CHECK(render_json(a).dump() == render_json(b).dump());
}

TEST_CASE("rendered forms") {
  const VerificationReport r = run_claims(3, 3);
  const std::string text = render_text(r);
  CHECK(text.find("F1.zl2_dim/n=3") != std::string::npos);
  CHECK(text.find("DISCREPANCY_DOCUMENTED") != std::string::npos);
  CHECK(text.find("n = 3..3") != std::string::npos);
  const io::Json j = render_json(r);
  CHECK(j["claims"].size() == r.claims.size());
  CHECK(j["claims"][0].contains("expected"));
  CHECK(j["claims"][0]["expected"].contains("source"));
  CHECK(j["summary"].is_object());
}
