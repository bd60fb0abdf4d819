#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgeo/cij.hpp"
#include "cgeo/config.hpp"
#include "cgeo/morse.hpp"

using namespace cgeo;

namespace {

const char* kGood = R"({
  "manifold": { "d": 2, "n": 1 },
  "field": { "radicand": 2 },
  "geodesics": [
    { "name": "c1", "initial_index": 1, "blocks": [ { "type": "R", "angle": "1/2√2" } ] },
    { "name": "c2", "initial_index": 3, "blocks": [ { "type": "R", "angle": "1/2sqrt2" } ] }
  ]
})";

}  // namespace

TEST_CASE("well-formed config parses") {
  const GeodesicConfig cfg = parse_config(kGood);
  CHECK(cfg.mc.d == 2);
  CHECK(cfg.mc.n == 1);
  CHECK(cfg.radicand == 2);
  REQUIRE(cfg.geodesics.size() == 2);
  CHECK(cfg.geodesics[0].name == "c1");
  CHECK(cfg.geodesics[1].initial_index == 3);
  CHECK(cfg.geodesics[0].decomp.blocks[0].angle == ExactScalar(Rat(0), Rat(1, 2), 2));
  CHECK(cfg.dn_minus_1() == 1);
  CHECK(validate_config(cfg, ValidationMode::BumpyElliptic).empty());
}

TEST_CASE("malformed configs are rejected with located errors") {
  auto rejects = [](const std::string& text, const char* needle) {
    try {
      parse_config(text);
      FAIL("expected ConfigError for ", needle);
    } catch (const ConfigError& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  rejects("{", "syntax");
  rejects(R"({"manifold":{"d":2,"n":1},"field":{"radicand":4},"geodesics":[]})", "radicand");
  rejects(R"({"manifold":{"d":3,"n":2},"field":{"radicand":2},"geodesics":[]})", "");
  // Floating literals anywhere in the document are fatal.
  rejects(R"({"manifold":{"d":2,"n":1},"field":{"radicand":2},"geodesics":[
    {"name":"c1","initial_index":1,"blocks":[{"type":"R","angle":0.7071}]}]})",
          "floating-point");
  // Duplicate names.
  rejects(R"({"manifold":{"d":2,"n":1},"field":{"radicand":2},"geodesics":[
    {"name":"c1","initial_index":1,"blocks":[{"type":"R","angle":"1/2√2"}]},
    {"name":"c1","initial_index":3,"blocks":[{"type":"R","angle":"1/2√2"}]}]})",
          "duplicate");
  // Dimension mismatch: S^2 needs half-dimension 1, this block sums to 2.
  rejects(R"({"manifold":{"d":2,"n":1},"field":{"radicand":2},"geodesics":[
    {"name":"c1","initial_index":1,"blocks":[{"type":"N2","angle":"1/2√2","nontrivial":true}]}]})",
          "dn-1");
  // Angle outside (0,1).
  rejects(R"({"manifold":{"d":2,"n":1},"field":{"radicand":2},"geodesics":[
    {"name":"c1","initial_index":1,"blocks":[{"type":"R","angle":"3/2"}]}]})",
          "angle");
  // Wrong field.
  rejects(R"({"manifold":{"d":2,"n":1},"field":{"radicand":5},"geodesics":[
    {"name":"c1","initial_index":1,"blocks":[{"type":"R","angle":"1/2√2"}]}]})",
          "c1.blocks[0]");
  // Unknown block type.
  rejects(R"({"manifold":{"d":2,"n":1},"field":{"radicand":2},"geodesics":[
    {"name":"c1","initial_index":1,"blocks":[{"type":"Q"}]}]})",
          "unknown block type");
  rejects(R"({"manifold":{"d":2,"n":1},"field":{"radicand":2},"geodesics":[
    {"name":"c1","initial_index":-1,"blocks":[{"type":"R","angle":"1/2√2"}]}]})",
          "initial_index");
}

TEST_CASE("emit/parse round trip is the identity on parsed configs") {
  const GeodesicConfig cfg = parse_config(kGood);
  const std::string text = emit_config(cfg);
  const GeodesicConfig again = parse_config(text);
  CHECK(emit_config(again) == text);  // canonical form is a fixed point
  REQUIRE(again.geodesics.size() == cfg.geodesics.size());
  for (size_t k = 0; k < cfg.geodesics.size(); ++k) {
    CHECK(again.geodesics[k].name == cfg.geodesics[k].name);
    CHECK(again.geodesics[k].initial_index == cfg.geodesics[k].initial_index);
    CHECK(again.geodesics[k].decomp.blocks[0].angle ==
          cfg.geodesics[k].decomp.blocks[0].angle);
  }
}

TEST_CASE("all block types survive the round trip") {
  GeodesicConfig cfg;
  cfg.mc = ManifoldClass::make(4, 2);  // half-dimension 7
  cfg.radicand = 5;
  GeodesicRecord rec;
  rec.name = "mixed";
  rec.initial_index = 6;
  rec.decomp.blocks = {BlockSpec::n1(1, -1),
                       BlockSpec::n1(-1, 0),
                       BlockSpec::h(-1),
                       BlockSpec::rot(ExactScalar(Rat(1, 3))),
                       BlockSpec::rot(ExactScalar(Rat(0), Rat(1, 4), 5)),
                       BlockSpec::n2(ExactScalar(Rat(0), Rat(1, 5), 5), true)};
  cfg.geodesics = {rec};
  const GeodesicConfig again = parse_config(emit_config(cfg));
  REQUIRE(again.geodesics.size() == 1);
  const auto& blocks = again.geodesics[0].decomp.blocks;
  REQUIRE(blocks.size() == 6);
  CHECK(blocks[0].type == BlockType::N1);
  CHECK(blocks[0].a == -1);
  CHECK(blocks[1].lambda == -1);
  CHECK(blocks[2].h_sign == -1);
  CHECK(blocks[3].angle == ExactScalar(Rat(1, 3)));
  CHECK(blocks[4].angle == ExactScalar(Rat(0), Rat(1, 4), 5));
  CHECK(blocks[5].nontrivial);
}

TEST_CASE("synthesized configs satisfy their contract") {
  for (auto [d, n, seed] : {std::tuple<long, long, unsigned long>{2, 1, 1},
                            {2, 1, 7},
                            {3, 1, 1},
                            {2, 2, 3}}) {
    const GeodesicConfig cfg = synthesize_config(d, n, seed, 2000);
    INFO("d=", d, " n=", n, " seed=", seed);
    CHECK(static_cast<long>(cfg.geodesics.size()) == cfg.mc.expected_count());
    CHECK(validate_config(cfg, ValidationMode::BumpyElliptic).empty());
    CHECK(resonance_check(cfg.mc, cfg.geodesics).pass);
    // Claim 2 structure: a unique minimal geodesic with i = d - 1 at m = 1.
    CHECK(claim2_check(cfg).pass);
    // Determinism: same seed, same config.
    CHECK(emit_config(synthesize_config(d, n, seed, 2000)) == emit_config(cfg));
  }
}

TEST_CASE("synthesis exhaustion is reported") {
  CHECK_THROWS_AS(synthesize_config(2, 1, 0, 0), SearchExhausted);
}
