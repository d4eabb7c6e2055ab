// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <string>

#include "test_support.hpp"

using namespace modent;
using namespace modent::testing;

TEST(JsonIo, AlgebraElementEncoding) {
  const AlgebraElement a{{1.5, -2.0}, {0.0, 0.25}};
  EXPECT_EQ(to_json(a).dump(), "[[1.5,-2.0],[0.0,0.25]]");
  EXPECT_EQ(algebra_element_from_json(to_json(a)), a);
  EXPECT_THROW(algebra_element_from_json(json::parse("[[1.0]]")), FormatError);
  EXPECT_THROW(algebra_element_from_json(json::parse("[]")), FormatError);
}

TEST(JsonIo, ModuleVectorSchema) {
  const ModuleVector x(2, 1, {{1.0, 0.0}, {0.0, -1.0}});
  EXPECT_EQ(to_json(x).dump(), R"({"d":1,"entries":[[[1.0,0.0]],[[0.0,-1.0]]],"n":2})");
  EXPECT_EQ(module_vector_from_json(to_json(x)), x);
}

// gen -> serialize -> parse -> serialize is the identity on bytes and keeps
// the frame Parseval, for every generator.
TEST(JsonIo, FrameRoundTripProperty) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = uniform_size(rng, 1, 6);
    const std::size_t d = uniform_size(rng, 1, 4);
    Frame frame;
    switch (trial % 3) {
      case 0: frame = gen_onb(n, d, rng()); break;
      case 1: frame = gen_random_parseval(n, uniform_size(rng, n, 10), d, rng()); break;
      default: frame = gen_fourier_pair(n, d).second; break;
    }
    const std::string text = serialize(to_json(frame));
    const Frame back = frame_from_json(json::parse(text));
    EXPECT_EQ(back.vectors(), frame.vectors());
    EXPECT_TRUE(is_parseval(back, 1e-10));
    EXPECT_EQ(serialize(to_json(back)), text);
  }
}

TEST(JsonIo, MalformedFrameDiagnostics) {
  json frame = to_json(gen_onb(2, 2, 1));
  auto message = [](const json& j) -> std::string {
    try {
      frame_from_json(j);
    } catch (const FormatError& e) {
      return e.what();
    }
    return "";
  };

  json missing = frame;
  missing.erase("m");
  EXPECT_NE(message(missing).find("missing field \"m\""), std::string::npos);

  json bad_entry = frame;
  bad_entry["vectors"][1]["entries"][0][1] = "oops";
  EXPECT_NE(message(bad_entry).find("$.vectors[1].entries[0][1]"), std::string::npos);

  json short_fiber = frame;
  short_fiber["vectors"][0]["entries"][1] = json::array({json::array({1.0, 0.0})});
  EXPECT_NE(message(short_fiber).find("$.vectors[0].entries[1]"), std::string::npos);

  json wrong_m = frame;
  wrong_m["m"] = 3;
  EXPECT_NE(message(wrong_m).find("m = 3"), std::string::npos);

  json too_few = frame;
  too_few["m"] = 1;
  too_few["vectors"].erase(1);
  EXPECT_NE(message(too_few).find("cannot span"), std::string::npos);
}

TEST(JsonIo, FramesDigest) {
  const Frame a = gen_onb(3, 2, 1);
  const Frame b = gen_onb(3, 2, 2);
  EXPECT_EQ(frames_digest(a, b).size(), 64u);
  EXPECT_EQ(frames_digest(a, b), frames_digest(a, b));
  EXPECT_NE(frames_digest(a, b), frames_digest(b, a));
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(JsonIo, ReportsSeparateTimestamp) {
  const auto [a, b] = gen_fourier_pair(2, 1);
  const auto report = verify(a, b, BoundKind::deutsch, 10, 1);
  const json doc = wrap_report("verify", to_json(report));
  EXPECT_TRUE(doc["header"].contains("timestamp"));
  EXPECT_FALSE(doc["report"].contains("timestamp"));
  EXPECT_EQ(doc["report"]["trial_gaps"].size(), 10u);
  const std::string csv = trials_csv(report);
  EXPECT_EQ(csv.rfind("trial,min_fiber_gap,worst_fiber\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
}
