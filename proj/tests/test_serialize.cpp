#include <gtest/gtest.h>

#include "sylvester/interpolation.hpp"
#include "sylvester/serialize.hpp"

using namespace sylvester;

namespace {

nlohmann::json s3_doc() { return to_json(build_by_interpolation(ExponentTuple({1, 2, 3}))); }

}  // namespace

TEST(Serialize, RoundTrip) {
  for (auto t : {symmetric_degrees(5), ExponentTuple({2, 4}), ExponentTuple({3, 3, 5})}) {
    const auto q = build_by_interpolation(t);
    const auto back = load(dump(q));
    EXPECT_EQ(back, q) << t.str();
    EXPECT_EQ(dump(back), dump(q));
    for (std::int64_t s = -10; s <= 40; ++s) EXPECT_EQ(eval(back, s), eval(q, s));
  }
}

TEST(Serialize, Layout) {
  const auto doc = to_json(build_by_interpolation(ExponentTuple({1})));
  EXPECT_EQ(doc["space"], "W");
  EXPECT_EQ(doc["sum_of_degrees"], 1);
  ASSERT_EQ(doc["coefficients"].size(), 1u);
  EXPECT_EQ(doc["coefficients"][0]["power"], 0);
  EXPECT_EQ(doc["coefficients"][0]["values"][0], "1/1");

  const auto s3 = s3_doc();
  EXPECT_EQ(s3["coefficients"][0]["power"], 2);
  EXPECT_EQ(s3["coefficients"][0]["values"][0], "1/12");
}

TEST(Serialize, VSpaceInputIsWrittenAsW) {
  const auto q = build_by_interpolation(ExponentTuple({1, 2}));
  EXPECT_EQ(dump(to_v_space(q)), dump(q));
}

TEST(Serialize, Rejects) {
  {
    auto d = s3_doc();
    d["coefficients"][2]["values"].erase(0);
    EXPECT_THROW(from_json(d), FormatError);
  }
  {
    auto d = s3_doc();
    d["coefficients"][0]["values"][0] = "2/24";
    EXPECT_THROW(from_json(d), FormatError);
  }
  {
    auto d = s3_doc();
    d["coefficients"][0]["values"][0] = "1/0";
    EXPECT_THROW(from_json(d), FormatError);
  }
  {
    auto d = s3_doc();
    d["space"] = "V";
    EXPECT_THROW(from_json(d), FormatError);
  }
  {
    auto d = s3_doc();
    d["coefficients"].erase(2);
    EXPECT_THROW(from_json(d), FormatError);
  }
  {
    auto d = s3_doc();
    d["sum_of_degrees"] = 7;
    EXPECT_THROW(from_json(d), FormatError);
  }
  {
    auto d = s3_doc();
    d["coefficients"][2]["period"] = 4;  // tau_3 = 6
    d["coefficients"][2]["values"] = {"0/1", "0/1", "0/1", "0/1"};
    EXPECT_THROW(from_json(d), FormatError);
  }
  {
    auto d = s3_doc();
    d["coefficients"][1]["power"] = 0;
    EXPECT_THROW(from_json(d), FormatError);
  }
  {
    auto d = s3_doc();
    d["coefficients"][0]["values"][0] = 3;
    EXPECT_THROW(from_json(d), FormatError);
  }
  EXPECT_THROW(load("{not json"), FormatError);
  EXPECT_THROW(load("[]"), FormatError);
}
