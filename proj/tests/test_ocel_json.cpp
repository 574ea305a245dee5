#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <json.hpp>

#include "octekg/ocel_json.hpp"
#include "support/random_log.hpp"
#include "support/testing.hpp"

using namespace octekg;
using octekg::testing::GenOptions;
using octekg::testing::random_log;
using octekg::testing::ts;

namespace {

constexpr const char* kMinimalDoc = R"({
  "objectTypes": [{"name": "Order", "attributes": []}],
  "eventTypes": [{"name": "Create", "attributes": []}],
  "objects": [{"id": "o1", "type": "Order", "attributes": [], "relationships": []}],
  "events": [{
    "id": "e1", "type": "Create", "time": "2024-01-01T00:00:00Z",
    "attributes": [], "relationships": [{"objectId": "o1", "qualifier": "order"}]
  }]
})";

}  // namespace

TEST(ParseOcelJson, MinimalDocument) {
  const OcelLog log = parse_ocel_json(kMinimalDoc);
  EXPECT_EQ(log.events().size(), 1u);
  EXPECT_EQ(log.objects().size(), 1u);
  ASSERT_EQ(log.e2o().size(), 1u);
  EXPECT_EQ(log.e2o()[0].event_id, "e1");
  EXPECT_EQ(log.e2o()[0].qualifier, "order");
  EXPECT_EQ(log.e2o()[0].object_id, "o1");
}

TEST(ParseOcelJson, RunningExampleResolvesPointsAtReadTime) {
  const OcelLog log = octekg::testing::load_running_example();
  auto v = resolve_attribute_at(log, "a1", "Points", ts("2023-09-10T10:00:00Z"));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, AttributeValue::integer(2));
  EXPECT_TRUE(validate_log(log).empty());
}

TEST(ParseOcelJson, UndeclaredObjectReferenceFails) {
  const char* doc = R"({
    "objectTypes": [], "eventTypes": [{"name": "Create", "attributes": []}],
    "objects": [],
    "events": [{"id": "e1", "type": "Create", "time": "2024-01-01T00:00:00Z",
                "attributes": [], "relationships": [{"objectId": "ghost"}]}]
  })";
  try {
    parse_ocel_json(doc);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "$.events[0].relationships[0].objectId");
    EXPECT_NE(std::string(e.what()).find("ghost"), std::string::npos);
  }
}

TEST(ParseOcelJson, MalformedJsonCarriesByteOffset) {
  try {
    parse_ocel_json("{\"objectTypes\": [,]}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_TRUE(e.byte_offset().has_value());
  }
}

TEST(ParseOcelJson, MissingTopLevelFieldNamesPath) {
  try {
    parse_ocel_json(R"({"objectTypes": [], "eventTypes": [], "objects": []})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("events"), std::string::npos);
  }
}

TEST(ParseOcelJson, DuplicateIdsFail) {
  const char* doc = R"({
    "objectTypes": [{"name": "T", "attributes": []}], "eventTypes": [],
    "objects": [{"id": "x", "type": "T"}, {"id": "x", "type": "T"}],
    "events": []
  })";
  EXPECT_THROW(parse_ocel_json(doc), ParseError);
}

TEST(ParseOcelJson, UnparseableTimestampFails) {
  const char* doc = R"({
    "objectTypes": [], "eventTypes": [{"name": "A", "attributes": []}],
    "objects": [],
    "events": [{"id": "e1", "type": "A", "time": "yesterday", "attributes": [], "relationships": []}]
  })";
  try {
    parse_ocel_json(doc);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "$.events[0].time");
  }
}

TEST(ParseOcelJson, UnknownTypeReferenceFails) {
  const char* doc = R"({
    "objectTypes": [], "eventTypes": [],
    "objects": [{"id": "o1", "type": "Ghost"}],
    "events": []
  })";
  EXPECT_THROW(parse_ocel_json(doc), ParseError);
}

TEST(ParseOcelJson, EventAttributeWithTimeIsRejected) {
  const char* doc = R"({
    "objectTypes": [],
    "eventTypes": [{"name": "A", "attributes": [{"name": "x", "type": "integer"}]}],
    "objects": [],
    "events": [{"id": "e1", "type": "A", "time": "2024-01-01T00:00:00Z",
                "attributes": [{"name": "x", "value": 1, "time": "2024-01-01T00:00:00Z"}],
                "relationships": []}]
  })";
  EXPECT_THROW(parse_ocel_json(doc), ParseError);
}

TEST(ParseOcelJson, UntimedObjectAttributeGetsPreLogTimestampAndWarning) {
  const char* doc = R"({
    "objectTypes": [{"name": "T", "attributes": [{"name": "v", "type": "integer"}]}],
    "eventTypes": [{"name": "A", "attributes": []}],
    "objects": [{"id": "o1", "type": "T", "attributes": [{"name": "v", "value": 7}]}],
    "events": [{"id": "e1", "type": "A", "time": "2024-06-01T12:00:00Z",
                "attributes": [], "relationships": []}]
  })";
  std::vector<std::string> warnings;
  const OcelLog log = parse_ocel_json(doc, &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  ASSERT_EQ(log.object_attribute_values().size(), 1u);
  EXPECT_EQ(log.object_attribute_values()[0].time,
            Timestamp::from_millis(ts("2024-06-01T12:00:00Z").millis() - 1));
  // the initial value is visible at every event time
  EXPECT_TRUE(resolve_attribute_at(log, "o1", "v", ts("2024-06-01T12:00:00Z")).has_value());
}

TEST(ParseOcelJson, MissingQualifierBecomesEmptyString) {
  const char* doc = R"({
    "objectTypes": [{"name": "T", "attributes": []}],
    "eventTypes": [{"name": "A", "attributes": []}],
    "objects": [{"id": "o1", "type": "T"}, {"id": "o2", "type": "T",
                 "relationships": [{"objectId": "o1"}]}],
    "events": [{"id": "e1", "type": "A", "time": "2024-01-01T00:00:00Z",
                "relationships": [{"objectId": "o1"}]}]
  })";
  const OcelLog log = parse_ocel_json(doc);
  ASSERT_EQ(log.e2o().size(), 1u);
  EXPECT_EQ(log.e2o()[0].qualifier, "");
  ASSERT_EQ(log.o2o().size(), 1u);
  EXPECT_EQ(log.o2o()[0].qualifier, "");
}

TEST(ParseOcelJson, DuplicateRelationshipsCollapse) {
  const char* doc = R"({
    "objectTypes": [{"name": "T", "attributes": []}],
    "eventTypes": [{"name": "A", "attributes": []}],
    "objects": [{"id": "o1", "type": "T"}],
    "events": [{"id": "e1", "type": "A", "time": "2024-01-01T00:00:00Z",
                "relationships": [{"objectId": "o1", "qualifier": "q"},
                                   {"objectId": "o1", "qualifier": "q"}]}]
  })";
  EXPECT_EQ(parse_ocel_json(doc).e2o().size(), 1u);
}

TEST(ParseOcelJson, ValueTypeMismatchFails) {
  const char* doc = R"({
    "objectTypes": [{"name": "T", "attributes": [{"name": "v", "type": "integer"}]}],
    "eventTypes": [],
    "objects": [{"id": "o1", "type": "T",
                 "attributes": [{"name": "v", "time": "2024-01-01T00:00:00Z", "value": "seven"}]}],
    "events": []
  })";
  EXPECT_THROW(parse_ocel_json(doc), ParseError);
}

TEST(ParseOcelJson, AttributeDeclaredForWrongTypeIsRejectedByValidation) {
  const char* doc = R"({
    "objectTypes": [{"name": "T", "attributes": [{"name": "v", "type": "integer"}]},
                    {"name": "U", "attributes": []}],
    "eventTypes": [],
    "objects": [{"id": "o1", "type": "U",
                 "attributes": [{"name": "v", "time": "2024-01-01T00:00:00Z", "value": 3}]}],
    "events": []
  })";
  EXPECT_THROW(parse_ocel_json(doc), LogInvalidError);
}

TEST(WriteOcelJson, EmptyLogHasFourEmptyArrays) {
  const std::string text = write_ocel_json(OcelLog::Builder().build());
  const OcelLog reparsed = parse_ocel_json(text);
  EXPECT_TRUE(reparsed.events().empty());
  EXPECT_TRUE(reparsed.objects().empty());
  EXPECT_NE(text.find("\"objectTypes\": []"), std::string::npos);
  EXPECT_NE(text.find("\"eventTypes\": []"), std::string::npos);
  EXPECT_NE(text.find("\"objects\": []"), std::string::npos);
  EXPECT_NE(text.find("\"events\": []"), std::string::npos);
}

TEST(WriteOcelJson, RunningExampleRoundTrips) {
  const OcelLog log = octekg::testing::load_running_example();
  const OcelLog reparsed = parse_ocel_json(write_ocel_json(log));
  EXPECT_EQ(log, reparsed);
}

TEST(WriteOcelJson, RandomLogsRoundTrip) {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    GenOptions options;
    options.seed = seed;
    options.max_events = 80;
    options.max_objects = 40;
    const OcelLog log = random_log(options);
    const OcelLog reparsed = parse_ocel_json(write_ocel_json(log));
    EXPECT_EQ(log, reparsed) << "seed " << seed;
  }
}

TEST(WriteOcelJson, LargeObjectLogRoundTrips) {
  OcelLog::Builder builder;
  builder.declare_object_attribute("weight", "Item");
  std::mt19937_64 gen(99);
  for (int i = 0; i < 1000; ++i) {
    const std::string id = "item" + std::to_string(i);
    builder.add_object(id, "Item");
    builder.set_object_attribute(id, "weight",
                                 Timestamp::from_millis(1'700'000'000'000 + gen() % 1'000'000),
                                 AttributeValue::real((gen() % 10000) / 16.0));
  }
  const OcelLog log = builder.build();
  EXPECT_EQ(parse_ocel_json(write_ocel_json(log)), log);
}

TEST(WriteOcelJson, OutputIsDeterministic) {
  const OcelLog log = octekg::testing::load_running_example();
  EXPECT_EQ(write_ocel_json(log), write_ocel_json(log));
}

TEST(ParseOcelJson, OrderInsensitiveSemantics) {
  GenOptions options;
  options.seed = 777;
  options.max_events = 30;
  options.max_objects = 15;
  const OcelLog log = random_log(options);
  const std::string text = write_ocel_json(log);

  // permute the objects and events arrays
  auto doc = nlohmann::json::parse(text);
  std::reverse(doc["objects"].begin(), doc["objects"].end());
  std::reverse(doc["events"].begin(), doc["events"].end());
  const OcelLog permuted = parse_ocel_json(doc.dump());
  EXPECT_EQ(log, permuted);
}

TEST(ParseOcelJson, FuzzedInputsNeverCrash) {
  const std::string base = octekg::testing::read_file(
      octekg::testing::fixture_path("running_example.jsonocel"));
  std::mt19937_64 gen(4242);
  int parsed_ok = 0;
  for (int i = 0; i < 500; ++i) {
    std::string mutated = base;
    const int mutations = 1 + static_cast<int>(gen() % 8);
    for (int m = 0; m < mutations; ++m) {
      const auto pos = gen() % mutated.size();
      switch (gen() % 4) {
        case 0: mutated[pos] = static_cast<char>(gen() % 256); break;
        case 1: mutated.insert(pos, 1, static_cast<char>(gen() % 256)); break;
        case 2: mutated.erase(pos, 1 + gen() % 3); break;
        case 3: mutated.resize(pos); break;
      }
      if (mutated.empty()) mutated = "{";
    }
    try {
      parse_ocel_json(mutated);
      ++parsed_ok;
    } catch (const Error&) {
      // structured failure is the expected outcome
    }
  }
  SUCCEED() << parsed_ok << " mutations still parsed";
}
