#include "circuitsplit/embedding.hpp"
#include "circuitsplit/error.hpp"
#include "circuitsplit/network.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace circuitsplit;

namespace {

const char* kSingleEdge = R"({"n":2,"boundary":[{"id":"1","labels":[1]},{"id":"2","labels":[2]}],
  "interior":[],"edges":[{"u":"1","v":"2","c":"1"}],"rotation":{"1":[0],"2":[0]}})";

const char* kFourCycle = R"({"n":4,"boundary":[{"id":"1","labels":[1]},{"id":"2","labels":[2]},
  {"id":"3","labels":[3]},{"id":"4","labels":[4]}],"interior":[],
  "edges":[{"u":"1","v":"2","c":"1"},{"u":"2","v":"3","c":"2"},{"u":"3","v":"4","c":"1/2"},{"u":"4","v":"1","c":"0.5"}],
  "rotation":{"1":[0,3],"2":[1,0],"3":[2,1],"4":[3,2]}})";

// K4 with both diagonals; every vertex rotation is locally plausible but the
// diagonals 1-3 and 2-4 must cross.
const char* kCrossedK4 = R"({"n":4,"boundary":[{"id":"1","labels":[1]},{"id":"2","labels":[2]},
  {"id":"3","labels":[3]},{"id":"4","labels":[4]}],"interior":[],
  "edges":[{"u":"1","v":"2","c":"1"},{"u":"2","v":"3","c":"1"},{"u":"3","v":"4","c":"1"},{"u":"4","v":"1","c":"1"},
           {"u":"1","v":"3","c":"1"},{"u":"2","v":"4","c":"1"}],
  "rotation":{"1":[0,4,3],"2":[1,5,0],"3":[2,4,1],"4":[3,5,2]}})";

}  // namespace

TEST_CASE("parse and serialize") {
  const auto net = parse_network(kSingleEdge);
  CHECK(net.n() == 2);
  CHECK(net.edges().size() == 1);
  CHECK(parse_network(serialize_network(net)) == net);

  const auto four = parse_network(kFourCycle);
  CHECK(four.edges()[3].conductance == ExtRat(1, 2));
  CHECK(parse_network(serialize_network(four)) == four);

  const auto cactus = testsupport::load_network("cactus_network.json");
  CHECK_FALSE(cactus.is_plain());
  CHECK(cactus.labels_of(cactus.vertex_of_label(5)) == std::vector<int>{2, 5, 6});
  CHECK(parse_network(serialize_network(cactus)) == cactus);
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS_AS(parse_network(R"({"n":4,"boundary":[{"id":"a","labels":[1,3]},{"id":"b","labels":[2,4]}],
    "interior":[],"edges":[]})"),
                  DomainError);
  CHECK_THROWS_AS(parse_network(R"({"n":2,"boundary":[{"id":"a","labels":[1]},{"id":"b","labels":[1]}],
    "interior":[],"edges":[]})"),
                  DomainError);
  CHECK_THROWS_AS(parse_network(R"({"n":2,"boundary":[{"id":"a","labels":[1]},{"id":"b","labels":[2]}],
    "interior":[],"edges":[{"u":"a","v":"b","c":"0"}]})"),
                  DomainError);
  CHECK_THROWS_AS(parse_network(R"({"n":2,"boundary":[{"id":"a","labels":[1]},{"id":"b","labels":[2]}],
    "interior":[],"edges":[{"u":"a","v":"b","c":"-1"}]})"),
                  DomainError);
  CHECK_THROWS_AS(parse_network("{not json"), DomainError);
  try {
    parse_network(R"({"n":4,"boundary":[{"id":"a","labels":[1,3]},{"id":"b","labels":[2,4]}],"interior":[],"edges":[]})");
  } catch (const DomainError& e) {
    CHECK(e.detail().contains("crossing"));
  }
}

TEST_CASE("embedding validation") {
  const auto single = validate_embedding(parse_network(kSingleEdge));
  CHECK(single.valid);
  CHECK(single.faces.size() - 1 == 2);  // two bounded faces besides the outside

  const auto four = validate_embedding(parse_network(kFourCycle));
  CHECK(four.valid);
  CHECK(four.faces.size() == 6);

  const auto crossed = validate_embedding(parse_network(kCrossedK4));
  CHECK_FALSE(crossed.valid);
  CHECK(crossed.vertices - crossed.edges + static_cast<long>(crossed.faces.size()) != 2);

  CHECK(validate_embedding(testsupport::load_network("cactus_network.json")).valid);
  CHECK_FALSE(validate_embedding(parse_network(kSingleEdge).without_rotation()).valid);
}
