#include <doctest.h>

#include <random>

#include "elc/error.hpp"
#include "elc/fielddoc.hpp"
#include "elc/verify.hpp"
#include "support/testutil.hpp"

using namespace elc;
using elctest::poly;

TEST_CASE("document parsing") {
  TensorField t = field_from_json(R"({
    "dim": 3, "order": 2, "variance": "cc",
    "components": { "11": "1 x2^2", "12": "-1/2 x1" }
  })");
  CHECK(t.dim() == 3);
  CHECK(t.order() == 2);
  CHECK(t.at({0, 0}) == poly(3, "1 x2^2"));
  CHECK(t.at({0, 1}) == poly(3, "-1/2 x1"));
  CHECK(t.at({1, 0}).is_zero());

  // order-0 scalars use the empty key
  TensorField s = field_from_json(R"({"dim":2,"order":0,"variance":"","components":{"":"3/2 x1"}})");
  CHECK(s.order() == 0);
  CHECK(s[0] == poly(2, "3/2 x1"));

  // omitted components section means the zero field
  CHECK(field_from_json(R"({"dim":2,"order":1,"variance":"c"})").is_zero());
}

TEST_CASE("document validation errors") {
  CHECK_THROWS_AS(field_from_json("not json"), Error);
  CHECK_THROWS_AS(field_from_json(R"([1,2])"), Error);
  CHECK_THROWS_AS(field_from_json(R"({"order":1})"), Error);
  CHECK_THROWS_AS(field_from_json(R"({"dim":2,"order":1})"), Error); // missing variance
  CHECK_THROWS_AS(field_from_json(R"({"dim":2,"order":1,"variance":"cc"})"), Error);
  CHECK_THROWS_AS(field_from_json(R"({"dim":2,"order":1,"variance":"x"})"), Error);
  CHECK_THROWS_AS(field_from_json(R"({"dim":2,"order":1,"variance":"c","components":{"3":"1"}})"),
                  Error);
  CHECK_THROWS_AS(field_from_json(R"({"dim":2,"order":1,"variance":"c","components":{"11":"1"}})"),
                  Error);
  CHECK_THROWS_AS(field_from_json(R"({"dim":2,"order":1,"variance":"c","components":{"1":"x9"}})"),
                  Error);
  CHECK_THROWS_AS(field_from_json(R"({"dim":0,"order":1,"variance":"c"})"), Error);
  try {
    field_from_json(R"({"dim":2,"order":1,"variance":"c","components":{"1":"++"}})");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 8; ++trial) {
    TensorField t = random_tensor(rng, 3, 2, 3,
                                  trial % 2 ? Variance::covariant : Variance::contravariant);
    CHECK(field_from_json(field_to_json(t)) == t);
  }
  // scalars too
  TensorField s = TensorField::scalar(poly(2, "1 x1 x2 - 2"));
  CHECK(field_from_json(field_to_json(s)) == s);
  // zero components are omitted from the output
  TensorField z = TensorField::zero(2, 2);
  CHECK(field_to_json(z, false).find("components\":{}") != std::string::npos);
}
