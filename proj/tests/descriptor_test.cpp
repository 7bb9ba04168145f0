#include <random>

#include "cltet/descriptor.hpp"
#include "test_util.hpp"

using namespace cltet;

TEST(Descriptor, RoundTripIsByteIdentical) {
  const Lambda l = Lambda::minus;
  const Isometry A(Mat2{GC(1.2, 0.1, l), GC(0.3, -0.4, l), GC(0.05, 0.2, l), GC(0.9, 0.0, l)});
  const Tetrahedron t = lightlike_from_angles(l, 0.7, 0.4, A);
  const std::string first = dump(describe(t));
  const std::string second = dump(describe(build(parse_descriptor(first))));
  EXPECT_EQ(first, second);
}

TEST(Descriptor, DefaultsAndErrors) {
  const auto d = parse_descriptor(R"({"lambda": 0, "kind": "ideal", "alpha": 1, "beta": 0.5})");
  EXPECT_EQ(d.kind, Kind::ideal);
  EXPECT_EQ(d.lam, Lambda::zero);
  EXPECT_EQ(max_abs_diff(d.pose, Mat2::identity(Lambda::zero)), 0);
  EXPECT_ERRC(parse_descriptor("{"), Errc::ParseError);
  EXPECT_ERRC(parse_descriptor(R"({"lambda": 0, "kind": "ideal", "alpha": 1})"), Errc::ParseError);
  EXPECT_ERRC(parse_descriptor(R"({"lambda": 0, "kind": "cube", "alpha": 1, "beta": 1})"), Errc::ParseError);
  EXPECT_ERRC(parse_descriptor(R"({"lambda": 1, "kind": "ideal", "alpha": 1, "beta": 1, "pose": [1]})"),
              Errc::ParseError);
}
