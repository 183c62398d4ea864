#include <functional>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "weylgrid/io.hpp"

using namespace weylgrid;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Io, FormatDouble) {
  EXPECT_EQ(io::format_double(0.0), "0");
  EXPECT_EQ(io::format_double(-0.0), "0");
  EXPECT_EQ(io::format_double(3.0), "3");
  EXPECT_EQ(io::format_double(-432.0), "-432");
  EXPECT_EQ(io::format_double(0.1), "0.1");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(io::format_double(x)), x);
}

TEST(Io, SamplesRoundTripExactly) {
  const auto b3 = build(Series::B, 3);
  std::mt19937 rng(1);
  std::normal_distribution<double> g;
  for (auto kind : {GridKind::C, GridKind::S}) {
    const auto f = sample(b3, 8, kind, [&](const GridPoint&) { return Complex(g(rng), g(rng)); });
    std::stringstream buf;
    io::write_samples(buf, b3, f);
    EXPECT_EQ(buf.str().substr(0, buf.str().find('\n')), "s_0,s_1,s_2,s_3,re,im");
    const auto back = io::read_samples(buf, b3, 8, kind);
    EXPECT_EQ(back.points, f.points);
    EXPECT_EQ(back.values, f.values);
  }
}

TEST(Io, CoefficientsRoundTripExactly) {
  const auto g2 = build(Series::G, 2);
  const auto f = sample(g2, 9, GridKind::C, [](const GridPoint& x) { return Complex(x.s[0], -x.s[1]); });
  const auto coeffs = ctransform(g2, f);
  std::stringstream buf;
  io::write_coefficients(buf, g2, coeffs);
  EXPECT_EQ(buf.str().substr(0, buf.str().find('\n')), "t_0,t_1,t_2,re,im");
  const auto back = io::read_coefficients(buf, g2, 9, GridKind::C);
  EXPECT_EQ(back.weights, coeffs.weights);
  EXPECT_EQ(back.coeffs, coeffs.coeffs);
}

TEST(Io, RowsMayComeInAnyOrder) {
  const auto c2 = build(Series::C, 2);
  std::istringstream in("s_0,s_1,s_2,re,im\n0,0,1,2,0\n\n1,0,0,1,0.5\n");
  const auto f = io::read_samples(in, c2, 1, GridKind::C);
  ASSERT_EQ(f.points.size(), 2u);
  EXPECT_EQ(f.points[0].s, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(f.values[0], Complex(1.0, 0.5));
  EXPECT_EQ(f.values[1], Complex(2.0, 0.0));
}

TEST(Io, MalformedInputIsRejected) {
  const auto c2 = build(Series::C, 2);
  auto read = [&](const std::string& text) {
    std::istringstream in(text);
    io::read_samples(in, c2, 1, GridKind::C);
  };
  EXPECT_EQ(code_of([&] { read(""); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([&] { read("s_0,s_1,re,im\n"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([&] { read("s_0,s_1,s_2,re,im\n1,0,0,x,0\n0,0,1,0,0\n"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([&] { read("s_0,s_1,s_2,re,im\n1,0,0,1\n0,0,1,0,0\n"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([&] { read("s_0,s_1,s_2,re,im\n1,0,0,1,0\n"); }), ErrorCode::MismatchedGrid);
  EXPECT_EQ(code_of([&] { read("s_0,s_1,s_2,re,im\n1,0,0,1,0\n1,0,0,1,0\n0,0,1,0,0\n"); }),
            ErrorCode::MismatchedGrid);
  EXPECT_EQ(code_of([&] { read("s_0,s_1,s_2,re,im\n1,0,0,1,0\n0,1,0,0,0\n"); }), ErrorCode::MismatchedGrid);
}

TEST(Io, PointsAndValues) {
  const auto c2 = build(Series::C, 2);
  std::istringstream in("y_1,y_2\n0.25,0.5\n-1,2\n");
  const auto pts = io::read_points(in, c2);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1].y, (std::vector<double>{-1.0, 2.0}));
  std::ostringstream out;
  io::write_point_values(out, c2, pts, {Complex(1.0, 0.0), Complex(0.5, -2.0)});
  EXPECT_EQ(out.str(), "y_1,y_2,re,im\n0.25,0.5,1,0\n-1,2,0.5,-2\n");
  std::istringstream bad("y_1\n0.3\n");
  EXPECT_EQ(code_of([&] { io::read_points(bad, c2); }), ErrorCode::MalformedInput);
}
