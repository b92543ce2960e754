#pragma once

#include <string>
#include <vector>

#include "cuspidal/configuration.hpp"

namespace cusp::fixtures {

// Canonical bit-exact fixtures used throughout the test and verify suites.
// Each passes validate_normalize; the published duals satisfy A*B = 0.

PointConfiguration p5();        // planar, N=5, two parallel Gale rows
Mat p5_gale();                  // the published dual of p5

PointConfiguration nine_point();  // n=5, N=9, three parallel Gale rows
Mat nine_point_gale();

PointConfiguration hyperbola();   // five points on x^2 - y^2 = 9
Mat hyperbola_gale();

PointConfiguration parabola();    // five points on x^2 - xy + y^2 = x + y
Mat parabola_gale();

PointConfiguration segment();     // {0,1,2} on a line: the smallest circuit
PointConfiguration pyramid4();    // three collinear points plus an apex
PointConfiguration cubic7();      // n=3, N=7 with a smooth cubic cuspidal form

struct Named {
  std::string name;
  PointConfiguration config;
  Mat published_dual;  // 0x0 when none
};

/// All fixtures, each with its published dual when one exists.
std::vector<Named> all();

}  // namespace cusp::fixtures
