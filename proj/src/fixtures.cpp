#include "cuspidal/fixtures.hpp"

#include <initializer_list>

namespace cusp::fixtures {

namespace {

Mat make(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  Mat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Rational(static_cast<int>(v));
    ++i;
  }
  return m;
}

PointConfiguration config(std::initializer_list<std::initializer_list<long>> rows) {
  return validate_normalize(make(rows), false);
}

}  // namespace

PointConfiguration p5() {
  return config({{1, 1, 1, 1, 1}, {0, 1, 2, 0, 1}, {0, 0, 0, 1, 2}});
}

Mat p5_gale() {
  return make({{2, 1}, {-1, -2}, {0, 1}, {-2, 0}, {1, 0}});
}

PointConfiguration nine_point() {
  return config({{1, 1, 1, 1, 1, 1, 1, 1, 1},
                 {0, 1, 0, 0, 1, 1, 0, 0, 1},
                 {0, 0, 1, 0, 1, 0, 0, 0, 1},
                 {0, 0, 0, 1, 0, 1, 0, 0, 1},
                 {0, 0, 0, 0, 0, 0, 1, 0, 3},
                 {0, 0, 0, 0, 0, 0, 0, 1, 2}});
}

Mat nine_point_gale() {
  return make({{1, 1, 7},
               {-1, -1, -1},
               {-1, 0, -1},
               {0, -1, -1},
               {1, 0, 0},
               {0, 1, 0},
               {0, 0, -3},
               {0, 0, -2},
               {0, 0, 1}});
}

PointConfiguration hyperbola() {
  return config({{1, 1, 1, 1, 1}, {3, -3, 5, 5, -5}, {0, 0, 4, -4, 4}});
}

Mat hyperbola_gale() {
  return make({{5, -8}, {-5, 2}, {-3, 3}, {0, 3}, {3, 0}});
}

PointConfiguration parabola() {
  return config({{1, 1, 1, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 2, 1}});
}

Mat parabola_gale() {
  return make({{2, 2}, {-2, -1}, {-1, -2}, {0, 1}, {1, 0}});
}

PointConfiguration segment() {
  return config({{1, 1, 1}, {0, 1, 2}});
}

PointConfiguration pyramid4() {
  return config({{1, 1, 1, 1}, {0, 1, 2, 0}, {0, 0, 0, 1}});
}

PointConfiguration cubic7() {
  return config({{1, 1, 1, 1, 1, 1, 1},
                 {0, 1, 1, 2, 3, 3, 3},
                 {3, 0, 2, 2, 1, 2, 3},
                 {0, 3, 2, 2, 2, 3, 0}});
}

std::vector<Named> all() {
  return {
      {"p5", p5(), p5_gale()},
      {"nine-point", nine_point(), nine_point_gale()},
      {"hyperbola", hyperbola(), hyperbola_gale()},
      {"parabola", parabola(), parabola_gale()},
      {"segment", segment(), Mat(0, 0)},
      {"pyramid4", pyramid4(), Mat(0, 0)},
      {"cubic7", cubic7(), Mat(0, 0)},
  };
}

}  // namespace cusp::fixtures
