#include "cuspidal/bivariate.hpp"

#include <algorithm>

#include "cuspidal/errors.hpp"

namespace cusp {

namespace {

void require_planar(const PointConfiguration& a, const char* who) {
  if (a.n != 2)
    throw std::invalid_argument(std::string(who) + ": configuration is not planar");
}

bool points_equal(const Vec& a, const Vec& b) { return a(0) == b(0) && a(1) == b(1); }

// det(q - p, r - p) for planar points.
Rational orient(const Vec& p, const Vec& q, const Vec& r) {
  return (q(0) - p(0)) * (r(1) - p(1)) - (q(1) - p(1)) * (r(0) - p(0));
}

bool all_collinear(const std::vector<Vec>& pts) {
  // Find two distinct anchors; fewer than two distinct points is collinear.
  std::size_t second = 1;
  while (second < pts.size() && points_equal(pts[0], pts[second])) ++second;
  if (second >= pts.size()) return true;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!orient(pts[0], pts[second], pts[i]).is_zero()) return false;
  return true;
}

}  // namespace

std::string to_string(ConicClass c) {
  switch (c) {
    case ConicClass::pyramid: return "pyramid";
    case ConicClass::nonreal_parabola: return "nonreal_parabola";
    case ConicClass::real_parabola: return "real_parabola";
    case ConicClass::hyperbola: return "hyperbola";
    case ConicClass::ellipse: return "ellipse";
    case ConicClass::generic: return "generic";
  }
  return "?";
}

std::string to_string(OracleKind k) {
  switch (k) {
    case OracleKind::pyramid: return "pyramid";
    case OracleKind::simplex_circuit: return "simplex_circuit";
    case OracleKind::vertex_circuit: return "vertex_circuit";
    case OracleKind::parabola: return "parabola";
    case OracleKind::hyperbola: return "hyperbola";
    case OracleKind::ellipse: return "ellipse";
    case OracleKind::degenerate: return "degenerate";
    case OracleKind::no_conic: return "no_conic";
    case OracleKind::ambiguous: return "ambiguous";
  }
  return "?";
}

NormalForm2D normal_form_2d(const PointConfiguration& a) {
  require_planar(a, "normal_form_2d");
  const Mat pts = a.coords();

  NormalForm2D nf;
  bool have_triple = false;
  for (Index i = 0; i < a.N && !have_triple; ++i)
    for (Index j = i + 1; j < a.N && !have_triple; ++j)
      for (Index k = j + 1; k < a.N && !have_triple; ++k)
        if (!orient(pts.col(i), pts.col(j), pts.col(k)).is_zero()) {
          nf.triple = {i, j, k};
          have_triple = true;
        }
  if (!have_triple)
    throw DegenerateConfiguration("normal_form_2d: all points are collinear");

  const Vec p0 = pts.col(nf.triple[0]);
  Mat frame(2, 2);
  frame.col(0) = pts.col(nf.triple[1]) - p0;
  frame.col(1) = pts.col(nf.triple[2]) - p0;
  const Mat map = inverse(frame);

  nf.order.assign({nf.triple[0], nf.triple[1], nf.triple[2]});
  for (Index j = 0; j < a.N; ++j)
    if (j != nf.triple[0] && j != nf.triple[1] && j != nf.triple[2]) nf.order.push_back(j);

  const Index m = a.m;
  Mat mapped(2, a.N);
  for (Index j = 0; j < a.N; ++j)
    mapped.col(j) = map * (pts.col(nf.order[static_cast<std::size_t>(j)]) - p0);

  nf.alphas = mapped.rightCols(m);

  Mat cm(3, a.N);
  cm.row(0).setConstant(Rational(1));
  cm.bottomRows(2) = mapped;
  nf.config.n = 2;
  nf.config.N = a.N;
  nf.config.m = m;
  nf.config.matrix = std::move(cm);
  nf.config.transform = Mat::Identity(3, 3);
  nf.config.homogenized = false;

  // The dual of eqn shape: row for alpha_k is (|a_k|-1, -a_k1, -a_k2, e_k).
  Mat dual = Mat::Zero(a.N, m);
  for (Index k = 0; k < m; ++k) {
    dual(0, k) = nf.alphas(0, k) + nf.alphas(1, k) - Rational(1);
    dual(1, k) = -nf.alphas(0, k);
    dual(2, k) = -nf.alphas(1, k);
    dual(3 + k, k) = Rational(1);
  }
  nf.dual = GaleDual{std::move(dual)};

  Mat t = Mat::Zero(3, 3);
  t(0, 0) = Rational(1);
  t.block(1, 1, 2, 2) = map;
  t.block(1, 0, 2, 1) = -(map * p0);
  nf.transform = std::move(t);
  return nf;
}

Rational g_entry(const Vec& ak, const Vec& aj) {
  const Rational &k1 = ak(0), &k2 = ak(1), &j1 = aj(0), &j2 = aj(1);
  const Rational one(1);
  const Rational cross = k1 * j2 - k2 * j1;
  return (k1 * j2 * (one - k1 - j2) + k2 * j1 * (one - k2 - j1) + cross * cross) /
         Rational(2);
}

Mat q_matrix(const NormalForm2D& nf) {
  const Index m = nf.alphas.cols();
  Mat q(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = i; j < m; ++j) {
      q(i, j) = g_entry(nf.alphas.col(i), nf.alphas.col(j));
      q(j, i) = q(i, j);
    }
  return q;
}

SignatureTriple signature_2d(const PointConfiguration& a) {
  require_planar(a, "signature_2d");
  return signature_symmetric(q_matrix(normal_form_2d(a)));
}

ConicClass classify_conic(const PointConfiguration& a) {
  require_planar(a, "classify_conic");
  const SignatureTriple s = signature_2d(a);
  const Index m = a.m;
  const auto is = [&](Index p, Index n, Index z) {
    return s.positives == p && s.negatives == n && s.zeros == z;
  };
  if (is(0, 0, m)) return ConicClass::pyramid;
  if (is(1, 0, 0)) return ConicClass::nonreal_parabola;
  if (is(0, 1, m - 1)) return ConicClass::real_parabola;
  if (m >= 2 && is(1, 1, m - 2)) return ConicClass::hyperbola;
  if (m >= 2 && is(0, 2, m - 2)) return ConicClass::ellipse;
  if (m >= 3 && is(1, 2, m - 3)) return ConicClass::generic;
  throw UnrecognizedSignature("classify_conic: signature (" + std::to_string(s.positives) +
                              "," + std::to_string(s.negatives) + ";" +
                              std::to_string(s.zeros) + ") not in the classification table");
}

Rational evaluate_H(const Vec& a1, const Vec& a2, const Vec& a3) {
  const Rational &x1 = a1(0), &y1 = a1(1);
  const Rational &x2 = a2(0), &y2 = a2(1);
  const Rational &x3 = a3(0), &y3 = a3(1);
  const Rational one(1);
  return x1 * y1 * y2 * x3 * (one - y2) * (one - x3)
       - x1 * y1 * x2 * y3 * (one - x2) * (one - y3)
       + y1 * x2 * x3 * y3 * (one - y1) * (one - x2)
       - y1 * x2 * y2 * x3 * (one - y1) * (one - x3)
       - x1 * y2 * x3 * y3 * (one - x1) * (one - y2)
       + x1 * x2 * y2 * y3 * (one - x1) * (one - y3);
}

Rational g_minor(const Mat& rows, const Mat& cols) {
  if (rows.cols() != cols.cols())
    throw std::invalid_argument("g_minor: row and column point counts differ");
  const Index k = rows.cols();
  Mat m(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) m(i, j) = g_entry(rows.col(i), cols.col(j));
  return det(m);
}

OracleResult conic_fit_oracle(const Mat& points) {
  const Index n_pts = points.cols();
  if (points.rows() != 2)
    throw std::invalid_argument("conic_fit_oracle: points must be 2 x N");
  if (n_pts < 4) throw TooFewPoints("conic_fit_oracle: need at least 4 points");

  std::vector<Vec> all;
  all.reserve(static_cast<std::size_t>(n_pts));
  for (Index j = 0; j < n_pts; ++j) all.push_back(points.col(j));

  // Pyramid shape first: all points but one on a line.
  for (std::size_t e = 0; e < all.size(); ++e) {
    std::vector<Vec> others;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (i != e) others.push_back(all[i]);
    if (all_collinear(others)) return OracleResult{OracleKind::pyramid, std::nullopt, 0};
  }

  std::vector<Vec> distinct;
  for (const Vec& p : all) {
    bool seen = false;
    for (const Vec& q : distinct)
      if (points_equal(p, q)) { seen = true; break; }
    if (!seen) distinct.push_back(p);
  }

  if (distinct.size() < 4) return OracleResult{OracleKind::ambiguous, std::nullopt, 0};

  if (distinct.size() == 4) {
    // Circuit case: simplex (one interior point) vs vertex (convex position).
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (std::size_t k = j + 1; k < 4; ++k)
          if (orient(distinct[i], distinct[j], distinct[k]).is_zero())
            return OracleResult{OracleKind::ambiguous, std::nullopt, 0};
    for (std::size_t inner = 0; inner < 4; ++inner) {
      std::vector<Vec> tri;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != inner) tri.push_back(distinct[i]);
      const int s0 = orient(tri[0], tri[1], distinct[inner]).sign();
      const int s1 = orient(tri[1], tri[2], distinct[inner]).sign();
      const int s2 = orient(tri[2], tri[0], distinct[inner]).sign();
      if (s0 != 0 && s0 == s1 && s1 == s2)
        return OracleResult{OracleKind::simplex_circuit, std::nullopt, 0};
    }
    return OracleResult{OracleKind::vertex_circuit, std::nullopt, 0};
  }

  // Exact conic fit through all distinct points.
  Mat vander(static_cast<Index>(distinct.size()), 6);
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    const Rational &x = distinct[i](0), &y = distinct[i](1);
    const Index r = static_cast<Index>(i);
    vander(r, 0) = x * x;
    vander(r, 1) = x * y;
    vander(r, 2) = y * y;
    vander(r, 3) = x;
    vander(r, 4) = y;
    vander(r, 5) = Rational(1);
  }
  const Mat kernel = kernel_basis(vander);
  if (kernel.cols() == 0) return OracleResult{OracleKind::no_conic, std::nullopt, 0};
  if (kernel.cols() > 1) return OracleResult{OracleKind::ambiguous, std::nullopt, 0};

  Vec conic = kernel.col(0);
  const Rational a = conic(0), b = conic(1), c = conic(2), d = conic(3), e = conic(4),
                 f = conic(5);
  const Rational disc = b * b - Rational(4) * a * c;

  // Degeneracy from the symmetric 3x3 matrix of the conic (doubled to stay
  // integral): det [[2a, b, d], [b, 2c, e], [d, e, 2f]].
  Mat sym(3, 3);
  sym << Rational(2) * a, b, d, b, Rational(2) * c, e, d, e, Rational(2) * f;
  const bool degenerate = det(sym).is_zero();

  OracleResult res;
  res.conic = conic;
  res.discriminant_sign = disc.sign();
  if (degenerate) {
    res.kind = OracleKind::degenerate;
  } else if (disc.sign() > 0) {
    res.kind = OracleKind::hyperbola;
  } else if (disc.sign() < 0) {
    res.kind = OracleKind::ellipse;
  } else {
    res.kind = OracleKind::parabola;
  }
  return res;
}

ConicReport conic_report(const PointConfiguration& a) {
  require_planar(a, "conic_report");
  ConicReport r;
  r.signature = signature_2d(a);
  r.conic_class = classify_conic(a);
  r.oracle = conic_fit_oracle(a.coords());

  switch (r.conic_class) {
    case ConicClass::pyramid:
      r.agree = r.oracle.kind == OracleKind::pyramid;
      break;
    case ConicClass::nonreal_parabola:
      r.agree = r.oracle.kind == OracleKind::simplex_circuit;
      break;
    case ConicClass::real_parabola:
      r.agree = r.oracle.kind == OracleKind::vertex_circuit ||
                r.oracle.kind == OracleKind::parabola ||
                (r.oracle.kind == OracleKind::degenerate && r.oracle.discriminant_sign == 0);
      break;
    case ConicClass::hyperbola:
      r.agree = r.oracle.kind == OracleKind::hyperbola ||
                (r.oracle.kind == OracleKind::degenerate && r.oracle.discriminant_sign > 0);
      break;
    case ConicClass::ellipse:
      r.agree = r.oracle.kind == OracleKind::ellipse ||
                (r.oracle.kind == OracleKind::degenerate && r.oracle.discriminant_sign < 0);
      break;
    case ConicClass::generic:
      r.agree = r.oracle.kind == OracleKind::no_conic;
      break;
  }
  return r;
}

}  // namespace cusp
