#include "cuspidal/configuration.hpp"

#include <sstream>

#include "cuspidal/errors.hpp"

namespace cusp {

PointConfiguration validate_normalize(const Mat& raw, bool homogenize) {
  if (raw.rows() == 0 || raw.cols() == 0)
    throw RankDeficient("validate_normalize: empty matrix");

  PointConfiguration cfg;
  cfg.N = raw.cols();

  if (homogenize) {
    cfg.n = raw.rows();
    Mat m(cfg.n + 1, cfg.N);
    m.row(0).setConstant(Rational(1));
    m.bottomRows(cfg.n) = raw;
    if (rank(m) != cfg.n + 1)
      throw RankDeficient("validate_normalize: rank below 1+n after homogenization");
    cfg.matrix = std::move(m);
    cfg.transform = Mat::Identity(cfg.n + 1, cfg.n + 1);
    cfg.homogenized = true;
    cfg.m = cfg.N - cfg.n - 1;
    return cfg;
  }

  const Index rows = raw.rows();
  cfg.n = rows - 1;
  if (rank(raw) != rows)
    throw RankDeficient("validate_normalize: input rows are linearly dependent");

  // xi with xi^T * raw = (1,...,1): unique since raw has full row rank.
  Vec ones = Vec::Constant(cfg.N, Rational(1));
  auto xi = solve_particular(raw.transpose(), ones);
  if (!xi)
    throw NotPseudoHomogeneous(
        "validate_normalize: all-ones vector is not in the row span");

  // U: xi first, then original rows chosen greedily to complete the rank.
  Mat u = Mat::Zero(rows, rows);
  u.row(0) = xi->transpose();
  Mat stacked(rows, cfg.N);
  stacked.row(0) = xi->transpose() * raw;
  Index have = 1;
  for (Index i = 0; i < rows && have < rows; ++i) {
    stacked.row(have) = raw.row(i);
    if (rank(stacked.topRows(have + 1)) == have + 1) {
      u(have, i) = Rational(1);
      ++have;
    }
  }
  if (have != rows)
    throw RankDeficient("validate_normalize: could not complete the row basis");

  cfg.matrix = u * raw;
  cfg.transform = std::move(u);
  cfg.homogenized = false;
  cfg.m = cfg.N - cfg.n - 1;
  return cfg;
}

PointConfiguration subconfiguration(const PointConfiguration& a,
                                    const std::vector<Index>& columns) {
  Mat m(a.n + 1, static_cast<Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) m.col(static_cast<Index>(j)) = a.matrix.col(columns[j]);
  if (rank(m) != a.n + 1)
    throw RankDeficient("subconfiguration: column subset is not full rank");
  PointConfiguration sub;
  sub.n = a.n;
  sub.N = static_cast<Index>(columns.size());
  sub.m = sub.N - sub.n - 1;
  sub.matrix = std::move(m);
  sub.transform = Mat::Identity(a.n + 1, a.n + 1);
  sub.homogenized = a.homogenized;
  return sub;
}

GaleDual gale_dual(const PointConfiguration& a) {
  return GaleDual{kernel_basis(a.matrix)};
}

GaleDual adapted_gale_dual(const PointConfiguration& a, Index alpha) {
  if (alpha < 0 || alpha >= a.N)
    throw std::out_of_range("adapted_gale_dual: point index out of range");

  // A' = A with column alpha deleted.
  Mat rest(a.n + 1, a.N - 1);
  for (Index j = 0, k = 0; j < a.N; ++j)
    if (j != alpha) rest.col(k++) = a.matrix.col(j);
  if (rank(rest) != a.n + 1)
    throw DeletionDropsRank("adapted_gale_dual: deleting the point lowers the rank");

  const Index m = a.m;
  Mat b = Mat::Zero(a.N, m);

  // First m-1 columns: the canonical dual of A', a zero inserted at alpha.
  const Mat inner = kernel_basis(rest);
  for (Index c = 0; c < m - 1; ++c) {
    for (Index j = 0, k = 0; j < a.N; ++j)
      if (j != alpha) b(j, c) = inner(k++, c);
  }

  // Last column: the canonical solution of A' x = -a_alpha, extended by 1.
  const auto x = solve_particular(rest, (-a.matrix.col(alpha)).eval());
  if (!x)
    throw ConsistencyFailure("adapted_gale_dual: extension system inconsistent");
  for (Index j = 0, k = 0; j < a.N; ++j)
    if (j != alpha) b(j, m - 1) = (*x)(k++);
  b(alpha, m - 1) = Rational(1);

  return GaleDual{std::move(b)};
}

bool is_pyramid(const PointConfiguration& a) {
  const GaleDual b = gale_dual(a);
  for (Index k = 0; k < a.N; ++k) {
    bool zero = true;
    for (Index c = 0; c < b.codim(); ++c)
      if (!b.matrix(k, c).is_zero()) { zero = false; break; }
    if (zero) return true;
  }
  return false;
}

bool is_circuit(const PointConfiguration& a) {
  return a.m == 1 && !is_pyramid(a);
}

Rational minor_duality_constant(const PointConfiguration& a, const GaleDual& b) {
  const Index k = a.n + 1;
  const Index m = a.m;

  struct MinorData {
    Rational da, db;
    int sgn;
  };
  std::vector<MinorData> minors;
  for_each_subset(a.N, k, [&](const std::vector<Index>& sigma) {
    Mat asub(k, k);
    for (Index j = 0; j < k; ++j) asub.col(j) = a.matrix.col(sigma[static_cast<std::size_t>(j)]);

    Mat bsub(m, m);
    std::vector<bool> in_sigma(static_cast<std::size_t>(a.N), false);
    for (Index s : sigma) in_sigma[static_cast<std::size_t>(s)] = true;
    Index r = 0;
    for (Index row = 0; row < a.N; ++row)
      if (!in_sigma[static_cast<std::size_t>(row)]) bsub.row(r++) = b.matrix.row(row);

    int sgn = 1;  // product of (-1)^k over 1-based members of sigma
    for (Index s : sigma)
      if ((s + 1) % 2 != 0) sgn = -sgn;

    minors.push_back({det(asub), det(bsub), sgn});
  });

  // C from the first subset with |A_sigma| != 0, then the exhaustive check.
  Rational c;
  bool have_c = false;
  for (const MinorData& md : minors) {
    if (md.da.is_zero()) continue;
    if (md.db.is_zero())
      throw ConsistencyFailure("minor_duality_constant: |A_sigma| != 0 but |B_sigma| = 0");
    c = md.da / (Rational(md.sgn) * md.db);
    have_c = true;
    break;
  }
  if (!have_c)
    throw ConsistencyFailure("minor_duality_constant: no nonzero maximal minor (rank defect)");

  for (const MinorData& md : minors) {
    if (md.da != c * Rational(md.sgn) * md.db) {
      std::ostringstream os;
      os << "minor_duality_constant: |A_sigma| = " << md.da.str()
         << " but C sgn |B_sigma| = " << (c * Rational(md.sgn) * md.db).str();
      throw ConsistencyFailure(os.str());
    }
  }
  return c;
}

}  // namespace cusp
