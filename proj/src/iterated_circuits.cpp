#include "cuspidal/iterated_circuits.hpp"

#include <algorithm>

#include "cuspidal/cuspidal_form.hpp"
#include "cuspidal/errors.hpp"

namespace cusp {

namespace {

// Kernel vector of the block configuration [[1,...,1],[0 | quotient]] must
// be one-dimensional with every entry nonzero for the block to be a circuit.
bool quotient_is_circuit(const Mat& quotient) {
  const Index d = quotient.rows();           // block dimension
  const Index cols = quotient.cols() + 1;    // plus the shared origin
  Mat cfg = Mat::Zero(d + 1, cols);
  cfg.row(0).setConstant(Rational(1));
  cfg.block(1, 1, d, cols - 1) = quotient;
  const Mat k = kernel_basis(cfg);
  if (k.cols() != 1) return false;
  for (Index i = 0; i < k.rows(); ++i)
    if (k(i, 0).is_zero()) return false;
  return true;
}

class Searcher {
 public:
  Searcher(const PointConfiguration& a, Index base)
      : a_(a), base_(base), translated_(a.n, a.N), used_(static_cast<std::size_t>(a.N), false) {
    const Mat coords = a.coords();
    for (Index j = 0; j < a.N; ++j) translated_.col(j) = coords.col(j) - coords.col(base);
    used_[static_cast<std::size_t>(base)] = true;
  }

  std::optional<IteratedCircuitWitness> run() {
    if (dfs()) return build_witness();
    return std::nullopt;
  }

 private:
  bool dfs() {
    const Index dim = static_cast<Index>(basis_.size());
    if (dim == a_.n) {
      return std::all_of(used_.begin(), used_.end(), [](bool u) { return u; });
    }
    const Index rem = a_.n - dim;

    std::vector<Index> unused;
    for (Index j = 0; j < a_.N; ++j)
      if (!used_[static_cast<std::size_t>(j)]) unused.push_back(j);

    for (Index block_dim = 1; block_dim <= rem; ++block_dim) {
      const Index need = block_dim + 1;
      const Index rest = static_cast<Index>(unused.size()) - need;
      if (rest < 0) continue;
      if (block_dim == rem) {
        if (rest != 0) continue;
      } else {
        // Future blocks of total dimension rem - block_dim use between
        // (rem - block_dim) + 1 and 2 (rem - block_dim) points.
        if (rest < rem - block_dim + 1 || rest > 2 * (rem - block_dim)) continue;
      }
      bool found = false;
      for_each_subset(static_cast<Index>(unused.size()), need,
                      [&](const std::vector<Index>& pos) {
                        if (found) return;
                        std::vector<Index> pts;
                        pts.reserve(pos.size());
                        for (Index p : pos) pts.push_back(unused[static_cast<std::size_t>(p)]);
                        if (!try_block(pts, block_dim)) return;
                        if (dfs()) {
                          found = true;  // keep the state for build_witness
                          return;
                        }
                        pop_block();
                      });
      if (found) return true;
    }
    return false;
  }

  bool try_block(const std::vector<Index>& pts, Index block_dim) {
    const Index dim = static_cast<Index>(basis_.size());

    // Greedily extend the basis with the block's vectors; the span must
    // grow by exactly block_dim and absorb every vector of the block.
    std::vector<Vec> added;
    for (Index p : pts) {
      Mat trial(a_.n, dim + static_cast<Index>(added.size()) + 1);
      for (std::size_t b = 0; b < basis_.size(); ++b) trial.col(static_cast<Index>(b)) = basis_[b];
      for (std::size_t b = 0; b < added.size(); ++b)
        trial.col(dim + static_cast<Index>(b)) = added[b];
      trial.col(trial.cols() - 1) = translated_.col(p);
      if (rank(trial) == trial.cols()) added.push_back(translated_.col(p));
    }
    if (static_cast<Index>(added.size()) != block_dim) return false;

    Mat full(a_.n, dim + block_dim);
    for (std::size_t b = 0; b < basis_.size(); ++b) full.col(static_cast<Index>(b)) = basis_[b];
    for (std::size_t b = 0; b < added.size(); ++b) full.col(dim + static_cast<Index>(b)) = added[b];

    // Quotient coordinates: components of each block point on the new
    // basis vectors. Consistency is guaranteed by the rank check above
    // unless some point escapes the span, which the check also rules out.
    Mat quotient(block_dim, static_cast<Index>(pts.size()));
    for (std::size_t c = 0; c < pts.size(); ++c) {
      const auto sol = solve_particular(full, translated_.col(pts[c]));
      if (!sol) return false;
      quotient.col(static_cast<Index>(c)) = sol->tail(block_dim);
    }
    if (!quotient_is_circuit(quotient)) return false;

    for (Index p : pts) used_[static_cast<std::size_t>(p)] = true;
    for (const Vec& v : added) basis_.push_back(v);
    blocks_.push_back(CircuitBlock{pts, block_dim});
    return true;
  }

  void pop_block() {
    const CircuitBlock blk = blocks_.back();
    blocks_.pop_back();
    for (Index p : blk.points) used_[static_cast<std::size_t>(p)] = false;
    for (Index i = 0; i < blk.dim; ++i) basis_.pop_back();
  }

  IteratedCircuitWitness build_witness() const {
    IteratedCircuitWitness w;
    w.base_point = base_;
    w.blocks = blocks_;

    Mat basis_mat(a_.n, a_.n);
    for (std::size_t b = 0; b < basis_.size(); ++b) basis_mat.col(static_cast<Index>(b)) = basis_[b];
    const Mat winv = inverse(basis_mat);

    // Homogeneous transform sending (1; x) to (1; W (x - base)).
    Mat t = Mat::Zero(a_.n + 1, a_.n + 1);
    t(0, 0) = Rational(1);
    t.block(1, 1, a_.n, a_.n) = winv;
    t.block(1, 0, a_.n, 1) = -(winv * a_.coords().col(base_));

    w.transform = std::move(t);
    w.subset.push_back(base_);
    for (const CircuitBlock& blk : blocks_)
      w.subset.insert(w.subset.end(), blk.points.begin(), blk.points.end());
    return w;
  }

  const PointConfiguration& a_;
  Index base_;
  Mat translated_;
  std::vector<bool> used_;
  std::vector<Vec> basis_;
  std::vector<CircuitBlock> blocks_;
};

}  // namespace

std::optional<IteratedCircuitWitness> is_iterated_circuit(const PointConfiguration& a) {
  const Index block_count = a.N - 1 - a.n;
  if (a.n < 1 || block_count < 1 || block_count > a.n) return std::nullopt;
  for (Index base = 0; base < a.N; ++base) {
    Searcher s(a, base);
    if (auto w = s.run()) return w;
  }
  return std::nullopt;
}

std::optional<IteratedCircuitWitness> contains_iterated_circuit(const PointConfiguration& a) {
  const Index max_size = std::min(a.N, 2 * a.n + 1);
  for (Index size = max_size; size >= a.n + 2; --size) {
    std::vector<std::vector<Index>> subsets;
    for_each_subset(a.N, size, [&](const std::vector<Index>& s) { subsets.push_back(s); });
    for (const auto& cols : subsets) {
      Mat sub(a.n + 1, size);
      for (Index j = 0; j < size; ++j) sub.col(j) = a.matrix.col(cols[static_cast<std::size_t>(j)]);
      if (rank(sub) != a.n + 1) continue;  // Prop 6.2 needs full dimension
      const PointConfiguration subcfg = subconfiguration(a, cols);
      if (auto w = is_iterated_circuit(subcfg)) {
        // Map witness indices back to the ambient configuration.
        w->base_point = cols[static_cast<std::size_t>(w->base_point)];
        for (CircuitBlock& blk : w->blocks)
          for (Index& p : blk.points) p = cols[static_cast<std::size_t>(p)];
        w->subset.clear();
        w->subset.push_back(w->base_point);
        for (const CircuitBlock& blk : w->blocks)
          w->subset.insert(w->subset.end(), blk.points.begin(), blk.points.end());
        return w;
      }
    }
  }
  return std::nullopt;
}

ClassifyReport classify(const PointConfiguration& a) {
  ClassifyReport r;
  r.dual_defective = is_dual_defective(a);
  r.witness = contains_iterated_circuit(a);
  r.consistent = (r.dual_defective == !r.witness.has_value());
  if (!r.consistent)
    throw InconsistencyDetected(
        "classify: cuspidal-form triviality and iterated-circuit search disagree");
  return r;
}

bool witness_is_sound(const PointConfiguration& a, const IteratedCircuitWitness& w) {
  const Index n = a.n;
  const Index cols = static_cast<Index>(w.subset.size());
  Mat sel(n + 1, cols);
  for (Index j = 0; j < cols; ++j) sel.col(j) = a.matrix.col(w.subset[static_cast<std::size_t>(j)]);

  if (det(w.transform).is_zero()) return false;
  const Mat shaped = w.transform * sel;

  for (Index j = 0; j < cols; ++j)
    if (shaped(0, j) != Rational(1)) return false;
  for (Index i = 1; i <= n; ++i)
    if (!shaped(i, 0).is_zero()) return false;

  Index row_off = 1, col_off = 1;
  Index dims_total = 0;
  for (const CircuitBlock& blk : w.blocks) {
    const Index bn = blk.dim;
    const Index bc = static_cast<Index>(blk.points.size());
    if (bc != bn + 1) return false;
    // Everything below the diagonal band must vanish.
    for (Index i = row_off + bn; i <= n; ++i)
      for (Index j = col_off; j < col_off + bc; ++j)
        if (!shaped(i, j).is_zero()) return false;
    if (!quotient_is_circuit(shaped.block(row_off, col_off, bn, bc))) return false;
    row_off += bn;
    col_off += bc;
    dims_total += bn;
  }
  return dims_total == n && col_off == cols;
}

}  // namespace cusp
