#include "cuspidal/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include "cuspidal/bivariate.hpp"
#include "cuspidal/cuspidal_form.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/fixtures.hpp"
#include "cuspidal/iterated_circuits.hpp"
#include "cuspidal/json_io.hpp"
#include "cuspidal/polynomial.hpp"
#include "cuspidal/random_gen.hpp"

namespace cusp {

namespace {

using Job = std::function<std::vector<SuiteFailure>()>;

std::string describe(const PointConfiguration& cfg) {
  return config_to_json(cfg).dump();
}

SuiteFailure fail(std::string instance, std::string expected, std::string actual) {
  SuiteFailure f;
  f.instance = std::move(instance);
  f.expected = std::move(expected);
  f.actual = std::move(actual);
  return f;
}

SuiteReport execute(const std::string& name, std::uint64_t seed, std::vector<Job> jobs) {
  const auto start = std::chrono::steady_clock::now();

  unsigned threads = 1;
  if (const char* env = std::getenv("CUSPIDAL_THREADS")) {
    const int v = std::atoi(env);
    if (v > 1) threads = static_cast<unsigned>(v > 64 ? 64 : v);
  }

  std::vector<std::vector<SuiteFailure>> results(jobs.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = jobs[i]();
    } catch (const std::exception& e) {
      results[i] = {fail("", "no exception", e.what())};
    }
  };

  if (threads <= 1 || jobs.size() < 2) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        run_one(i);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SuiteReport rep;
  rep.suite = name;
  rep.instances = jobs.size();
  rep.seed = seed;
  for (std::size_t i = 0; i < results.size(); ++i)
    for (SuiteFailure& f : results[i]) {
      f.index = i;
      rep.failures.push_back(std::move(f));
    }
  const auto end = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
  return rep;
}

PointConfiguration random_config(SplitMix64& rng, Index n, Index N, long bound) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Mat m(n + 1, N);
    m.row(0).setConstant(Rational(1));
    for (Index j = 0; j < N; ++j)
      for (Index i = 1; i <= n; ++i) m(i, j) = Rational(rng.range(-bound, bound));
    if (rank(m) == n + 1) return validate_normalize(m, false);
  }
  throw DomainError("random_config: too many rank-deficient draws");
}

// Lifts a polynomial in `p.vars()` variables into `total` variables with its
// variables placed at `offset`.
Polynomial embed_poly(const Polynomial& p, Index total, Index offset) {
  Polynomial out(total);
  for (const auto& [mono, c] : p.terms()) {
    Monomial lifted(static_cast<std::size_t>(total), 0u);
    for (std::size_t i = 0; i < mono.size(); ++i)
      lifted[static_cast<std::size_t>(offset) + i] = mono[i];
    out.add_term(lifted, c);
  }
  return out;
}

bool matrix_product_zero(const Mat& a, const Mat& b) {
  const Mat p = a * b;
  for (Index i = 0; i < p.rows(); ++i)
    for (Index j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Block assembly for the product / leading-monomial factorizations.

struct Block {
  PointConfiguration cfg;  // first point at the origin
  GaleDual dual;           // canonical
  Polynomial form;         // cuspidal form over the canonical dual
};

// Random block of dimension n with N points whose first point is the origin.
// When `circuit` is set, N = n+2 and the kernel vector must have no zeros.
Block random_block(SplitMix64& rng, Index n, Index N, long bound, bool circuit) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Mat m(n + 1, N);
    m.row(0).setConstant(Rational(1));
    for (Index i = 1; i <= n; ++i) m(i, 0) = Rational(0);
    for (Index j = 1; j < N; ++j)
      for (Index i = 1; i <= n; ++i) m(i, j) = Rational(rng.range(-bound, bound));
    if (rank(m) != n + 1) continue;
    PointConfiguration cfg = validate_normalize(m, false);
    GaleDual dual = gale_dual(cfg);
    if (circuit) {
      bool ok = true;
      for (Index r = 0; r < dual.points(); ++r)
        if (dual.matrix(r, 0).is_zero()) { ok = false; break; }
      if (!ok) continue;
    }
    Polynomial form = cuspidal_form(cfg, dual);
    return Block{std::move(cfg), std::move(dual), std::move(form)};
  }
  throw DomainError("random_block: too many rejected draws");
}

struct Assembled {
  PointConfiguration cfg;
  GaleDual dual;
  std::vector<Index> var_offset;  // variable group start per block
  std::vector<Index> col_offset;  // column group start per block
};

// Assembles blocks into a (possibly upper-) diagonal configuration with the
// block-adapted dual: column group j is supported on the base point and
// blocks <= j, restricting to the banded dual when all stars vanish.
Assembled assemble(const std::vector<Block>& blocks, SplitMix64* star_rng, long star_bound) {
  Index n = 0, cols = 1, m = 0;
  for (const Block& b : blocks) {
    n += b.cfg.n;
    cols += b.cfg.N - 1;
    m += b.cfg.m;
  }

  Mat a = Mat::Zero(n + 1, cols);
  a.row(0).setConstant(Rational(1));
  Assembled out;
  Index row_off = 1, col_off = 1;
  for (const Block& b : blocks) {
    out.var_offset.push_back(0);  // filled below
    out.col_offset.push_back(col_off);
    const Mat coords = b.cfg.coords();
    a.block(row_off, col_off, b.cfg.n, b.cfg.N - 1) = coords.rightCols(b.cfg.N - 1);
    if (star_rng) {
      for (Index i = 1; i < row_off; ++i)
        for (Index j = col_off; j < col_off + b.cfg.N - 1; ++j)
          a(i, j) = Rational(star_rng->range(-star_bound, star_bound));
    }
    row_off += b.cfg.n;
    col_off += b.cfg.N - 1;
  }

  Index var_off = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    out.var_offset[bi] = var_off;
    var_off += blocks[bi].cfg.m;
  }

  out.cfg = validate_normalize(a, false);

  // Dual column group j: block-j rows carry the block's own dual rows
  // (beyond its origin row); base and earlier-block rows solve A v = 0
  // canonically (free variables zero).
  Mat dual = Mat::Zero(cols, m);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& b = blocks[bi];
    const Index c0 = out.col_offset[bi];
    for (Index dc = 0; dc < b.cfg.m; ++dc) {
      Vec v = Vec::Zero(cols);
      for (Index r = 1; r < b.cfg.N; ++r) v(c0 + r - 1) = b.dual.matrix(r, dc);
      // Unknowns: base column and the columns of earlier blocks.
      std::vector<Index> unknowns;
      unknowns.push_back(0);
      for (std::size_t pj = 0; pj < bi; ++pj)
        for (Index r = 0; r < blocks[pj].cfg.N - 1; ++r)
          unknowns.push_back(out.col_offset[pj] + r);
      Vec rhs = -(a * v);
      Mat sys(n + 1, static_cast<Index>(unknowns.size()));
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        sys.col(static_cast<Index>(u)) = a.col(unknowns[u]);
      const auto sol = solve_particular(sys, rhs);
      if (!sol) throw ConsistencyFailure("assemble: dual extension system inconsistent");
      for (std::size_t u = 0; u < unknowns.size(); ++u) v(unknowns[u]) = (*sol)(static_cast<Index>(u));
      dual.col(out.var_offset[bi] + dc) = v;
    }
  }
  if (!matrix_product_zero(out.cfg.matrix, dual))
    throw ConsistencyFailure("assemble: A*B != 0");
  out.dual = GaleDual{std::move(dual)};
  return out;
}

// ---------------------------------------------------------------------------
// Suite builders.

std::vector<Job> build_lemma_schur(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;

  for (const auto& fx : fixtures::all()) {
    PointConfiguration cfg = fx.config;
    Mat published = fx.published_dual;
    jobs.push_back([cfg, published] {
      std::vector<SuiteFailure> fs;
      try {
        minor_duality_constant(cfg, gale_dual(cfg));
        if (published.size() > 0) minor_duality_constant(cfg, GaleDual{published});
      } catch (const ConsistencyFailure& e) {
        fs.push_back(fail(describe(cfg), "consistent duality constant", e.what()));
      }
      return fs;
    });
  }

  for (std::size_t i = 0; i < count; ++i) {
    const Index n = 1 + static_cast<Index>(i % 3);
    const Index N = n + 2 + static_cast<Index>((i / 3) % 3);
    PointConfiguration cfg = random_config(rng, n, N, 3);
    const Mat mixer = random_invertible(rng, cfg.m, 2);
    const Rational lambda = [&] {
      Rational l = random_rational(rng, 3, 2);
      return l.is_zero() ? Rational(1, 2) : l;
    }();
    jobs.push_back([cfg, mixer, lambda] {
      std::vector<SuiteFailure> fs;
      try {
        const GaleDual b = gale_dual(cfg);
        const Rational c = minor_duality_constant(cfg, b);
        minor_duality_constant(cfg, GaleDual{(b.matrix * mixer).eval()});
        const Rational c_scaled =
            minor_duality_constant(cfg, GaleDual{(lambda * b.matrix).eval()});
        const Rational expected = c / pow(lambda, static_cast<unsigned long>(cfg.m));
        if (c_scaled != expected)
          fs.push_back(fail(describe(cfg), "C(lambda B) = C(B)/lambda^m = " + expected.str(),
                            c_scaled.str()));
      } catch (const ConsistencyFailure& e) {
        fs.push_back(fail(describe(cfg), "consistent duality constant", e.what()));
      }
      return fs;
    });
  }
  return jobs;
}

std::vector<Job> build_hessian(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;

  for (const auto& fx : fixtures::all()) {
    PointConfiguration cfg = fx.config;
    Mat published = fx.published_dual;
    jobs.push_back([cfg, published] {
      std::vector<SuiteFailure> fs;
      const GaleDual canonical = gale_dual(cfg);
      if (hessian_form(cfg, canonical) != cuspidal_form(cfg, canonical))
        fs.push_back(fail(describe(cfg), "hessian_form == cuspidal_form", "mismatch"));
      if (published.size() > 0) {
        const GaleDual pub{published};
        if (hessian_form(cfg, pub) != cuspidal_form(cfg, pub))
          fs.push_back(fail(describe(cfg), "hessian_form == cuspidal_form (published dual)",
                            "mismatch"));
      }
      return fs;
    });
  }

  for (std::size_t i = 0; i < count; ++i) {
    const Index n = 1 + static_cast<Index>(i % 3);
    const Index span = 7 - n;  // N in [n+2, 8]
    const Index N = n + 2 + static_cast<Index>((i / 3) % static_cast<std::size_t>(span));
    PointConfiguration cfg = random_config(rng, n, N, 3);
    jobs.push_back([cfg] {
      std::vector<SuiteFailure> fs;
      const GaleDual b = gale_dual(cfg);
      const Polynomial h = hessian_form(cfg, b);
      const Polynomial p = cuspidal_form(cfg, b);
      if (h != p)
        fs.push_back(fail(describe(cfg), "hessian " + p.str(), h.str()));
      return fs;
    });
  }
  return jobs;
}

std::vector<Job> build_jacobian(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;

  auto admissible = [](const GaleDual& b, const Vec& t) {
    for (Index k = 0; k < b.points(); ++k)
      if ((b.matrix.row(k) * t)(0, 0).is_zero()) return false;
    return true;
  };
  auto random_admissible = [&](SplitMix64& r, const GaleDual& b, Index m) -> std::optional<Vec> {
    for (int tries = 0; tries < 200; ++tries) {
      Vec t(m);
      for (Index i = 0; i < m; ++i) t(i) = Rational(r.range(-5, 5));
      if (admissible(b, t)) return t;
    }
    return std::nullopt;
  };
  // A rational zero of a nonzero linear polynomial, avoiding the row
  // hyperplanes; the zero set is solved on its first supported variable.
  auto cusp_point = [&](SplitMix64& r, const Polynomial& linear, const GaleDual& b,
                        Index m) -> std::optional<Vec> {
    Vec coeff = Vec::Zero(m);
    for (const auto& [mono, c] : linear.terms())
      for (std::size_t v = 0; v < mono.size(); ++v)
        if (mono[v] == 1) coeff(static_cast<Index>(v)) = c;
    Index pivot = -1;
    for (Index i = 0; i < m; ++i)
      if (!coeff(i).is_zero()) { pivot = i; break; }
    if (pivot < 0) return std::nullopt;
    for (int tries = 0; tries < 100; ++tries) {
      Vec t(m);
      Rational acc(0);
      for (Index i = 0; i < m; ++i) {
        if (i == pivot) continue;
        t(i) = Rational(r.range(-4, 4));
        acc += coeff(i) * t(i);
      }
      t(pivot) = -acc / coeff(pivot);
      if (admissible(b, t)) return t;
    }
    return std::nullopt;
  };

  auto push_job = [&](PointConfiguration cfg, GaleDual dual, Polynomial form,
                      std::vector<Vec> pts) {
    jobs.push_back([cfg = std::move(cfg), dual = std::move(dual), form = std::move(form),
                    pts = std::move(pts)] {
      std::vector<SuiteFailure> fs;
      for (const Vec& t : pts) {
        const Index r = jacobian_rank(cfg, dual, t);
        const bool on_cusp = form.eval(t).is_zero();
        const Index expected = cfg.n + cfg.m - (on_cusp ? 1 : 0);
        if (r != expected)
          fs.push_back(fail(describe(cfg),
                            "rank " + std::to_string(expected) +
                                (on_cusp ? " (cusp point)" : " (generic point)"),
                            "rank " + std::to_string(r)));
      }
      return fs;
    });
  };

  // Transported fixture cusps: Gale mixing, row mixing, translation, column
  // permutation and scaling all preserve the Jacobian rank at the mapped
  // parameter, so these cusp points stay clean by construction.
  const PointConfiguration base_cfgs[2] = {fixtures::p5(), fixtures::nine_point()};
  const Mat base_duals[2] = {fixtures::p5_gale(), fixtures::nine_point_gale()};
  const auto base_cusp = [](int which) {
    Vec t(which == 0 ? 2 : 3);
    if (which == 0) {
      t << Rational(1), Rational(1);
    } else {
      t << Rational(1), Rational(3), Rational(2);
    }
    return t;
  };

  for (std::size_t i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      // Generic instances; parameters resampled off the cusp locus.
      const Index n = 1 + static_cast<Index>((i / 2) % 3);
      const Index N = n + 2 + static_cast<Index>((i / 6) % 3);
      PointConfiguration cfg = random_config(rng, n, N, 3);
      GaleDual b = gale_dual(cfg);
      Polynomial p = cuspidal_form(cfg, b);
      std::vector<Vec> pts;
      for (int k = 0; k < 5; ++k) {
        for (int tries = 0; tries < 50; ++tries) {
          const auto t = random_admissible(rng, b, cfg.m);
          if (!t) break;
          if (!p.eval(*t).is_zero()) {
            pts.push_back(*t);
            break;
          }
        }
      }
      push_job(std::move(cfg), std::move(b), std::move(p), std::move(pts));
    } else if (i % 4 == 1) {
      // n = 1: the form is linear and the lower rank bound from the B^T
      // block makes the dichotomy sharp at every admissible parameter.
      const Index N = 4 + static_cast<Index>((i / 4) % 3);
      PointConfiguration cfg = random_config(rng, 1, N, 4);
      GaleDual b = gale_dual(cfg);
      Polynomial p = cuspidal_form(cfg, b);
      std::vector<Vec> pts;
      if (!p.is_zero()) {
        for (int k = 0; k < 2; ++k)
          if (auto t = cusp_point(rng, p, b, cfg.m)) pts.push_back(*t);
      }
      for (int k = 0; k < 3; ++k)
        if (auto t = random_admissible(rng, b, cfg.m)) pts.push_back(*t);
      push_job(std::move(cfg), std::move(b), std::move(p), std::move(pts));
    } else {
      // Fixture cusp transported through the rank-preserving symmetries.
      const int which = static_cast<int>((i / 4) % 2);
      const PointConfiguration& base = base_cfgs[which];
      const Index n = base.n, m = base.m, big_n = base.N;

      const Mat mixer = random_invertible(rng, m, 2);
      const Mat row_mix = random_invertible(rng, n, 2);
      Vec shift(n);
      for (Index r = 0; r < n; ++r) shift(r) = Rational(rng.range(-3, 3));
      Rational lambda(rng.range(1, 5));

      std::vector<Index> perm(static_cast<std::size_t>(big_n));
      for (Index j = 0; j < big_n; ++j) perm[static_cast<std::size_t>(j)] = j;
      for (Index j = big_n - 1; j > 0; --j)
        std::swap(perm[static_cast<std::size_t>(j)],
                  perm[static_cast<std::size_t>(rng.range(0, j))]);

      Mat coords(n, big_n);
      Mat dual(big_n, m);
      for (Index j = 0; j < big_n; ++j) {
        const Index src = perm[static_cast<std::size_t>(j)];
        coords.col(j) = base.coords().col(src);
        dual.row(j) = base_duals[which].row(src);
      }
      coords = (row_mix * coords).eval();
      for (Index j = 0; j < big_n; ++j) coords.col(j) += shift;
      dual = (dual * mixer).eval();

      Mat full(n + 1, big_n);
      full.row(0).setConstant(Rational(1));
      full.bottomRows(n) = coords;
      PointConfiguration cfg = validate_normalize(full, false);
      GaleDual b{std::move(dual)};
      Polynomial p = cuspidal_form(cfg, b);

      std::vector<Vec> pts;
      const Vec mapped = (inverse(mixer) * (lambda * base_cusp(which)).eval()).eval();
      pts.push_back(mapped);
      for (int k = 0; k < 4; ++k)
        if (auto t = random_admissible(rng, b, m)) pts.push_back(*t);
      push_job(std::move(cfg), std::move(b), std::move(p), std::move(pts));
    }
  }
  return jobs;
}

std::vector<Job> build_restriction(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    const Index n = 1 + static_cast<Index>(i % 3);
    const Index N = n + 2 + static_cast<Index>((i / 3) % 3);
    PointConfiguration cfg = random_config(rng, n, N, 3);
    jobs.push_back([cfg] {
      std::vector<SuiteFailure> fs;
      for (Index alpha = 0; alpha < cfg.N; ++alpha) {
        GaleDual adapted{Mat()};
        try {
          adapted = adapted_gale_dual(cfg, alpha);
        } catch (const DeletionDropsRank&) {
          continue;
        }
        const Polynomial whole = cuspidal_form(cfg, adapted);
        const Polynomial restricted = whole.restrict_zero(cfg.m - 1);

        std::vector<Index> keep;
        for (Index j = 0; j < cfg.N; ++j)
          if (j != alpha) keep.push_back(j);
        const PointConfiguration sub = subconfiguration(cfg, keep);
        Mat inherited(cfg.N - 1, cfg.m - 1);
        for (Index j = 0, r = 0; j < cfg.N; ++j)
          if (j != alpha) inherited.row(r++) = adapted.matrix.row(j).head(cfg.m - 1);
        const Polynomial deleted = cuspidal_form(sub, GaleDual{inherited});

        if (restricted != deleted)
          fs.push_back(fail(describe(cfg),
                            "restriction at point " + std::to_string(alpha) + ": " +
                                deleted.str(),
                            restricted.str()));
      }
      return fs;
    });
  }
  return jobs;
}

std::vector<Job> build_diagonal_product(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      // Pure diagonal: the form factors as the product of the block forms.
      const std::size_t nblocks = 2 + (i / 2) % 2;
      std::vector<Block> blocks;
      for (std::size_t bi = 0; bi < nblocks; ++bi) {
        const Index bn = 1 + static_cast<Index>((i / 4 + bi) % 2);
        const Index extra = static_cast<Index>((i / 8 + bi) % 2);
        blocks.push_back(random_block(rng, bn, bn + 2 + extra, 2, false));
      }
      Assembled built = assemble(blocks, nullptr, 0);
      Polynomial expected = Polynomial::constant(built.cfg.m, Rational(1));
      for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        expected = expected * embed_poly(blocks[bi].form, built.cfg.m, built.var_offset[bi]);
      jobs.push_back([cfg = built.cfg, dual = built.dual, expected] {
        std::vector<SuiteFailure> fs;
        const Polynomial p = cuspidal_form(cfg, dual);
        if (p != expected)
          fs.push_back(fail(describe(cfg), "product form " + expected.str(), p.str()));
        return fs;
      });
    } else {
      // Upper diagonal with circuit blocks: the leading block monomial
      // carries the product of the block coefficients.
      const std::size_t nblocks = 2 + (i / 2) % 2;
      std::vector<Block> blocks;
      for (std::size_t bi = 0; bi < nblocks; ++bi) {
        const Index bn = 1 + static_cast<Index>((i / 4 + bi) % 2);
        blocks.push_back(random_block(rng, bn, bn + 2, 2, true));
      }
      Assembled built = assemble(blocks, &rng, 2);
      Rational expected_coeff(1);
      Monomial lead(static_cast<std::size_t>(built.cfg.m), 0u);
      for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        Monomial bm(1, static_cast<unsigned>(blocks[bi].cfg.n));
        expected_coeff *= blocks[bi].form.coefficient(bm);
        lead[static_cast<std::size_t>(built.var_offset[bi])] =
            static_cast<unsigned>(blocks[bi].cfg.n);
      }
      jobs.push_back([cfg = built.cfg, dual = built.dual, lead, expected_coeff] {
        std::vector<SuiteFailure> fs;
        const Polynomial p = cuspidal_form(cfg, dual);
        const Rational got = p.coefficient(lead);
        if (got != expected_coeff)
          fs.push_back(fail(describe(cfg), "leading block coefficient " + expected_coeff.str(),
                            got.str()));
        return fs;
      });
    }
  }
  return jobs;
}

std::vector<Job> build_divisibility(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    PointConfiguration cfg;
    if (i % 2 == 0) {
      // Constructed: a pyramid plus one extra point, so deleting the extra
      // point is always defective.
      const Index n = 1 + static_cast<Index>((i / 2) % 3);
      for (int attempt = 0;; ++attempt) {
        if (attempt > 10000) throw DomainError("divisibility: construction failed");
        const Index base_pts = n + static_cast<Index>((i / 6) % 2);  // >= n on the hyperplane
        Mat m(n + 1, base_pts + 2);
        m.row(0).setConstant(Rational(1));
        for (Index j = 0; j < base_pts; ++j) {
          for (Index r = 1; r < n; ++r) m(r, j) = Rational(rng.range(-3, 3));
          m(n, j) = Rational(0);  // base points live in the hyperplane x_n = 0
        }
        for (Index j = base_pts; j < base_pts + 2; ++j)
          for (Index r = 1; r <= n; ++r) m(r, j) = Rational(rng.range(-3, 3));
        if (m(n, base_pts).is_zero()) m(n, base_pts) = Rational(1);  // apex off the hyperplane
        if (rank(m) != n + 1) continue;
        Mat pyr = m.leftCols(base_pts + 1);
        if (rank(pyr) != n + 1) continue;
        cfg = validate_normalize(m, false);
        break;
      }
    } else {
      const Index n = 1 + static_cast<Index>((i / 2) % 3);
      const Index N = n + 2 + static_cast<Index>((i / 6) % 3);
      cfg = random_config(rng, n, N, 2);
    }
    jobs.push_back([cfg] {
      std::vector<SuiteFailure> fs;
      for (Index alpha = 0; alpha < cfg.N; ++alpha) {
        GaleDual adapted{Mat()};
        try {
          adapted = adapted_gale_dual(cfg, alpha);
        } catch (const DeletionDropsRank&) {
          continue;
        }
        std::vector<Index> keep;
        for (Index j = 0; j < cfg.N; ++j)
          if (j != alpha) keep.push_back(j);
        Mat inherited(cfg.N - 1, cfg.m - 1);
        for (Index j = 0, r = 0; j < cfg.N; ++j)
          if (j != alpha) inherited.row(r++) = adapted.matrix.row(j).head(cfg.m - 1);
        const Polynomial deleted =
            cuspidal_form(subconfiguration(cfg, keep), GaleDual{inherited});
        if (!deleted.is_zero()) continue;

        const Polynomial whole = cuspidal_form(cfg, adapted);
        if (whole.is_zero()) continue;
        Vec last = Vec::Zero(cfg.m);
        last(cfg.m - 1) = Rational(1);
        const Polynomial lf = Polynomial::linear_form(last);
        if (!exact_divide(whole, lf))
          fs.push_back(fail(describe(cfg),
                            "t_m divides P_A after defective deletion of point " +
                                std::to_string(alpha),
                            "indivisible: " + whole.str()));
      }
      return fs;
    });
  }
  return jobs;
}

std::vector<Job> build_parallel_rows(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    const Index k = 2 + static_cast<Index>(i % 2);           // parallel family size
    const Index p = 1 + static_cast<Index>((i / 2) % 2);     // dimension of A'
    const Index n = p + k - 1;
    const Index inner_n = p + 2 + static_cast<Index>((i / 4) % 2);  // points of A'
    const bool zero_sum = (i / 2) % 2 == 0;

    // A = [[1,1,1],[A'^, *, *],[0, I_{k-1}, gamma]]
    PointConfiguration inner = random_config(rng, p, inner_n, 2);
    const Mat inner_coords = inner.coords();

    Vec gamma(k - 1);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw DomainError("parallel-rows: gamma construction failed");
      Rational sum(0);
      bool ok = true;
      for (Index g = 0; g + 1 < k - 1; ++g) {
        long v = rng.range(-3, 3);
        if (v == 0) v = 2;
        gamma(g) = Rational(v);
        sum += gamma(g);
      }
      if (zero_sum) {
        gamma(k - 2) = Rational(1) - sum;
        if (gamma(k - 2).is_zero()) ok = false;
      } else {
        long v = rng.range(-3, 3);
        if (v == 0) v = -2;
        gamma(k - 2) = Rational(v);
        if ((sum + gamma(k - 2)) == Rational(1)) ok = false;
      }
      if (ok) break;
    }

    const Index N = inner_n + k;
    Mat a = Mat::Zero(n + 1, N);
    a.row(0).setConstant(Rational(1));
    a.block(1, 0, p, inner_n) = inner_coords;
    for (Index j = 0; j < k; ++j)
      for (Index r = 0; r < p; ++r)
        a(1 + r, inner_n + j) = Rational(rng.range(-2, 2));  // stars
    for (Index j = 0; j < k - 1; ++j) a(1 + p + j, inner_n + j) = Rational(1);
    for (Index r = 0; r < k - 1; ++r) a(1 + p + r, N - 1) = gamma(r);

    PointConfiguration cfg = validate_normalize(a, false);

    // Dual: embedded dual of A', then the (.., -gamma, 1) column solved on
    // the first band.
    const Mat inner_dual = kernel_basis(inner.matrix);
    const Index m = cfg.m;
    Mat dual = Mat::Zero(N, m);
    dual.block(0, 0, inner_n, m - 1) = inner_dual;
    Vec v = Vec::Zero(N);
    for (Index j = 0; j < k - 1; ++j) v(inner_n + j) = -gamma(j);
    v(N - 1) = Rational(1);
    Vec rhs = -(a * v);
    const auto sol = solve_particular(a.leftCols(inner_n), rhs);
    if (!sol) throw ConsistencyFailure("parallel-rows: dual solve failed");
    for (Index j = 0; j < inner_n; ++j) v(j) = (*sol)(j);
    dual.col(m - 1) = v;
    if (!matrix_product_zero(cfg.matrix, dual))
      throw ConsistencyFailure("parallel-rows: A*B != 0");

    const Index min_mult = zero_sum ? k : k - 1;
    jobs.push_back([cfg, dual, min_mult, m] {
      std::vector<SuiteFailure> fs;
      const Polynomial p_form = cuspidal_form(cfg, GaleDual{dual});
      if (p_form.is_zero()) return fs;  // proposition assumes a nontrivial form
      Vec last = Vec::Zero(m);
      last(m - 1) = Rational(1);
      const unsigned mult = linear_multiplicity(p_form, last);
      if (mult < static_cast<unsigned>(min_mult))
        fs.push_back(fail(describe(cfg),
                          "t_m multiplicity >= " + std::to_string(min_mult),
                          "multiplicity " + std::to_string(mult)));
      return fs;
    });
  }
  return jobs;
}

std::vector<Job> build_esterov(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;

  auto equivalence_job = [](PointConfiguration cfg) -> Job {
    return [cfg = std::move(cfg)] {
      std::vector<SuiteFailure> fs;
      const bool defective = is_dual_defective(cfg);
      const auto witness = contains_iterated_circuit(cfg);
      if (defective != !witness.has_value()) {
        fs.push_back(fail(describe(cfg),
                          defective ? "trivial form and no iterated circuit"
                                    : "nontrivial form and an iterated circuit",
                          witness ? "witness found" : "no witness"));
      }
      if (witness && !witness_is_sound(cfg, *witness))
        fs.push_back(fail(describe(cfg), "sound witness", "replay failed"));
      return fs;
    };
  };

  if (count == 0) {
    // Exhaustive planar sweep: multisets of {0,1,2}^2 points, N in {4,5,6}.
    std::vector<std::pair<long, long>> grid;
    for (long x = 0; x <= 2; ++x)
      for (long y = 0; y <= 2; ++y) grid.emplace_back(x, y);

    for (Index n_pts = 4; n_pts <= 6; ++n_pts) {
      std::vector<std::size_t> pick(static_cast<std::size_t>(n_pts), 0);
      // Non-decreasing index tuples enumerate multisets (deduplication up
      // to column permutation).
      std::function<void(std::size_t, std::size_t)> enumerate = [&](std::size_t pos,
                                                                    std::size_t lo) {
        if (pos == pick.size()) {
          Mat msel(3, n_pts);
          msel.row(0).setConstant(Rational(1));
          for (Index j = 0; j < n_pts; ++j) {
            msel(1, j) = Rational(grid[pick[static_cast<std::size_t>(j)]].first);
            msel(2, j) = Rational(grid[pick[static_cast<std::size_t>(j)]].second);
          }
          if (rank(msel) == 3) jobs.push_back(equivalence_job(validate_normalize(msel, false)));
          return;
        }
        for (std::size_t g = lo; g < grid.size(); ++g) {
          pick[pos] = g;
          enumerate(pos + 1, g);
        }
      };
      enumerate(0, 0);
    }
    return jobs;
  }

  for (std::size_t i = 0; i < count; ++i) {
    const Index N = 6 + static_cast<Index>(i % 3);
    jobs.push_back(equivalence_job(random_config(rng, 3, N, 2)));
  }
  return jobs;
}

// Instance constructions on rational conics, one per classification class.
std::vector<Job> build_bivariate_table(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;

  auto affine_image = [&](const Mat& pts) {
    const Mat l = random_invertible(rng, 2, 2);
    Vec shift(2);
    shift << Rational(rng.range(-2, 2)), Rational(rng.range(-2, 2));
    Mat out(2, pts.cols());
    for (Index j = 0; j < pts.cols(); ++j) out.col(j) = l * pts.col(j) + shift;
    return out;
  };
  auto distinct_longs = [&](Index howmany, long lo, long hi, bool nonzero) {
    std::vector<long> vals;
    while (static_cast<Index>(vals.size()) < howmany) {
      const long v = rng.range(lo, hi);
      if (nonzero && v == 0) continue;
      bool dup = false;
      for (long w : vals) dup |= (w == v);
      if (!dup) vals.push_back(v);
    }
    return vals;
  };
  auto to_config = [](const Mat& pts) {
    Mat m(3, pts.cols());
    m.row(0).setConstant(Rational(1));
    m.bottomRows(2) = pts;
    return validate_normalize(m, false);
  };

  struct Expected {
    ConicClass cls;
    SignatureTriple sig;
  };
  auto expected_for = [](ConicClass cls, Index m) {
    switch (cls) {
      case ConicClass::pyramid: return Expected{cls, {0, 0, m}};
      case ConicClass::nonreal_parabola: return Expected{cls, {1, 0, 0}};
      case ConicClass::real_parabola: return Expected{cls, {0, 1, m - 1}};
      case ConicClass::hyperbola: return Expected{cls, {1, 1, m - 2}};
      case ConicClass::ellipse: return Expected{cls, {0, 2, m - 2}};
      case ConicClass::generic: return Expected{cls, {1, 2, m - 3}};
    }
    return Expected{cls, {0, 0, 0}};
  };

  auto check_job = [expected_for](PointConfiguration cfg, ConicClass cls) -> Job {
    return [cfg = std::move(cfg), cls, expected_for] {
      std::vector<SuiteFailure> fs;
      const Expected want = expected_for(cls, cfg.m);
      const ConicReport rep = conic_report(cfg);
      if (rep.conic_class != want.cls)
        fs.push_back(fail(describe(cfg), "class " + to_string(want.cls),
                          "class " + to_string(rep.conic_class)));
      if (!(rep.signature == want.sig))
        fs.push_back(fail(describe(cfg),
                          "signature (" + std::to_string(want.sig.positives) + "," +
                              std::to_string(want.sig.negatives) + ";" +
                              std::to_string(want.sig.zeros) + ")",
                          "(" + std::to_string(rep.signature.positives) + "," +
                              std::to_string(rep.signature.negatives) + ";" +
                              std::to_string(rep.signature.zeros) + ")"));
      if (!rep.agree)
        fs.push_back(fail(describe(cfg), "oracle agreement",
                          "classifier " + to_string(rep.conic_class) + " vs oracle " +
                              to_string(rep.oracle.kind)));

      const NormalForm2D nf = normal_form_2d(cfg);

      // The kernel matrix realizes the form on every instance.
      const Mat q = q_matrix(nf);
      Polynomial quad(cfg.m);
      for (Index i = 0; i < cfg.m; ++i)
        for (Index j = 0; j < cfg.m; ++j) {
          Monomial mono(static_cast<std::size_t>(cfg.m), 0u);
          mono[static_cast<std::size_t>(i)] += 1;
          mono[static_cast<std::size_t>(j)] += 1;
          quad.add_term(mono, q(i, j));
        }
      if (quad != cuspidal_form(nf.config, nf.dual))
        fs.push_back(fail(describe(cfg), "t^T Q t equals the form", "mismatch"));

      // Five distinct points lie on a parabola iff the 2x2 minor vanishes
      // (pyramids sit on degenerate parabolas, so they are excluded here).
      if (cfg.m == 2 && cls != ConicClass::pyramid) {
        const bool minor_zero = g_minor(nf.alphas, nf.alphas).is_zero();
        const bool on_parabola = (cls == ConicClass::real_parabola);
        if (minor_zero != on_parabola)
          fs.push_back(fail(describe(cfg), "2x2 minor vanishes iff on a parabola",
                            minor_zero ? "vanishes off a parabola" : "nonzero on a parabola"));
      }
      // Six distinct points lie on a conic iff H vanishes.
      if (cfg.m == 3 && cls != ConicClass::pyramid) {
        const bool h_zero =
            evaluate_H(nf.alphas.col(0), nf.alphas.col(1), nf.alphas.col(2)).is_zero();
        const bool on_conic = (cls != ConicClass::generic);
        if (h_zero != on_conic)
          fs.push_back(fail(describe(cfg), "H vanishes iff the six points share a conic",
                            h_zero ? "vanishes in the generic class" : "nonzero on a conic"));
      }
      return fs;
    };
  };

  for (std::size_t i = 0; i < count; ++i) {
    const int cls_idx = static_cast<int>(i % 6);
    switch (cls_idx) {
      case 0: {  // pyramid: N-1 points on a line plus an apex
        const Index n_pts = 4 + static_cast<Index>((i / 6) % 3);
        for (;;) {
          Vec d(2), q(2), apex(2);
          d << Rational(rng.range(-3, 3)), Rational(rng.range(-3, 3));
          if (d(0).is_zero() && d(1).is_zero()) continue;
          q << Rational(rng.range(-3, 3)), Rational(rng.range(-3, 3));
          apex << Rational(rng.range(-3, 3)), Rational(rng.range(-3, 3));
          const Rational off = d(0) * (apex(1) - q(1)) - d(1) * (apex(0) - q(0));
          if (off.is_zero()) continue;
          const auto params = distinct_longs(n_pts - 1, -4, 4, false);
          Mat pts(2, n_pts);
          const Index apex_at = static_cast<Index>(i % static_cast<std::size_t>(n_pts));
          Index w = 0;
          for (Index j = 0; j < n_pts; ++j) {
            if (j == apex_at) {
              pts.col(j) = apex;
            } else {
              pts.col(j) = q + Rational(params[static_cast<std::size_t>(w)]) * d;
              ++w;
            }
          }
          jobs.push_back(check_job(to_config(pts), ConicClass::pyramid));
          break;
        }
        break;
      }
      case 1: {  // simplex circuit: triangle plus a strictly interior point
        for (;;) {
          Mat tri = random_int_matrix(rng, 2, 3, 4);
          const Rational area = (tri(0, 1) - tri(0, 0)) * (tri(1, 2) - tri(1, 0)) -
                                (tri(1, 1) - tri(1, 0)) * (tri(0, 2) - tri(0, 0));
          if (area.is_zero()) continue;
          Vec weights(3);
          Rational total(0);
          for (Index w = 0; w < 3; ++w) {
            weights(w) = Rational(rng.range(1, 4));
            total += weights(w);
          }
          Vec inner = Vec::Zero(2);
          for (Index w = 0; w < 3; ++w) inner += (weights(w) / total) * tri.col(w);
          Mat pts(2, 4);
          pts.leftCols(3) = tri;
          pts.col(3) = inner;
          jobs.push_back(check_job(to_config(pts), ConicClass::nonreal_parabola));
          break;
        }
        break;
      }
      case 2: {  // real parabola: images of (x, x^2)
        const Index n_pts = 4 + static_cast<Index>((i / 6) % 3);
        const auto xs = distinct_longs(n_pts, -4, 4, false);
        Mat pts(2, n_pts);
        for (Index j = 0; j < n_pts; ++j) {
          const Rational x(xs[static_cast<std::size_t>(j)]);
          pts(0, j) = x;
          pts(1, j) = x * x;
        }
        jobs.push_back(check_job(to_config(affine_image(pts)), ConicClass::real_parabola));
        break;
      }
      case 3: {  // hyperbola: images of (x, 1/x)
        const Index n_pts = 5 + static_cast<Index>((i / 6) % 2);
        const auto xs = distinct_longs(n_pts, -5, 5, true);
        Mat pts(2, n_pts);
        for (Index j = 0; j < n_pts; ++j) {
          const Rational x(xs[static_cast<std::size_t>(j)]);
          pts(0, j) = x;
          pts(1, j) = Rational(1) / x;
        }
        jobs.push_back(check_job(to_config(affine_image(pts)), ConicClass::hyperbola));
        break;
      }
      case 4: {  // ellipse: rational points of the unit circle
        const Index n_pts = 5 + static_cast<Index>((i / 6) % 2);
        const auto ss = distinct_longs(n_pts, -6, 6, false);
        Mat pts(2, n_pts);
        for (Index j = 0; j < n_pts; ++j) {
          const Rational s(ss[static_cast<std::size_t>(j)]);
          const Rational denom = Rational(1) + s * s;
          pts(0, j) = (Rational(1) - s * s) / denom;
          pts(1, j) = (Rational(2) * s) / denom;
        }
        jobs.push_back(check_job(to_config(affine_image(pts)), ConicClass::ellipse));
        break;
      }
      default: {  // generic: six points with no conic through them
        for (int attempt = 0;; ++attempt) {
          if (attempt > 1000) throw DomainError("bivariate-table: generic sampling failed");
          Mat pts = random_int_matrix(rng, 2, 6, 5);
          Mat m(3, 6);
          m.row(0).setConstant(Rational(1));
          m.bottomRows(2) = pts;
          if (rank(m) != 3) continue;
          const OracleResult probe = conic_fit_oracle(pts);
          if (probe.kind != OracleKind::no_conic) continue;
          jobs.push_back(check_job(validate_normalize(m, false), ConicClass::generic));
          break;
        }
        break;
      }
    }
  }
  return jobs;
}

std::vector<Job> build_g4_vanish(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    auto draw_points = [&](Index k) {
      Mat pts(2, k);
      for (Index j = 0; j < k; ++j) {
        pts(0, j) = random_rational(rng, 8, 3);
        pts(1, j) = random_rational(rng, 8, 3);
      }
      return pts;
    };
    const Mat rows4 = draw_points(4), cols4 = draw_points(4);
    const Mat rows3 = draw_points(3), cols3 = draw_points(3);
    jobs.push_back([rows4, cols4, rows3, cols3] {
      std::vector<SuiteFailure> fs;
      const Rational det4 = g_minor(rows4, cols4);
      if (!det4.is_zero())
        fs.push_back(fail("g4 instance", "0", det4.str()));
      const Rational det3 = g_minor(rows3, cols3);
      const Rational expected = evaluate_H(rows3.col(0), rows3.col(1), rows3.col(2)) *
                                evaluate_H(cols3.col(0), cols3.col(1), cols3.col(2)) /
                                Rational(4);
      if (det3 != expected)
        fs.push_back(fail("g3 instance", "G3 = H*H/4 = " + expected.str(), det3.str()));
      return fs;
    });
  }
  return jobs;
}

std::vector<Job> build_equivariance(SplitMix64& rng, std::size_t count) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < count; ++i) {
    const Index n = 1 + static_cast<Index>(i % 3);
    const Index N = n + 2 + static_cast<Index>((i / 3) % 2);
    PointConfiguration cfg = random_config(rng, n, N, 3);
    const Mat mixer = random_invertible(rng, cfg.m, 2);
    const Mat row_mix = random_invertible(rng, n, 2);
    Vec shift(n);
    for (Index r = 0; r < n; ++r) shift(r) = random_rational(rng, 3, 2);

    jobs.push_back([cfg, mixer, row_mix, shift] {
      std::vector<SuiteFailure> fs;
      const GaleDual b = gale_dual(cfg);
      const Polynomial p = cuspidal_form(cfg, b);

      // Gale change: P_{BT}(t) = P_B(T t).
      const Polynomial mixed = cuspidal_form(cfg, GaleDual{(b.matrix * mixer).eval()});
      if (mixed != p.substitute_linear(mixer))
        fs.push_back(fail(describe(cfg), "Gale covariance P_B(Tt)", "mismatch"));

      // Translation invariance.
      Mat shifted = cfg.coords();
      for (Index j = 0; j < cfg.N; ++j) shifted.col(j) += shift;
      if (cuspidal_form_raw(shifted, b.matrix) != p)
        fs.push_back(fail(describe(cfg), "translation invariance", "mismatch"));

      // Row mixing scales by |W|^2.
      const Rational w2 = det(row_mix) * det(row_mix);
      if (cuspidal_form_raw((row_mix * cfg.coords()).eval(), b.matrix) != w2 * p)
        fs.push_back(fail(describe(cfg), "row-mixing |W|^2 scaling", "mismatch"));

      if (cfg.n == 2) {
        const SignatureTriple sig = signature_2d(cfg);
        PointConfiguration moved = cfg;
        Mat mm = cfg.matrix;
        for (Index j = 0; j < cfg.N; ++j) mm.col(j).tail(2) += shift;
        moved.matrix = mm;
        PointConfiguration rowed = cfg;
        Mat rm = cfg.matrix;
        rm.bottomRows(2) = row_mix * cfg.coords();
        rowed.matrix = rm;
        if (!(signature_2d(moved) == sig))
          fs.push_back(fail(describe(cfg), "signature translation invariance", "mismatch"));
        if (!(signature_2d(rowed) == sig))
          fs.push_back(fail(describe(cfg), "signature row-mixing invariance", "mismatch"));
      }
      return fs;
    });
  }
  return jobs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "lemma-schur",     "hessian",     "jacobian",      "restriction",
      "diagonal-product", "divisibility", "parallel-rows", "esterov",
      "bivariate-table", "g4-vanish",   "equivariance",
  };
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<Job> jobs;
  if (name == "lemma-schur") jobs = build_lemma_schur(rng, count);
  else if (name == "hessian") jobs = build_hessian(rng, count);
  else if (name == "jacobian") jobs = build_jacobian(rng, count);
  else if (name == "restriction") jobs = build_restriction(rng, count);
  else if (name == "diagonal-product") jobs = build_diagonal_product(rng, count);
  else if (name == "divisibility") jobs = build_divisibility(rng, count);
  else if (name == "parallel-rows") jobs = build_parallel_rows(rng, count);
  else if (name == "esterov") jobs = build_esterov(rng, count);
  else if (name == "bivariate-table") jobs = build_bivariate_table(rng, count);
  else if (name == "g4-vanish") jobs = build_g4_vanish(rng, count);
  else if (name == "equivariance") jobs = build_equivariance(rng, count);
  else throw std::invalid_argument("unknown suite: " + name);
  return execute(name, seed, std::move(jobs));
}

}  // namespace cusp
