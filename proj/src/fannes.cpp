#include "tsallis/fannes.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tsallis/format.hpp"

namespace tsallis {

double fannes_bound(double epsilon, int d, const QParam& q) {
  if (!(epsilon >= 0.0 && epsilon <= 2.0 + 1e-9))
    throw std::domain_error("fannes_bound: epsilon must lie in [0, 2]");
  if (d < 1) throw std::invalid_argument("fannes_bound: d must be >= 1");
  if (epsilon == 0.0) return 0.0;
  return std::pow(epsilon, q.value()) * q_log(static_cast<double>(d), q) +
         detail::eta_any(epsilon, q);
}

EigenGaps sorted_eigen_gaps(const DensityOperator& rho1, const DensityOperator& rho2) {
  if (rho1.dim() != rho2.dim())
    throw std::invalid_argument("sorted_eigen_gaps: dimension mismatch");
  EigenGaps out;
  out.gaps.reserve(rho1.eigenvalues().size());
  for (std::size_t j = 0; j < rho1.eigenvalues().size(); ++j) {
    const double g = std::abs(rho1.eigenvalues()[j] - rho2.eigenvalues()[j]);
    out.gaps.push_back(g);
    out.sum += g;
  }
  return out;
}

BoundReport check_fannes(const DensityOperator& rho1, const DensityOperator& rho2,
                         const QParam& q) {
  if (rho1.dim() != rho2.dim())
    throw std::invalid_argument("check_fannes: dimension mismatch");

  BoundReport rep;
  rep.q = q.value();
  rep.d = rho1.dim();
  rep.epsilon = trace_norm(rho1.matrix() - rho2.matrix());
  const EigenGaps gaps = sorted_eigen_gaps(rho1, rho2);
  rep.eigen_gap_sum = gaps.sum;
  rep.radius = fannes_radius(q);
  rep.hypothesis_met = rep.epsilon <= rep.radius;
  rep.lhs = std::abs(tsallis_entropy(rho1, q).value - tsallis_entropy(rho2, q).value);
  for (double g : gaps.gaps) rep.eigenwise_rhs += eta(g, q);
  rep.gap_rhs = fannes_bound(std::min(rep.eigen_gap_sum, 2.0), rep.d, q);
  rep.rhs = fannes_bound(std::min(rep.epsilon, 2.0), rep.d, q);
  rep.margin = rep.rhs - rep.lhs;
  return rep;
}

GapCheck concave_gap_check(const std::function<double(double)>& f, double s, double t) {
  if (!(s >= 0.0 && s <= 0.5))
    throw std::domain_error("concave_gap_check: s must lie in [0, 1/2]");
  if (!(t >= 0.0 && t <= 1.0) || s + t > 1.0 + 1e-15)
    throw std::domain_error("concave_gap_check: need t in [0, 1] with s + t <= 1");

  // Trust gate: f must vanish at the endpoints and pass a midpoint concavity
  // spot-check on a fixed grid before its gap bound means anything.
  constexpr double kSpotTol = 1e-9;
  if (std::abs(f(0.0)) > kSpotTol || std::abs(f(1.0)) > kSpotTol)
    throw std::invalid_argument("concave_gap_check: f(0) or f(1) is not 0");
  constexpr int kGrid = 11;
  for (int i = 0; i < kGrid; ++i)
    for (int j = i + 1; j < kGrid; ++j) {
      const double a = static_cast<double>(i) / (kGrid - 1);
      const double b = static_cast<double>(j) / (kGrid - 1);
      const double mid = f(0.5 * (a + b));
      const double chord = 0.5 * (f(a) + f(b));
      if (mid < chord - kSpotTol)
        throw std::invalid_argument(
            "concave_gap_check: concavity spot-check failed at (" + format_num(a) +
            ", " + format_num(b) + "): midpoint " + format_num(mid) + " < chord " +
            format_num(chord));
    }

  GapCheck out;
  out.lhs = std::abs(f(std::min(t + s, 1.0)) - f(t));
  out.rhs = std::max(f(s), f(1.0 - s));
  return out;
}

DensityOperator contract_to_hypothesis(const DensityOperator& rho1,
                                       const DensityOperator& rho2, const QParam& q) {
  const double radius = fannes_radius(q);
  const double eps = trace_norm(rho1.matrix() - rho2.matrix());
  if (eps <= radius) return rho2;
  // Trace norm is homogeneous along the segment, so tau * eps lands the pair
  // at tau * radius; the tiny slack keeps rounding from poking back outside.
  const double tau = (radius / eps) * (1.0 - 1e-12);
  return interpolate(rho1, rho2, tau);
}

namespace {

struct PairStats {
  double max_ratio = -1.0;
  long max_k = -1;
  std::uint64_t max_seed = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  long violations = 0;
};

struct Task {
  std::size_t cell;
  int k_begin;
  int k_end;
};

// Statistics for one block of sample indices within one cell.
PairStats run_block(double qv, int d, std::uint64_t cell_seed, int k_begin, int k_end,
                    SweepMode mode) {
  const QParam q(qv);
  PairStats st;
  for (int k = k_begin; k < k_end; ++k) {
    const std::uint64_t pair_seed = derive_seed(cell_seed, static_cast<std::uint64_t>(k));
    const DensityOperator rho1 = sample_density(d, derive_seed(pair_seed, 0));
    DensityOperator rho2 = sample_density(d, derive_seed(pair_seed, 1));
    if (mode == SweepMode::WithinHypothesis)
      rho2 = contract_to_hypothesis(rho1, rho2, q);
    const BoundReport rep = check_fannes(rho1, rho2, q);
    const double ratio =
        (rep.lhs == 0.0 && rep.rhs == 0.0) ? 0.0 : rep.lhs / rep.rhs;
    if (ratio > st.max_ratio) {
      st.max_ratio = ratio;
      st.max_k = k;
      st.max_seed = pair_seed;
    }
    st.min_margin = std::min(st.min_margin, rep.margin);
    if (rep.margin < -BoundReport::kChainTol) ++st.violations;
  }
  return st;
}

}  // namespace

TightnessTable run_sweep(const SweepConfig& cfg) {
  if (cfg.q_grid.empty() || cfg.d_grid.empty())
    throw std::invalid_argument("run_sweep: q_grid and d_grid must be nonempty");
  if (cfg.samples < 1) throw std::invalid_argument("run_sweep: samples must be >= 1");
  for (int d : cfg.d_grid)
    if (d < 1) throw std::invalid_argument("run_sweep: dimensions must be >= 1");

  struct CellInfo {
    double q;
    int d;
    std::uint64_t seed;
    bool empty;
  };
  std::vector<CellInfo> cells;
  for (double qv : cfg.q_grid)
    for (int d : cfg.d_grid) {
      const std::uint64_t cell_seed = derive_seed(cfg.seed, cells.size());
      const bool empty = fannes_radius(QParam(qv)) == 0.0;
      cells.push_back({qv, d, cell_seed, empty});
    }

  constexpr int kBlock = 256;
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty) continue;
    for (int k = 0; k < cfg.samples; k += kBlock)
      tasks.push_back({c, k, std::min(k + kBlock, cfg.samples)});
  }

  std::vector<PairStats> partials(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      const CellInfo& c = cells[t.cell];
      partials[i] = run_block(c.q, c.d, c.seed, t.k_begin, t.k_end, cfg.mode);
    }
  };

  unsigned n_workers = cfg.workers > 0 ? static_cast<unsigned>(cfg.workers)
                                       : std::thread::hardware_concurrency();
  if (n_workers < 1) n_workers = 1;
  n_workers = std::min<unsigned>(n_workers, tasks.empty() ? 1 : tasks.size());
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Deterministic merge: blocks are reduced per cell in sample order, so the
  // result is independent of how workers interleaved.
  TightnessTable table;
  table.cells.resize(cells.size());
  std::vector<PairStats> merged(cells.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    PairStats& m = merged[tasks[i].cell];
    const PairStats& p = partials[i];
    if (p.max_ratio > m.max_ratio ||
        (p.max_ratio == m.max_ratio && p.max_k >= 0 &&
         (m.max_k < 0 || p.max_k < m.max_k))) {
      m.max_ratio = p.max_ratio;
      m.max_k = p.max_k;
      m.max_seed = p.max_seed;
    }
    m.min_margin = std::min(m.min_margin, p.min_margin);
    m.violations += p.violations;
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    SweepCell& cell = table.cells[c];
    cell.q = cells[c].q;
    cell.d = cells[c].d;
    if (cells[c].empty) continue;  // stays zeroed
    cell.samples = cfg.samples;
    cell.max_ratio = merged[c].max_ratio;
    cell.min_margin = merged[c].min_margin;
    cell.extremal_seed = merged[c].max_seed;
    cell.violations = merged[c].violations;
  }
  return table;
}

std::string to_csv(const TightnessTable& table) {
  std::ostringstream out;
  out << "q,d,samples,max_ratio,min_margin,extremal_seed,violations\n";
  for (const SweepCell& c : table.cells) {
    out << format_num(c.q) << ',' << c.d << ',' << c.samples << ','
        << format_num(c.max_ratio) << ',' << format_num(c.min_margin) << ','
        << c.extremal_seed << ',' << c.violations << '\n';
  }
  return out.str();
}

}  // namespace tsallis
