#include "tensorwalk/markov.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "tensorwalk/errors.hpp"
#include "tensorwalk/parallel.hpp"

namespace tensorwalk {

namespace {

constexpr double kAuditSlack = 1e-9;

}  // namespace

TransitionMatrix::TransitionMatrix(Eigen::MatrixXd entries, double tol)
    : p_(std::move(entries)) {
  if (p_.rows() != p_.cols() || p_.rows() < 1)
    throw ShapeError("TransitionMatrix: matrix must be square and nonempty");
  for (int i = 0; i < p_.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < p_.cols(); ++j) {
      if (p_(i, j) < 0.0)
        throw DomainError("TransitionMatrix: negative entry at row " +
                          std::to_string(i));
      row += p_(i, j);
    }
    if (std::abs(row - 1.0) > tol) {
      std::ostringstream os;
      os << "TransitionMatrix: row " << i << " sums to " << row
         << " (tolerance " << tol << ")";
      throw DomainError(os.str());
    }
  }
}

Eigen::VectorXd column_sums(const TransitionMatrix& p) {
  return p.entries().colwise().sum();
}

TransitionMatrix matrix_power(const TransitionMatrix& p, int i) {
  if (i < 1)
    throw DomainError("matrix_power: exponent must be >= 1 (use the identity "
                      "explicitly for i = 0)");
  Eigen::MatrixXd acc = p.entries();
  for (int k = 1; k < i; ++k) acc = acc * p.entries();
  return TransitionMatrix(std::move(acc), 1e-10);
}

std::vector<std::complex<double>> spectrum(const TransitionMatrix& p) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(p.entries());
  if (solver.info() != Eigen::Success)
    throw Error("spectrum: eigensolver failed to converge");
  std::vector<std::complex<double>> eigs(p.size());
  for (int i = 0; i < p.size(); ++i) eigs[i] = solver.eigenvalues()(i);
  std::sort(eigs.begin(), eigs.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              const double ma = std::abs(a), mb = std::abs(b);
              if (ma != mb) return ma > mb;
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  return eigs;
}

Ub1Result ub1(const TransitionMatrix& p) {
  const int n = p.size();
  const Eigen::VectorXd cs = column_sums(p);
  const auto eigs = spectrum(p);
  Ub1Result r;
  r.max_column_sum = cs.maxCoeff();
  r.premise = r.max_column_sum >= static_cast<double>(n - 1) - kAuditSlack;
  r.second_modulus = n >= 2 ? std::abs(eigs[1]) : 0.0;
  r.bound = static_cast<double>(n) - r.second_modulus;
  r.audits.reserve(n);
  for (int j = 0; j < n; ++j) {
    ColumnAudit a;
    a.column = j;
    a.bound = r.bound;
    a.column_sum = cs(j);
    a.violated = r.premise && cs(j) > r.bound + kAuditSlack;
    r.any_violation = r.any_violation || a.violated;
    r.audits.push_back(a);
  }
  return r;
}

Ub2Result ub2(const TransitionMatrix& p, double q) {
  if (!(q > 0.0 && q < 1.0))
    throw DomainError("ub2: q must lie strictly inside (0, 1)");
  const int n = p.size();
  const Eigen::VectorXd cs = column_sums(p);
  const auto eigs = spectrum(p);
  Ub2Result r;
  r.q = q;
  r.premise = true;
  for (int i = 0; i < n; ++i)
    if (!(2.0 * p(i, i) - 1.0 > 0.0)) r.premise = false;
  double min_mod = std::abs(eigs[0]);
  for (const auto& e : eigs) min_mod = std::min(min_mod, std::abs(e));
  r.min_modulus = min_mod;
  if (!r.premise) return r;
  r.audits.reserve(n);
  for (int j = 0; j < n; ++j) {
    ColumnAudit a;
    a.column = j;
    a.column_sum = cs(j);
    a.bound = std::pow(min_mod / std::pow(2.0 * p(j, j) - 1.0, q),
                       1.0 / (1.0 - q));
    a.violated = cs(j) > a.bound + kAuditSlack;
    r.any_violation = r.any_violation || a.violated;
    r.audits.push_back(a);
  }
  return r;
}

double ostrowski_radius(double p_jj, double column_sum, double q) {
  const double row_deficit = 1.0 - p_jj;
  const double col_deficit = std::max(0.0, column_sum - p_jj);
  if (q <= 0.0) return col_deficit;
  if (q >= 1.0) return row_deficit;
  return std::pow(row_deficit, q) * std::pow(col_deficit, 1.0 - q);
}

std::vector<std::vector<std::complex<double>>> ostrowski_eligible(
    const TransitionMatrix& p, double q) {
  if (q < 0.0 || q > 1.0)
    throw DomainError("ostrowski_eligible: q must lie in [0, 1]");
  const int n = p.size();
  for (int j = 0; j < n; ++j)
    if (p(j, j) >= 1.0)
      throw PremiseError("ostrowski_eligible: diagonal entry " +
                         std::to_string(j) + " equals 1");
  const Eigen::VectorXd cs = column_sums(p);
  const auto eigs = spectrum(p);
  std::vector<std::vector<std::complex<double>>> eligible(n);
  for (int j = 0; j < n; ++j) {
    const double radius = ostrowski_radius(p(j, j), cs(j), q);
    for (const auto& lambda : eigs)
      if (std::abs(lambda - p(j, j)) <= radius + 1e-12)
        eligible[j].push_back(lambda);
  }
  return eligible;
}

LbResult lb1(const TransitionMatrix& p, double q) {
  if (q < 0.0 || q >= 1.0)
    throw DomainError("lb1: q must lie in [0, 1); the exponent 1/(1-q) "
                      "diverges at q = 1");
  const int n = p.size();
  const Eigen::VectorXd cs = column_sums(p);
  const auto eligible = ostrowski_eligible(p, q);
  LbResult r;
  r.q = q;
  for (int j = 0; j < n; ++j) {
    if (eligible[j].empty()) {
      r.columns_without_eligible.push_back(j);
      continue;
    }
    for (const auto& lambda : eligible[j]) {
      LbPairAudit a;
      a.column = j;
      a.eigenvalue = lambda;
      a.column_sum = cs(j);
      const double dist = std::abs(lambda - p(j, j));
      if (q == 0.0) {
        a.bound = p(j, j) + dist;
      } else {
        a.bound = p(j, j) + std::pow(dist, 1.0 / (1.0 - q)) /
                                std::pow(1.0 - p(j, j), q / (1.0 - q));
      }
      a.violated = a.bound > cs(j) + kAuditSlack;
      r.any_violation = r.any_violation || a.violated;
      r.audits.push_back(a);
    }
  }
  return r;
}

LbResult lb2(const TransitionMatrix& p) {
  const int n = p.size();
  const Eigen::VectorXd cs = column_sums(p);
  const auto eligible = ostrowski_eligible(p, 0.5);
  LbResult r;
  r.q = 0.5;
  for (int j = 0; j < n; ++j) {
    if (eligible[j].empty()) {
      r.columns_without_eligible.push_back(j);
      continue;
    }
    for (const auto& lambda : eligible[j]) {
      LbPairAudit a;
      a.column = j;
      a.eigenvalue = lambda;
      a.column_sum = cs(j);
      a.bound = std::norm(lambda);  // |lambda|^2
      a.violated = a.bound > cs(j) + kAuditSlack;
      r.any_violation = r.any_violation || a.violated;
      r.audits.push_back(a);
    }
  }
  return r;
}

ChainGenerator generator_from_name(const std::string& name) {
  if (name == "dirichlet") return ChainGenerator::kDirichlet;
  if (name == "diagonally-dominant") return ChainGenerator::kDiagonallyDominant;
  if (name == "lazy") return ChainGenerator::kLazy;
  throw ConfigError("unknown chain generator '" + name + "'");
}

std::string generator_name(ChainGenerator g) {
  switch (g) {
    case ChainGenerator::kDirichlet:
      return "dirichlet";
    case ChainGenerator::kDiagonallyDominant:
      return "diagonally-dominant";
    case ChainGenerator::kLazy:
      return "lazy";
  }
  return "?";
}

TransitionMatrix random_chain(const GeneratorSpec& gen, Rng& rng) {
  const int n =
      gen.n_min +
      static_cast<int>(rng.uniform_index(
          static_cast<std::uint64_t>(gen.n_max - gen.n_min + 1)));
  Eigen::MatrixXd p(n, n);
  switch (gen.kind) {
    case ChainGenerator::kDirichlet: {
      for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
          p(i, j) = rng.gamma(gen.param);
          row += p(i, j);
        }
        p.row(i) /= row;
      }
      break;
    }
    case ChainGenerator::kDiagonallyDominant: {
      // Diagonal above 1/2 + margin so the ub2 premise can hold.
      const double margin = std::clamp(gen.param, 0.0, 0.49);
      for (int i = 0; i < n; ++i) {
        const double diag = rng.uniform(0.5 + margin, 1.0 - 1e-3);
        double rest = 0.0;
        for (int j = 0; j < n; ++j)
          if (j != i) {
            p(i, j) = rng.gamma(1.0);
            rest += p(i, j);
          }
        for (int j = 0; j < n; ++j)
          if (j != i) p(i, j) *= (1.0 - diag) / rest;
        p(i, i) = diag;
      }
      break;
    }
    case ChainGenerator::kLazy: {
      const double beta = std::clamp(gen.param, 0.0, 1.0);
      p.setConstant((1.0 - beta) / n);
      for (int i = 0; i < n; ++i) p(i, i) += beta;
      break;
    }
  }
  // Exact row normalization so the 1e-12 invariant holds by construction.
  for (int i = 0; i < n; ++i) p.row(i) /= p.row(i).sum();
  return TransitionMatrix(std::move(p));
}

HarnessReport falsification_harness(const GeneratorSpec& gen, long count,
                                    std::uint64_t seed, double q,
                                    std::size_t workers) {
  struct CaseOutcome {
    bool ub1_premise = false, ub1_violated = false;
    bool ub2_premise = false, ub2_violated = false;
    long lb1_pairs = 0, lb2_pairs = 0;
    bool lb1_violated = false, lb2_violated = false;
    bool lb_applicable = false;
    std::uint64_t case_seed = 0;
  };
  std::vector<CaseOutcome> outcomes(static_cast<std::size_t>(count));
  parallel_for(static_cast<std::size_t>(count), workers, [&](std::size_t i) {
    CaseOutcome& out = outcomes[i];
    // A reproducer is a single seed: random_chain(gen, Rng(seed)) rebuilds it.
    out.case_seed = seed ^ (0x9E3779B97F4A7C15ULL * (i + 1));
    Rng rebuild(out.case_seed);
    const TransitionMatrix p = random_chain(gen, rebuild);
    const Ub1Result u1 = ub1(p);
    out.ub1_premise = u1.premise;
    out.ub1_violated = u1.any_violation;
    const Ub2Result u2 = ub2(p, q);
    out.ub2_premise = u2.premise;
    out.ub2_violated = u2.any_violation;
    bool diag_ok = true;
    for (int j = 0; j < p.size(); ++j)
      if (p(j, j) >= 1.0) diag_ok = false;
    out.lb_applicable = diag_ok;
    if (diag_ok) {
      const LbResult l1 = lb1(p, q);
      out.lb1_pairs = static_cast<long>(l1.audits.size());
      out.lb1_violated = l1.any_violation;
      const LbResult l2 = lb2(p);
      out.lb2_pairs = static_cast<long>(l2.audits.size());
      out.lb2_violated = l2.any_violation;
    }
  });

  HarnessReport report;
  report.generator = gen;
  report.cases = count;
  report.q = q;
  for (const CaseOutcome& out : outcomes) {
    report.ub1_stats.premise_total++;
    report.ub2_stats.premise_total++;
    report.lb1_stats.premise_total++;
    report.lb2_stats.premise_total++;
    if (out.ub1_premise) {
      report.ub1_stats.premise_satisfied++;
      if (out.ub1_violated) {
        report.ub1_stats.violations++;
        report.ub1_stats.reproducer_seeds.push_back(out.case_seed);
      }
    }
    if (out.ub2_premise) {
      report.ub2_stats.premise_satisfied++;
      if (out.ub2_violated) {
        report.ub2_stats.violations++;
        report.ub2_stats.reproducer_seeds.push_back(out.case_seed);
      }
    }
    if (out.lb_applicable) {
      report.lb1_stats.premise_satisfied++;
      report.lb2_stats.premise_satisfied++;
      report.lb1_stats.audited_pairs += out.lb1_pairs;
      report.lb2_stats.audited_pairs += out.lb2_pairs;
      if (out.lb1_violated) {
        report.lb1_stats.violations++;
        report.lb1_stats.reproducer_seeds.push_back(out.case_seed);
      }
      if (out.lb2_violated) {
        report.lb2_stats.violations++;
        report.lb2_stats.reproducer_seeds.push_back(out.case_seed);
      }
    }
  }
  return report;
}

}  // namespace tensorwalk
