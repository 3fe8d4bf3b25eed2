#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tensorwalk/rng.hpp"

namespace tensorwalk {

/// Row-stochastic transition matrix.
class TransitionMatrix {
 public:
  /// tol bounds the allowed row-sum deviation from 1 (powers of an exact
  /// matrix accumulate a little noise, so they validate with 1e-10).
  explicit TransitionMatrix(Eigen::MatrixXd entries, double tol = 1e-12);

  int size() const { return static_cast<int>(p_.rows()); }
  const Eigen::MatrixXd& entries() const { return p_; }
  double operator()(int i, int j) const { return p_(i, j); }

 private:
  Eigen::MatrixXd p_;
};

Eigen::VectorXd column_sums(const TransitionMatrix& p);

/// P^i for i >= 1 (i = 0 is rejected; callers use the identity explicitly).
TransitionMatrix matrix_power(const TransitionMatrix& p, int i);

/// Complex eigenvalues sorted by descending modulus, ties by descending
/// real then imaginary part.
std::vector<std::complex<double>> spectrum(const TransitionMatrix& p);

struct ColumnAudit {
  int column = 0;
  double bound = 0.0;
  double column_sum = 0.0;
  bool violated = false;
};

struct Ub1Result {
  bool premise = false;        // max_j C_j >= N - 1
  double max_column_sum = 0.0;
  double second_modulus = 0.0; // |lambda_2|
  double bound = 0.0;          // N - |lambda_2|
  std::vector<ColumnAudit> audits;
  bool any_violation = false;
};

Ub1Result ub1(const TransitionMatrix& p);

struct Ub2Result {
  bool premise = false;  // 2 p_ii - 1 > 0 for every i
  double q = 0.5;
  double min_modulus = 0.0;
  std::vector<ColumnAudit> audits;
  bool any_violation = false;
};

Ub2Result ub2(const TransitionMatrix& p, double q);

/// Per column j, the eigenvalues inside the Ostrowski disc
/// |z - p_jj| <= (1 - p_jj)^q (C_j - p_jj)^(1-q).
std::vector<std::vector<std::complex<double>>> ostrowski_eligible(
    const TransitionMatrix& p, double q);

/// Disc radius for column j; the q = 0 / q = 1 endpoints avoid 0^0.
double ostrowski_radius(double p_jj, double column_sum, double q);

struct LbPairAudit {
  int column = 0;
  std::complex<double> eigenvalue;
  double bound = 0.0;
  double column_sum = 0.0;
  bool violated = false;
};

struct LbResult {
  double q = 0.5;
  std::vector<LbPairAudit> audits;           // one per eligible (column, eig)
  std::vector<int> columns_without_eligible; // reported, not an error
  bool any_violation = false;
};

/// Column-sum lower bound from every Ostrowski-eligible pair; q in [0, 1).
LbResult lb1(const TransitionMatrix& p, double q);

/// The q = 1/2 specialization: |lambda|^2 <= C_j for eligible pairs.
LbResult lb2(const TransitionMatrix& p);

enum class ChainGenerator { kDirichlet, kDiagonallyDominant, kLazy };

struct GeneratorSpec {
  ChainGenerator kind = ChainGenerator::kDirichlet;
  double param = 1.0;  // dirichlet alpha / dominance margin / laziness beta
  int n_min = 2;
  int n_max = 8;
};

ChainGenerator generator_from_name(const std::string& name);
std::string generator_name(ChainGenerator g);

/// Random chain drawn from the generator family (size uniform in
/// [n_min, n_max]).
TransitionMatrix random_chain(const GeneratorSpec& gen, Rng& rng);

struct LemmaStats {
  long premise_satisfied = 0;
  long premise_total = 0;
  long violations = 0;        // among premise-satisfying cases
  long audited_pairs = 0;     // lb lemmas: eligible pairs audited
  std::vector<std::uint64_t> reproducer_seeds;
};

struct HarnessReport {
  GeneratorSpec generator;
  long cases = 0;
  double q = 0.5;
  LemmaStats ub1_stats;
  LemmaStats ub2_stats;
  LemmaStats lb1_stats;
  LemmaStats lb2_stats;
};

/// Audits all four lemmas over `count` random chains.  Violation reproducers
/// are the per-case substream seeds; random_chain(gen, Rng(seed)) rebuilds
/// the offending matrix.
HarnessReport falsification_harness(const GeneratorSpec& gen, long count,
                                    std::uint64_t seed, double q = 0.5,
                                    std::size_t workers = 0);

}  // namespace tensorwalk
