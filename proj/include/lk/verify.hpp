#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lk/classify.hpp"

namespace lk {

struct WitnessRecipe {
  WitnessKind kind = WitnessKind::CharacteristicSweep;
  SpaceSpec source;
  SpaceSpec target;
  double mu = kInf;
  // Closed-form witnesses live on (t_min, t_max); below t_min the value is
  // frozen, above t_max it is zero. Sweeps take mass as the set measure.
  double t_min = 1e-8;
  double t_max = 1.0;
  double mass = 1.0;
  int per_decade = 64;
  // ProperEmbeddingGap: decay exponent s = 1/q1 + theta (1/q2 - 1/q1)
  double theta = 0.5;
  // ProperEmbeddingGap: endpoint the witness concentrates at
  Endpoint toward = Endpoint::Zero;
};

DecreasingStep build_witness(const WitnessRecipe& recipe);

// Random carriers: piece count U[1,20], values and masses log-uniform in
// [1e-3, 1e3].
StepFunction random_step_function(std::mt19937_64& rng, int max_pieces = 20);
JointStepFunction random_joint(std::mt19937_64& rng, int max_pieces = 20);

struct EmbeddingCheckReport {
  EmbeddingVerdict verdict;
  double base_ratio = 0.0;   // dst/src for chi_(0, min(1, mu))
  double max_ratio = 0.0;
  double growth = 0.0;       // max_ratio / base_ratio
  double last_decade_growth = 0.0;
  std::vector<double> trend; // Holds: running max per decade; Fails: growth per depth
  std::string witness;       // recipe that produced max_ratio
  bool verdict_consistent = false;
};

inline constexpr double kFailGrowthTarget = 100.0;
inline constexpr double kPlateauTolerance = 0.05;

EmbeddingCheckReport check_embedding_numeric(const SpaceSpec& src, const SpaceSpec& dst, double mu,
                                             int n_samples = 12, std::uint64_t seed = 7);

struct StarGapReport {
  std::vector<double> masses;
  std::vector<double> ratios;
  double max_ratio = 0.0;
  bool growth_confirmed = false;
  double last_decade_growth = 0.0;
};

StarGapReport check_star_gap(const SpaceSpec& spec, bool include_large = false);

struct HolderDualityReport {
  bool skipped = false;
  AssociateResult associate;
  std::vector<double> holder_min_by_scale;  // scales 10^-6 .. 10^6
  double holder_inner_min = 0.0;
  double holder_outer_min = 0.0;
  bool holder_no_decay = false;
  double band_min = 0.0;
  double band_max = 0.0;
  double k_full = 0.0;
  double k_low = 0.0;   // t in [1e-6, 1]
  double k_high = 0.0;  // t in [1, 1e6]
  bool k_stable = false;
  bool verdict_consistent = false;
};

HolderDualityReport check_holder_and_duality(const SpaceSpec& spec, int n_samples = 20,
                                             std::uint64_t seed = 11);

struct QuasiNormReport {
  std::vector<double> k_by_value_scale;  // value scale 10^-3 .. 10^3
  double k = 0.0;
  double variation = 0.0;
  bool stable = false;
};

QuasiNormReport check_quasi_norm(const SpaceSpec& spec, int n_samples = 100, std::uint64_t seed = 5);

struct HardyLittlewoodReport {
  int samples = 0;
  int violations = 0;
  int comonotone_mismatches = 0;
  double worst_excess = 0.0;
};

HardyLittlewoodReport check_hardy_littlewood(int n_samples = 1000, std::uint64_t seed = 3);

struct TransformRow {
  std::string row;
  SlowlyVaryingFunction b;
  TransformKind kind = TransformKind::Tilde;
  Endpoint endpoint = Endpoint::Zero;
  bool rule_diverges = false;
  bool oracle_diverges = false;
  double err_near = 0.0;  // |log t| = 14
  double err_far = 0.0;   // |log t| = 23
  bool pass = false;
};

// One asymptote check per rule row of the tilde/hat tables; signatures are
// drawn at random inside each row's parameter box.
std::vector<TransformRow> check_transform_rows(int n_rows = 20, std::uint64_t seed = 13);

struct SvSuiteReport {
  std::vector<SvCheckReport> property;
  std::vector<TransformRow> transforms;
  bool pass = false;
};

SvSuiteReport check_sv_suite(std::uint64_t seed = 13);

}  // namespace lk
