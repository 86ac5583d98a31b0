#pragma once

#include <functional>

#include "lk/rearrange.hpp"
#include "lk/sv.hpp"

namespace lk {

struct SpaceSpec {
  double p = 2.0;
  double q = 2.0;
  SlowlyVaryingFunction b;
  double mu = kInf;
  bool star = false;

  void validate() const;
  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

std::string format_spec(const SpaceSpec& s);

struct NormOptions {
  double rel_tol = 1e-8;
  double tail_rel_tol = 1e-6;
};

struct NormResult {
  double value = 0.0;
  bool divergent = false;    // an integral or supremum was found to be infinite
  double sup_residual = 0.0; // q = inf: largest refinement gain over the sample grid
};

// Uses f** when spec.star is set. fstar is truncated at spec.mu.
NormResult lk_norm(const SpaceSpec& spec, const DecreasingStep& fstar, const NormOptions& opt = {});
NormResult lk_norm_star(SpaceSpec spec, const DecreasingStep& fstar, const NormOptions& opt = {});

double fundamental_function(const SpaceSpec& spec, double t, const NormOptions& opt = {});

struct EndpointNorms {
  double lorentz = 0.0;
  double marcinkiewicz = 0.0;
  double residual = 0.0;
};

EndpointNorms endpoint_norms(const std::function<double(double)>& phi, const DecreasingStep& fstar,
                             double mu = kInf);

}  // namespace lk
