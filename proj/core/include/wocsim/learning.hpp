#pragma once

#include <vector>

#include "wocsim/network.hpp"

namespace wocsim {

// Two-stage neighbor averaging: M * (M * signals). Both stages use the same
// matrix. Each output is a convex combination of the inputs.
std::vector<double> degroot_two_stage(const InfluenceMatrix& m,
                                      const std::vector<double>& signals);

// Generalization with a configurable stage count (stages == 2 is the model
// default; exposed for sensitivity runs). stages == 0 returns the signals.
std::vector<double> degroot_stages(const InfluenceMatrix& m,
                                   const std::vector<double>& signals,
                                   int stages);

// Identity: beliefs equal signals.
std::vector<double> solo_beliefs(const std::vector<double>& signals);

}  // namespace wocsim
