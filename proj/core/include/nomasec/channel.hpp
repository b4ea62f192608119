// noma-sec: secure-users oriented downlink MISO-NOMA power allocation
// Copyright (C) 2026 the noma-sec contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "nomasec/scenario.hpp"

namespace nomasec
{

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Seeded generator for the channel draws. Wraps one mt19937_64 engine so
/// that every draw order is pinned and a (cfg, seed) pair reproduces the
/// same realization bit for bit.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    /// One standard circular complex Gaussian entry: Re, Im ~ N(0, 1/2).
    std::complex<double> cgauss()
    {
        std::normal_distribution<double> n(0.0, std::sqrt(0.5));
        double re = n(engine_);
        double im = n(engine_);
        return {re, im};
    }

    CVector cgauss_vector(int n)
    {
        CVector v(n);
        for (int i = 0; i < n; ++i)
            v(i) = cgauss();
        return v;
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

/// One drawn set of channels. Index 0 of every cluster is the SU; the
/// composite vectors fold the d^{-a/2} path loss into the small-scale draw.
struct ChannelSet
{
    // [g][k], each an N-vector
    std::vector<std::vector<CVector>> h;          // composite channels
    std::vector<std::vector<CVector>> smallscale; // unit-variance fading part
    std::vector<std::vector<double>> distance_m;

    double gamma_e = 0.0; // d_e^{-a}, Eve covariance scale
    double rho = 0.0;     // P / sigma_N^2

    int clusters() const { return (int)h.size(); }
    int users() const { return h.empty() ? 0 : (int)h[0].size(); }
};

/// Draws one full realization of the statistical model: per cluster an
/// i.i.d. SU vector, QU vectors coupled to it through the correlation
/// coefficient, and per-user distances uniform in their slot range.
/// Deterministic in (cfg, seed); no scheduling conditioning is applied here.
ChannelSet gen_channels(const ScenarioConfig &cfg, std::uint64_t seed);

/// Correlated QU draw: sqrt(phi) * su + sqrt(1-phi) * innovation.
CVector correlated_draw(const CVector &su_smallscale, double phi, Rng &rng);

/// Applies the d^{-a/2} large-scale scaling.
CVector apply_pathloss(const CVector &smallscale, double distance_m, double pathloss_exp);

} // namespace nomasec
