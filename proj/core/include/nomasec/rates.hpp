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

#include <optional>

#include "nomasec/beamforming.hpp"
#include "nomasec/channel.hpp"

namespace nomasec
{

/// Power allocation coefficients a(g, k), fractions of the total budget P.
/// Row g holds cluster g in decoding order (column 0 is the SU).
struct PowerAllocation
{
    Eigen::MatrixXd a;

    PowerAllocation() = default;
    PowerAllocation(int clusters, int users) : a(Eigen::MatrixXd::Zero(clusters, users)) {}

    double total() const { return a.sum(); }
};

/// Per-cluster eavesdropper SINR slack z_g >= 0.
struct SlackVector
{
    Eigen::VectorXd z;

    SlackVector() = default;
    explicit SlackVector(int clusters) : z(Eigen::VectorXd::Zero(clusters)) {}
};

/// Hermitian quadratic form over a standard circular complex Gaussian
/// vector. Symmetrizes on construction and caches the (descending, real)
/// spectrum.
class HermitianForm
{
  public:
    explicit HermitianForm(CMatrix q);

    const CMatrix &matrix() const { return q_; }
    /// Eigenvalues in descending order; computed once, then cached.
    const Eigen::VectorXd &eigenvalues() const;
    double trace() const { return q_.trace().real(); }
    double frobenius() const { return q_.norm(); }
    double lambda_max() const { return eigenvalues()(0); }
    int dim() const { return (int)q_.rows(); }

  private:
    CMatrix q_;
    mutable std::optional<Eigen::VectorXd> eig_;
};

/// SU receive SINR (interference-free under zero-forcing):
/// |h_{g,0}^H w_g|^2 * rho * a(g,0).
double sinr_su(int g, const ChannelSet &channels, const BeamMatrix &beams,
               const PowerAllocation &alloc);

/// QU receive SINR after SIC, k >= 1 in decoding order: desired power over
/// residual intra-cluster interference (stronger users only), inter-cluster
/// interference and unit noise.
double sinr_qu(int g, int k, const ChannelSet &channels, const BeamMatrix &beams,
               const PowerAllocation &alloc);

/// Eve's quadratic form when it separates the multiuser streams:
/// gamma_e * rho * a(g,0) * w_g w_g^H. The Eve covariance scale is folded in
/// so the form is over a standard complex Gaussian vector.
HermitianForm eve_form_lower(int g, const BeamMatrix &beams, double rho, double gamma_e,
                             const PowerAllocation &alloc);

/// Eve's form without multiuser detection: the desired-beam projector minus
/// the z-scaled intra- and inter-cluster interference projectors. Reduces to
/// the lower-bound form at z = 0.
HermitianForm eve_form_upper(int g, const BeamMatrix &beams, double rho, double gamma_e,
                             const PowerAllocation &alloc, double z_g);

/// log2((1 + SINR_{g,0}) / (1 + z_g)); may be negative, callers clamp at
/// reporting time only.
double secrecy_rate(int g, const ChannelSet &channels, const BeamMatrix &beams,
                    const PowerAllocation &alloc, const SlackVector &slack);

} // namespace nomasec
