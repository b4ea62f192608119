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

#include "nomasec/rates.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "nomasec/errors.hpp"

namespace nomasec
{

HermitianForm::HermitianForm(CMatrix q)
{
    if (q.rows() != q.cols())
        throw ValidationError("HermitianForm: matrix must be square");
    double asym = (q - q.adjoint()).norm();
    double scale = q.norm();
    if (scale > 0.0 && asym > 1e-10 * scale)
        throw ValidationError("HermitianForm: matrix is not Hermitian within tolerance");
    q_ = 0.5 * (q + q.adjoint());
}

const Eigen::VectorXd &HermitianForm::eigenvalues() const
{
    if (!eig_)
    {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(q_, Eigen::EigenvaluesOnly);
        Eigen::VectorXd v = es.eigenvalues();
        eig_ = v.reverse().eval(); // descending
    }
    return *eig_;
}

namespace
{

double gain(const CVector &h, const CVector &w)
{
    return std::norm(std::complex<double>(h.adjoint() * w));
}

} // namespace

double sinr_su(int g, const ChannelSet &channels, const BeamMatrix &beams,
               const PowerAllocation &alloc)
{
    return gain(channels.h[g][0], beams.w[g]) * channels.rho * alloc.a(g, 0);
}

double sinr_qu(int g, int k, const ChannelSet &channels, const BeamMatrix &beams,
               const PowerAllocation &alloc)
{
    if (k < 1)
        throw ValidationError("sinr_qu: k must index a QU (k >= 1)");
    const int G = channels.clusters();
    const int K = channels.users();
    const double rho = channels.rho;

    double own = gain(channels.h[g][k], beams.w[g]);
    double desired = own * rho * alloc.a(g, k);

    double intra = 0.0;
    for (int j = 0; j < k; ++j)
        intra += rho * alloc.a(g, j);
    intra *= own;

    double inter = 0.0;
    for (int i = 0; i < G; ++i)
    {
        if (i == g)
            continue;
        double cross = gain(channels.h[g][k], beams.w[i]);
        double p = 0.0;
        for (int j = 0; j < K; ++j)
            p += rho * alloc.a(i, j);
        inter += cross * p;
    }
    return desired / (intra + inter + 1.0);
}

HermitianForm eve_form_lower(int g, const BeamMatrix &beams, double rho, double gamma_e,
                             const PowerAllocation &alloc)
{
    const CVector &w = beams.w[g];
    CMatrix q = (gamma_e * rho * alloc.a(g, 0)) * (w * w.adjoint());
    return HermitianForm(std::move(q));
}

HermitianForm eve_form_upper(int g, const BeamMatrix &beams, double rho, double gamma_e,
                             const PowerAllocation &alloc, double z_g)
{
    if (z_g < 0.0)
        throw ValidationError("eve_form_upper: z must be nonnegative");
    const int G = beams.clusters();
    const int K = (int)alloc.a.cols();

    // Desired-stream projector, same arithmetic as the lower-bound form so
    // the z = 0 collapse is exact.
    CMatrix q = (gamma_e * rho * alloc.a(g, 0)) * (beams.w[g] * beams.w[g].adjoint());
    // z-scaled intra-cluster interference (remaining users of cluster g).
    double intra = 0.0;
    for (int k = 1; k < K; ++k)
        intra += rho * alloc.a(g, k);
    q -= (gamma_e * z_g * intra) * (beams.w[g] * beams.w[g].adjoint());
    // z-scaled inter-cluster interference (all users of other clusters).
    for (int i = 0; i < G; ++i)
    {
        if (i == g)
            continue;
        double p = 0.0;
        for (int k = 0; k < K; ++k)
            p += rho * alloc.a(i, k);
        q -= (gamma_e * z_g * p) * (beams.w[i] * beams.w[i].adjoint());
    }
    return HermitianForm(std::move(q));
}

double secrecy_rate(int g, const ChannelSet &channels, const BeamMatrix &beams,
                    const PowerAllocation &alloc, const SlackVector &slack)
{
    double s = sinr_su(g, channels, beams, alloc);
    return std::log2((1.0 + s) / (1.0 + slack.z(g)));
}

} // namespace nomasec
