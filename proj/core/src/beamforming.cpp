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

#include "nomasec/beamforming.hpp"

#include <Eigen/Eigenvalues>

#include "nomasec/errors.hpp"

namespace nomasec
{

BeamMatrix zf_beams(const ChannelSet &channels)
{
    const int G = channels.clusters();
    if (G == 0)
        throw ValidationError("zf_beams: empty channel set");
    const int N = (int)channels.h[0][0].size();

    // Column-normalized SU channel matrix; scaling the columns leaves the
    // beam directions unchanged and keeps the Gram system well conditioned
    // across the path-loss spread.
    CMatrix S(N, G);
    for (int g = 0; g < G; ++g)
    {
        double nrm = channels.h[g][0].norm();
        if (!(nrm > 0.0))
            throw SingularChannelError("zf_beams: zero SU channel in cluster " +
                                       std::to_string(g));
        S.col(g) = channels.h[g][0] / nrm;
    }

    CMatrix gram = S.adjoint() * S;
    // Hermitian by construction; also symmetrize roundoff.
    gram = 0.5 * (gram + gram.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > 1e12)
        throw SingularChannelError("zf_beams: SU channel Gram condition number above 1e12");

    Eigen::PartialPivLU<CMatrix> lu(gram);
    CMatrix X = lu.solve(CMatrix::Identity(G, G));
    // One step of iterative refinement pushes S^H W - I to machine level.
    X += lu.solve(CMatrix::Identity(G, G) - gram * X);

    CMatrix W = S * X;

    BeamMatrix bm;
    bm.w.resize(G);
    bm.leakage = Eigen::MatrixXd(G, G);
    for (int g = 0; g < G; ++g)
    {
        CVector w = W.col(g);
        double nrm = w.norm();
        if (!(nrm > 0.0))
            throw SingularChannelError("zf_beams: degenerate beam in cluster " +
                                       std::to_string(g));
        w /= nrm;
        // Phase convention: own-SU effective gain real and positive.
        std::complex<double> c = channels.h[g][0].adjoint() * w;
        if (std::abs(c) > 0.0)
            w *= std::conj(c) / std::abs(c);
        bm.w[g] = w;
    }
    for (int gp = 0; gp < G; ++gp)
        for (int g = 0; g < G; ++g)
        {
            std::complex<double> c = channels.h[gp][0].adjoint() * bm.w[g];
            bm.leakage(gp, g) = std::norm(c);
        }
    return bm;
}

} // namespace nomasec
