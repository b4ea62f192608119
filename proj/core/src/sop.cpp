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

#include "nomasec/sop.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nomasec/errors.hpp"

namespace nomasec
{

BernsteinParams BernsteinParams::from_epsilon0(double eps0)
{
    if (!(eps0 > 0.0) || eps0 > 1.0)
        throw ValidationError("epsilon0 must lie in (0, 1]");
    return {std::log(1.0 / eps0), eps0};
}

BernsteinParams BernsteinParams::from_sigma(double sigma)
{
    if (sigma < 0.0)
        throw ValidationError("sigma must be nonnegative");
    return {sigma, std::exp(-sigma)};
}

double bernstein_threshold(const HermitianForm &q, double sigma)
{
    if (sigma < 0.0)
        throw ValidationError("bernstein_threshold: sigma must be nonnegative");
    double lmax = q.lambda_max();
    return q.trace() + std::sqrt(2.0 * sigma) * q.frobenius() +
           sigma * std::max(lmax, 0.0);
}

namespace
{

// Jitter rule for near-coincident positive eigenvalues: multiplicative
// +-1e-7 with deterministic alternating signs. The SOP is continuous in the
// spectrum, so the perturbation moves the value by O(1e-7).
constexpr double kCoincidenceTol = 1e-9;
constexpr double kJitter = 1e-7;

} // namespace

double exact_sop(const HermitianForm &q, double z)
{
    if (z < 0.0)
        throw ValidationError("exact_sop: z must be nonnegative");

    Eigen::VectorXd lam = q.eigenvalues(); // descending
    const int n = (int)lam.size();
    double scale = lam.cwiseAbs().maxCoeff();
    if (!(scale > 0.0))
        return 0.0; // zero form never exceeds z >= 0

    // Flush relative noise to exact zero so rank-deficient forms behave.
    for (int i = 0; i < n; ++i)
        if (std::abs(lam(i)) < 1e-13 * scale)
            lam(i) = 0.0;

    std::vector<double> pos;
    for (int i = 0; i < n; ++i)
        if (lam(i) > 0.0)
            pos.push_back(lam(i));
    if (pos.empty())
        return 0.0;

    // Separate coincident positive eigenvalues (descending order preserved).
    for (int pass = 0; pass < 2; ++pass)
    {
        bool clash = false;
        for (size_t i = 0; i + 1 < pos.size(); ++i)
            if (pos[i] - pos[i + 1] <= kCoincidenceTol * pos[i])
                clash = true;
        if (!clash)
            break;
        if (pass == 1)
            throw DegenerateSpectrumError(
                "exact_sop: coincident positive eigenvalues survive jitter");
        int sign = 1;
        for (size_t i = 0; i < pos.size(); ++i)
        {
            pos[i] *= 1.0 + sign * kJitter * (double)(i + 1);
            sign = -sign;
        }
        std::sort(pos.begin(), pos.end(), std::greater<double>());
    }

    // Rebuild the full spectrum with the jittered positives so the partial
    // fraction products stay consistent.
    std::vector<double> all(pos);
    for (int i = 0; i < n; ++i)
        if (lam(i) < 0.0)
            all.push_back(lam(i));

    double total = 0.0;
    for (size_t i = 0; i < pos.size(); ++i)
    {
        double log_mag = 0.0;
        int sign = 1;
        for (size_t l = 0; l < all.size(); ++l)
        {
            if (all[l] == pos[i] && l == i)
                continue;
            double f = 1.0 - all[l] / pos[i];
            if (f == 0.0)
                throw DegenerateSpectrumError("exact_sop: zero partial-fraction factor");
            if (f < 0.0)
            {
                sign = -sign;
                f = -f;
            }
            log_mag -= std::log(f);
        }
        total += sign * std::exp(log_mag - z / pos[i]);
    }
    // Clamp roundoff; the quantity is a probability.
    return std::min(1.0, std::max(0.0, total));
}

McResult mc_sop(const HermitianForm &q, double z, std::int64_t n_samples, std::uint64_t seed)
{
    if (n_samples < 1)
        throw ValidationError("mc_sop: need at least one sample");
    const int n = q.dim();
    const CMatrix &Q = q.matrix();

    constexpr std::int64_t kBlock = 1 << 16;
    std::int64_t hits = 0;
    std::int64_t done = 0;
    std::uint64_t block_index = 0;
    CVector h(n), y(n);
    while (done < n_samples)
    {
        std::int64_t todo = std::min(kBlock, n_samples - done);
        Rng rng(seed + 0x51ed5eed * block_index++);
        for (std::int64_t s = 0; s < todo; ++s)
        {
            for (int i = 0; i < n; ++i)
                h(i) = rng.cgauss();
            y.noalias() = Q * h;
            double val = h.dot(y).real();
            if (val > z)
                ++hits;
        }
        done += todo;
    }
    double p = (double)hits / (double)n_samples;
    double se = std::sqrt(std::max(p * (1.0 - p), 0.0) / (double)n_samples);
    return {p, se};
}

CalibrationResult calibrate_epsilon0(const std::function<CalibrationProbe(double)> &solve_at,
                                     double epsilon, double tol, int max_probes)
{
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw ValidationError("calibrate_epsilon0: epsilon must lie in (0,1)");
    if (!(tol > 0.0))
        throw ValidationError("calibrate_epsilon0: tol must be positive");

    CalibrationResult out;
    int probes = 0;
    std::vector<std::pair<double, double>> seen; // feasible (eps0, actual)

    auto run = [&](double eps0) {
        ++probes;
        CalibrationProbe p = solve_at(eps0);
        if (p.feasible)
        {
            for (const auto &[e0, a] : seen)
            {
                // Nondecreasing premise, with slack for solver noise.
                if ((e0 < eps0 && a > p.actual_sop + 1e-9) ||
                    (e0 > eps0 && a + 1e-9 < p.actual_sop))
                    out.monotone_ok = false;
            }
            seen.emplace_back(eps0, p.actual_sop);
        }
        return p;
    };

    // Best conservative fallback: largest epsilon0 whose solution stays at
    // or below target + tol.
    double best_eps0 = -1.0, best_actual = 0.0;
    auto consider = [&](double eps0, const CalibrationProbe &p) {
        if (p.feasible && p.actual_sop <= epsilon + tol && eps0 > best_eps0)
        {
            best_eps0 = eps0;
            best_actual = p.actual_sop;
        }
    };

    CalibrationProbe at_eps = run(epsilon);
    consider(epsilon, at_eps);
    if (at_eps.feasible && at_eps.actual_sop >= epsilon - tol)
    {
        // Already tight at the most conservative admissible setting; the
        // surrogate bound guarantees actual <= epsilon here.
        out.params = BernsteinParams::from_epsilon0(epsilon);
        out.actual_sop = at_eps.actual_sop;
        out.probes = probes;
        return out;
    }

    CalibrationProbe at_one = run(1.0);
    if (!at_one.feasible)
        throw InfeasibleError("calibration: problem infeasible even at epsilon0 = 1",
                              InfeasibleKind::QosEmpty);
    consider(1.0, at_one);
    if (at_one.actual_sop <= epsilon)
    {
        out.params = BernsteinParams::from_epsilon0(1.0);
        out.actual_sop = at_one.actual_sop;
        out.probes = probes;
        out.saturated = true;
        return out;
    }

    double lo = epsilon; // conservative side (actual below target, or infeasible)
    double hi = 1.0;     // actual above target
    while (probes < max_probes && hi - lo > 1e-7)
    {
        double mid = 0.5 * (lo + hi);
        CalibrationProbe p = run(mid);
        consider(mid, p);
        if (p.feasible && std::abs(p.actual_sop - epsilon) <= tol)
        {
            out.params = BernsteinParams::from_epsilon0(mid);
            out.actual_sop = p.actual_sop;
            out.probes = probes;
            return out;
        }
        if (!p.feasible || p.actual_sop < epsilon)
            lo = mid;
        else
            hi = mid;
    }

    if (best_eps0 < 0.0)
        throw InfeasibleError("calibration: no admissible epsilon0 found",
                              InfeasibleKind::Surrogate);
    out.params = BernsteinParams::from_epsilon0(best_eps0);
    out.actual_sop = best_actual;
    out.probes = probes;
    return out;
}

} // namespace nomasec
