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

#include <doctest.h>

#include <cmath>

#include "nomasec/errors.hpp"
#include "nomasec/sop.hpp"
#include "test_util.hpp"

using namespace nomasec;

TEST_CASE("threshold at sigma = 0 is the trace")
{
    testutil::FormFactory ff(1);
    HermitianForm q = ff.indefinite(5);
    CHECK(bernstein_threshold(q, 0.0) == doctest::Approx(q.trace()).epsilon(1e-12));
}

TEST_CASE("negative semidefinite forms drop the eigenvalue term")
{
    testutil::FormFactory ff(2);
    HermitianForm psd = ff.psd(4);
    HermitianForm q(CMatrix(-psd.matrix()));
    double sigma = 1.3;
    CHECK(bernstein_threshold(q, sigma) ==
          doctest::Approx(q.trace() + std::sqrt(2.0 * sigma) * q.frobenius()).epsilon(1e-12));
}

TEST_CASE("rank-1 threshold is t (1 + sqrt(2 sigma) + sigma)")
{
    testutil::FormFactory ff(3);
    double t = 2.5;
    HermitianForm q = ff.rank1(6, t);
    // eigensolve oracle: trace, Frobenius and top eigenvalue coincide
    CHECK(q.eigenvalues()(0) == doctest::Approx(t).epsilon(1e-9));
    CHECK(q.frobenius() == doctest::Approx(t).epsilon(1e-9));
    for (double sigma : {0.5, 1.0, 2.0})
        CHECK(bernstein_threshold(q, sigma) ==
              doctest::Approx(t * (1.0 + std::sqrt(2.0 * sigma) + sigma)).epsilon(1e-9));
}

TEST_CASE("rank-1 exact SOP is exp(-z/lambda)")
{
    testutil::FormFactory ff(4);
    HermitianForm q = ff.rank1(6, 10.0);
    CHECK(exact_sop(q, 5.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
    McResult mc = mc_sop(q, 5.0, 1000000, 99);
    CHECK(std::abs(mc.estimate - std::exp(-0.5)) <= 3.0 * mc.std_error);
}

TEST_CASE("positive definite forms exceed zero almost surely")
{
    testutil::FormFactory ff(5);
    HermitianForm q = ff.psd(5);
    CHECK(exact_sop(q, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("negative semidefinite forms never exceed a positive level")
{
    testutil::FormFactory ff(6);
    HermitianForm psd = ff.psd(4);
    HermitianForm q(CMatrix(-psd.matrix()));
    CHECK(exact_sop(q, 0.5) == 0.0);
    CHECK(exact_sop(HermitianForm(CMatrix::Zero(3, 3)), 1.0) == 0.0);
}

TEST_CASE("indefinite forms match Monte Carlo within 3 standard errors")
{
    testutil::FormFactory ff(7);
    for (int rep = 0; rep < 4; ++rep)
    {
        HermitianForm q = ff.indefinite(6);
        for (double z : {0.0, 2.0})
        {
            double ex = exact_sop(q, z);
            McResult mc = mc_sop(q, z, 1000000, 123 + rep);
            CHECK(std::abs(ex - mc.estimate) <= 3.0 * std::max(mc.std_error, 1e-4));
        }
    }
}

TEST_CASE("exact SOP is a probability, nonincreasing in z, scale equivariant")
{
    testutil::FormFactory ff(8);
    HermitianForm q = ff.indefinite(6);
    double prev = 1.1;
    for (double z : {0.0, 0.5, 1.0, 2.0, 5.0, 20.0})
    {
        double p = exact_sop(q, z);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        CHECK(p <= prev + 1e-12);
        prev = p;
        // scale equivariance
        HermitianForm q3(CMatrix(3.0 * q.matrix()));
        CHECK(exact_sop(q3, 3.0 * z) == doctest::Approx(p).epsilon(1e-9));
    }
}

TEST_CASE("coincident positive eigenvalues take the jitter path")
{
    // Two exactly equal positive eigenvalues: the jitter rule separates
    // them and the result lands near the exact Erlang tail.
    CMatrix q = CMatrix::Zero(4, 4);
    q(0, 0) = 1.0;
    q(1, 1) = 1.0;
    HermitianForm hf(q);
    double z = 3.0;
    double got = exact_sop(hf, z);
    double want = std::exp(-z) * (1.0 + z); // Erlang(2) tail
    CHECK(got == doctest::Approx(want).epsilon(1e-4));
}

TEST_CASE("monte carlo oracle sanity on trivial forms")
{
    CHECK(mc_sop(HermitianForm(CMatrix::Zero(2, 2)), 1.0, 10000, 1).estimate == 0.0);
    CHECK(mc_sop(HermitianForm(CMatrix::Identity(2, 2)), 0.0, 10000, 1).estimate == 1.0);
}

TEST_CASE("monte carlo is deterministic in the seed and blockwise consistent")
{
    testutil::FormFactory ff(9);
    HermitianForm q = ff.indefinite(4);
    McResult a = mc_sop(q, 1.0, 200000, 7);
    McResult b = mc_sop(q, 1.0, 200000, 7);
    CHECK(a.estimate == b.estimate);
    McResult c = mc_sop(q, 1.0, 200000, 8);
    CHECK(std::abs(a.estimate - c.estimate) <= 6.0 * a.std_error);
}

TEST_CASE("tail bound holds empirically across random forms")
{
    // Random Hermitian forms x sigma in {0.5, 1, 2}: the empirical
    // exceedance of the threshold never beats exp(-sigma) by more than
    // 3 standard errors. Reduced sample here; the acceptance suite runs the
    // full-size version.
    testutil::FormFactory ff(10);
    const std::int64_t n_mc = 100000;
    int checked = 0;
    for (int rep = 0; rep < 20; ++rep)
    {
        HermitianForm q = rep % 3 == 0   ? ff.rank1(6, 0.5 + rep * 0.1)
                          : rep % 3 == 1 ? ff.psd(6)
                                         : ff.indefinite(6);
        for (double sigma : {0.5, 1.0, 2.0})
        {
            double thr = bernstein_threshold(q, sigma);
            McResult mc = mc_sop(q, thr, n_mc, 1000 + rep);
            double budget = std::exp(-sigma) + 3.0 * std::max(mc.std_error, 1e-4);
            CHECK(mc.estimate <= budget);
            ++checked;
        }
    }
    CHECK(checked == 60);
}

TEST_CASE("synthetic monotone closure calibrates to epsilon0 = 0.1")
{
    // actual(eps0) = eps0 / 10, target 0.01, tol 1e-4: bisection must land
    // on 0.1 within ~log2(0.99/1e-4) ~ 14 probes past the two endpoints.
    int calls = 0;
    auto closure = [&](double eps0) {
        ++calls;
        return CalibrationProbe{true, eps0 / 10.0};
    };
    CalibrationResult res = calibrate_epsilon0(closure, 0.01, 1e-4);
    CHECK(std::abs(res.params.epsilon0 - 0.1) <= 2e-3);
    CHECK(std::abs(res.actual_sop - 0.01) <= 1e-4);
    CHECK(res.probes <= 17);
    CHECK(res.monotone_ok);
}

TEST_CASE("already-tight inner problem returns epsilon0 = epsilon after one probe")
{
    int calls = 0;
    auto closure = [&](double eps0) {
        ++calls;
        (void)eps0;
        return CalibrationProbe{true, 0.0099}; // just inside eps - tol
    };
    CalibrationResult res = calibrate_epsilon0(closure, 0.01, 1e-3);
    CHECK(res.params.epsilon0 == doctest::Approx(0.01));
    CHECK(calls == 1);
}

TEST_CASE("saturated closure reports epsilon0 = 1 without error")
{
    auto closure = [&](double eps0) { return CalibrationProbe{true, eps0 / 1000.0}; };
    CalibrationResult res = calibrate_epsilon0(closure, 0.01, 1e-3);
    CHECK(res.params.epsilon0 == 1.0);
    CHECK(res.saturated);
}

TEST_CASE("infeasible probes push the bracket up instead of failing")
{
    // Infeasible below eps0 = 0.3, then the usual monotone behavior.
    auto closure = [&](double eps0) {
        if (eps0 < 0.3)
            return CalibrationProbe{false, 0.0};
        return CalibrationProbe{true, eps0 / 10.0};
    };
    CalibrationResult res = calibrate_epsilon0(closure, 0.03, 3e-3);
    CHECK(res.params.epsilon0 >= 0.3);
    CHECK(res.actual_sop <= 0.03 + 3e-3);
}

TEST_CASE("fully infeasible closures raise InfeasibleError")
{
    auto closure = [&](double) { return CalibrationProbe{false, 0.0}; };
    CHECK_THROWS_AS(calibrate_epsilon0(closure, 0.01, 1e-3), InfeasibleError);
}

TEST_CASE("sigma and epsilon0 stay consistent in BernsteinParams")
{
    BernsteinParams p = BernsteinParams::from_epsilon0(0.05);
    CHECK(p.sigma == doctest::Approx(-std::log(0.05)).epsilon(1e-12));
    BernsteinParams q = BernsteinParams::from_sigma(2.0);
    CHECK(q.epsilon0 == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
}
