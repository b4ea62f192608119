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

#include <stdexcept>
#include <string>

namespace nomasec
{

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Configuration value violates a documented invariant.
class ValidationError : public Error
{
  public:
    using Error::Error;
};

/// Malformed config or experiment file; message carries the line number.
class ParseError : public Error
{
  public:
    using Error::Error;
};

/// The stacked SU channel matrix is numerically rank deficient; the draw
/// should be resampled.
class SingularChannelError : public Error
{
  public:
    using Error::Error;
};

class ZeroVectorError : public Error
{
  public:
    using Error::Error;
};

/// Two positive eigenvalues coincide even after the jitter rule.
class DegenerateSpectrumError : public Error
{
  public:
    using Error::Error;
};

/// Why a solve came back infeasible. QosEmpty means the QoS/power polytope
/// itself is empty (no outage parameter can fix it); Surrogate means the
/// conservative outage constraint could not be met at the probed parameter.
enum class InfeasibleKind
{
    QosEmpty,
    Surrogate,
    Other
};

class InfeasibleError : public Error
{
  public:
    explicit InfeasibleError(const std::string &msg, InfeasibleKind k = InfeasibleKind::Other)
        : Error(msg), kind(k)
    {
    }
    InfeasibleKind kind;
};

class NumericalError : public Error
{
  public:
    using Error::Error;
};

} // namespace nomasec
