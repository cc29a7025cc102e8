#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The d2dsim Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>

namespace d2dsim {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A scenario or run parameter is missing, unknown, or out of range.
/// The message names the offending key and the violated constraint.
class ConfigError : public Error
{
public:
  using Error::Error;
};

/// An operation was called outside its contract (bad index, pair already
/// assigned, empty selection, ...).
class UsageError : public Error
{
public:
  using Error::Error;
};

/// The instance admits no complete allocation (no resources but D2D pairs
/// present).
class InfeasibleInstanceError : public Error
{
public:
  using Error::Error;
};

/// The exhaustive search space exceeds the enumeration guard.
class InstanceTooLargeError : public Error
{
public:
  using Error::Error;
};

/// A sample set is degenerate for the requested statistic (zero variance).
class DegenerateDistributionError : public Error
{
public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error
{
public:
  using Error::Error;
};

}  // namespace d2dsim
