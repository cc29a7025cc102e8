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

#include <string>
#include <vector>

#include "d2dsim/errors.hpp"

namespace d2dsim {

/// Assignment of D2D pairs to cellular resources.  Each pair is either
/// unassigned or mapped to exactly one resource index in [0, C); a
/// complete allocation assigns every pair.
class Allocation
{
public:
  static constexpr int kUnassigned = -1;

  Allocation() = default;
  explicit Allocation(int num_pairs)
    : slots_(static_cast<std::size_t>(num_pairs), kUnassigned)
  {}

  int num_pairs() const { return static_cast<int>(slots_.size()); }

  bool is_assigned(int pair) const { return slot(pair) != kUnassigned; }

  /// Resource of an assigned pair; UsageError if unassigned.
  int resource_of(int pair) const
  {
    int const r = slot(pair);
    if (r == kUnassigned)
    {
      throw UsageError("pair " + std::to_string(pair) + " is not assigned");
    }
    return r;
  }

  /// Assigns an unassigned pair; UsageError if already assigned.
  void assign(int pair, int resource)
  {
    int &r = slot(pair);
    if (r != kUnassigned)
    {
      throw UsageError("pair " + std::to_string(pair) + " is already assigned");
    }
    r = resource;
  }

  /// Removes an assigned pair from its resource.
  void erase(int pair)
  {
    int &r = slot(pair);
    if (r == kUnassigned)
    {
      throw UsageError("pair " + std::to_string(pair) + " is not assigned");
    }
    r = kUnassigned;
  }

  int assigned_count() const
  {
    int n = 0;
    for (int r : slots_)
    {
      n += (r != kUnassigned);
    }
    return n;
  }

  bool is_complete() const { return assigned_count() == num_pairs(); }

  /// Raw slot view: slots()[d] is the resource of pair d or kUnassigned.
  std::vector<int> const &slots() const { return slots_; }

  bool operator==(Allocation const &) const = default;

private:
  int &slot(int pair)
  {
    check_range(pair);
    return slots_[static_cast<std::size_t>(pair)];
  }
  int slot(int pair) const
  {
    check_range(pair);
    return slots_[static_cast<std::size_t>(pair)];
  }
  void check_range(int pair) const
  {
    if (pair < 0 || pair >= num_pairs())
    {
      throw UsageError("pair index " + std::to_string(pair) + " out of range");
    }
  }

  std::vector<int> slots_;
};

}  // namespace d2dsim
