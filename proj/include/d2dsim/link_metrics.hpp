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

#include "d2dsim/allocation.hpp"
#include "d2dsim/instance.hpp"

namespace d2dsim {

/// Downlink SINR of cellular UE i on its own resource.  Interference comes
/// from the D2D transmitters sharing resource i; the BS signal itself is
/// the useful term.  Strictly positive and finite.
double sinr_cellular(Instance const &inst, Allocation const &alloc, int ue);

/// SINR of an assigned D2D pair.  The BS (transmitting on every resource)
/// and the co-channel D2D transmitters interfere.  UsageError if the pair
/// is unassigned.
double sinr_d2d(Instance const &inst, Allocation const &alloc, int pair);

/// log2(1 + sinr)
double shannon_rate(double sinr);

/// System spectral efficiency in bit/s/Hz: sum of the cellular rates over
/// all C UEs plus the rates of the assigned D2D pairs.  Unassigned pairs
/// contribute nothing.
double sum_rate(Instance const &inst, Allocation const &alloc);

/// Rate delta from assigning pair d to resource c, i.e.
/// sum_rate(alloc + {d->c}) - sum_rate(alloc).  May be negative.  Does not
/// mutate alloc; UsageError if d is already assigned.
double marginal_gain(Instance const &inst, Allocation const &alloc, int pair,
                     int resource);

}  // namespace d2dsim
