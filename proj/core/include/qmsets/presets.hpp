// Copyright 2026 The qmsets Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "qmsets/dynamics.hpp"
#include "qmsets/entangle.hpp"
#include "qmsets/setspace.hpp"

/// Named configurations for the standard small examples. Primed labels are
/// written with ASCII apostrophes: a', a''.
namespace qmsets::presets {

/// U = {a,b,c}.
Universe u3();
/// U, then U' with a'={a,b}, b'={b,c}, c'={a,b,c}, then U'' with a''={a}, b''={a,b}, c''={a,c}.
std::vector<BasisFrame> u3_frames();
/// The eight kets of Z2^3 in display order.
std::vector<SubsetKet> u3_rows();
KetTable u3_ket_table();

/// U = {a,b}.
Universe bell_universe();
/// U, then U' with a'={a,b}, b'={b}, then U'' with a''={a,b}, b''={a}.
std::vector<BasisFrame> bell_frames();
/// {a,b}, {b}, {a}, {} in display order.
std::vector<SubsetKet> bell_rows();
KetTable bell_ket_table();

/// {(a,a),(b,b)} over U×U.
ProductState bell_state();
/// {(a,b),(b,a)} over U×U.
ProductState other_bell_state();

/// A = [[1,1,0],[1,1,1],[0,1,1]] on U = {a,b,c}, canonical position frame, slit state {a,c}.
SlitConfig double_slit();

}  // namespace qmsets::presets
