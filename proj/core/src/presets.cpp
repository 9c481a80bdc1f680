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

#include "qmsets/presets.hpp"

namespace qmsets::presets {

namespace {

SubsetKet ket(const Universe &u, const std::vector<std::string> &labels) { return SubsetKet::of(u, labels); }

}  // namespace

Universe u3() {
    static const Universe u{"a", "b", "c"};
    return u;
}

std::vector<BasisFrame> u3_frames() {
    const Universe u = u3();
    return {BasisFrame::canonical(u, "U"),
            BasisFrame::from_kets("U'", Universe{"a'", "b'", "c'"},
                                  {ket(u, {"a", "b"}), ket(u, {"b", "c"}), ket(u, {"a", "b", "c"})}),
            BasisFrame::from_kets("U''", Universe{"a''", "b''", "c''"},
                                  {ket(u, {"a"}), ket(u, {"a", "b"}), ket(u, {"a", "c"})})};
}

std::vector<SubsetKet> u3_rows() {
    const Universe u = u3();
    return {ket(u, {"a", "b", "c"}), ket(u, {"a", "b"}), ket(u, {"b", "c"}), ket(u, {"a", "c"}),
            ket(u, {"a"}),           ket(u, {"b"}),      ket(u, {"c"}),      SubsetKet::empty(u)};
}

KetTable u3_ket_table() { return ket_table(u3_frames(), u3_rows()); }

Universe bell_universe() {
    static const Universe u{"a", "b"};
    return u;
}

std::vector<BasisFrame> bell_frames() {
    const Universe u = bell_universe();
    return {BasisFrame::canonical(u, "U"),
            BasisFrame::from_kets("U'", Universe{"a'", "b'"}, {ket(u, {"a", "b"}), ket(u, {"b"})}),
            BasisFrame::from_kets("U''", Universe{"a''", "b''"}, {ket(u, {"a", "b"}), ket(u, {"a"})})};
}

std::vector<SubsetKet> bell_rows() {
    const Universe u = bell_universe();
    return {ket(u, {"a", "b"}), ket(u, {"b"}), ket(u, {"a"}), SubsetKet::empty(u)};
}

KetTable bell_ket_table() { return ket_table(bell_frames(), bell_rows()); }

ProductState bell_state() {
    return ProductState::of(ProductUniverse(bell_universe(), bell_universe()), {{"a", "a"}, {"b", "b"}});
}

ProductState other_bell_state() {
    return ProductState::of(ProductUniverse(bell_universe(), bell_universe()), {{"a", "b"}, {"b", "a"}});
}

SlitConfig double_slit() {
    const Universe u = u3();
    return SlitConfig{Dynamics(GF2Matrix{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}), BasisFrame::canonical(u, "U"),
                      ket(u, {"a", "c"})};
}

}  // namespace qmsets::presets
