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

#include "qmsets/json.hpp"

namespace qmsets::json {

Json encode(const Rational &r) { return to_wire(r); }

Json encode(const Probability &p) { return p.to_wire(); }

Json encode(const SubsetKet &s) { return s.labels(); }

Json encode(const Distribution &d) {
    Json out = Json::object();
    for (const auto &e : d) out[e.label] = encode(e.probability);
    return out;
}

Json encode(const KetTable &t) {
    Json rows = Json::array();
    for (const auto &row : t.rows) {
        Json r = Json::array();
        for (const auto &k : row) r.push_back(encode(k));
        rows.push_back(std::move(r));
    }
    return Json{{"frames", t.frame_names}, {"rows", std::move(rows)}};
}

Json encode(const Partition &p) {
    Json out = Json::array();
    for (const auto &b : p.blocks()) out.push_back(encode(b));
    return out;
}

Json encode(const Attribute &f) {
    Json out = Json::object();
    for (std::size_t i = 0; i < f.universe().size(); ++i) out[f.universe().label(i)] = encode(f.value(i));
    return out;
}

Json encode(const DensityMatrix &rho) {
    Json entries = Json::array();
    for (std::size_t j = 0; j < rho.size(); ++j) {
        Json row = Json::array();
        for (std::size_t k = 0; k < rho.size(); ++k) row.push_back(encode(rho.at(j, k)));
        entries.push_back(std::move(row));
    }
    return Json{{"universe", rho.universe().labels()}, {"entries", std::move(entries)}};
}

Json encode(const MeasurementOutcome &m) {
    return Json{{"eigenvalue", encode(m.eigenvalue)}, {"probability", encode(m.probability)}, {"post_state", encode(m.post_state)}};
}

Json encode(const ProductState &s) {
    Json out = Json::array();
    for (std::size_t k : s.bits().ones()) {
        const ProductUniverse &pu = s.universe();
        out.push_back(Json::array({pu.left().label(pu.left_index(k)), pu.right().label(pu.right_index(k))}));
    }
    return out;
}

Json encode(const BellReport &r) {
    Json terms = Json::object();
    for (const auto &t : r.terms) terms["(" + t.left_outcome + "," + t.right_outcome + ")"] = encode(t.probability);
    return Json{{"lhs", encode(r.lhs)},
                {"rhs", encode(r.rhs)},
                {"violated", r.violated},
                {"terms", std::move(terms)},
                {"summary", r.summary()}};
}

Json encode(const CounterfactualJoint &c) {
    Json triples = Json::array();
    for (const auto &t : c.triples) {
        triples.push_back(Json{{"x", t.x}, {"y", t.y}, {"z", t.z}, {"probability", encode(t.probability)}});
    }
    Json marginals = Json::object();
    marginals[c.first_label] = encode(c.first);
    marginals[c.second_label] = encode(c.second);
    marginals[c.third_label] = encode(c.third);
    return Json{{"frames", c.frame_names},
                {"triples", std::move(triples)},
                {"marginals", std::move(marginals)},
                {"lhs", encode(c.lhs())},
                {"rhs", encode(c.rhs())},
                {"holds", c.holds()}};
}

Json encode(const StateOutcomeTable &t) {
    Json rows = Json::array();
    for (const auto &[state, probs] : t.rows) {
        Json p = Json::object();
        for (std::size_t k = 0; k < probs.size(); ++k) p[t.columns[k]] = encode(probs[k]);
        rows.push_back(Json{{"state", encode(state)}, {"probabilities", std::move(p)}});
    }
    return rows;
}

Json encode(const Register &r) {
    Json kets = Json::array();
    for (std::size_t i : r.state().ones()) kets.push_back(r.basis_label(i));
    return Json{{"lines", r.lines()}, {"kets", std::move(kets)}, {"coefficients", r.coefficients()}};
}

Json encode(const TeleportTrace &t) {
    return Json{{"input", encode(t.input)},
                {"phi0", encode(t.phi0)},
                {"phi1", encode(t.phi1)},
                {"phi2", encode(t.phi2)},
                {"classical_bit", t.classical_bit ? 1 : 0},
                {"probability", encode(t.probability)},
                {"collapsed", encode(t.collapsed)},
                {"bob_received", encode(t.bob_received)},
                {"bob_final", encode(t.bob_final)},
                {"success", t.success()}};
}

Json encode(const ParityResult &p) {
    Json slices = Json::array();
    for (bool b : p.slice_parities) slices.push_back(b ? "O" : "E");
    return Json{{"parity", p.parity ? "odd" : "even"},
                {"slices", std::move(slices)},
                {"measured", p.final_state.basis_label(p.measured_index)},
                {"final_state", encode(p.final_state)},
                {"ef_applications", p.ef_applications}};
}

Json encode(const dsl::RunRecord &r) {
    auto measurement = [](const dsl::MeasurementRecord &m) {
        return Json{{"line", m.line}, {"outcome", m.outcome ? 1 : 0}, {"probability", encode(m.probability)}};
    };
    Json steps = Json::array();
    for (const auto &s : r.steps) {
        Json ms = Json::array();
        for (const auto &m : s.measurements) ms.push_back(measurement(m));
        steps.push_back(Json{{"statement", s.statement}, {"applied", s.applied}, {"measurements", std::move(ms)},
                             {"state", encode(s.state)}});
    }
    Json all = Json::array();
    for (const auto &m : r.measurements) all.push_back(measurement(m));
    return Json{{"initial", encode(r.initial)},
                {"steps", std::move(steps)},
                {"measurements", std::move(all)},
                {"final_state", encode(r.final_state)}};
}

}  // namespace qmsets::json
