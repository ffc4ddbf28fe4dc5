// Copyright 2026 The PulseForge Authors
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

#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "pulseforge/common/error.hpp"
#include "pulseforge/common/rng.hpp"
#include "pulseforge/pulse/schedule.hpp"
#include "pulseforge/templates/ansatz.hpp"
#include "pulseforge/templates/gates.hpp"
#include "pulseforge/templates/template_spec.hpp"

namespace pulseforge::templates {
namespace {

using pulse::ParamField;
constexpr double kPi = std::numbers::pi;

int formula(int id, int n, int l) {
  switch (id) {
    case 1: return (5 * n - 3) * l;
    case 2: return 2 * (2 * n - 1) * l;
    case 3: return (6 * n - 3) * l;
    case 4: return (5 * n - 2) * l;
    case 5: return (9 * n - 7) * l;
    case 6: return (8 * n - 6) * l;
  }
  return -1;
}

PulseAnsatz ansatz_for(int id, int n, int l, std::uint64_t seed = 0, std::string_view backend = "default") {
  return PulseAnsatz(parse_template_name(std::to_string(id), n, l, seed), pulse::ideal_device(n),
                     pulse::constraint_spec_for(backend));
}

TEST(Counting, InstantiatedSchedulesMatchFormulas) {
  StreamRng rng(41, 0);
  for (int id = 1; id <= 6; ++id) {
    for (int n = 2; n <= 6; ++n) {
      for (int l = 1; l <= 3; ++l) {
        const auto a = ansatz_for(id, n, l);
        const auto s = a.instantiate(a.sample(rng).values);
        const auto c = pulse::structural_counts(s);
        EXPECT_EQ(c.n_params, formula(id, n, l)) << "ID" << id << " N=" << n << " L=" << l;
        EXPECT_EQ(c.n_cr, (n - 1) * l) << "ID" << id << " N=" << n << " L=" << l;
        EXPECT_EQ(static_cast<int>(a.n_params()), formula(id, n, l));
        const auto pc = param_count(static_cast<TemplateId>(id), n, l);
        EXPECT_EQ(pc.n_params, formula(id, n, l));
        EXPECT_EQ(pc.n_cr, (n - 1) * l);
      }
    }
  }
}

TEST(Counting, FixedCrVariantsDropOneParameterPerCr) {
  for (int n = 2; n <= 6; ++n) {
    for (int l = 1; l <= 3; ++l) {
      for (int id : {1, 3, 5}) {
        EXPECT_EQ(param_count(static_cast<TemplateId>(id + 1), n, l).n_params,
                  param_count(static_cast<TemplateId>(id), n, l).n_params - (n - 1) * l);
      }
    }
  }
}

TEST(Counting, Examples) {
  EXPECT_EQ(param_count(TemplateId::kHardwareEfficient, 4, 1).n_params, 17);
  EXPECT_EQ(param_count(TemplateId::kHardwareEfficient, 4, 1).n_cr, 3);
  EXPECT_EQ(param_count(TemplateId::kBlock, 2, 1).n_params, 11);
  EXPECT_EQ(param_count(TemplateId::kHardwareEfficientFixCr, 2, 3).n_params, 18);
  EXPECT_EQ(param_count(TemplateId::kHardwareEfficientFixCr, 2, 3).n_cr, 3);
  const auto id6 = ansatz_for(6, 3, 1);
  EXPECT_EQ(id6.n_params(), 18U);
  EXPECT_EQ(id6.n_two_qubit_ops(), 2);
}

TEST(Counting, BlockTemplateSharesDressing) {
  for (int n = 2; n <= 6; ++n) {
    const auto ops = template_ops(parse_template_name("5", n, 1, 0));
    int sqp = 0;
    for (const auto& op : ops) sqp += op.kind == pulse::InstructionKind::kPlaySqp ? 1 : 0;
    EXPECT_EQ(sqp, 3 * n - 2) << "N=" << n;
  }
}

TEST(Counting, TwoQubitStructures) {
  const auto dev = pulse::ideal_device(2);
  const auto c = pulse::constraint_spec_for("default");
  const PulseAnsatz dressed(parse_template_name("dressed2q", 2, 1, 0), dev, c);
  const PulseAnsatz block(parse_template_name("blockpulse2q", 2, 1, 0), dev, c);
  EXPECT_EQ(dressed.n_params(), 11U);
  EXPECT_EQ(dressed.n_two_qubit_ops(), 1);
  EXPECT_EQ(block.n_params(), 18U);
  EXPECT_EQ(block.n_two_qubit_ops(), 2);
  StreamRng rng(42, 0);
  const auto s = block.instantiate(block.sample(rng).values);
  EXPECT_EQ(pulse::structural_counts(s).n_sqp, 6);
  const auto d = pulse::structural_counts(dressed.instantiate(dressed.sample(rng).values));
  EXPECT_EQ(d.n_sqp, 4);
  EXPECT_EQ(d.n_cr, 1);
}

TEST(Counting, SingleQubitPulse) {
  const PulseAnsatz sqp(parse_template_name("sqp", 1, 1, 0), pulse::ideal_device(1), pulse::constraint_spec_for("x"));
  ASSERT_EQ(sqp.n_params(), 2U);
  EXPECT_EQ(sqp.layout()[0].field, ParamField::kAmplitude);
  EXPECT_EQ(sqp.layout()[1].field, ParamField::kAngle);
}

TEST(Instantiate, SchedulesAreValidForTheDevice) {
  StreamRng rng(43, 0);
  for (int id = 1; id <= 12; ++id) {
    for (int n = 2; n <= 5; ++n) {
      const auto a = ansatz_for(id, n, 2, 7);
      for (int k = 0; k < 5; ++k) {
        const auto s = a.instantiate(a.sample(rng).values);
        EXPECT_NO_THROW(pulse::check_schedule(s));
        EXPECT_NO_THROW(pulse::check_topology(s, a.device()));
        for (const auto& ins : s.instructions) {
          EXPECT_EQ(ins.params.duration % 16, 0);
          EXPECT_GE(ins.params.angle, 0.0);
          EXPECT_LT(ins.params.angle, 2 * kPi);
        }
      }
    }
  }
}

TEST(Instantiate, PinsSqpDurationToCalibration) {
  const auto a = ansatz_for(1, 3, 1);
  StreamRng rng(44, 0);
  for (const auto& ins : a.instantiate(a.sample(rng).values).instructions) {
    if (ins.kind == pulse::InstructionKind::kPlaySqp) {
      EXPECT_EQ(ins.params.duration, 160);
    }
  }
}

TEST(Instantiate, FixedCrAmplitudeUsesDeviceDefault) {
  const auto a = ansatz_for(2, 3, 1);
  StreamRng rng(45, 0);
  for (const auto& ins : a.instantiate(a.sample(rng).values).instructions) {
    if (ins.kind == pulse::InstructionKind::kPlayCr) {
      EXPECT_EQ(ins.params.amplitude, a.device().cr_amplitude);
      EXPECT_FALSE(pulse::has_field(ins.free, ParamField::kAmplitude));
    }
  }
}

TEST(Instantiate, Errors) {
  const auto a = ansatz_for(1, 2, 1);
  std::vector<double> theta(a.n_params() - 1, 0.1);
  EXPECT_THROW(a.instantiate(theta), DimensionError);
  StreamRng rng(46, 0);
  auto ok = a.sample(rng).values;
  ok[0] = 1.5;  // first SQP amplitude
  EXPECT_THROW(a.instantiate(ok), ConstraintError);
  EXPECT_THROW(ansatz_for(1, 1, 1), TemplateError);
  EXPECT_THROW(ansatz_for(1, 2, 0), TemplateError);
  auto no_edges = pulse::ideal_device(3);
  no_edges.edges.clear();
  EXPECT_THROW(PulseAnsatz(parse_template_name("1", 3, 1, 0), no_edges, pulse::constraint_spec_for("x")),
               TopologyError);
}

TEST(Instantiate, DurationsSnapToGrid) {
  const auto a = ansatz_for(3, 2, 1);
  StreamRng rng(47, 0);
  auto theta = a.sample(rng).values;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (a.layout()[i].is_duration()) theta[i] = 300.0;
  }
  for (const auto& ins : a.instantiate(theta).instructions) EXPECT_EQ(ins.params.duration, 304);
  EXPECT_EQ(snap_duration(300.0, 16), 304);
  EXPECT_EQ(snap_duration(263.9, 16), 256);
}

TEST(Instantiate, FreeFunctionMatchesMember) {
  const auto spec = parse_template_name("4", 3, 2, 0);
  const auto dev = pulse::ideal_device(3);
  const PulseAnsatz a(spec, dev, pulse::constraint_spec_for(dev.backend));
  StreamRng rng(48, 0);
  const auto theta = a.sample(rng).values;
  EXPECT_EQ(instantiate(spec, theta, dev), a.instantiate(theta));
}

TEST(Random, MatchesBudgetsAndIsDeterministic) {
  for (int match = 1; match <= 6; ++match) {
    for (int n = 2; n <= 5; ++n) {
      for (int l = 1; l <= 2; ++l) {
        std::set<std::string> layouts;
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          const auto spec = random_pulse_template(match, n, l, seed);
          const auto a = PulseAnsatz(spec, pulse::ideal_device(n), pulse::constraint_spec_for("x"));
          EXPECT_EQ(static_cast<int>(a.n_params()), formula(match, n, l));
          EXPECT_EQ(a.n_two_qubit_ops(), (n - 1) * l);
          EXPECT_EQ(template_ops(spec), template_ops(random_pulse_template(match, n, l, seed)));
        }
      }
    }
  }
  const auto a = template_ops(random_pulse_template(1, 4, 2, 1));
  const auto b = template_ops(random_pulse_template(1, 4, 2, 2));
  EXPECT_NE(a, b);
}

TEST(Random, IdsSevenToTwelveMatchTheirPartners) {
  for (int id = 7; id <= 12; ++id) {
    const auto a = ansatz_for(id, 4, 1, 3);
    EXPECT_EQ(static_cast<int>(a.n_params()), formula(id - 6, 4, 1));
    EXPECT_EQ(matched_id(static_cast<TemplateId>(id)), static_cast<TemplateId>(id - 6));
  }
}

TEST(Names, ParseAndFormat) {
  EXPECT_EQ(parse_template_name("id3", 2, 1, 0).id, TemplateId::kDecay);
  EXPECT_EQ(parse_template_name("RAND7", 2, 1, 0).id, TemplateId::kRandom7);
  EXPECT_EQ(parse_template_name("2QDressedpulse", 2, 1, 0).id, TemplateId::kDressed2Q);
  EXPECT_EQ(parse_template_name("blockpulse2q", 2, 1, 0).id, TemplateId::kBlockpulse2Q);
  const auto fixed = parse_template_name("1_fixamp", 2, 1, 0);
  EXPECT_EQ(fixed.name(), "ID1_fixamp");
  EXPECT_THROW(parse_template_name("13", 2, 1, 0), TemplateError);
  EXPECT_THROW(parse_template_name("bogus", 2, 1, 0), TemplateError);
  EXPECT_TRUE(is_gate_baseline_name("twolocal"));
  EXPECT_FALSE(is_gate_baseline_name("id1"));
}

TEST(Names, FixedFieldsRemoveParameters) {
  const auto dev = pulse::ideal_device(2);
  const auto c = pulse::constraint_spec_for("x");
  const PulseAnsatz base(parse_template_name("3", 2, 1, 0), dev, c);
  const PulseAnsatz fixdur(parse_template_name("3_fixdur", 2, 1, 0), dev, c);
  EXPECT_LT(fixdur.n_params(), base.n_params());
  EXPECT_EQ(fixdur.n_params(), base.n_params() - 1);
  for (const auto& d : fixdur.layout()) {
    if (d.is_duration()) {
      EXPECT_EQ(fixdur.ops()[static_cast<std::size_t>(d.owner)].kind, pulse::InstructionKind::kPlaySqp);
    }
  }
}

TEST(Names, SpecJsonRoundTrip) {
  auto spec = parse_template_name("rand9", 3, 2, 99);
  spec.values.cr_amplitude = 0.25;
  EXPECT_EQ(TemplateSpec::from_json(spec.to_json()), spec);
  EXPECT_THROW(TemplateSpec::from_json(nlohmann::json::array()), ParseError);
}

TEST(Sampling, AllDrawsPassValidation) {
  for (const char* backend : {"default", "ibmq_guadalupe"}) {
    const auto c = pulse::constraint_spec_for(backend);
    const auto a = ansatz_for(3, 3, 1, 0, backend);
    StreamRng rng(49, 0);
    for (int k = 0; k < 2000; ++k) {
      const auto s = a.instantiate(a.sample(rng).values);
      for (const auto& ins : s.instructions) {
        EXPECT_TRUE(pulse::validate_params(ins.params, c, ins.free).ok());
      }
    }
  }
}

TEST(Sampling, FixedCrTemplatesHaveNoCrAmplitude) {
  const auto a = ansatz_for(2, 4, 2);
  for (const auto& d : a.layout()) {
    const auto& ops = a.ops();
    if (ops[static_cast<std::size_t>(d.owner)].kind == pulse::InstructionKind::kPlayCr) {
      EXPECT_NE(d.field, ParamField::kAmplitude);
    }
  }
}

TEST(Sampling, AngleMeanIsPi) {
  const auto a = ansatz_for(1, 2, 1);
  std::size_t angle_index = 0;
  while (a.layout()[angle_index].field != ParamField::kAngle) ++angle_index;
  StreamRng rng(50, 0);
  const int n = 10000;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += a.sample(rng).values[angle_index];
  const double sigma = 2 * kPi / std::sqrt(12.0 * n);
  EXPECT_NEAR(sum / n, kPi, 3 * sigma);
}

TEST(Sampling, DurationsOnGridAndInteriorMargins) {
  const auto a = ansatz_for(3, 2, 1);
  StreamRng rng(51, 0);
  for (int k = 0; k < 500; ++k) {
    const auto v = sample_interior(a.layout(), rng);
    const auto w = sample_parameters(a.layout(), rng);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& d = a.layout()[i];
      if (d.is_duration()) {
        EXPECT_EQ(std::fmod(w[i], 16.0), 0.0);
        EXPECT_GE(v[i], d.lo + 8.0);
        EXPECT_LE(v[i], d.hi - 8.0);
      } else if (!d.periodic) {
        EXPECT_GE(v[i], d.lo + 1e-3);
        EXPECT_LE(v[i], d.hi - 1e-3);
      }
    }
  }
}

TEST(Gates, ZyzWithOuterZerosIsRy) {
  const auto d = pulse::ideal_device(1);
  for (double t : {0.0, 0.3, 1.7, 3.0, 5.9}) {
    const double theta[] = {0.0, t, 0.0};
    const auto r = gate_baseline("ZYZ", 1, theta, d);
    EXPECT_NEAR((r.unitary.entries() - gate_matrix("ry", t)).norm(), 0.0, 1e-14);
  }
}

TEST(Gates, RxCx2Q) {
  const auto d = pulse::ideal_device(2);
  const double theta[] = {0.1, 0.2, 0.3, 0.4};
  const auto r = gate_baseline("RXCX2Q", 2, theta, d);
  EXPECT_EQ(r.n_params, 4);
  EXPECT_EQ(r.duration_dt, 1696);
  EXPECT_LT(r.unitary.unitarity_error(), 1e-12);
}

TEST(Gates, RzOnlyIsPhase) {
  const auto d = pulse::ideal_device(1);
  const GateAnsatz a(GateBaseline::kRz, 1, 1, d);
  StreamRng rng(52, 0);
  for (int k = 0; k < 20; ++k) {
    EXPECT_NEAR(qcore::fidelity(a.prepare(a.sample(rng).values), qcore::StateVector(1)), 1.0, 1e-14);
  }
  EXPECT_EQ(a.duration_range().first, 0);
}

TEST(Gates, Universal2QIsFifteenAngles) {
  const auto c = gate_circuit(GateBaseline::kUniversal2Q, 2);
  EXPECT_EQ(c.n_params, 15);
  int cx = 0;
  for (const auto& g : c.gates) cx += g.name == "cx" ? 1 : 0;
  EXPECT_EQ(cx, 3);
}

TEST(Gates, TwoLocalStructure) {
  const auto c = gate_circuit(GateBaseline::kTwoLocal, 4, 3);
  EXPECT_EQ(c.n_params, 16);
  int cz = 0;
  for (const auto& g : c.gates) cz += g.name == "cz" ? 1 : 0;
  EXPECT_EQ(cz, 18);
}

TEST(Gates, CxControlsOnFirstListedQubit) {
  // |control=1, target=0> is local index 1 (control is local bit 0).
  const auto m = gate_matrix("cx");
  EXPECT_NEAR(std::abs(m(3, 1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(m(2, 2)), 1.0, 1e-15);
}

TEST(Gates, UnknownName) {
  EXPECT_THROW(gate_baseline_from_string("swapnet"), TemplateError);
  EXPECT_EQ(gate_baseline_from_string("rxrz"), GateBaseline::kRxRz);
}

TEST(Ansatz, UnitaryColumnIsPreparedState) {
  const auto a = ansatz_for(5, 3, 1);
  StreamRng rng(53, 0);
  const auto theta = a.sample(rng).values;
  const auto u = a.unitary(theta);
  EXPECT_NEAR((u.entries().col(0) - a.prepare(theta).amplitudes()).norm(), 0.0, 1e-12);
}

TEST(Ansatz, DurationRangeBracketsSamples) {
  const auto a = ansatz_for(3, 3, 1);
  const auto [lo, hi] = a.duration_range();
  StreamRng rng(54, 0);
  for (int k = 0; k < 50; ++k) {
    const auto d = a.duration_dt(a.sample(rng).values);
    EXPECT_GE(d, lo);
    EXPECT_LE(d, hi);
  }
}

TEST(Ansatz, MakeAnsatzDispatchesGateNames) {
  const auto dev = pulse::ideal_device(4);
  const auto c = pulse::constraint_spec_for("x");
  EXPECT_EQ(make_ansatz("TWOLOCAL", 4, 3, dev, c)->n_params(), 16U);
  EXPECT_EQ(make_ansatz("ID1", 4, 1, dev, c)->n_params(), 17U);
  EXPECT_THROW(make_ansatz("nope", 2, 1, dev, c), TemplateError);
}

}  // namespace
}  // namespace pulseforge::templates
