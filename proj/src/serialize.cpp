// Copyright 2026 The signapprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "signapprox/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "signapprox/errors.hpp"

namespace signapprox {

namespace {

using Json = nlohmann::ordered_json;

Json tagged_list(const std::vector<Real>& xs) {
  Json out = Json::array();
  for (const Real& x : xs) out.push_back(x.to_tagged());
  return out;
}

std::vector<Real> untag_list(const Json& j) {
  std::vector<Real> out;
  for (const auto& s : j) out.push_back(Real::from_tagged(s.get<std::string>()));
  return out;
}

}  // namespace

std::string tag_double(double x) { return Real(x, 53).to_tagged(); }

std::string sign_result_json(const SignPolyResult& r) {
  Json j;
  j["a"] = r.a.to_tagged();
  j["m"] = r.m;
  j["L"] = r.L.to_tagged();
  j["B"] = r.B.to_tagged();
  j["coeffs"] = Json::parse(r.p.base().to_json());
  j["alternants"] = tagged_list(r.alternants);
  j["dvp_gap"] = r.dvp_gap.to_tagged();
  j["precision"] = r.p.precision();
  j["iterations"] = r.iterations;
  return j.dump(2) + "\n";
}

SignPolyResult sign_result_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    const Real a = Real::from_tagged(j.at("a").get<std::string>());
    ChebPoly q = ChebPoly::from_json(j.at("coeffs").dump());
    return SignPolyResult{odd_lift(q, a),
                          Real::from_tagged(j.at("L").get<std::string>()),
                          untag_list(j.at("alternants")),
                          Real::from_tagged(j.at("B").get<std::string>()),
                          Real::from_tagged(j.at("dvp_gap").get<std::string>()),
                          j.at("m").get<int>(),
                          a,
                          j.value("iterations", 0)};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("sign_result_from_json: ") + e.what());
  }
}

SweepRow make_sweep_row(const SignPolyResult& r) {
  SweepRow row;
  row.m = r.m;
  row.a = r.a;
  row.L = r.L;
  row.B = r.B;
  row.scaled = t1_scaled(r.a, r.m, r.L);
  row.target = t1_target(r.a.with_precision(r.L.precision()));
  row.gap = (row.scaled - row.target) / row.target;
  return row;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "m,a,L,B,scaled,target,gap\n";
  for (const SweepRow& r : rows) {
    os << r.m << ',' << r.a.to_tagged() << ',' << r.L.to_tagged() << ',' << r.B.to_tagged() << ','
       << r.scaled.to_tagged() << ',' << r.target.to_tagged() << ',' << r.gap.to_tagged() << '\n';
  }
  return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows, const std::vector<SweepTrend>& trends) {
  Json j;
  j["rows"] = Json::array();
  for (const SweepRow& r : rows) {
    j["rows"].push_back({{"m", r.m},
                         {"a", r.a.to_tagged()},
                         {"L", r.L.to_tagged()},
                         {"B", r.B.to_tagged()},
                         {"scaled", r.scaled.to_tagged()},
                         {"target", r.target.to_tagged()},
                         {"gap", r.gap.to_tagged()}});
  }
  j["trends"] = Json::array();
  for (const SweepTrend& t : trends) {
    j["trends"].push_back({{"a", t.a.to_tagged()},
                           {"target", t.trend.target.to_tagged()},
                           {"last_rel_gap", t.trend.last_rel_gap.to_tagged()},
                           {"monotone_tail", t.trend.monotone_tail},
                           {"aitken", tagged_list(t.trend.aitken)},
                           {"aitken_last", t.trend.aitken_last.to_tagged()},
                           {"aitken_rel_gap", t.trend.aitken_rel_gap.to_tagged()},
                           {"aitken_iterated", tagged_list(t.trend.aitken_iterated)}});
  }
  return j.dump(2) + "\n";
}

std::string constant_json(const ConstantReport& rep, const HalfPlaneMap& map) {
  Json j;
  j["c"] = tag_double(rep.value);
  j["c_doubled"] = tag_double(rep.value_doubled);
  j["c_richardson"] = tag_double(rep.richardson);
  j["error_estimate"] = tag_double(rep.error_estimate);
  j["reference"] = default_constant(53).to_tagged();
  j["h_tau"] = tag_double(rep.h_tau);
  j["nodes"] = rep.nodes;
  j["nodes_doubled"] = rep.nodes_doubled;
  j["map"] = {{"sigma", tag_double(map.sigma)},
              {"tol", tag_double(map.tol)},
              {"iterations", map.iterations},
              {"residual", tag_double(map.residual)}};
  return j.dump(2) + "\n";
}

std::string entire_json(double B, double A, const Real& L, const Real& t2) {
  Json j;
  j["B"] = tag_double(B);
  j["A"] = tag_double(A);
  j["L"] = L.to_tagged();
  j["t2_scaled"] = t2.to_tagged();
  j["t2_target"] = t2_target(t2.precision()).to_tagged();
  return j.dump(2) + "\n";
}

std::string levy_json(const LevyReport& r) {
  Json j;
  j["m"] = r.m;
  j["a_star"] = r.a_star.to_tagged();
  j["L_star"] = r.L_star.to_tagged();
  j["scaled"] = r.scaled.to_tagged();
  j["levy_distance"] = r.levy_distance.to_tagged();
  j["predictor"] = r.predictor.to_tagged();
  j["tol"] = tag_double(r.tol);
  return j.dump(2) + "\n";
}

}  // namespace signapprox
