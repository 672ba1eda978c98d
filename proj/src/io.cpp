#include "sesq/io.hpp"

#include "sesq/errors.hpp"

#include <filesystem>
#include <fstream>

namespace sesq {

json load_json_file(const std::string& path) {
  std::error_code ec;
  auto size = std::filesystem::file_size(path, ec);
  if (ec) throw ParseError("cannot read " + path);
  if (size > kMaxFileBytes) throw ParseError(path + " exceeds the 64 MiB limit");
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

json state_to_json(const MPSState& state) {
  json gammas = json::array();
  for (const auto& g : state.gammas) {
    json tensor = json::array();
    for (int l = 0; l < g.left; ++l) {
      json row = json::array();
      for (int s = 0; s < 2; ++s) {
        json phys = json::array();
        for (int r = 0; r < g.right; ++r)
          phys.push_back({g.at(l, s, r).real(), g.at(l, s, r).imag()});
        row.push_back(phys);
      }
      tensor.push_back(row);
    }
    gammas.push_back(tensor);
  }
  return {{"n", state.n},
          {"chi_cap", state.chi_cap},
          {"gammas", gammas},
          {"lambdas", state.lambdas}};
}

MPSState state_from_json(const json& j) {
  try {
    MPSState state;
    state.n = j.at("n").get<int>();
    state.chi_cap = j.at("chi_cap").get<int>();
    if (state.n < 1) throw ParseError("state must have n >= 1");
    for (const auto& tensor : j.at("gammas")) {
      int left = static_cast<int>(tensor.size());
      if (left < 1 || tensor[0].size() != 2) throw ParseError("malformed gamma tensor");
      int right = static_cast<int>(tensor[0][0].size());
      GammaTensor g(left, right);
      for (int l = 0; l < left; ++l)
        for (int s = 0; s < 2; ++s) {
          const auto& phys = tensor.at(l).at(s);
          if (static_cast<int>(phys.size()) != right)
            throw ParseError("ragged gamma tensor");
          for (int r = 0; r < right; ++r)
            g.at(l, s, r) = cd(phys.at(r).at(0).get<double>(), phys.at(r).at(1).get<double>());
        }
      state.gammas.push_back(std::move(g));
    }
    for (const auto& lam : j.at("lambdas"))
      state.lambdas.push_back(lam.get<std::vector<double>>());
    validate(state);
    return state;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad state file: ") + e.what());
  }
}

json weight_to_json(const WeightFunction& w) {
  if (w.kind == WeightFunction::Kind::Entropy) return {{"type", "entropy"}};
  std::string axis = w.axis == Axis::X ? "x" : w.axis == Axis::Y ? "y" : "z";
  return {{"type", "magnetization"}, {"axis", axis}};
}

WeightFunction weight_from_json(const json& j) {
  try {
    std::string type = j.at("type").get<std::string>();
    if (type == "entropy") return WeightFunction::entropy();
    if (type == "magnetization") {
      std::string axis = j.value("axis", "z");
      if (axis == "x") return WeightFunction::magnetization(Axis::X);
      if (axis == "y") return WeightFunction::magnetization(Axis::Y);
      if (axis == "z") return WeightFunction::magnetization(Axis::Z);
      throw ParseError("unknown axis: " + axis);
    }
    throw ParseError("unknown weight type: " + type);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad weight fragment: ") + e.what());
  }
}

namespace {

json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(format_decimal(v));
  return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
  std::vector<Rational> out;
  for (const auto& v : arr) out.push_back(parse_decimal(v.get<std::string>()));
  return out;
}

json instance_common(const MPSState& state, const WeightFunction& weight,
                     bool inline_state) {
  json j;
  j["state"] = state_to_json(state);
  j["weight"] = weight_to_json(weight);
  (void)inline_state;
  return j;
}

MPSState state_field_from_json(const json& j) {
  if (j.is_string()) return state_from_json(load_json_file(j.get<std::string>()));
  return state_from_json(j);
}

}  // namespace

json instance_to_json(const SESInstance& inst, bool inline_state) {
  json j = instance_common(inst.state, inst.weight, inline_state);
  j["problem"] = "ses";
  j["B"] = format_decimal(inst.target);
  j["epsilon"] = format_decimal(inst.epsilon);
  j["precision_digits"] = inst.precision_digits;
  if (inst.exact_site_weights) j["site_weights"] = rationals_to_json(*inst.exact_site_weights);
  return j;
}

json instance_to_json(const SESSPInstance& inst, bool inline_state) {
  json j = instance_common(inst.state, inst.weight, inline_state);
  j["problem"] = "sessp";
  j["epsilon"] = format_decimal(inst.epsilon);
  j["precision_digits"] = inst.precision_digits;
  if (inst.exact_site_weights) j["site_weights"] = rationals_to_json(*inst.exact_site_weights);
  return j;
}

QuantumInstance quantum_instance_from_json(const json& j) {
  try {
    std::string problem = j.at("problem").get<std::string>();
    if (problem == "ses") {
      SESInstance inst;
      inst.state = state_field_from_json(j.at("state"));
      inst.weight = weight_from_json(j.at("weight"));
      inst.target = parse_decimal(j.at("B").get<std::string>());
      inst.epsilon = parse_decimal(j.at("epsilon").get<std::string>());
      inst.precision_digits = j.value("precision_digits", 0);
      if (j.contains("site_weights"))
        inst.exact_site_weights = rationals_from_json(j.at("site_weights"));
      validate(inst);
      return inst;
    }
    if (problem == "sessp") {
      SESSPInstance inst;
      inst.state = state_field_from_json(j.at("state"));
      inst.weight = weight_from_json(j.at("weight"));
      inst.epsilon = parse_decimal(j.at("epsilon").get<std::string>());
      inst.precision_digits = j.value("precision_digits", 0);
      if (j.contains("site_weights"))
        inst.exact_site_weights = rationals_from_json(j.at("site_weights"));
      validate(inst);
      return inst;
    }
    throw ParseError("unknown quantum problem: " + problem);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad instance: ") + e.what());
  }
}

json classical_to_json(const ClassicalInstance& inst) {
  json j;
  if (const auto* ss = std::get_if<SubsetSumInstance>(&inst)) {
    j["problem"] = "subset-sum";
    json sizes = json::array();
    for (long long s : ss->sizes) sizes.push_back(std::to_string(s));
    j["sizes"] = sizes;
    j["B"] = std::to_string(ss->target);
  } else if (const auto* p = std::get_if<PartitionInstance>(&inst)) {
    j["problem"] = "partition";
    json sizes = json::array();
    for (long long s : p->sizes) sizes.push_back(std::to_string(s));
    j["sizes"] = sizes;
  } else {
    const auto& rs = std::get<RealSubsetSumInstance>(inst);
    j["problem"] = "real-subset-sum";
    json sizes = json::array();
    for (const auto& s : rs.sizes) sizes.push_back(format_decimal(s));
    j["sizes"] = sizes;
    j["B"] = format_decimal(rs.target);
    j["epsilon"] = format_decimal(rs.epsilon);
  }
  return j;
}

ClassicalInstance classical_from_json(const json& j) {
  try {
    std::string problem = j.at("problem").get<std::string>();
    if (problem == "subset-sum") {
      SubsetSumInstance inst;
      for (const auto& s : j.at("sizes")) {
        Rational r = parse_decimal(s.get<std::string>());
        if (decimal_digits(r) != 0) throw ParseError("subset-sum sizes must be integers");
        inst.sizes.push_back(floor_rational(r).convert_to<long long>());
      }
      Rational b = parse_decimal(j.at("B").get<std::string>());
      if (decimal_digits(b) != 0) throw ParseError("subset-sum target must be an integer");
      inst.target = floor_rational(b).convert_to<long long>();
      validate(inst);
      return inst;
    }
    if (problem == "partition") {
      PartitionInstance inst;
      for (const auto& s : j.at("sizes")) {
        Rational r = parse_decimal(s.get<std::string>());
        if (decimal_digits(r) != 0) throw ParseError("partition sizes must be integers");
        inst.sizes.push_back(floor_rational(r).convert_to<long long>());
      }
      validate(inst);
      return inst;
    }
    if (problem == "real-subset-sum") {
      RealSubsetSumInstance inst;
      inst.sizes = rationals_from_json(j.at("sizes"));
      inst.target = parse_decimal(j.at("B").get<std::string>());
      inst.epsilon = parse_decimal(j.value("epsilon", "0"));
      validate(inst);
      return inst;
    }
    throw ParseError("unknown classical problem: " + problem);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad classical instance: ") + e.what());
  }
}

json certificate_to_json(const SubsetCertificate& cert) { return {{"sites", cert.sites}}; }

json certificate_to_json(const SplitCertificate& cert) { return {{"side_a", cert.side_a}}; }

json map_to_json(const ReductionMap& map) {
  return {{"kind", map.kind == ReductionMap::Kind::Identity ? "identity" : "pair-doubling"},
          {"items", map.item_count},
          {"C", format_decimal(map.normalization)}};
}

ReductionMap map_from_json(const json& j) {
  try {
    ReductionMap map;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity")
      map.kind = ReductionMap::Kind::Identity;
    else if (kind == "pair-doubling")
      map.kind = ReductionMap::Kind::PairDoubling;
    else
      throw ParseError("unknown reduction kind: " + kind);
    map.item_count = j.at("items").get<int>();
    map.normalization = parse_decimal(j.at("C").get<std::string>());
    return map;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad reduction map: ") + e.what());
  }
}

json bundle_to_json(const QuantumInstance& inst, const ReductionMap& map) {
  json j;
  if (const auto* ses = std::get_if<SESInstance>(&inst))
    j["instance"] = instance_to_json(*ses);
  else
    j["instance"] = instance_to_json(std::get<SESSPInstance>(inst));
  j["map"] = map_to_json(map);
  return j;
}

json result_to_json(const SolveResult& result) {
  json j;
  j["decision"] = result.yes ? "yes" : "no";
  j["strategy"] = result.strategy;
  j["subsets_examined"] = result.stats.subsets_examined;
  if (result.subset_cert) j["certificate"] = certificate_to_json(*result.subset_cert);
  if (result.split_cert) j["certificate"] = certificate_to_json(*result.split_cert);
  return j;
}

}  // namespace sesq
