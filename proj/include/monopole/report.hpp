#pragma once

#include <string>

#include <json.hpp>

#include "monopole/connectivity.hpp"
#include "monopole/jacobian.hpp"
#include "monopole/semigroup.hpp"

namespace monopole {

using Json = nlohmann::ordered_json;

Json json_int(const Int& v);  // number when JS-safe, decimal string otherwise
Json divisor_json(const Divisor& d);
Json script_json(const FiringScript& f);
Json graph_json(const Graph& g);
Json laplacian_json(const Graph& g);
Json connectivity_json(const Graph& g, const ConnectivityReport& r);
Json jacobian_json(const JacobianStructure& j);
Json rank_json(const Graph& g, const RankCertificate& c);
Json reduced_json(const ReducedForm& r);
Json window_json(const SemigroupWindow& w, bool include_witnesses);

// {graph, vertex, B, hf, hr, hred, checks{...}}
Json containment_json(const Graph& g, const ContainmentReport& r, bool include_witnesses);

Json sweep_unit_json(const SweepUnit& u);
Json sweep_summary_json(const SweepResult& r);

std::string human_window(const std::string& label, const SemigroupWindow& w);
std::string human_containment(const Graph& g, const ContainmentReport& r);

}  // namespace monopole
