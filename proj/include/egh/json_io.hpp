#pragma once

#include "egh/group.hpp"
#include "egh/metric_space.hpp"
#include "egh/quotients.hpp"
#include "egh/smoothing.hpp"
#include "egh/solver.hpp"
#include "egh/triples.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace egh::io {

using json = nlohmann::ordered_json;

inline constexpr int format_version = 1;

// preserve_numbers keeps every float literal as its source text, so exact mode
// reads "0.1" as 1/10 rather than the nearest binary double.
json parse_text(const std::string& text, bool preserve_numbers);
json load_file(const std::filesystem::path& path, bool preserve_numbers);
void write_file(const std::filesystem::path& path, const json& j);

long long int_from_json(const json& j, const std::string& what);

template <class S>
S scalar_from_json(const json& j);
template <class S>
json scalar_to_json(const S& v);

// space file: { "format": 1, "labels": [...], "dist": [[...]] }
// shape-checked only; metric axioms are the caller's concern
template <class S>
SpaceT<S> space_from_json(const json& j);
template <class S>
json space_to_json(const SpaceT<S>& space);

// pair / group file: a bare space (full isometry group), a group file
// { "space": ..., "perms": [[...]] } (multiplicative closure of the perms), or
// { "space": ..., "group": "full" | "trivial" | [[...]] | "path" }.
// Path references resolve relative to base.
template <class S>
PairPtr<S> pair_from_json(const json& j, const std::filesystem::path& base);
template <class S>
json pair_to_json(const ActionPairT<S>& pair);

// triple file: { "format": 1, "domain": <pair|path>, "codomain": <pair|path>,
//                "f": [...], "theta": [...], "psi": [...] }
template <class S>
TripleT<S> triple_from_json(const json& j, const std::filesystem::path& base);
template <class S>
json triple_to_json(const TripleT<S>& t, bool embed_pairs);

// a bare array, or any object holding "theta" or "theta2"
std::vector<int> group_map_from_json(const json& j);

template <class S>
json check_to_json(const BoundCheck<S>& c);

template <class S>
json validation_to_json(const ValidationReport& report);
template <class S>
json group_report_to_json(const ActionPairT<S>& pair);
template <class S>
json triple_report_to_json(const TripleT<S>& t);
template <class S>
json inverse_to_json(const InverseResult<S>& r);
template <class S>
json theta_certificate_to_json(const ThetaCertificate<S>& c);
template <class S>
json perturb_certificate_to_json(const PerturbCertificate<S>& c);
template <class S>
json compose_to_json(const ComposeResult<S>& r);
template <class S>
json distance_to_json(const DistanceCertificate<S>& c, const SearchConfig& cfg);
template <class S>
json repair_to_json(const RepairResult<S>& r);
template <class S>
json quotient_to_json(const QuotientSpaceT<S>& q);
template <class S>
json coset_space_to_json(const CosetSpace<S>& c);
template <class S>
json coset_map_to_json(const CosetMapReport<S>& r);

json smooth_to_json(const SmoothResult& r, const NetSpec& net, const BumpSpec& bump);

ConvergenceScenario scenario_from_json(const json& j, const std::filesystem::path& base);
json scenario_report_to_json(const ScenarioReport& r);
std::string scenario_report_csv(const ScenarioReport& r);

} // namespace egh::io
