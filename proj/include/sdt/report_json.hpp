#pragma once

#include "json.hpp"
#include "sdt/connectivity.hpp"
#include "sdt/convolution.hpp"
#include "sdt/group.hpp"
#include "sdt/setalg.hpp"
#include "sdt/theorems.hpp"

namespace sdt {

/// JSON renderings of every report. Subsets are ascending index arrays,
/// rationals are "p/q" strings; element labels appear next to coset
/// representatives.
namespace json_out {

using nlohmann::json;

inline json rational(const Rational& r) { return r.str(); }
json subset(const Subset& s);
json subset_list(const std::vector<Subset>& sets);
json function_values(const GroupFunction& f);

json cover(const GroupTable& g, const CoverCertificate& c);
json doubling(const DoublingReport& r);
json connectivity(const GroupTable& g, const ConnectivityResult& r);
json atoms(const AtomPropositionReport& r);
json kneser(const KneserReport& r);
json corollary(const GroupTable& g, const CorollaryReport& r);
json main_theorem(const GroupTable& g, const MainTheoremReport& r);
json petridis(const PetridisVerification& v);
json gap(const GapReport& r);
json kneser_search(const KneserSearchReport& r);

}  // namespace json_out

/// Parses an array of "p/q" strings.
GroupFunction function_from_json(const nlohmann::json& j);

}  // namespace sdt
