#ifndef PLAB_JSON_IO_HPP
#define PLAB_JSON_IO_HPP

#include <json.hpp>

#include "plab/branches.hpp"
#include "plab/coloring.hpp"
#include "plab/forcing.hpp"
#include "plab/path_search.hpp"
#include "plab/polarized.hpp"

// Field ordering is fixed by construction (ordered_json everywhere), so a
// dumped document is byte-stable across runs and worker counts.
namespace plab::io {

using json = nlohmann::ordered_json;

json to_json(const UnorderedPairColoring& c);
json to_json(const OrderedPairColoring& c);
json to_json(const RectangleColoring& c); // rows as 0/1 strings
UnorderedPairColoring unordered_from_json(const json& j);
OrderedPairColoring ordered_from_json(const json& j);

json to_json(const PathWitness& w);
PathWitness witness_from_json(const json& j);

json to_json(const branches::BranchFamily& fam);
branches::BranchFamily branch_family_from_json(const json& j);
json to_json(const branches::TripleVerdict& v);

json to_json(const forcing::Condition& cond);
forcing::Condition condition_from_json(const json& j);
json to_json(const forcing::Verdict& v);
forcing::Verdict forcing_verdict_from_json(const json& j);
json to_json(const forcing::ChainStep& step);

json to_json(const polarized::PolarizedInstance& inst);
polarized::PolarizedInstance instance_from_json(const json& j);
json to_json(const polarized::GammaTable& g);
json to_json(const polarized::CrossRowVerdict& v);
json to_json(const polarized::DescentVerdict& v);
json to_json(const polarized::GlueReport& rep);

json to_json(const paths::ScanRow& row);
std::string scan_csv(std::span<const paths::ScanRow> rows);

} // namespace plab::io

#endif
