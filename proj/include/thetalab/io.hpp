#pragma once
// JSON and DOT serialization for every object the command-line tool prints,
// plus the optional on-disk cache controlled by THETA_LAB_CACHE.

#include <optional>
#include <string>

#include "json.hpp"
#include "thetalab/fourier.hpp"
#include "thetalab/kl.hpp"
#include "thetalab/matchings.hpp"
#include "thetalab/partitions.hpp"
#include "thetalab/verify.hpp"
#include "thetalab/weylreps.hpp"

namespace theta {

using json = nlohmann::json;

// basic objects
json partition_json(const Partition& p);           // [3,1,1]
json bipartition_json(const Bipartition& b);       // {"alpha":[..],"beta":[..]}
json diagram_json(const DecBipartition& g);        // [[x,y,"0"|"+"|"-"],...]
json quintuple_json(const Quintuple& q);
json label_json(const Label& l);                   // [[src,tgt],...]
json laurent_json(const Laurent& p);               // {"-2":1,"0":3} exponent -> coeff
Laurent laurent_from_json(const json& j);
json modvec_json(const ModelTables& t, const ModVec& x);  // {"1>1": poly, ...}

// model naming used on the command line and in cache keys
std::string model_name(const OrbitModel& mod);     // typeII / typeI-m1 / typeI-m2
OrbitModel model_by_name(const std::string& name, int m, int n);

// tables
json tables_json(const ModelTables& t);
json kl_json(const KLTable& kl);
KLTable kl_from_json(const json& j);               // throws on malformed input
json wgraph_json(const ModelTables& t, const WGraph& g);
json glued_json(const GluedTables& g);
json check_results_json(const std::string& suite, const std::vector<CheckResult>& rs);

// DOT renderings: vertices carry the matching and its descent set, edges the
// leading coefficient; the glued form adds the flip orbits as two-way edges
std::string wgraph_dot(const ModelTables& t, const WGraph& g);
std::string glued_dot(const GluedTables& g);

// cache: THETA_LAB_CACHE names a directory; unset means in-memory only
std::optional<std::string> cache_dir();
std::optional<json> cache_load(const std::string& key);
bool cache_store(const std::string& key, const json& j);

// cache-aware canonical-basis builder: loads when the stored table matches
// the freshly enumerated labels and dimensions, recomputes (and stores)
// otherwise
KLTable kl_cached(const OrbitModel& mod);

}  // namespace theta
