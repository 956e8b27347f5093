#pragma once

#include <json.hpp>

#include "aslab/fdd.hpp"
#include "aslab/finvec.hpp"
#include "aslab/games.hpp"
#include "aslab/harness.hpp"
#include "aslab/norms.hpp"
#include "aslab/schreier.hpp"

namespace aslab {

// All documents use insertion-ordered JSON so that emitted bytes are stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);            // ["num","den"]
Rational rational_from_json(const Json& j);

Json to_json(const RootValue& v);           // {"radicand":[n,d],"root":q}
RootValue root_value_from_json(const Json& j);

Json to_json(const CertInterval& iv);       // {"lo":"M*2^E","hi":"M*2^E","bits":k}
Json to_json(const NormValue& v);

Json to_json(const SchreierSet& f);         // {"k":k,"elements":[...]}
SchreierSet schreier_from_json(const Json& j);
Json to_json(const WeightMap& w);           // {"j":["num","den"],...}

Json to_json(const FinVec& v);              // {"coords":{...},"kind":...,"q":q[,"dual":true]}
FinVec finvec_from_json(const Json& j);

Json to_json(const NormParams& p);
NormParams params_from_json(const Json& j);

Json to_json(const BlockStructure& s);
BlockStructure block_structure_from_json(const Json& j);

Json to_json(const GameTranscript& t);

Json to_json(const Report& r);

}  // namespace aslab
