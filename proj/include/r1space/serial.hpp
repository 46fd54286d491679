#pragma once

#include <json.hpp>

#include "r1space/canon.hpp"
#include "r1space/canonize.hpp"
#include "r1space/core.hpp"
#include "r1space/ellentuck.hpp"
#include "r1space/fronts.hpp"
#include "r1space/pigeonhole.hpp"

// JSON mirrors of the text serializations.  Parsers throw on malformed input
// (nlohmann exceptions or std::invalid_argument); they never return partial
// objects.

namespace r1 {

using nlohmann::json;

json to_json(const Block& u);                 // {"m": int, "leaves": [int]}
Block block_from_json(const json& j);

json to_json(const Approximation& a);         // {"blocks": [Block]}
Approximation approximation_from_json(const json& j);

json to_json(const Member& x);                // {"blocks": [Block]}
Member member_from_json(const json& j);

json to_json(const RelationTable& t);         // {"k","N","labels":{"x0,x1,...": label}}
RelationTable relation_table_from_json(const json& j);

// {"a": Approximation, "universe_depth": d, "colors": {"m:l1,...": 0|1}}
struct ColoringFile {
  ExtensionColoring coloring;
  int universe_depth = 0;
};
json to_json(const ColoringFile& c);
ColoringFile coloring_from_json(const json& j);

json to_json(const Front& F);                 // {"universe": Member, "elements": [Approximation]}
Front front_from_json(const json& j);

json to_json(const FrontRelation& R);         // {"labels": {"approx text": label}}
FrontRelation front_relation_from_json(const json& j);

json to_json(const PhiAssignment& a);         // {"trees": {"prefix text": tree text}}
PhiAssignment phi_assignment_from_json(const json& j);

json to_json(const ARnRelation& R);           // {"n","universe","labels"}
ARnRelation arn_relation_from_json(const json& j);

json to_json(const R1nRelation& E);           // {"n","universe","labels"}
R1nRelation r1n_relation_from_json(const json& j);

// certificates, all carrying "outcome": "ok"
json to_json(const ErCertificate& c);         // {"M","I","verified_pairs","outcome"}
ErCertificate er_certificate_from_json(const json& j);

json to_json(const CanonCertificate& c);      // {"D","seq","verified_pairs","outcome"}
CanonCertificate canon_certificate_from_json(const json& j);

json to_json(const R1nCertificate& c);        // {"C","T","verified_pairs","outcome"}
R1nCertificate r1n_certificate_from_json(const json& j);

json to_json(const FrontCertificate& c);      // {"C","assign","verified_pairs","outcome"}
FrontCertificate front_certificate_from_json(const json& j);

// {"A","color","transcript":[{"source_index","witness","witness_color","note"}]}
json to_json(const HomogeneityCertificate& c);
HomogeneityCertificate homogeneity_certificate_from_json(const json& j);

}  // namespace r1
