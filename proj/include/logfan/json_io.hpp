// JSON wire formats for monoids, homs, fans, morphisms, complexes, and
// homology reports. Arbitrary-precision values round-trip through strings.
#pragma once

#include "logfan/fan.hpp"
#include "logfan/monoid.hpp"
#include "logfan/topo.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace logfan::io {

using json = nlohmann::ordered_json;

// Named objects resolvable from homs and morphisms; "N" is predefined.
struct Workspace {
    std::map<std::string, monoid::FsMonoid> monoids;
    std::map<std::string, fan::Fan> fans;

    const monoid::FsMonoid& monoid_named(const std::string& name) const;
    const fan::Fan& fan_named(const std::string& name) const;
};

json big_to_json(const zlin::BigInt& x);
zlin::BigInt big_from_json(const json& j);
json rat_to_json(const zlin::Rat& x);
zlin::Rat rat_from_json(const json& j);

json monoid_to_json(const monoid::FsMonoid& p);
monoid::FsMonoid monoid_from_json(const json& j, const Workspace& ws = {});

json hom_to_json(const monoid::MonoidHom& h);
monoid::MonoidHom hom_from_json(const json& j, const Workspace& ws = {});

json fan_to_json(const fan::Fan& f);
fan::Fan fan_from_json(const json& j, const Workspace& ws = {});

json fan_morphism_to_json(const fan::FanMorphism& m);
fan::FanMorphism fan_morphism_from_json(const json& j, const Workspace& ws = {});

json complex_to_json(const topo::PolyComplex& c);
topo::PolyComplex complex_from_json(const json& j);

json homology_to_json(const topo::HomologyProfile& h);
json acyclicity_report_to_json(const topo::AcyclicityReport& r);

json face_to_json(const monoid::Face& f);
json abelian_group_to_json(const zlin::AbelianGroup& g);

}  // namespace logfan::io
