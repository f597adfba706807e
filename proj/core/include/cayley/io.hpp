#pragma once

#include "cayley/grid.hpp"
#include "cayley/spin7.hpp"
#include "cayley/topology.hpp"

// vendored single-header json
#include "json.hpp"

namespace cayley::io {

struct malformed_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

/// Shared structured-text schema: a form is
/// {"dim": n, "degree": k, "terms": [{"idx": [i..], "num": p, "den": q}]}
/// with floats carried as {"idx": [..], "value": "<decimal>"}.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json form_to_json(const Form& f);
Form form_from_json(const json& j);

json metric_to_json(const Metric& m);
Metric metric_from_json(const json& j);

/// Only (omega, re_omega) are stored; derived fields are recomputed on load.
json su3_to_json(const su3::SU3Structure& s);
su3::SU3Structure su3_from_json(const json& j);

json spin7_to_json(const spin7::Spin7Data& d);
spin7::Spin7Data spin7_from_json(const json& j);

json jet_to_json(const spin7::JetPoint& jp);
spin7::JetPoint jet_from_json(const json& j);

json torsion_report_to_json(const spin7::TorsionReport& t, bool full);

json lattice_to_json(const topo::IntersectionLattice& L);
topo::IntersectionLattice lattice_from_json(const json& j);

json gridfield_to_json(const grid::GridField& f);
grid::GridField gridfield_from_json(const json& j);
/// CSV dump: point index, component index, value.
void gridfield_to_csv(const grid::GridField& f, std::ostream& os);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace cayley::io
