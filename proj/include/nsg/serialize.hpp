#pragma once

// JSON and CSV encodings of reports and verdicts. Output is deterministic:
// fixed key order, no timestamps.

#include <string>

#include <json.hpp>

#include "nsg/invariants.hpp"
#include "nsg/theorems.hpp"

namespace nsg {

using Json = nlohmann::ordered_json;

Json to_json(const InvariantReport& r);
Json to_json(const TheoremVerdict& v);

// Column order:
//   generators,threshold,m,c,e,e_s,e_c,delta,q,nu,L,rho,concentration,mu,
//   eliahou,wilf_e,wilf_mu,type,symmetric,pseudo_symmetric,highly_dense
std::string csv_header();
std::string to_csv_row(const InvariantReport& r);

}  // namespace nsg
