#pragma once

#include <json.hpp>

#include "trispec/catalog.hpp"
#include "trispec/eigclass.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/srg.hpp"

namespace trispec::json_io {

using Json = nlohmann::ordered_json;

// Multiplicities and parameters are JSON numbers when they fit in 64 bits and
// decimal strings beyond that.
Json int_json(const Int& v);
Int int_from_json(const Json& j);

Json spectrum_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

Json params_json(const srg::ExtendedParams& p);
srg::ExtendedParams params_from_json(const Json& j);

Json enumeration_json(const eigclass::EnumerationReport& rep);
eigclass::EnumerationReport enumeration_from_json(const Json& j);

Json matsuo_json(const eigclass::MatsuoReport& rep);
Json gram_json(const eigclass::GramReport& rep);
Json registry_json();

} // namespace trispec::json_io
