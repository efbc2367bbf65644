#pragma once

#include <json.hpp>

#include "inireg/sequences.hpp"

namespace inireg {

/// Stable JSON shapes for certificates and reports (schema 1). Intermediate
/// ideals are listed as sorted monomial strings.
nlohmann::json certificate_to_json(const IniRegCertificate& certificate, const Ring& ring);
nlohmann::json depth_report_to_json(const DepthReport& report, const Ring& ring);

}  // namespace inireg
