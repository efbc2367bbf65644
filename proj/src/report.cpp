#include "inireg/report.hpp"

namespace inireg {

using nlohmann::json;

nlohmann::json certificate_to_json(const IniRegCertificate& certificate, const Ring& fallback) {
  // Polarized certificates live on the extended ring recorded in their base
  // ideal, not the ring the caller started from.
  const Ring& ring = certificate.base ? certificate.base->ring : fallback;
  json steps = json::array();
  for (const auto& step : certificate.steps) {
    json priority = json::array();
    for (int v : step.order.priority()) priority.push_back(ring.name(v));
    steps.push_back({{"form", step.form.to_string(ring, step.order)},
                     {"order", {{"kind", to_string(step.order.kind())}, {"priority", priority}}},
                     {"provenance", to_string(step.provenance)},
                     {"regular", step.regular},
                     {"ideal", step.ideal.generator_strings()}});
  }
  return json{{"ring", ring.variables()},
              {"steps", steps},
              {"q", certificate.length()},
              {"verified", certificate.verified},
              {"flags", {{"notes", certificate.notes}}}};
}

nlohmann::json depth_report_to_json(const DepthReport& report, const Ring& fallback) {
  json j{{"bound", report.lower_bound},
         {"certificate", certificate_to_json(report.certificate, fallback)},
         {"squarefree_equality", report.squarefree_equality},
         {"characteristic", 0},
         {"notes", report.notes}};
  if (report.oracle_depth) j["oracle_depth"] = *report.oracle_depth;
  if (report.polarization)
    j["polarization"] = {{"bound_polarized", report.polarization->bound_polarized},
                         {"new_variables", report.polarization->new_variables},
                         {"bound_original", report.polarization->bound_original}};
  return j;
}

}  // namespace inireg
