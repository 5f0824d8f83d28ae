#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "qgrowth/action.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/modular.hpp"

namespace qgrowth {

using json = nlohmann::ordered_json;

// ---- label text ----
// series: "u3" / "u_3" / "3"; words: "1" or "e" for the unit, letters g and
// G (or the UTF-8 conjugate letter); table: the literal key.
IrrepLabel parse_label(const FusionSystem& sys, const std::string& text);

// ---- model files ----
// { "family": "sq_u2"|"ao_f"|"au_f"|"table", "q": ..., "fstarf_eigenvalues": [...],
//   "table": { "unit": key?, "q": ...?, "irreps": [ { "key", "dual", "dim",
//   "qdim_value"|"qdim_exponents", "jj_spectrum" } ], "fusion": [ { "a", "b",
//   "out": [ { "c", "mult" } ] } ] } }
QuantumGroupModel model_from_json(const json& j);
QuantumGroupModel load_model(const std::string& path);

// ---- action files ----
// { "base": <model object|path>, "spectrum": [ { "irrep", "mult", "JJ": [...] } ],
//   "relaxed_tensor": bool, "factorial_assumptions": bool }
SpectralActionModel action_from_json(const json& j, const std::string& base_dir = "");
SpectralActionModel load_action(const std::string& path);

// ---- report serialization (stable key order, round-trippable) ----
json to_json(const EigenSpectrum& s);
EigenSpectrum spectrum_from_json(const json& j);

json to_json(const MultiplicityVector& mv, const FusionSystem& sys);

json to_json(const GrowthReport& r);
GrowthReport growth_report_from_json(const json& j);

json to_json(const GrowthSandwichReport& r);
GrowthSandwichReport sandwich_report_from_json(const json& j);

json to_json(const KmsReport& r);
KmsReport kms_report_from_json(const json& j);

json to_json(const ModularBoundReport& r);
ModularBoundReport modular_bound_report_from_json(const json& j);

json to_json(const TracialReport& r);
TracialReport tracial_report_from_json(const json& j);

json to_json(const ModularSpectrumReport& r);
ModularSpectrumReport modular_spectrum_report_from_json(const json& j);

json to_json(const Classification& c);
Classification classification_from_json(const json& j);

json to_json(const Type3BoundReport& r);
Type3BoundReport type3_report_from_json(const json& j);

json label_to_json(const IrrepLabel& l);
IrrepLabel label_from_json(const json& j);

// growth CSV: columns n, value, root, lower, upper
void write_growth_csv(std::ostream& os, const GrowthReport& r);

// plot data for a modular spectrum: log eigenvalue vs multiplicity
void write_spectrum_plot_data(std::ostream& os, const ModularSpectrumReport& r,
                              double cluster_rtol = kRelTol);

}  // namespace qgrowth
