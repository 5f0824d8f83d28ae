#include "qgrowth/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <ostream>

namespace qgrowth {

namespace {

std::string dirname_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string() : path.substr(0, pos + 1);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("failed to parse " + path + ": " + e.what());
    }
    return j;
}

GrowthKind growth_kind_from_name(const std::string& s) {
    if (s == "quantum_dim") return GrowthKind::quantum_dim;
    if (s == "integral_dim") return GrowthKind::integral_dim;
    if (s == "multiplicity") return GrowthKind::multiplicity;
    throw Error("unknown growth kind: " + s);
}

GrowthVerdict verdict_from_name(const std::string& s) {
    if (s == "subexponential") return GrowthVerdict::subexponential;
    if (s == "exponential") return GrowthVerdict::exponential;
    if (s == "undetermined") return GrowthVerdict::undetermined;
    throw Error("unknown growth verdict: " + s);
}

FactorClass factor_class_from_name(const std::string& s) {
    if (s == "trace") return FactorClass::trace;
    if (s == "III_lambda_candidate") return FactorClass::III_lambda;
    if (s == "III_1_candidate") return FactorClass::III_one;
    if (s == "undetermined") return FactorClass::undetermined;
    throw Error("unknown factor classification: " + s);
}

}  // namespace

IrrepLabel parse_label(const FusionSystem& sys, const std::string& text) {
    switch (sys.kind()) {
        case FusionKind::su2_type: {
            std::string t = text;
            if (!t.empty() && (t[0] == 'u' || t[0] == 'U')) t = t.substr(1);
            if (!t.empty() && t[0] == '_') t = t.substr(1);
            if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
                    return std::isdigit(c);
                }))
                throw Error("cannot parse series label \"" + text + "\" (expected e.g. u3)");
            return IrrepLabel::series(std::stoll(t));
        }
        case FusionKind::free_power: {
            if (text == "1" || text == "e" || text.empty()) return IrrepLabel::word("");
            std::string w;
            for (std::size_t i = 0; i < text.size();) {
                if (text.compare(i, 3, "ḡ") == 0) {  // UTF-8 conjugate letter
                    w += 'G';
                    i += 3;
                } else if (text[i] == 'g' || text[i] == 'G') {
                    w += text[i];
                    ++i;
                } else {
                    throw Error("cannot parse word label \"" + text +
                                "\" (letters g and G only; 1 for the unit)");
                }
            }
            return IrrepLabel::word(w);
        }
        case FusionKind::table_driven: {
            IrrepLabel l = IrrepLabel::key(text);
            sys.require_valid(l);
            return l;
        }
    }
    throw Error("unreachable");
}

namespace {

TableDataPtr table_from_json(const json& jt) {
    auto data = std::make_shared<TableData>();
    if (!jt.contains("irreps") || !jt["irreps"].is_array() || jt["irreps"].empty())
        throw Error("table: missing or empty \"irreps\" array");
    data->q = jt.value("q", 1.0);

    std::vector<TableIrrep> irreps;
    for (auto& ji : jt["irreps"]) {
        TableIrrep ir;
        if (!ji.contains("key")) throw Error("table: irrep entry without \"key\"");
        ir.key = ji["key"].get<std::string>();
        ir.dual = ji.value("dual", ir.key);
        ir.dim = ji.value("dim", std::int64_t{1});
        if (ji.contains("qdim_exponents")) {
            ir.qdim_exponents = ji["qdim_exponents"].get<std::vector<std::int64_t>>();
            double s = 0.0;
            for (auto e : *ir.qdim_exponents) s += pow_int(data->q, e);
            ir.qdim = s;
        } else if (ji.contains("qdim_value")) {
            ir.qdim = ji["qdim_value"].get<double>();
        } else {
            ir.qdim = static_cast<double>(ir.dim);
        }
        if (ji.contains("jj_spectrum")) ir.jj = ji["jj_spectrum"].get<std::vector<double>>();
        irreps.push_back(std::move(ir));
    }
    std::sort(irreps.begin(), irreps.end(),
              [](const TableIrrep& a, const TableIrrep& b) { return a.key < b.key; });
    data->irreps = std::move(irreps);
    for (std::size_t i = 0; i < data->irreps.size(); ++i) {
        if (!data->index.emplace(data->irreps[i].key, i).second)
            throw Error("table: duplicate irrep key \"" + data->irreps[i].key + "\"");
    }

    if (jt.contains("unit")) {
        std::string u = jt["unit"].get<std::string>();
        auto it = data->index.find(u);
        if (it == data->index.end()) throw Error("table: unit key \"" + u + "\" not in irreps");
        data->unit = it->second;
    } else {
        // detect: the unique dim-1 self-dual irrep occurring in every present
        // row a (x) dual(a)
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < data->irreps.size(); ++i)
            if (data->irreps[i].dim == 1 && data->irreps[i].dual == data->irreps[i].key)
                candidates.push_back(i);
        if (candidates.size() != 1)
            throw Error("table: cannot identify the unit; add a \"unit\" key");
        data->unit = candidates.front();
    }

    if (jt.contains("fusion")) {
        for (auto& jr : jt["fusion"]) {
            auto need = [&](const char* k) {
                if (!jr.contains(k))
                    throw Error("table: fusion row without \"" + std::string(k) + "\"");
                return jr[k].get<std::string>();
            };
            std::string a = need("a"), b = need("b");
            auto ia = data->index.find(a), ib = data->index.find(b);
            if (ia == data->index.end())
                throw Error("table: fusion row names unknown irrep \"" + a + "\"");
            if (ib == data->index.end())
                throw Error("table: fusion row names unknown irrep \"" + b + "\"");
            std::vector<std::pair<std::size_t, std::int64_t>> out;
            if (!jr.contains("out") || !jr["out"].is_array())
                throw Error("table: fusion row (" + a + ", " + b + ") without \"out\"");
            for (auto& jo : jr["out"]) {
                std::string c = jo.at("c").get<std::string>();
                auto ic = data->index.find(c);
                if (ic == data->index.end())
                    throw Error("table: fusion row (" + a + ", " + b +
                                ") names unknown output \"" + c + "\"");
                out.emplace_back(ic->second, jo.value("mult", std::int64_t{1}));
            }
            if (!data->rows.emplace(std::make_pair(ia->second, ib->second), std::move(out)).second)
                throw Error("table: duplicate fusion row (" + a + ", " + b + ")");
        }
    }
    return data;
}

}  // namespace

QuantumGroupModel model_from_json(const json& j) {
    if (!j.contains("family")) throw Error("model: missing \"family\"");
    std::string fam = j["family"].get<std::string>();
    if (fam == "sq_u2") {
        if (!j.contains("q")) throw Error("model: sq_u2 needs \"q\"");
        return QuantumGroupModel::sq_u2(j["q"].get<double>());
    }
    if (fam == "ao_f" || fam == "au_f") {
        if (!j.contains("fstarf_eigenvalues"))
            throw Error("model: " + fam + " needs \"fstarf_eigenvalues\"");
        auto eigs = j["fstarf_eigenvalues"].get<std::vector<double>>();
        return fam == "ao_f" ? QuantumGroupModel::ao_f(std::move(eigs))
                             : QuantumGroupModel::au_f(std::move(eigs));
    }
    if (fam == "table") {
        if (!j.contains("table")) throw Error("model: table family needs \"table\"");
        return QuantumGroupModel::table(table_from_json(j["table"]));
    }
    throw Error("model: unknown family \"" + fam + "\"");
}

QuantumGroupModel load_model(const std::string& path) { return model_from_json(read_json_file(path)); }

SpectralActionModel action_from_json(const json& j, const std::string& base_dir) {
    if (!j.contains("base")) throw Error("action: missing \"base\"");
    QuantumGroupModel base = j["base"].is_string()
                                 ? load_model(base_dir + j["base"].get<std::string>())
                                 : model_from_json(j["base"]);
    std::vector<SpectralActionModel::CustomEntry> entries;
    if (j.contains("spectrum")) {
        for (auto& je : j["spectrum"]) {
            SpectralActionModel::CustomEntry e;
            if (!je.contains("irrep")) throw Error("action: spectrum entry without \"irrep\"");
            e.irrep = parse_label(base.fusion(), je["irrep"].get<std::string>());
            e.mult = je.value("mult", std::int64_t{1});
            if (!je.contains("JJ"))
                throw Error("action spectrum entry \"" + e.irrep.str() + "\": missing \"JJ\"");
            e.JJ = EigenSpectrum::from_values(je["JJ"].get<std::vector<double>>());
            entries.push_back(std::move(e));
        }
    }
    SpectralActionModel act = SpectralActionModel::custom(std::move(base), std::move(entries),
                                                          j.value("relaxed_tensor", false));
    act.assume_factorial(j.value("factorial_assumptions", false));
    return act;
}

SpectralActionModel load_action(const std::string& path) {
    return action_from_json(read_json_file(path), dirname_of(path));
}

// ---- serialization ----

json label_to_json(const IrrepLabel& l) {
    json j;
    switch (l.kind()) {
        case IrrepLabel::Kind::series:
            j["kind"] = "series";
            j["r"] = l.index();
            break;
        case IrrepLabel::Kind::word:
            j["kind"] = "word";
            j["letters"] = l.text();
            break;
        case IrrepLabel::Kind::key:
            j["kind"] = "key";
            j["key"] = l.text();
            break;
    }
    j["name"] = l.str();
    return j;
}

IrrepLabel label_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "series") return IrrepLabel::series(j.at("r").get<std::int64_t>());
    if (kind == "word") return IrrepLabel::word(j.at("letters").get<std::string>());
    if (kind == "key") return IrrepLabel::key(j.at("key").get<std::string>());
    throw Error("unknown label kind: " + kind);
}

json to_json(const EigenSpectrum& s) {
    json j;
    j["values"] = s.values();
    if (s.exact()) {
        j["exact"] = true;
        j["base"] = s.base();
        j["exponents"] = s.exponents();
    } else {
        j["exact"] = false;
    }
    return j;
}

EigenSpectrum spectrum_from_json(const json& j) {
    if (j.value("exact", false))
        return EigenSpectrum::from_exponents(j.at("base").get<double>(),
                                             j.at("exponents").get<std::vector<std::int64_t>>());
    return EigenSpectrum::from_values(j.at("values").get<std::vector<double>>());
}

json to_json(const MultiplicityVector& mv, const FusionSystem&) {
    json arr = json::array();
    for (auto& [l, m] : mv.entries()) {
        json e;
        e["irrep"] = l.str();
        e["label"] = label_to_json(l);
        e["mult"] = m;
        arr.push_back(std::move(e));
    }
    return arr;
}

json to_json(const GrowthReport& r) {
    json j;
    j["kind"] = growth_kind_name(r.kind);
    j["irrep"] = label_to_json(r.irrep);
    j["depth"] = r.depth;
    json seq = json::array();
    for (auto& p : r.sequence) {
        json e;
        e["n"] = p.n;
        e["value"] = p.value;
        e["root"] = p.root;
        seq.push_back(std::move(e));
    }
    j["sequence"] = std::move(seq);
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    if (r.limit) j["limit"] = *r.limit;
    j["certified_lower"] = r.certified_lower();
    j["certified_upper"] = r.certified_upper();
    j["verdict"] = growth_verdict_name(r.verdict);
    j["estimate_only"] = r.estimate_only;
    if (r.liminf_estimate) j["liminf_estimate"] = *r.liminf_estimate;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

GrowthReport growth_report_from_json(const json& j) {
    GrowthReport r;
    r.kind = growth_kind_from_name(j.at("kind").get<std::string>());
    r.irrep = label_from_json(j.at("irrep"));
    r.depth = j.at("depth").get<std::int64_t>();
    for (auto& e : j.at("sequence"))
        r.sequence.push_back(
            {e.at("n").get<std::int64_t>(), e.at("value").get<double>(), e.at("root").get<double>()});
    r.lower_bound = j.at("lower_bound").get<double>();
    r.upper_bound = j.at("upper_bound").get<double>();
    if (j.contains("limit")) r.limit = j["limit"].get<double>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    r.estimate_only = j.at("estimate_only").get<bool>();
    if (j.contains("liminf_estimate")) r.liminf_estimate = j["liminf_estimate"].get<double>();
    r.note = j.value("note", "");
    return r;
}

json to_json(const GrowthSandwichReport& r) {
    json j;
    j["irrep"] = label_to_json(r.irrep);
    j["depth"] = r.depth;
    j["lambda"] = r.lambda;
    j["Lambda"] = r.Lambda;
    j["bracket_lower"] = r.bracket_lower;
    j["bracket_upper"] = r.bracket_upper;
    j["certified_lower"] = r.certified_lower;
    j["certified_upper"] = r.certified_upper;
    j["dim_verdict"] = growth_verdict_name(r.dim_verdict);
    j["holds"] = r.holds;
    j["equality_detected"] = r.equality_detected;
    j["strict_extremes"] = r.strict_extremes;
    return j;
}

GrowthSandwichReport sandwich_report_from_json(const json& j) {
    GrowthSandwichReport r;
    r.irrep = label_from_json(j.at("irrep"));
    r.depth = j.at("depth").get<std::int64_t>();
    r.lambda = j.at("lambda").get<double>();
    r.Lambda = j.at("Lambda").get<double>();
    r.bracket_lower = j.at("bracket_lower").get<double>();
    r.bracket_upper = j.at("bracket_upper").get<double>();
    r.certified_lower = j.at("certified_lower").get<double>();
    r.certified_upper = j.at("certified_upper").get<double>();
    r.dim_verdict = verdict_from_name(j.at("dim_verdict").get<std::string>());
    r.holds = j.at("holds").get<bool>();
    r.equality_detected = j.at("equality_detected").get<bool>();
    r.strict_extremes = j.at("strict_extremes").get<bool>();
    return r;
}

json to_json(const KmsReport& r) {
    json j;
    j["irrep"] = label_to_json(r.irrep);
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["tol"] = r.tol;
    j["max_violation"] = r.max_violation;
    j["pass"] = r.pass;
    return j;
}

KmsReport kms_report_from_json(const json& j) {
    KmsReport r;
    r.irrep = label_from_json(j.at("irrep"));
    r.trials = j.at("trials").get<std::int64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tol = j.at("tol").get<double>();
    r.max_violation = j.at("max_violation").get<double>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

json to_json(const ModularBoundReport& r) {
    json j;
    j["irrep"] = label_to_json(r.irrep);
    j["depth"] = r.depth;
    j["jj_min"] = r.jj_min;
    j["jj_max"] = r.jj_max;
    j["certificate"] = r.certificate;
    j["bound_holds"] = r.bound_holds;
    j["mult_one_certified"] = r.mult_one_certified;
    j["relaxed_tensor"] = r.relaxed_tensor;
    j["equality_b"] = r.equality_b;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ModularBoundReport modular_bound_report_from_json(const json& j) {
    ModularBoundReport r;
    r.irrep = label_from_json(j.at("irrep"));
    r.depth = j.at("depth").get<std::int64_t>();
    r.jj_min = j.at("jj_min").get<double>();
    r.jj_max = j.at("jj_max").get<double>();
    r.certificate = j.at("certificate").get<double>();
    r.bound_holds = j.at("bound_holds").get<bool>();
    r.mult_one_certified = j.at("mult_one_certified").get<bool>();
    r.relaxed_tensor = j.at("relaxed_tensor").get<bool>();
    r.equality_b = j.at("equality_b").get<bool>();
    r.note = j.value("note", "");
    return r;
}

json to_json(const TracialReport& r) {
    json j;
    j["tracial"] = r.tracial;
    if (r.witness) {
        j["witness"] = label_to_json(*r.witness);
        j["condition"] = std::string(1, r.condition);
    }
    return j;
}

TracialReport tracial_report_from_json(const json& j) {
    TracialReport r;
    r.tracial = j.at("tracial").get<bool>();
    if (j.contains("witness")) {
        r.witness = label_from_json(j["witness"]);
        r.condition = j.at("condition").get<std::string>().at(0);
    }
    return r;
}

json to_json(const ModularSpectrumReport& r) {
    json j;
    json per = json::array();
    for (auto& [l, s] : r.per_irrep) {
        json e;
        e["irrep"] = label_to_json(l);
        e["spectrum"] = to_json(s);
        per.push_back(std::move(e));
    }
    j["per_irrep"] = std::move(per);
    j["global"] = to_json(r.global);
    j["factorial_assumed"] = r.factorial_assumed;
    j["assumptions_note"] = r.assumptions_note;
    return j;
}

ModularSpectrumReport modular_spectrum_report_from_json(const json& j) {
    ModularSpectrumReport r;
    for (auto& e : j.at("per_irrep"))
        r.per_irrep.emplace_back(label_from_json(e.at("irrep")), spectrum_from_json(e.at("spectrum")));
    r.global = spectrum_from_json(j.at("global"));
    r.factorial_assumed = j.at("factorial_assumed").get<bool>();
    r.assumptions_note = j.at("assumptions_note").get<std::string>();
    return r;
}

json to_json(const Classification& c) {
    json j;
    j["kind"] = factor_class_name(c.kind);
    if (c.kind == FactorClass::III_lambda) j["lambda"] = c.lambda;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Classification classification_from_json(const json& j) {
    Classification c;
    c.kind = factor_class_from_name(j.at("kind").get<std::string>());
    c.lambda = j.value("lambda", 0.0);
    c.note = j.value("note", "");
    return c;
}

json to_json(const Type3BoundReport& r) {
    json j;
    j["bound"] = r.bound;
    j["type3_one_forced"] = r.type3_one_forced;
    json rows = json::array();
    for (auto& row : r.rows) {
        json e;
        e["irrep"] = label_to_json(row.irrep);
        e["lambda_u"] = row.lambda_u;
        e["Lambda_u"] = row.Lambda_u;
        e["certificate"] = row.certificate;
        e["value"] = row.value;
        rows.push_back(std::move(e));
    }
    j["per_irrep"] = std::move(rows);
    j["assumptions_note"] = r.assumptions_note;
    return j;
}

Type3BoundReport type3_report_from_json(const json& j) {
    Type3BoundReport r;
    r.bound = j.at("bound").get<double>();
    r.type3_one_forced = j.at("type3_one_forced").get<bool>();
    for (auto& e : j.at("per_irrep")) {
        Type3BoundRow row;
        row.irrep = label_from_json(e.at("irrep"));
        row.lambda_u = e.at("lambda_u").get<double>();
        row.Lambda_u = e.at("Lambda_u").get<double>();
        row.certificate = e.at("certificate").get<double>();
        row.value = e.at("value").get<double>();
        r.rows.push_back(std::move(row));
    }
    r.assumptions_note = j.at("assumptions_note").get<std::string>();
    return r;
}

void write_growth_csv(std::ostream& os, const GrowthReport& r) {
    os << "n,value,root,lower,upper\n";
    json num;  // reuse the JSON double formatter for stable shortest output
    for (auto& p : r.sequence) {
        os << p.n << ',' << json(p.value).dump() << ',' << json(p.root).dump() << ','
           << json(r.lower_bound).dump() << ',' << json(r.upper_bound).dump() << '\n';
    }
}

void write_spectrum_plot_data(std::ostream& os, const ModularSpectrumReport& r,
                              double cluster_rtol) {
    os << "log_eigenvalue,multiplicity\n";
    const auto& vals = r.global.values();  // ascending
    std::size_t i = 0;
    while (i < vals.size()) {
        std::size_t j = i + 1;
        while (j < vals.size() && approx_eq(vals[j], vals[i], cluster_rtol)) ++j;
        os << json(std::log(vals[i])).dump() << ',' << (j - i) << '\n';
        i = j;
    }
}

}  // namespace qgrowth
