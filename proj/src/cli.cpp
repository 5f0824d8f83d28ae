#include "qgrowth/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qgrowth/io.hpp"
#include "qgrowth/regression.hpp"

namespace qgrowth {

namespace {

struct Options {
    std::string family;
    double q = 0.5;
    bool q_set = false;
    std::vector<double> eigs;
    std::string model_path;
    std::string action_spec = "translation";
    std::string irrep;
    std::string kind = "quantum";
    std::int64_t N = 0;          // growth depth; 0 = family default
    std::int64_t depth = 6;      // spectral probe depth
    std::int64_t trials = 1000;
    std::uint64_t seed = kDefaultSeed;
    double tol = 0.0;            // 0 = op default
    std::string format = "table";
    std::string plot_path;
    std::vector<std::string> irreps;
    std::size_t max_support = kMaxSupport;
};

QuantumGroupModel build_model(const Options& o) {
    if (!o.model_path.empty()) return load_model(o.model_path);
    if (o.family.empty())
        throw Error("no model given: use --model FILE or --family with its parameters");
    if (o.family == "sq_u2") {
        if (!o.q_set) throw Error("--family sq_u2 needs --q");
        return QuantumGroupModel::sq_u2(o.q);
    }
    if (o.family == "ao_f" || o.family == "au_f") {
        if (o.eigs.empty()) throw Error("--family " + o.family + " needs --eigs");
        return o.family == "ao_f" ? QuantumGroupModel::ao_f(o.eigs)
                                  : QuantumGroupModel::au_f(o.eigs);
    }
    if (o.family == "table") throw Error("table models load from a file: use --model FILE");
    throw Error("unknown family \"" + o.family + "\" (sq_u2, ao_f, au_f, table)");
}

SpectralActionModel build_action(const Options& o) {
    std::string spec = o.action_spec;
    Options base_opts = o;
    auto colon = spec.find(':');
    if (colon != std::string::npos && spec.substr(0, colon) == "bdv") {
        // e.g. bdv:ao_f -- family hint for the source model
        if (base_opts.family.empty()) base_opts.family = spec.substr(colon + 1);
        spec = "bdv";
    }
    if (spec == "translation") return SpectralActionModel::translation(build_model(base_opts));
    if (spec == "bdv") {
        QuantumGroupModel source = build_model(base_opts);
        if (source.family() == Family::sq_u2)
            return SpectralActionModel::bdv(source, source,
                                            [](const IrrepLabel& l) { return l; });
        if (source.family() == Family::ao_f) {
            QuantumGroupModel target = QuantumGroupModel::sq_u2(source.q());
            return SpectralActionModel::bdv(source, target,
                                            [](const IrrepLabel& l) { return l; });
        }
        throw Error("the builtin bdv action is defined for sq_u2 and ao_f models");
    }
    if (spec == "wang") {
        QuantumGroupModel base = build_model(base_opts);
        if (base.family() != Family::au_f || !base.kac())
            throw Error("the wang action lives over au_f with all eigenvalues 1 (Kac)");
        return SpectralActionModel::wang_cuntz(
            static_cast<std::int64_t>(base.fstarf_eigenvalues().size()), o.depth);
    }
    return load_action(spec);  // anything else is a file path
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& table_text) {
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        out << table_text;
}

std::string verdict_line(const GrowthReport& r) {
    std::ostringstream os;
    os << "certified bracket [" << r.certified_lower() << ", " << r.certified_upper()
       << "], verdict " << growth_verdict_name(r.verdict);
    if (r.estimate_only && r.liminf_estimate)
        os << " (tail estimate " << *r.liminf_estimate << ", not a certificate)";
    return os.str();
}

int cmd_fuse(const Options& o, std::ostream& out, const std::vector<std::string>& labels) {
    QuantumGroupModel m = build_model(o);
    IrrepLabel a = parse_label(m.fusion(), labels.at(0));
    IrrepLabel b = parse_label(m.fusion(), labels.at(1));
    MultiplicityVector mv = m.fusion().fuse(a, b);
    json j;
    j["a"] = a.str();
    j["b"] = b.str();
    j["decomposition"] = to_json(mv, m.fusion());
    std::ostringstream os;
    os << a.str() << " (x) " << b.str() << " = " << mv.str() << "\n";
    emit(out, o, j, os.str());
    return 0;
}

int cmd_power(const Options& o, std::ostream& out, const std::string& label, std::int64_t n) {
    QuantumGroupModel m = build_model(o);
    IrrepLabel u = parse_label(m.fusion(), label);
    MultiplicityVector mv = m.fusion().decompose_power(u, n, o.max_support);
    json j;
    j["irrep"] = u.str();
    j["n"] = n;
    j["decomposition"] = to_json(mv, m.fusion());
    std::ostringstream os;
    os << u.str() << "^" << n << " = " << mv.str();
    if (mv.support_size() == 1 && mv.total() == 1) os << " (irreducible)";
    os << "\n";
    emit(out, o, j, os.str());
    return 0;
}

int cmd_growth(const Options& o, std::ostream& out) {
    QuantumGroupModel m = build_model(o);
    if (o.irrep.empty()) throw Error("growth needs --irrep");
    IrrepLabel u = parse_label(m.fusion(), o.irrep);
    std::int64_t N = o.N > 0 ? o.N : default_growth_depth(m);
    GrowthKind kind;
    if (o.kind == "quantum") kind = GrowthKind::quantum_dim;
    else if (o.kind == "integral") kind = GrowthKind::integral_dim;
    else if (o.kind == "multiplicity") kind = GrowthKind::multiplicity;
    else throw Error("unknown growth kind \"" + o.kind + "\" (quantum, integral, multiplicity)");

    GrowthReport rep;
    if (kind == GrowthKind::multiplicity) {
        SpectralActionModel act = build_action(o);
        rep = act.mult_growth(u, N, o.max_support);
    } else {
        rep = growth_sequence(m, u, N, kind, {}, std::nullopt, o.max_support);
    }
    if (o.format == "csv") {
        write_growth_csv(out, rep);
        return 0;
    }
    std::ostringstream os;
    os << growth_kind_name(rep.kind) << " growth of " << u.str() << " over " << m.describe()
       << "\n";
    os << std::setw(4) << "n" << std::setw(18) << "value" << std::setw(14) << "root" << "\n";
    for (auto& p : rep.sequence)
        os << std::setw(4) << p.n << std::setw(18) << p.value << std::setw(14) << p.root << "\n";
    os << "bracket [" << rep.lower_bound << ", " << rep.upper_bound << "]; " << verdict_line(rep)
       << "\n";
    emit(out, o, to_json(rep), os.str());
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, const std::string& what) {
    int rc = 0;
    json j;
    std::ostringstream os;
    if (what == "prop43") {
        QuantumGroupModel m = build_model(o);
        if (o.irrep.empty()) throw Error("verify prop43 needs --irrep");
        IrrepLabel u = parse_label(m.fusion(), o.irrep);
        std::int64_t N = o.N > 0 ? o.N : default_growth_depth(m);
        GrowthSandwichReport rep = verify_prop43(m, u, N, o.max_support);
        rc = rep.holds ? 0 : 1;
        os << "sandwich D^{-1} <= lambda <= Lambda <= D for " << u.str() << " over "
           << m.describe() << ": " << (rep.holds ? "holds" : "VIOLATED") << "\n"
           << "  lambda = " << rep.lambda << ", Lambda = " << rep.Lambda << ", bracket ["
           << rep.bracket_lower << ", " << rep.bracket_upper << "]\n"
           << "  extreme equalities " << (rep.equality_detected ? "detected" : "not detected")
           << " (integral growth " << growth_verdict_name(rep.dim_verdict) << ")"
           << (rep.strict_extremes ? ", extremes certified strict" : "") << "\n";
        j = to_json(rep);
    } else if (what == "thm48") {
        SpectralActionModel act = build_action(o);
        if (o.irrep.empty()) throw Error("verify thm48 needs --irrep");
        IrrepLabel u = parse_label(act.base().fusion(), o.irrep);
        std::int64_t N = o.N > 0 ? o.N : default_growth_depth(act.base());
        ModularBoundReport rep = verify_thm48(act, u, N, o.max_support);
        rc = rep.bound_holds ? 0 : 1;
        os << "Sp(J*J) within [1/B, B] for " << u.str() << " under " << act.describe() << ": "
           << (rep.bound_holds ? "holds" : "VIOLATED") << "\n"
           << "  Sp(J*J) in [" << rep.jj_min << ", " << rep.jj_max << "], certificate B = "
           << rep.certificate << "\n"
           << "  equality case: " << (rep.equality_b ? "attained" : "not attained") << "\n";
        j = to_json(rep);
    } else if (what == "kms") {
        SpectralActionModel act = build_action(o);
        if (o.irrep.empty()) throw Error("verify kms needs --irrep");
        IrrepLabel u = parse_label(act.base().fusion(), o.irrep);
        double tol = o.tol > 0 ? o.tol : 1e-10;
        KmsReport rep = kms_check(act, u, o.trials, tol, o.seed);
        rc = rep.pass ? 0 : 1;
        os << "KMS identity on " << u.str() << " under " << act.describe() << ": "
           << (rep.pass ? "pass" : "FAIL") << " (max violation " << rep.max_violation << " over "
           << rep.trials << " trials, tol " << rep.tol << ")\n";
        j = to_json(rep);
    } else if (what == "tracial") {
        SpectralActionModel act = build_action(o);
        TracialReport rep = is_tracial(act, o.depth);
        os << "invariant state of " << act.describe() << ": "
           << (rep.tracial ? "trace" : "not a trace");
        if (rep.witness)
            os << " (witness " << rep.witness->str() << ", condition " << rep.condition << ")";
        os << "\n";
        j = to_json(rep);
    } else if (what == "kac-necessity") {
        SpectralActionModel act = build_action(o);
        KacNecessityReport rep = kac_exponential_necessity(act, o.depth, o.N);
        using Outcome = KacNecessityReport::Outcome;
        rc = rep.outcome == Outcome::undetermined ? 1 : 0;
        os << "Kac necessity (non-tracial needs exponential integral growth): ";
        switch (rep.outcome) {
            case Outcome::vacuous_tracial: os << "vacuous, the action is tracial\n"; break;
            case Outcome::verified:
                os << "verified, witness " << rep.witness->str() << "\n";
                break;
            case Outcome::undetermined: os << "undetermined at this depth\n"; break;
        }
        j["outcome"] = rep.outcome == Outcome::vacuous_tracial ? "vacuous_tracial"
                       : rep.outcome == Outcome::verified      ? "verified"
                                                               : "undetermined";
        if (rep.witness) j["witness"] = label_to_json(*rep.witness);
    } else {
        throw Error("unknown check \"" + what +
                    "\" (prop43, thm48, kms, tracial, kac-necessity)");
    }
    emit(out, o, j, os.str());
    return rc;
}

int cmd_bound(const Options& o, std::ostream& out, const std::string& what) {
    SpectralActionModel act = build_action(o);
    json j;
    std::ostringstream os;
    if (what == "type3") {
        if (act.base().kac()) {
            // the dimension-gap bound is vacuous on Kac models; the Kac remark applies
            double b = kac_bound(act, o.depth);
            j["bound"] = b;
            j["kind"] = "kac_remark";
            os << "type III lower bound (Kac remark) for " << act.describe() << ": " << b << "\n";
        } else {
            Type3BoundReport rep = type3_lower_bound(act, o.depth, o.N);
            j = to_json(rep);
            j["kind"] = "dimension_gap";
            os << "type III lower bound for " << act.describe() << ": " << rep.bound
               << (rep.type3_one_forced ? " (type III_1 forced)" : "") << "\n";
            for (auto& row : rep.rows)
                os << "  " << row.irrep.str() << ": min(lambda, 1/Lambda)/B = " << row.value
                   << "\n";
            os << "  " << rep.assumptions_note << "\n";
        }
    } else if (what == "kac") {
        double b = kac_bound(act, o.depth);
        j["bound"] = b;
        os << "Kac-remark lower bound for " << act.describe() << ": " << b << "\n";
    } else {
        throw Error("unknown bound \"" + what + "\" (type3, kac)");
    }
    emit(out, o, j, os.str());
    return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    SpectralActionModel act = build_action(o);
    std::optional<std::vector<IrrepLabel>> subset;
    if (!o.irreps.empty()) {
        std::vector<IrrepLabel> ls;
        for (auto& s : o.irreps) ls.push_back(parse_label(act.base().fusion(), s));
        subset = std::move(ls);
    }
    ModularSpectrumReport rep = delta_point_spectrum(act, subset, o.depth);
    Classification cls = connes_subgroup(rep, o.tol > 0 ? o.tol : 1e-7);
    if (!o.plot_path.empty()) {
        std::ofstream pf(o.plot_path);
        if (!pf) throw Error("cannot write plot data to " + o.plot_path);
        write_spectrum_plot_data(pf, rep);
    }
    json j;
    j["spectrum"] = to_json(rep);
    j["classification"] = to_json(cls);
    std::ostringstream os;
    os << "modular point spectrum of " << act.describe() << " (on the spectral subalgebra)\n";
    for (auto& [l, s] : rep.per_irrep)
        os << "  " << l.str() << ": " << s.str() << "\n";
    os << "classification: " << factor_class_name(cls.kind);
    if (cls.kind == FactorClass::III_lambda) os << " with lambda = " << cls.lambda;
    os << "\n  " << rep.assumptions_note << "\n";
    emit(out, o, j, os.str());
    return 0;
}

int cmd_paper_examples(const Options& o, std::ostream& out) {
    std::vector<RegressionResult> results = run_regression();
    std::size_t width = 0;
    for (auto& r : results) width = std::max(width, r.key.size() + r.title.size());
    bool all_pass = true;
    json arr = json::array();
    for (auto& r : results) {
        all_pass = all_pass && r.pass;
        json e;
        e["key"] = r.key;
        e["title"] = r.title;
        e["pass"] = r.pass;
        if (!r.detail.empty()) e["detail"] = r.detail;
        arr.push_back(std::move(e));
        if (o.format != "json") {
            std::string head = r.key + "  " + r.title + " ";
            out << head;
            for (std::size_t i = head.size(); i < width + 6; ++i) out << '.';
            out << (r.pass ? " pass" : " FAIL") << "\n";
            if (!r.pass && !r.detail.empty()) out << "      " << r.detail << "\n";
        }
    }
    if (o.format == "json") out << arr.dump(2) << "\n";
    else out << (all_pass ? "all examples pass" : "FAILURES present") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fusion-ring growth rates, modular spectra and type III bounds for "
                 "compact quantum group models"};
    app.require_subcommand(1);

    Options o;
    if (const char* env = std::getenv("QGROWTH_MAX_SUPPORT")) {
        char* endp = nullptr;
        unsigned long long v = std::strtoull(env, &endp, 10);
        if (endp && *endp == '\0' && v > 0) o.max_support = static_cast<std::size_t>(v);
    }

    auto add_model_flags = [&](CLI::App* c) {
        c->add_option("--family", o.family, "model family: sq_u2, ao_f, au_f, table");
        c->add_option("--q", o.q, "deformation parameter (sq_u2)")->each([&](const std::string&) {
            o.q_set = true;
        });
        c->add_option("--eigs", o.eigs, "eigenvalues of F*F (ao_f, au_f)")->delimiter(',');
        c->add_option("--model", o.model_path, "model definition file (JSON)");
        c->add_option("-N,--depth-growth", o.N, "growth depth (default per family)");
        c->add_option("--max-support", o.max_support,
                      "decomposition support cap (env QGROWTH_MAX_SUPPORT)");
        c->add_option("--format", o.format, "output format: table, json, csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };
    auto add_action_flags = [&](CLI::App* c) {
        add_model_flags(c);
        c->add_option("--action", o.action_spec,
                      "builtin action (translation, bdv, wang) or action file");
        c->add_option("--depth", o.depth, "spectral probe depth for infinite spectra");
        c->add_option("--seed", o.seed, "RNG seed");
        c->add_option("--tol", o.tol, "tolerance override");
    };

    std::vector<std::string> fuse_labels;
    CLI::App* fuse = app.add_subcommand("fuse", "decompose a tensor product a (x) b");
    add_model_flags(fuse);
    fuse->add_option("labels", fuse_labels, "two irrep labels")->expected(2);

    std::string power_label;
    std::int64_t power_n = 0;
    CLI::App* power = app.add_subcommand("power", "decompose a tensor power u^n");
    add_model_flags(power);
    power->add_option("irrep", power_label, "irrep label")->required();
    power->add_option("n", power_n, "power")->required()->check(CLI::NonNegativeNumber);

    CLI::App* growth = app.add_subcommand("growth", "growth sequence, roots and bracket");
    add_action_flags(growth);
    growth->add_option("--irrep", o.irrep, "irrep label");
    growth->add_option("--kind", o.kind, "quantum, integral or multiplicity");

    std::string verify_what;
    CLI::App* verify = app.add_subcommand("verify", "run a named check suite");
    add_action_flags(verify);
    verify->add_option("check", verify_what, "prop43, thm48, kms, tracial, kac-necessity")
        ->required();
    verify->add_option("--irrep", o.irrep, "irrep label");
    verify->add_option("--trials", o.trials, "Monte-Carlo trials (kms)");

    std::string bound_what;
    CLI::App* bound = app.add_subcommand("bound", "type III parameter lower bounds");
    add_action_flags(bound);
    bound->add_option("which", bound_what, "type3 or kac")->required();

    CLI::App* spectrum = app.add_subcommand("spectrum", "modular point spectrum and subgroup");
    add_action_flags(spectrum);
    spectrum->add_option("--irreps", o.irreps, "restrict to these irreps")->delimiter(',');
    spectrum->add_option("--plot", o.plot_path, "write plot data (log eigenvalue, multiplicity)");

    CLI::App* examples =
        app.add_subcommand("paper-examples", "run the built-in regression corpus");
    examples->add_option("--format", o.format, "output format: table, json")
        ->check(CLI::IsMember({"table", "json"}));

    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(fuse)) return cmd_fuse(o, out, fuse_labels);
        if (app.got_subcommand(power)) return cmd_power(o, out, power_label, power_n);
        if (app.got_subcommand(growth)) return cmd_growth(o, out);
        if (app.got_subcommand(verify)) return cmd_verify(o, out, verify_what);
        if (app.got_subcommand(bound)) return cmd_bound(o, out, bound_what);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(o, out);
        if (app.got_subcommand(examples)) return cmd_paper_examples(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no command given\n";
    return 2;
}

}  // namespace qgrowth
