#include "qgrowth/regression.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "qgrowth/modular.hpp"

namespace qgrowth {

namespace {

struct Runner {
    std::vector<RegressionResult> results;

    void run(const std::string& key, const std::string& title,
             const std::function<void(std::ostringstream&)>& body) {
        RegressionResult r;
        r.key = key;
        r.title = title;
        std::ostringstream detail;
        try {
            body(detail);
            r.pass = detail.str().empty();
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

void expect(std::ostringstream& d, bool ok, const std::string& what) {
    if (!ok) d << (d.str().empty() ? "" : "; ") << what;
}

TableDataPtr s3_table() {
    // character ring of the symmetric group on three letters
    auto t = std::make_shared<TableData>();
    t->irreps = {{"e", "e", 1, 1.0, {}, {}},
                 {"sgn", "sgn", 1, 1.0, {}, {}},
                 {"std", "std", 2, 2.0, {}, {}}};
    std::sort(t->irreps.begin(), t->irreps.end(),
              [](const TableIrrep& a, const TableIrrep& b) { return a.key < b.key; });
    for (std::size_t i = 0; i < t->irreps.size(); ++i) t->index[t->irreps[i].key] = i;
    t->unit = t->index.at("e");
    auto id = [&](const char* k) { return t->index.at(k); };
    auto row = [&](const char* a, const char* b,
                   std::vector<std::pair<const char*, std::int64_t>> out) {
        std::vector<std::pair<std::size_t, std::int64_t>> o;
        for (auto& [c, m] : out) o.emplace_back(id(c), m);
        t->rows[{id(a), id(b)}] = std::move(o);
    };
    row("e", "e", {{"e", 1}});
    row("e", "sgn", {{"sgn", 1}});
    row("sgn", "e", {{"sgn", 1}});
    row("e", "std", {{"std", 1}});
    row("std", "e", {{"std", 1}});
    row("sgn", "sgn", {{"e", 1}});
    row("sgn", "std", {{"std", 1}});
    row("std", "sgn", {{"std", 1}});
    row("std", "std", {{"e", 1}, {"sgn", 1}, {"std", 1}});
    return t;
}

SpectralActionModel bdv_over_sq(const QuantumGroupModel& source) {
    double t = 0.0;
    for (double x : source.fstarf_eigenvalues()) t += x;
    QuantumGroupModel target = QuantumGroupModel::sq_u2(QuantumGroupModel::solve_deformation(t));
    return SpectralActionModel::bdv(source, target, [](const IrrepLabel& l) { return l; });
}

}  // namespace

std::vector<RegressionResult> run_regression() {
    Runner R;

    R.run("4.1", "classical fusion table: subexponential growth, tracial state", [](auto& d) {
        QuantumGroupModel m = QuantumGroupModel::table(s3_table());
        GrowthReport g = growth_sequence(m, IrrepLabel::key("std"), 12, GrowthKind::quantum_dim);
        expect(d, g.verdict == GrowthVerdict::subexponential, "growth verdict not subexponential");
        expect(d, g.certified_upper() == 1.0, "certified growth limit not 1");
        TracialReport tr = is_tracial(SpectralActionModel::translation(m));
        expect(d, tr.tracial, "translation action not tracial");
    });

    R.run("4.2", "deformed model: integral dims subexponential, quantum dims exponential",
          [](auto& d) {
              QuantumGroupModel m = QuantumGroupModel::sq_u2(0.5);
              GrowthReport gi = growth_sequence(m, IrrepLabel::series(1), 24, GrowthKind::integral_dim);
              GrowthReport gq = growth_sequence(m, IrrepLabel::series(1), 24, GrowthKind::quantum_dim);
              expect(d, gi.verdict == GrowthVerdict::subexponential, "integral verdict");
              expect(d, gq.verdict == GrowthVerdict::exponential, "quantum verdict");
          });

    R.run("4.3", "dimension-growth sandwich on the built-in families", [](auto& d) {
        for (double q : {0.25, 0.5, 1.0}) {
            QuantumGroupModel m = QuantumGroupModel::sq_u2(q);
            for (std::int64_t r = 1; r <= 6; ++r) {
                GrowthSandwichReport rep = verify_prop43(m, IrrepLabel::series(r), 16);
                expect(d, rep.holds, "sandwich fails for sq_u2");
                expect(d, rep.equality_detected, "extreme equalities not detected for sq_u2");
            }
        }
        QuantumGroupModel ao = QuantumGroupModel::ao_f({0.5, 1.0, 2.0});
        expect(d, verify_prop43(ao, IrrepLabel::series(2), 16).holds, "sandwich fails for ao_f");
    });

    R.run("4.4", "free unitary: all powers irreducible, maximal growth, strict extremes",
          [](auto& d) {
              for (std::int64_t n : {2, 3}) {
                  QuantumGroupModel m = QuantumGroupModel::au_f(std::vector<double>(n, 1.0));
                  IrrepLabel g = IrrepLabel::word("g");
                  MultiplicityVector mv = m.fusion().decompose_power(g, 5);
                  expect(d, mv.support_size() == 1 && mv.total() == 1, "power not irreducible");
                  GrowthReport gr = growth_sequence(m, g, 8, GrowthKind::quantum_dim);
                  for (auto& p : gr.sequence)
                      expect(d, p.value == pow_int(static_cast<double>(n), p.n),
                             "quantum growth value not n^k");
                  GrowthSandwichReport rep = verify_prop43(m, g, 8);
                  expect(d, rep.holds && rep.strict_extremes && !rep.equality_detected,
                         "extremes not strict");
              }
          });

    R.run("4.5", "deformed su2 tower: exact spectra and extreme eigenvalues", [](auto& d) {
        QuantumGroupModel m = QuantumGroupModel::sq_u2(0.5);
        for (std::int64_t r = 0; r <= 10; ++r) {
            EigenSpectrum s = m.jj_spectrum(IrrepLabel::series(r));
            expect(d, s.exact() && static_cast<std::int64_t>(s.size()) == r + 1,
                   "spectrum not the exact ladder");
            auto [lam, Lam] = m.lambda_bounds(IrrepLabel::series(r));
            expect(d, lam == pow_int(0.5, r) && Lam == pow_int(0.5, -r), "extremes not |q|^{+-r}");
        }
        MultiplicityVector cg = m.fusion().fuse(IrrepLabel::series(1), IrrepLabel::series(1));
        MultiplicityVector want;
        want.add(IrrepLabel::series(0), 1);
        want.add(IrrepLabel::series(2), 1);
        expect(d, cg == want, "fundamental fusion rule");
    });

    R.run("4.6", "free orthogonal growth rate through the equivalent deformed model", [](auto& d) {
        QuantumGroupModel ao = QuantumGroupModel::ao_f({0.5, 1.0, 2.0});
        double q = ao.q();
        for (std::int64_t r = 1; r <= 6; ++r) {
            GrowthReport g = growth_sequence(ao, IrrepLabel::series(r), 20, GrowthKind::quantum_dim);
            expect(d, approx_eq(g.certified_upper(), pow_int(q, -r)), "growth limit not q^{-r}");
            auto [lam, Lam] = ao.lambda_bounds(IrrepLabel::series(r));
            expect(d, approx_eq(lam, 1.0 / Lam), "spectrum extremes not reciprocal");
        }
    });

    R.run("4.7", "free orthogonal integral dimensions grow exponentially", [](auto& d) {
        for (std::size_t rank : {3, 4, 5}) {
            QuantumGroupModel ao = QuantumGroupModel::ao_f(std::vector<double>(rank, 1.0));
            std::int64_t m = static_cast<std::int64_t>(rank);
            for (std::int64_t r = 1; r <= 12; ++r) {
                std::int64_t dim = ao.intdim(IrrepLabel::series(r));
                expect(d, dim >= (std::int64_t{1} << (r - 1)) * m, "dim below 2^{r-1} dim(u_1)");
            }
            GrowthReport g = growth_sequence(ao, IrrepLabel::series(1), 12, GrowthKind::integral_dim);
            expect(d, g.verdict == GrowthVerdict::exponential, "verdict not exponential");
        }
    });

    R.run("4.8", "modular eigenvalue bounds on every built-in action", [](auto& d) {
        std::vector<SpectralActionModel> actions;
        for (double q : {0.5, 1.0}) {
            QuantumGroupModel m = QuantumGroupModel::sq_u2(q);
            actions.push_back(SpectralActionModel::translation(m));
            actions.push_back(
                SpectralActionModel::bdv(m, m, [](const IrrepLabel& l) { return l; }));
        }
        QuantumGroupModel ao = QuantumGroupModel::ao_f({0.5, 1.0, 2.0});
        actions.push_back(SpectralActionModel::translation(ao));
        actions.push_back(bdv_over_sq(ao));
        QuantumGroupModel au = QuantumGroupModel::au_f({1.0, 1.0});
        actions.push_back(SpectralActionModel::translation(au));
        for (auto& act : actions)
            for (auto& u : act.spectral_probe(5)) {
                ModularBoundReport rep = verify_thm48(act, u, 16);
                expect(d, rep.bound_holds,
                       "bound fails for " + act.describe() + " at " + u.str());
            }
    });

    R.run("4.9", "compact group actions are tracial", [](auto& d) {
        QuantumGroupModel m = QuantumGroupModel::table(s3_table());
        TracialReport tr = is_tracial(SpectralActionModel::translation(m));
        expect(d, tr.tracial, "table translation action not tracial");
        ModularSpectrumReport sp = delta_point_spectrum(SpectralActionModel::translation(m));
        expect(d, sp.global.is_trivial(), "modular spectrum not {1}");
    });

    R.run("4.10", "relaxed tensor actions: multiplicity data and attained bounds", [](auto& d) {
        QuantumGroupModel ao = QuantumGroupModel::ao_f({0.5, 1.0, 2.0});
        SpectralActionModel act = bdv_over_sq(ao);
        double q = ao.q();
        for (std::int64_t r = 1; r <= 5; ++r) {
            IrrepLabel u = IrrepLabel::series(r);
            expect(d, act.mult(u) == r + 1, "mult not the classical dimension");
            GrowthReport mg = act.mult_growth(u, 16);
            expect(d, mg.limit && *mg.limit == 1.0, "multiplicity rate not 1");
            ModularBoundReport rep = verify_thm48(act, u, 20);
            expect(d, rep.bound_holds && rep.equality_b, "extremes do not attain the growth value");
            expect(d, approx_eq(act.JJ(u).max_value(), pow_int(q, -r)), "max Sp(J*J) not q^{-r}");
        }
    });

    R.run("4.11", "non-tracial Kac actions need exponential integral growth", [](auto& d) {
        SpectralActionModel wang = SpectralActionModel::wang_cuntz(3, 5);
        KacNecessityReport rep = kac_exponential_necessity(wang);
        expect(d, rep.outcome == KacNecessityReport::Outcome::verified, "no exponential witness");
        QuantumGroupModel ao3 = QuantumGroupModel::ao_f({1.0, 1.0, 1.0});
        SpectralActionModel bdv3 = bdv_over_sq(ao3);
        KacNecessityReport rep2 = kac_exponential_necessity(bdv3);
        expect(d, rep2.outcome == KacNecessityReport::Outcome::verified,
               "no exponential witness for the relaxed tensor action");
    });

    R.run("4.12", "the Kac deformation at q = -1 acts only tracially", [](auto& d) {
        QuantumGroupModel m = QuantumGroupModel::sq_u2(-1.0);
        expect(d, m.kac(), "model not Kac");
        for (auto act : {SpectralActionModel::translation(m),
                         SpectralActionModel::bdv(m, m, [](const IrrepLabel& l) { return l; })}) {
            TracialReport tr = is_tracial(act);
            expect(d, tr.tracial, "action not tracial");
            ModularSpectrumReport sp = delta_point_spectrum(act);
            expect(d, sp.global.is_trivial(), "modular spectrum not {1}");
        }
    });

    R.run("4.13", "type III lower bounds and their consistency with the spectrum", [](auto& d) {
        QuantumGroupModel m = QuantumGroupModel::sq_u2(0.5);
        SpectralActionModel act = SpectralActionModel::translation(m);
        Type3BoundReport b = type3_lower_bound(act);
        expect(d, approx_eq(b.bound, 0.25), "first-irrep bound not |q|^2");
        ModularSpectrumReport sp = delta_point_spectrum(act);
        Classification c = connes_subgroup(sp);
        expect(d, c.kind == FactorClass::III_lambda, "no lattice classification");
        expect(d, c.lambda >= b.bound - 1e-12, "classification below the lower bound");
    });

    R.run("4.14", "Cuntz-gradation action attains the Kac bound", [](auto& d) {
        for (std::int64_t n : {2, 3, 5}) {
            SpectralActionModel wang = SpectralActionModel::wang_cuntz(n, 6);
            double kb = kac_bound(wang);
            expect(d, kb == 1.0 / static_cast<double>(n), "kac bound not 1/n");
            Classification c = connes_subgroup(delta_point_spectrum(wang));
            expect(d, c.kind == FactorClass::III_lambda, "not a lattice subgroup");
            expect(d, std::fabs(c.lambda - 1.0 / static_cast<double>(n)) <= 1e-12,
                   "generator not 1/n");
        }
    });

    R.run("4.15", "free orthogonal translation: product spectrum and non-optimal bound",
          [](auto& d) {
              QuantumGroupModel ao = QuantumGroupModel::ao_f({0.5, 1.0, 2.0});
              SpectralActionModel act = SpectralActionModel::translation(ao);
              ModularSpectrumReport sp = delta_point_spectrum(act, {{IrrepLabel::series(1)}});
              std::vector<double> want;
              for (double a : {0.5, 1.0, 2.0})
                  for (double b : {2.0, 1.0, 0.5}) want.push_back(a * b);
              EigenSpectrum w = EigenSpectrum::from_values(want);
              expect(d, sp.per_irrep.back().second.approx_equal(w, 1e-12),
                     "u_1 spectrum not the product set");
              Classification c = connes_subgroup(delta_point_spectrum(act));
              expect(d, c.kind == FactorClass::III_lambda && c.lambda == 0.5,
                     "subgroup generator not 0.5");
              Type3BoundReport b = type3_lower_bound(act);
              expect(d, approx_eq(b.bound, 0.5 * ao.q()), "bound not q/|F|^2");
              expect(d, b.bound <= 0.5, "bound should undercut the true parameter");
          });

    R.run("3.1", "trace criterion with witnesses", [](auto& d) {
        TracialReport a = is_tracial(SpectralActionModel::translation(QuantumGroupModel::sq_u2(0.5)));
        expect(d, !a.tracial && a.witness && *a.witness == IrrepLabel::series(1) && a.condition == 'a',
               "deformed translation witness");
        QuantumGroupModel au4 = QuantumGroupModel::au_f({1.0, 1.0, 1.0, 1.0});
        std::vector<SpectralActionModel::CustomEntry> entries(1);
        entries[0].irrep = IrrepLabel::word("g");
        entries[0].mult = 4;
        entries[0].JJ = EigenSpectrum::from_values({2.0, 1.0, 0.5, 0.5});
        TracialReport b2 = is_tracial(SpectralActionModel::custom(au4, entries));
        expect(d, !b2.tracial && b2.condition == 'b', "Kac custom witness");
    });

    R.run("3.2", "lattice classification never yields type III_0", [](auto& d) {
        SpectralActionModel wang = SpectralActionModel::wang_cuntz(2, 5);
        Classification c = connes_subgroup(delta_point_spectrum(wang));
        expect(d,
               c.kind == FactorClass::trace || c.kind == FactorClass::III_lambda ||
                   c.kind == FactorClass::III_one || c.kind == FactorClass::undetermined,
               "unexpected classification");
        expect(d, c.kind == FactorClass::III_lambda, "gradation spectrum should be a lattice");
    });

    R.run("3.3", "KMS identity of the invariant state", [](auto& d) {
        for (auto& act : {SpectralActionModel::translation(QuantumGroupModel::sq_u2(0.5)),
                          SpectralActionModel::translation(QuantumGroupModel::ao_f({0.5, 1.0, 2.0})),
                          SpectralActionModel::wang_cuntz(2, 4)}) {
            for (auto& u : act.spectral_probe(3)) {
                if (act.base().intdim(u) > 32) continue;
                KmsReport rep = kms_check(act, u, 200, 1e-10);
                expect(d, rep.pass, "KMS violation " + std::to_string(rep.max_violation) + " at " +
                                        u.str() + " for " + act.describe());
            }
        }
    });

    return R.results;
}

}  // namespace qgrowth
