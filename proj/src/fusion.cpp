#include "qgrowth/fusion.hpp"

#include <algorithm>
#include <cstdlib>

namespace qgrowth {

namespace {

bool word_is_pure(const std::string& w, char letter) {
    return std::all_of(w.begin(), w.end(), [&](char c) { return c == letter; });
}

}  // namespace

void TableData::validate() const {
    if (irreps.empty()) throw Error("fusion table: no irreps");
    auto name = [&](std::size_t i) { return "\"" + irreps[i].key + "\""; };

    if (unit >= irreps.size()) throw Error("fusion table: unit index out of range");
    const TableIrrep& e = irreps[unit];
    if (e.dual != e.key) throw Error("fusion table: unit " + name(unit) + " must be self-dual");
    if (e.dim != 1) throw Error("fusion table: unit " + name(unit) + " must have dim 1");

    for (std::size_t i = 0; i < irreps.size(); ++i) {
        const TableIrrep& ir = irreps[i];
        auto dit = index.find(ir.dual);
        if (dit == index.end())
            throw Error("fusion table: irrep " + name(i) + " names unknown dual \"" + ir.dual + "\"");
        if (irreps[dit->second].dual != ir.key)
            throw Error("fusion table: dual of irrep " + name(i) + " is not involutive");
        if (ir.dim < 1) throw Error("fusion table: irrep " + name(i) + " has dim < 1");
        if (ir.qdim < 1.0 - kRelTol)
            throw Error("fusion table: irrep " + name(i) + " has quantum dimension < 1");
        if (ir.qdim < static_cast<double>(ir.dim) * (1.0 - kRelTol))
            throw Error("fusion table: irrep " + name(i) +
                        " has quantum dimension below its integral dimension");
        if (!ir.jj.empty()) {
            if (static_cast<std::int64_t>(ir.jj.size()) != ir.dim)
                throw Error("fusion table: irrep " + name(i) +
                            " jj_spectrum size does not equal dim");
            double s = 0.0, si = 0.0;
            for (double x : ir.jj) {
                if (x <= 0.0)
                    throw Error("fusion table: irrep " + name(i) + " jj_spectrum must be positive");
                s += x;
                si += 1.0 / x;
            }
            if (!approx_eq(s, ir.qdim) || !approx_eq(si, ir.qdim))
                throw Error("fusion table: irrep " + name(i) +
                            " jj_spectrum violates the trace identity (sum " + std::to_string(s) +
                            ", inverse sum " + std::to_string(si) + ", qdim " +
                            std::to_string(ir.qdim) + ")");
        }
    }

    for (auto& [ab, out] : rows) {
        auto [a, b] = ab;
        std::string entry = "(" + irreps[a].key + ", " + irreps[b].key + ")";
        if (out.empty()) throw Error("fusion table: empty decomposition for " + entry);
        std::int64_t dim_sum = 0;
        double qdim_sum = 0.0;
        std::int64_t unit_mult = 0;
        std::set<std::size_t> seen;
        for (auto& [c, m] : out) {
            if (c >= irreps.size()) throw Error("fusion table: bad output index in " + entry);
            if (m < 1) throw Error("fusion table: nonpositive multiplicity in " + entry);
            if (!seen.insert(c).second)
                throw Error("fusion table: duplicate output " + name(c) + " in " + entry);
            dim_sum = checked_add(dim_sum, checked_mul(m, irreps[c].dim));
            qdim_sum += static_cast<double>(m) * irreps[c].qdim;
            if (c == unit) unit_mult = m;
        }
        if (a == unit || b == unit) {
            std::size_t other = (a == unit) ? b : a;
            if (out.size() != 1 || out[0].first != other || out[0].second != 1)
                throw Error("fusion table: unit law violated at " + entry);
        }
        if (dim_sum != checked_mul(irreps[a].dim, irreps[b].dim))
            throw Error("fusion table: dim homomorphism violated at " + entry + " (" +
                        std::to_string(dim_sum) + " != " +
                        std::to_string(irreps[a].dim * irreps[b].dim) + ")");
        if (!approx_eq(qdim_sum, irreps[a].qdim * irreps[b].qdim))
            throw Error("fusion table: quantum dim homomorphism violated at " + entry);
        bool dual_pair = (index.at(irreps[a].dual) == b);
        if (dual_pair && unit_mult != 1)
            throw Error("fusion table: unit must occur once in " + entry + " (dual pair)");
        if (!dual_pair && unit_mult != 0)
            throw Error("fusion table: unit occurs in " + entry + " which is not a dual pair");
    }
}

FusionSystem FusionSystem::table(TableDataPtr data) {
    if (!data) throw Error("fusion table: null data");
    data->validate();
    return FusionSystem(FusionKind::table_driven, std::move(data));
}

IrrepLabel FusionSystem::unit() const {
    switch (kind_) {
        case FusionKind::su2_type: return IrrepLabel::series(0);
        case FusionKind::free_power: return IrrepLabel::word("");
        case FusionKind::table_driven: return IrrepLabel::key(table_->irreps[table_->unit].key);
    }
    return {};
}

bool FusionSystem::is_valid(const IrrepLabel& l) const {
    switch (kind_) {
        case FusionKind::su2_type: return l.kind() == IrrepLabel::Kind::series;
        case FusionKind::free_power: return l.kind() == IrrepLabel::Kind::word;
        case FusionKind::table_driven:
            return l.kind() == IrrepLabel::Kind::key && table_->index.count(l.text()) > 0;
    }
    return false;
}

void FusionSystem::require_valid(const IrrepLabel& l) const {
    if (!is_valid(l)) throw Error("unknown irrep label \"" + l.str() + "\" for this fusion system");
}

IrrepLabel FusionSystem::dual(const IrrepLabel& l) const {
    require_valid(l);
    switch (kind_) {
        case FusionKind::su2_type: return l;  // self-conjugate series
        case FusionKind::free_power: {
            // reverse the word and swap g <-> G
            std::string w(l.text().rbegin(), l.text().rend());
            for (char& c : w) c = (c == 'g') ? 'G' : 'g';
            return IrrepLabel::word(std::move(w));
        }
        case FusionKind::table_driven:
            return IrrepLabel::key(table_->irreps[table_->index.at(l.text())].dual);
    }
    return {};
}

MultiplicityVector FusionSystem::fuse(const IrrepLabel& a, const IrrepLabel& b) const {
    require_valid(a);
    require_valid(b);
    MultiplicityVector out;
    switch (kind_) {
        case FusionKind::su2_type: {
            std::int64_t ra = a.index(), rb = b.index();
            for (std::int64_t c = std::llabs(ra - rb); c <= ra + rb; c += 2)
                out.add(IrrepLabel::series(c), 1);
            return out;
        }
        case FusionKind::free_power: {
            const std::string &wa = a.text(), &wb = b.text();
            if (wa.empty()) {
                out.add(b, 1);
                return out;
            }
            if (wb.empty()) {
                out.add(a, 1);
                return out;
            }
            char la = wa[0], lb = wb[0];
            if (la != lb || !word_is_pure(wa, la) || !word_is_pure(wb, lb))
                throw Error("free-power fusion is modeled only for powers of one generator: "
                            "cannot fuse \"" + a.str() + "\" with \"" + b.str() + "\"");
            out.add(IrrepLabel::word(wa + wb), 1);
            return out;
        }
        case FusionKind::table_driven: {
            std::size_t ia = table_->index.at(a.text()), ib = table_->index.at(b.text());
            auto it = table_->rows.find({ia, ib});
            if (it == table_->rows.end()) {
                // unit rows are implied by the unit law even when absent from the file
                if (ia == table_->unit) {
                    out.add(b, 1);
                    return out;
                }
                if (ib == table_->unit) {
                    out.add(a, 1);
                    return out;
                }
                throw Error("fusion table: no row for pair (" + a.str() + ", " + b.str() + ")");
            }
            for (auto& [c, m] : it->second) out.add(IrrepLabel::key(table_->irreps[c].key), m);
            return out;
        }
    }
    return out;
}

MultiplicityVector FusionSystem::fuse(const MultiplicityVector& a, const MultiplicityVector& b,
                                      std::size_t max_support) const {
    MultiplicityVector out;
    for (auto& [la, ma] : a.entries())
        for (auto& [lb, mb] : b.entries()) {
            std::int64_t m = checked_mul(ma, mb);
            for (auto& [lc, mc] : fuse(la, lb).entries()) out.add(lc, checked_mul(m, mc));
            if (out.support_size() > max_support)
                throw Error("decomposition support exceeds the cap of " +
                            std::to_string(max_support) + " entries");
        }
    return out;
}

MultiplicityVector FusionSystem::decompose_power(const IrrepLabel& u, std::int64_t n,
                                                 std::size_t max_support) const {
    require_valid(u);
    if (n < 0) throw Error("tensor power must be nonnegative");
    MultiplicityVector acc;
    acc.add(unit(), 1);
    MultiplicityVector step;
    step.add(u, 1);
    for (std::int64_t i = 0; i < n; ++i) acc = fuse(acc, step, max_support);
    return acc;
}

std::set<IrrepLabel> FusionSystem::power_support(const IrrepLabel& u, std::int64_t n,
                                                 std::size_t max_support) const {
    require_valid(u);
    if (n < 0) throw Error("tensor power must be nonnegative");
    std::set<IrrepLabel> acc{unit()};
    for (std::int64_t i = 0; i < n; ++i) {
        std::set<IrrepLabel> next;
        for (auto& v : acc)
            for (auto& [l, m] : fuse(v, u).entries()) next.insert(l);
        if (next.size() > max_support)
            throw Error("decomposition support exceeds the cap of " + std::to_string(max_support) +
                        " entries");
        acc = std::move(next);
    }
    return acc;
}

std::vector<IrrepLabel> FusionSystem::table_labels() const {
    if (kind_ != FusionKind::table_driven) throw Error("not a table-driven fusion system");
    std::vector<IrrepLabel> out;
    out.reserve(table_->irreps.size());
    for (auto& ir : table_->irreps) out.push_back(IrrepLabel::key(ir.key));
    return out;
}

}  // namespace qgrowth
