#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qgrowth/labels.hpp"

namespace qgrowth {

// Finitely supported map IrrepLabel -> positive multiplicity. Zero entries are
// never stored; accumulation is overflow-checked.
class MultiplicityVector {
public:
    using Map = std::map<IrrepLabel, std::int64_t>;

    MultiplicityVector() = default;

    void add(const IrrepLabel& l, std::int64_t m) {
        if (m == 0) return;
        if (m < 0) throw Error("negative multiplicity");
        auto [it, inserted] = entries_.try_emplace(l, m);
        if (!inserted) it->second = checked_add(it->second, m);
    }

    std::int64_t at(const IrrepLabel& l) const {
        auto it = entries_.find(l);
        return it == entries_.end() ? 0 : it->second;
    }

    bool contains(const IrrepLabel& l) const { return entries_.count(l) > 0; }
    const Map& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::int64_t total() const {
        std::int64_t t = 0;
        for (auto& [l, m] : entries_) t = checked_add(t, m);
        return t;
    }

    bool operator==(const MultiplicityVector&) const = default;

    std::string str() const {
        if (entries_.empty()) return "0";
        std::string out;
        for (auto& [l, m] : entries_) {
            if (!out.empty()) out += " + ";
            if (m != 1) out += std::to_string(m) + "*";
            out += l.str();
        }
        return out;
    }

private:
    Map entries_;
};

enum class FusionKind { su2_type, free_power, table_driven };

struct TableIrrep {
    std::string key;
    std::string dual;
    std::int64_t dim = 1;
    double qdim = 1.0;
    std::optional<std::vector<std::int64_t>> qdim_exponents;  // qdim = sum of q^e, base from table
    std::vector<double> jj;                                   // Sp(j*j); empty means all-ones
};

// Table-driven fusion data, shared (immutable) between the fusion system and
// the quantum group model built on it. Validated once on construction.
struct TableData {
    std::vector<TableIrrep> irreps;           // sorted by key
    std::map<std::string, std::size_t> index; // key -> position
    std::size_t unit = 0;
    double q = 1.0;                           // base for qdim_exponents
    // fusion rows: (a, b) -> decomposition
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::int64_t>>> rows;

    // Checks unit law, dual involution, closure, unit occurrence in a (x) dual(a),
    // and the dimension-homomorphism law for both dim and qdim. Throws Error with
    // the offending entry named.
    void validate() const;
};

using TableDataPtr = std::shared_ptr<const TableData>;

// A fusion system: labels, duals and tensor decomposition. Values are
// immutable after construction and all operations are pure, so systems can be
// shared freely across threads.
class FusionSystem {
public:
    static FusionSystem su2() { return FusionSystem(FusionKind::su2_type, nullptr); }
    static FusionSystem free_power() { return FusionSystem(FusionKind::free_power, nullptr); }
    static FusionSystem table(TableDataPtr data);

    FusionKind kind() const { return kind_; }
    const TableDataPtr& table_data() const { return table_; }

    IrrepLabel unit() const;
    bool is_valid(const IrrepLabel& l) const;
    void require_valid(const IrrepLabel& l) const;

    IrrepLabel dual(const IrrepLabel& l) const;

    // Decomposition of a (x) b into irreducibles. For free_power systems only
    // powers of a single letter fuse; anything mixed is an error.
    MultiplicityVector fuse(const IrrepLabel& a, const IrrepLabel& b) const;

    // Linear extension: full decomposition of (sum a) (x) (sum b).
    MultiplicityVector fuse(const MultiplicityVector& a, const MultiplicityVector& b,
                            std::size_t max_support = kMaxSupport) const;

    MultiplicityVector decompose_power(const IrrepLabel& u, std::int64_t n,
                                       std::size_t max_support = kMaxSupport) const;

    // Support of u^{(x) n} without multiplicities; cheap even where the
    // multiplicities themselves would overflow.
    std::set<IrrepLabel> power_support(const IrrepLabel& u, std::int64_t n,
                                       std::size_t max_support = kMaxSupport) const;

    // All labels of a table system, in canonical order.
    std::vector<IrrepLabel> table_labels() const;

private:
    FusionSystem(FusionKind k, TableDataPtr t) : kind_(k), table_(std::move(t)) {}

    FusionKind kind_;
    TableDataPtr table_;
};

}  // namespace qgrowth
