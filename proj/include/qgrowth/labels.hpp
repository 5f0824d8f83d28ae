#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qgrowth/common.hpp"

namespace qgrowth {

// Identifier of an irreducible within a fusion system. Three shapes:
//   series r  — nonnegative integer index, u_0 is the unit (su2-type systems)
//   word      — string over {g, G} with G the conjugate letter; "" is the unit
//   key       — opaque string key into a loaded fusion table
// Canonical order: series by index, words by length then lexicographic,
// keys lexicographic. Output of every decomposition is sorted in this order.
class IrrepLabel {
public:
    enum class Kind : std::uint8_t { series = 0, word = 1, key = 2 };

    IrrepLabel() = default;  // series unit

    static IrrepLabel series(std::int64_t r) {
        if (r < 0) throw Error("irrep index must be nonnegative");
        IrrepLabel l;
        l.kind_ = Kind::series;
        l.index_ = r;
        return l;
    }

    static IrrepLabel word(std::string letters) {
        for (char c : letters)
            if (c != 'g' && c != 'G') throw Error("word labels use letters 'g' and 'G' only");
        IrrepLabel l;
        l.kind_ = Kind::word;
        l.text_ = std::move(letters);
        return l;
    }

    static IrrepLabel key(std::string k) {
        if (k.empty()) throw Error("table irrep key must be nonempty");
        IrrepLabel l;
        l.kind_ = Kind::key;
        l.text_ = std::move(k);
        return l;
    }

    Kind kind() const { return kind_; }

    std::int64_t index() const {
        if (kind_ != Kind::series) throw Error("label is not a series label");
        return index_;
    }

    const std::string& text() const { return text_; }

    std::string str() const {
        switch (kind_) {
            case Kind::series: return "u" + std::to_string(index_);
            case Kind::word: {
                if (text_.empty()) return "1";
                std::string out;
                for (char c : text_) out += (c == 'g') ? "g" : "ḡ";  // ḡ
                return out;
            }
            case Kind::key: return text_;
        }
        return {};
    }

    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;

    friend std::strong_ordering operator<=>(const IrrepLabel& a, const IrrepLabel& b) {
        if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
        switch (a.kind_) {
            case Kind::series: return a.index_ <=> b.index_;
            case Kind::word:
                if (auto c = a.text_.size() <=> b.text_.size(); c != 0) return c;
                return a.text_ <=> b.text_;
            case Kind::key: return a.text_ <=> b.text_;
        }
        return std::strong_ordering::equal;
    }

private:
    Kind kind_ = Kind::series;
    std::int64_t index_ = 0;
    std::string text_;
};

}  // namespace qgrowth
