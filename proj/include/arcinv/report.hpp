#ifndef ARCINV_REPORT_HPP
#define ARCINV_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "arcinv/order.hpp"

namespace arcinv {

enum class Provenance { None, Formula, Oracle, BruteForce };
std::string to_string(Provenance p);

/// One value in a report. Numbers carry where they came from.
class Cell {
public:
    enum class Kind { Text, Boolean, Integer, Rational, Infinity, Inconclusive };

    static Cell text(std::string s);
    static Cell boolean(bool b);
    static Cell integer(const mpz_class& v, Provenance p);
    static Cell rational(const mpq_class& v, Provenance p);
    static Cell infinity(Provenance p);
    static Cell inconclusive(std::uint64_t precision, Provenance p);

    static Cell from(const OrderValue& v, Provenance p);
    static Cell from(const RationalOrInfinity& v, Provenance p);
    static Cell from(const ArcOrder& v, Provenance p);

    Kind kind() const noexcept { return kind_; }
    Provenance provenance() const noexcept { return prov_; }
    bool numeric() const noexcept { return kind_ != Kind::Text && kind_ != Kind::Boolean; }
    const std::string& text_value() const noexcept { return text_; }
    bool bool_value() const noexcept { return bool_; }

    std::string table_text() const;  // 3/2, inf, >=N? as "≥N?"
    std::string json_text() const;   // "3/2", "inf", {"inconclusive":N}

private:
    Kind kind_ = Kind::Text;
    Provenance prov_ = Provenance::None;
    std::string text_;
    bool bool_ = false;
    mpq_class q_;
    std::uint64_t precision_ = 0;
};

struct ReportRow {
    std::string kind;  // section name; rows of one kind share columns
    std::vector<std::pair<std::string, Cell>> cells;

    ReportRow& add(std::string key, Cell c) {
        cells.emplace_back(std::move(key), std::move(c));
        return *this;
    }
};

enum class ExitStatus : int { Ok = 0, Mismatch = 1, Usage = 2, Inconclusive = 3 };
std::string to_string(ExitStatus s);

struct Report {
    std::string command;
    std::string source;  // scenario path or label
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;
    ExitStatus status = ExitStatus::Ok;

    // Raise the status: Usage > Mismatch > Inconclusive > Ok.
    void escalate(ExitStatus s);
};

enum class OutputMode { Table, Json };

/// Table mode aligns each section's columns; JSON mode writes one object per
/// line: a header, one per row, then a summary.
std::string emit(const Report& report, OutputMode mode);

}  // namespace arcinv

#endif  // ARCINV_REPORT_HPP
