#include "arcinv/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace arcinv {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::None: return "";
        case Provenance::Formula: return "formula";
        case Provenance::Oracle: return "oracle";
        case Provenance::BruteForce: return "brute-force";
    }
    return "";
}

std::string to_string(ExitStatus s) {
    switch (s) {
        case ExitStatus::Ok: return "ok";
        case ExitStatus::Mismatch: return "mismatch";
        case ExitStatus::Usage: return "usage";
        case ExitStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

void Report::escalate(ExitStatus s) {
    auto rank = [](ExitStatus x) {
        switch (x) {
            case ExitStatus::Ok: return 0;
            case ExitStatus::Inconclusive: return 1;
            case ExitStatus::Mismatch: return 2;
            case ExitStatus::Usage: return 3;
        }
        return 0;
    };
    if (rank(s) > rank(status)) status = s;
}

Cell Cell::text(std::string s) {
    Cell c;
    c.text_ = std::move(s);
    return c;
}

Cell Cell::boolean(bool b) {
    Cell c;
    c.kind_ = Kind::Boolean;
    c.bool_ = b;
    return c;
}

Cell Cell::integer(const mpz_class& v, Provenance p) {
    Cell c;
    c.kind_ = Kind::Integer;
    c.q_ = v;
    c.prov_ = p;
    return c;
}

Cell Cell::rational(const mpq_class& v, Provenance p) {
    Cell c;
    c.kind_ = Kind::Rational;
    c.q_ = v;
    c.q_.canonicalize();
    c.prov_ = p;
    return c;
}

Cell Cell::infinity(Provenance p) {
    Cell c;
    c.kind_ = Kind::Infinity;
    c.prov_ = p;
    return c;
}

Cell Cell::inconclusive(std::uint64_t precision, Provenance p) {
    Cell c;
    c.kind_ = Kind::Inconclusive;
    c.precision_ = precision;
    c.prov_ = p;
    return c;
}

Cell Cell::from(const OrderValue& v, Provenance p) {
    if (v.is_finite()) return integer(mpz_class(static_cast<unsigned long>(v.value())), p);
    if (v.is_infinite()) return infinity(p);
    return inconclusive(v.value(), p);
}

Cell Cell::from(const RationalOrInfinity& v, Provenance p) {
    return v.is_infinite() ? infinity(p) : rational(v.value(), p);
}

Cell Cell::from(const ArcOrder& v, Provenance p) {
    if (v.is_finite()) return rational(v.value(), p);
    if (v.is_infinite()) return infinity(p);
    return inconclusive(v.precision(), p);
}

std::string Cell::table_text() const {
    switch (kind_) {
        case Kind::Text: return text_.empty() ? "-" : text_;
        case Kind::Boolean: return bool_ ? "yes" : "no";
        case Kind::Integer:
        case Kind::Rational: return rational_string(q_);
        case Kind::Infinity: return "inf";
        case Kind::Inconclusive: return "≥" + std::to_string(precision_) + "?";
    }
    return "";
}

namespace {

using Json = nlohmann::ordered_json;

Json cell_json(const Cell& c) {
    switch (c.kind()) {
        case Cell::Kind::Text: return c.text_value();
        case Cell::Kind::Boolean: return c.bool_value();
        case Cell::Kind::Integer:
        case Cell::Kind::Rational:
        case Cell::Kind::Infinity: return c.table_text();
        case Cell::Kind::Inconclusive: return Json::parse(c.json_text());
    }
    return nullptr;
}

// Display width in code points.
std::size_t width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char ch : s) {
        if ((ch & 0xC0) != 0x80) ++n;
    }
    return n;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, width(s)), ' '); }

void emit_section(std::ostringstream& os, const std::vector<const ReportRow*>& rows) {
    // Columns in order of first appearance.
    std::vector<std::string> keys;
    for (const auto* r : rows) {
        for (const auto& [k, c] : r->cells) {
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
        }
    }
    std::map<std::string, std::optional<Provenance>> shared;
    std::map<std::string, bool> mixed;
    for (const auto* r : rows) {
        for (const auto& [k, c] : r->cells) {
            if (!c.numeric()) continue;
            auto& s = shared[k];
            if (!s) {
                s = c.provenance();
            } else if (*s != c.provenance()) {
                mixed[k] = true;
            }
        }
    }
    std::vector<std::string> header;
    for (const auto& k : keys) {
        auto it = shared.find(k);
        if (it != shared.end() && !mixed[k] && *it->second != Provenance::None) {
            header.push_back(k + "[" + to_string(*it->second) + "]");
        } else {
            header.push_back(k);
        }
    }
    std::vector<std::vector<std::string>> table;
    for (const auto* r : rows) {
        std::vector<std::string> line(keys.size(), "");
        for (const auto& [k, c] : r->cells) {
            auto at = static_cast<std::size_t>(std::find(keys.begin(), keys.end(), k) - keys.begin());
            std::string t = c.table_text();
            if (c.numeric() && mixed[k]) t += "[" + to_string(c.provenance()) + "]";
            line[at] = t;
        }
        table.push_back(std::move(line));
    }
    std::vector<std::size_t> w(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        w[i] = width(header[i]);
        for (const auto& line : table) w[i] = std::max(w[i], width(line[i]));
    }
    auto put = [&](const std::vector<std::string>& line) {
        std::string out;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i != 0) out += "  ";
            out += (i + 1 == line.size()) ? line[i] : pad(line[i], w[i]);
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        os << out << "\n";
    };
    os << "[" << rows.front()->kind << "]\n";
    put(header);
    for (const auto& line : table) put(line);
}

}  // namespace

std::string Cell::json_text() const {
    if (kind_ == Kind::Inconclusive) return "{\"inconclusive\":" + std::to_string(precision_) + "}";
    return cell_json(*this).dump();
}

std::string emit(const Report& report, OutputMode mode) {
    std::ostringstream os;
    if (mode == OutputMode::Json) {
        Json head = {{"kind", "command"}, {"command", report.command}, {"source", report.source}};
        os << head.dump() << "\n";
        for (const auto& row : report.rows) {
            Json j;
            j["kind"] = row.kind;
            Json prov = Json::object();
            for (const auto& [k, c] : row.cells) {
                j[k] = cell_json(c);
                if (c.numeric() && c.provenance() != Provenance::None) prov[k] = to_string(c.provenance());
            }
            if (!prov.empty()) j["provenance"] = prov;
            os << j.dump() << "\n";
        }
        Json tail = {{"kind", "summary"},
                     {"status", to_string(report.status)},
                     {"exit", static_cast<int>(report.status)},
                     {"notes", report.notes}};
        os << tail.dump() << "\n";
        return os.str();
    }
    os << "# " << report.command;
    if (!report.source.empty()) os << " " << report.source;
    os << "\n";
    std::size_t i = 0;
    while (i < report.rows.size()) {
        std::vector<const ReportRow*> section;
        std::size_t j = i;
        while (j < report.rows.size() && report.rows[j].kind == report.rows[i].kind) section.push_back(&report.rows[j++]);
        emit_section(os, section);
        i = j;
    }
    for (const auto& n : report.notes) os << "note: " << n << "\n";
    os << "status: " << to_string(report.status) << " (exit " << static_cast<int>(report.status) << ")\n";
    return os.str();
}

}  // namespace arcinv
