#include "diffrad/report.hpp"

#include <algorithm>
#include <sstream>

namespace diffrad {

std::string_view to_string(Statement s) noexcept {
    switch (s) {
    case Statement::Mason3: return "Mason3";
    case Statement::MasonM: return "MasonM";
    case Statement::OrdInequality: return "OrdInequality";
    case Statement::Truncation: return "Truncation";
    case Statement::FermatXYZ: return "FermatXYZ";
    case Statement::FermatSumM: return "FermatSumM";
    case Statement::FermatSum1: return "FermatSum1";
    }
    return "?";
}

bool CheckReport::hypotheses_pass() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.pass; });
}

void CheckReport::add_hypothesis(std::string name, bool pass, std::string detail) {
    hypotheses.push_back({std::move(name), pass, std::move(detail)});
}

void CheckReport::set_artifact(const std::string& name, std::string value) {
    for (auto& [k, v] : artifacts) {
        if (k == name) {
            v = std::move(value);
            return;
        }
    }
    artifacts.emplace_back(name, std::move(value));
}

const std::string* CheckReport::artifact(std::string_view name) const {
    for (const auto& [k, v] : artifacts) {
        if (k == name) return &v;
    }
    return nullptr;
}

void CheckReport::conclude() {
    if (!hypotheses_pass()) {
        holds.reset();
        return;
    }
    bool ok = lhs <= rhs;
    for (const auto& e : entries) ok = ok && e.holds;
    holds = ok;
}

int exit_code(const CheckReport& r) {
    if (!r.holds.has_value()) return 2;
    return *r.holds ? 0 : 1;
}

std::string entry_value(const Entry& e, const Rational& v) {
    if (!e.approximate) return v.get_str();
    std::ostringstream os;
    os.precision(12);
    os << v.get_d();
    return os.str();
}

std::string format_report(const CheckReport& r) {
    std::ostringstream os;
    os << "statement: " << to_string(r.statement) << '\n';
    for (const auto& h : r.hypotheses) {
        os << "  [" << (h.pass ? "pass" : "FAIL") << "] " << h.name;
        if (!h.detail.empty()) os << ": " << h.detail;
        os << '\n';
    }
    for (const auto& e : r.entries) {
        os << "  " << e.label << ": " << entry_value(e, e.lhs) << " <= " << entry_value(e, e.rhs) << "  "
           << (e.holds ? "ok" : "VIOLATED");
        if (!e.detail.empty()) os << "  (" << e.detail << ")";
        os << '\n';
    }
    for (const auto& [k, v] : r.artifacts) os << "  " << k << " = " << v << '\n';
    if (r.holds.has_value()) {
        os << "lhs = " << r.lhs.get_str() << ", rhs = " << r.rhs.get_str() << '\n';
        os << "verdict: " << (*r.holds ? (r.sharp() ? "holds (sharp)" : "holds") : "THEOREM VIOLATION") << '\n';
    } else {
        os << "verdict: hypotheses not satisfied, no verdict\n";
    }
    return os.str();
}

}  // namespace diffrad
