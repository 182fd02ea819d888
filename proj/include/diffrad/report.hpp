#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffrad/field.hpp"

namespace diffrad {

enum class Statement { Mason3, MasonM, OrdInequality, Truncation, FermatXYZ, FermatSumM, FermatSum1 };

std::string_view to_string(Statement s) noexcept;

struct Hypothesis {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// One sub-verdict (a point, a radius, ...) of a report that checks many instances at once.
struct Entry {
    std::string label;
    Rational lhs;
    Rational rhs;
    bool holds = false;
    std::string detail;
    bool approximate = false;  // lhs/rhs are rounded reals rather than exact values
};

/// Verdict for one inequality check. `holds` is set only when every hypothesis passes.
struct CheckReport {
    Statement statement = Statement::Mason3;
    std::vector<Hypothesis> hypotheses;
    Rational lhs;
    Rational rhs;
    std::optional<bool> holds;
    std::vector<Entry> entries;
    std::vector<long> counts;
    std::vector<std::pair<std::string, std::string>> artifacts;

    bool hypotheses_pass() const;
    bool sharp() const { return holds.value_or(false) && lhs == rhs; }

    void add_hypothesis(std::string name, bool pass, std::string detail = {});
    void set_artifact(const std::string& name, std::string value);
    const std::string* artifact(std::string_view name) const;

    /// Sets `holds` from the hypotheses, lhs <= rhs and every entry.
    void conclude();
};

/// 0 verified, 1 hypotheses pass but the inequality fails, 2 a hypothesis fails.
int exit_code(const CheckReport& r);

/// Exact rational text, or a 12-digit decimal for approximate entries.
std::string entry_value(const Entry& e, const Rational& v);

std::string format_report(const CheckReport& r);

}  // namespace diffrad
