#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rsing {

enum class CRule {
    reduced_cycle,       // c = 0: fundamental cycle is reduced
    xhat_smooth_formula, // c = sum (n_i - 1)(b_i - 2 + r_i): blow-up smooth, Z non-reduced
};

/// Determination status of the correction term c(X) at a tower node.
/// `kind == known` carries an exact value and the rule that produced it;
/// otherwise the tool refuses to guess and reports the symbolic facts it has.
struct CStatus {
    enum class Kind { known, undetermined };

    Kind kind = Kind::undetermined;
    long long value = 0;        // meaningful iff known
    std::optional<CRule> rule;  // present iff known
    bool t2hat_zero = true;     // all blow-down children have e <= 4
    std::vector<std::string> notes;

    bool known() const { return kind == Kind::known; }
};

const char* to_string(CRule rule);

} // namespace rsing
