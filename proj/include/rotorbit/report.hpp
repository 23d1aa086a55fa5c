#pragma once

#include <string>
#include <vector>

namespace rotorbit {

/// One named pass/fail outcome. The witness is empty on a pass and holds
/// a human-readable counterexample description on a fail.
struct Verdict {
    std::string name;
    bool pass = false;
    std::string witness;
};

/// Structured result of a check_* operation. A false verdict is data, not
/// an exception. experimental marks conjecture-level evidence that must
/// never be reported as a theorem.
struct Report {
    std::string title;
    bool experimental = false;
    std::vector<Verdict> verdicts;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string witness = "") {
        verdicts.push_back({std::move(name), pass, std::move(witness)});
    }
};

}  // namespace rotorbit
