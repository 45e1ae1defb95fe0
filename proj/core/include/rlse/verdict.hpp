#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rlse {

// Result of a single law check. On failure `witness` holds the carrier
// indices (up to 3) at which the law breaks, and lhs/rhs the two evaluated
// sides. `detail` carries extra human-readable context for non-table checks
// (event families, closure failures).
struct Verdict {
    bool passed = true;
    std::string law;
    std::vector<int> witness;
    int lhs = -1;
    int rhs = -1;
    std::string detail;

    static Verdict pass(std::string law) {
        Verdict v;
        v.passed = true;
        v.law = std::move(law);
        return v;
    }

    static Verdict fail(std::string law, std::vector<int> witness, int lhs, int rhs,
                        std::string detail = {}) {
        Verdict v;
        v.passed = false;
        v.law = std::move(law);
        v.witness = std::move(witness);
        v.lhs = lhs;
        v.rhs = rhs;
        v.detail = std::move(detail);
        return v;
    }

    explicit operator bool() const { return passed; }
};

}  // namespace rlse
