#pragma once

#include <string>
#include <vector>

#include "qlag/real.hpp"

namespace qlag {

enum class Verdict { holds, fails, not_applicable };

std::string verdict_name(Verdict v);

struct LabeledValue {
    std::string label;
    Real value;
};

struct Violation {
    std::size_t index;    // position of the left element of the bad pair
    std::string expected; // e.g. "z[2,5] < y[2,5]"
    std::string detail;   // the actual values
};

/// Outcome of checking one expected strict ordering.  Ties within the
/// strictness tolerance 2^-(P/2) (1+|value|) raise the degenerate flag
/// instead of a verdict, because every ordering statement is strict.
struct OrderingCheck {
    bool ok = false;
    bool degenerate = false;
    std::vector<Violation> violations;
};

OrderingCheck verify_strictly_increasing(const std::vector<LabeledValue>& seq, long precision);

/// a_1, b_1, a_2, b_2, ...  Sizes must be equal or |a| == |b|+1.
std::vector<LabeledValue> interleave(const std::vector<LabeledValue>& a,
                                     const std::vector<LabeledValue>& b);

std::vector<LabeledValue> label_list(const std::vector<Real>& values, const std::string& letter,
                                     long degree);

} // namespace qlag
