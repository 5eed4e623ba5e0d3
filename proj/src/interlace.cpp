#include "qlag/interlace.hpp"

#include "qlag/errors.hpp"

namespace qlag {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

OrderingCheck verify_strictly_increasing(const std::vector<LabeledValue>& seq, long precision) {
    OrderingCheck out;
    out.ok = true;
    const Real tie = pow2(-precision / 2, precision);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const Real& a = seq[i].value;
        const Real& b = seq[i + 1].value;
        const Real gap_tol = tie * (1L + max(abs(a), abs(b)));
        if (abs(b - a) <= gap_tol) {
            out.degenerate = true;
            out.ok = false;
            out.violations.push_back({i, seq[i].label + " < " + seq[i + 1].label,
                                      "tie: " + a.to_string(20) + " ~ " + b.to_string(20)});
        } else if (!(a < b)) {
            out.ok = false;
            out.violations.push_back({i, seq[i].label + " < " + seq[i + 1].label,
                                      a.to_string(20) + " >= " + b.to_string(20)});
        }
    }
    return out;
}

std::vector<LabeledValue> interleave(const std::vector<LabeledValue>& a,
                                     const std::vector<LabeledValue>& b) {
    if (a.size() != b.size() && a.size() != b.size() + 1)
        throw domain_error("interleave: incompatible list sizes");
    std::vector<LabeledValue> seq;
    seq.reserve(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        seq.push_back(a[i]);
        if (i < b.size()) seq.push_back(b[i]);
    }
    return seq;
}

std::vector<LabeledValue> label_list(const std::vector<Real>& values, const std::string& letter,
                                     long degree) {
    std::vector<LabeledValue> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out.push_back({letter + "[" + std::to_string(i + 1) + "," + std::to_string(degree) + "]",
                       values[i]});
    return out;
}

} // namespace qlag
