#include "qlag/report_json.hpp"

#include <sstream>

namespace qlag {

using nlohmann::json;

std::string fmt(const Real& x, const PrintOptions& opt) { return x.to_string(opt.digits); }

namespace {

json pattern_json(const std::vector<LabeledValue>& pattern, const PrintOptions& opt) {
    json arr = json::array();
    for (const LabeledValue& lv : pattern)
        arr.push_back({{"label", lv.label}, {"value", fmt(lv.value, opt)}});
    return arr;
}

json violations_json(const std::vector<Violation>& vs) {
    json arr = json::array();
    for (const Violation& v : vs)
        arr.push_back({{"index", v.index}, {"expected", v.expected}, {"detail", v.detail}});
    return arr;
}

} // namespace

json to_json(const PolySpec& spec, const PrintOptions& opt) {
    return json{{"q", fmt(spec.params.q, opt)},
                {"delta", fmt(spec.params.delta, opt)},
                {"shift", spec.shift},
                {"degree", spec.degree},
                {"precision_bits", spec.params.precision}};
}

json to_json(const ZeroList& zl, const PrintOptions& opt) {
    json zeros = json::array();
    for (const Real& z : zl.zeros) zeros.push_back(fmt(z, opt));
    return json{{"spec", to_json(zl.spec, opt)},
                {"zeros", zeros},
                {"neg_count", zl.neg_count},
                {"certified_tol", fmt(zl.tol, opt)}};
}

json to_json(const InterlacingReport& rep, const PrintOptions& opt) {
    return json{{"theorem", rep.theorem_id},
                {"q", fmt(rep.q, opt)},
                {"delta", fmt(rep.delta, opt)},
                {"n", rep.n},
                {"verdict", verdict_name(rep.verdict)},
                {"degenerate", rep.degenerate},
                {"note", rep.note},
                {"pattern", pattern_json(rep.pattern, opt)},
                {"violations", violations_json(rep.violations)}};
}

json to_json(const CommonZeroReport& rep, const PrintOptions& opt) {
    json nc = json::array();
    for (const Real& z : rep.non_common) nc.push_back(fmt(z, opt));
    return json{{"kind", common_zero_kind_name(rep.kind)},
                {"q", fmt(rep.q, opt)},
                {"delta", fmt(rep.delta, opt)},
                {"n", rep.n},
                {"point", fmt(rep.point, opt)},
                {"residual", fmt(rep.residual, opt)},
                {"rel_gap", fmt(rep.rel_gap, opt)},
                {"is_common", rep.is_common},
                {"observed_index", rep.observed_index},
                {"index_in_range", rep.index_in_range},
                {"interlace_verdict", verdict_name(rep.interlace_verdict)},
                {"degenerate", rep.degenerate},
                {"non_common", nc},
                {"pattern", pattern_json(rep.pattern, opt)},
                {"violations", violations_json(rep.violations)},
                {"note", rep.note}};
}

json to_json(const BoundsRecord& rec, const PrintOptions& opt) {
    return json{{"q", fmt(rec.q, opt)},
                {"n", rec.n},
                {"delta", fmt(rec.delta, opt)},
                {"neg_c", fmt(rec.neg_c, opt)},
                {"B", fmt(rec.B, opt)},
                {"z1", fmt(rec.z1, opt)},
                {"A", fmt(rec.A, opt)},
                {"chain_ok", rec.chain_ok},
                {"violation", rec.violation}};
}

json to_json(const MomentReport& rep, const PrintOptions& opt) {
    return json{{"i", rep.index},
                {"n", rep.n},
                {"q", fmt(rep.q, opt)},
                {"delta", fmt(rep.delta, opt)},
                {"mu", fmt(rep.mu, opt)},
                {"abs_sum", fmt(rep.abs_sum, opt)},
                {"tail_small", fmt(rep.tail_small, opt)},
                {"tail_large", fmt(rep.tail_large, opt)},
                {"j_min", rep.j_min},
                {"j_max", rep.j_max},
                {"verdict", rep.vanishes ? "vanishes" : "nonzero"}};
}

json to_json(const DeltaSearchResult& res, const PrintOptions& opt) {
    return json{{"delta_star", fmt(res.delta_star, opt)},
                {"point", fmt(res.point, opt)},
                {"sign_changes", res.sign_changes},
                {"panels", res.panels}};
}

json to_json(const RelationEval& ev, const PrintOptions& opt) {
    return json{{"residual", fmt(ev.residual, opt)},
                {"lhs", fmt(ev.lhs, opt)},
                {"rhs", fmt(ev.rhs, opt)},
                {"scale", fmt(ev.scale, opt)},
                {"within_contract", ev.within_contract}};
}

std::string bounds_csv(const std::vector<BoundsRecord>& rows, const PrintOptions& opt) {
    std::ostringstream os;
    os << "q,n,delta,B_n,z_1n,A_n\n";
    for (const BoundsRecord& r : rows)
        os << fmt(r.q, opt) << ',' << r.n << ',' << fmt(r.delta, opt) << ',' << fmt(r.B, opt)
           << ',' << fmt(r.z1, opt) << ',' << fmt(r.A, opt) << '\n';
    return os.str();
}

} // namespace qlag
