#pragma once

#include "json.hpp" // vendored nlohmann/json

#include "qlag/checks.hpp"

namespace qlag {

/// Report serialization.  All numerics are emitted as decimal strings with an
/// explicit digit count so output is precision-faithful and byte-reproducible.
struct PrintOptions {
    int digits = 10;
};

std::string fmt(const Real& x, const PrintOptions& opt);

nlohmann::json to_json(const PolySpec& spec, const PrintOptions& opt = {});
nlohmann::json to_json(const ZeroList& zl, const PrintOptions& opt = {});
nlohmann::json to_json(const InterlacingReport& rep, const PrintOptions& opt = {});
nlohmann::json to_json(const CommonZeroReport& rep, const PrintOptions& opt = {});
nlohmann::json to_json(const BoundsRecord& rec, const PrintOptions& opt = {});
nlohmann::json to_json(const MomentReport& rep, const PrintOptions& opt = {});
nlohmann::json to_json(const DeltaSearchResult& res, const PrintOptions& opt = {});
nlohmann::json to_json(const RelationEval& ev, const PrintOptions& opt = {});

/// CSV for the reference bounds table; column order:
/// q,n,delta,B_n,z_1n,A_n
std::string bounds_csv(const std::vector<BoundsRecord>& rows, const PrintOptions& opt = {});

} // namespace qlag
