#pragma once

#include <optional>

#include "qlag/real.hpp"

namespace qlag {

/// q^x for q in (0,1).  Non-negative integer x goes through binary
/// exponentiation (sign-exact); everything else through exp(x ln q).
Real pow_real(const Real& q, const Real& x);

/// Convenience: q^(x+k) for integer offsets of a Real exponent.
Real pow_real_shifted(const Real& q, const Real& x, long k);

/// Finite q-Pochhammer (a;q)_k = prod_{j<k} (1 - a q^j).
Real qpoch(const Real& a, const Real& q, long k);

/// Infinite product (a;q)_inf, truncated once |a q^k| drops below
/// 2^-(P+8): the next factor then differs from 1 by less than representable
/// noise, and the dropped tail is below 2^-(P+8)/(1-q) relative.
Real qpoch_inf(const Real& a, const Real& q);

/// q-Pochhammer symbol as a value type: base a, nome q, length k
/// (std::nullopt = infinite).
struct QPochhammer {
    Real base;
    Real nome;
    std::optional<long> length; // nullopt -> infinite product

    Real eval() const {
        return length ? qpoch(base, nome, *length) : qpoch_inf(base, nome);
    }
};

namespace detail {
void require_nome(const Real& q);
}

} // namespace qlag
