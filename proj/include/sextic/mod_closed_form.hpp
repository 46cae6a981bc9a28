#pragma once

/**
 * @file mod_closed_form.hpp
 * @brief Closed form for i^2 mod (scale*i + shift) and its linear
 *        residue families.
 *
 * Write i = scale*p + q with q in {1..scale} (note: q = scale rather than
 * q = 0 when scale divides i). Provided scale > shift, the remainder of
 * i^2 by scale*i + shift is
 *
 *   R = i*q - shift*p = (scale*q - shift)*p + q^2
 *
 * so for each residue class q the values of i^2 mod (scale*i + shift)
 * form one arithmetic progression ("family") with slope scale*q - shift
 * and intercept q^2. For (scale, shift) = (6, 1) the six families are
 * 5p+1, 11p+4, 17p+9, 23p+16, 29p+25, 35p+36.
 */

#include <optional>
#include <vector>

#include "sextic/arith.hpp"

namespace sextic {

/// i = period*steps + offset with offset in {1..period}.
struct ShiftedDecomposition {
    u64 period;
    u64 steps;  // >= 0
    u64 offset; // in [1, period]

    u64 value() const { return period * steps + offset; }

    friend bool operator==(const ShiftedDecomposition&, const ShiftedDecomposition&) = default;
};

/// One residue family: member(p) = slope*p + intercept.
struct LinearFamily {
    u64 offset;    // the q class in [1, scale]
    u64 slope;     // scale*q - shift, > 0
    u64 intercept; // q^2

    u64 member(u64 p) const { return checked_add(checked_mul(slope, p), intercept); }

    friend bool operator==(const LinearFamily&, const LinearFamily&) = default;
};

/// Position of a value inside a family: member(steps) of family `offset`.
struct FamilySlot {
    u64 offset; // q
    u64 steps;  // p

    friend bool operator==(const FamilySlot&, const FamilySlot&) = default;
};

/// Unique (steps, offset) with i = period*steps + offset, offset in
/// {1..period}. Requires i >= 1, period >= 1.
ShiftedDecomposition decompose(u64 i, u64 period);

/// i^2 mod (scale*i + shift) without forming i^2, via the closed form.
/// Requires scale > shift >= 1 and scale*i + shift within 64 bits.
u64 mod_square_closed(u64 i, u64 scale, u64 shift);

/// The `scale` residue families for (scale, shift), ordered by q ascending.
/// Requires scale > shift >= 1.
std::vector<LinearFamily> residue_families(u64 scale, u64 shift);

/// Smallest-q family slot with member(p) == value, if any family contains
/// value. Requires scale > shift >= 1, value >= 1.
std::optional<FamilySlot> family_membership(u64 value, u64 scale, u64 shift);

} // namespace sextic
