#include "sextic/mod_closed_form.hpp"

#include <stdexcept>

namespace sextic {

namespace {

void require_scale_gt_shift(u64 scale, u64 shift) {
    if (shift == 0) throw std::invalid_argument("shift must be >= 1");
    if (scale <= shift) throw std::invalid_argument("scale must exceed shift");
}

} // namespace

ShiftedDecomposition decompose(u64 i, u64 period) {
    if (i == 0) throw std::invalid_argument("decompose: i must be >= 1");
    if (period == 0) throw std::invalid_argument("decompose: period must be >= 1");
    u64 offset = i % period;
    u64 steps = i / period;
    if (offset == 0) { // multiples of the period take offset = period
        offset = period;
        steps -= 1;
    }
    return ShiftedDecomposition{period, steps, offset};
}

u64 mod_square_closed(u64 i, u64 scale, u64 shift) {
    require_scale_gt_shift(scale, shift);
    if (i == 0) throw std::invalid_argument("mod_square_closed: i must be >= 1");
    checked_add(checked_mul(scale, i), shift); // divisor must fit 64 bits
    auto [period, steps, offset] = decompose(i, scale);
    // (scale*q - shift)*p + q^2; both terms fit because the result is
    // below the divisor scale*i + shift.
    (void)period;
    return (scale * offset - shift) * steps + offset * offset;
}

std::vector<LinearFamily> residue_families(u64 scale, u64 shift) {
    require_scale_gt_shift(scale, shift);
    std::vector<LinearFamily> families;
    families.reserve(scale);
    for (u64 q = 1; q <= scale; ++q)
        families.push_back(LinearFamily{q, checked_mul(scale, q) - shift, checked_mul(q, q)});
    return families;
}

std::optional<FamilySlot> family_membership(u64 value, u64 scale, u64 shift) {
    require_scale_gt_shift(scale, shift);
    if (value == 0) throw std::invalid_argument("family_membership: value must be >= 1");
    for (u64 q = 1; q <= scale; ++q) {
        u64 intercept = checked_mul(q, q);
        if (intercept > value) continue; // member(p) >= intercept
        u64 slope = checked_mul(scale, q) - shift;
        if ((value - intercept) % slope == 0)
            return FamilySlot{q, (value - intercept) / slope};
    }
    return std::nullopt;
}

} // namespace sextic
