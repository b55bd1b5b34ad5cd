#pragma once

#include <cstdint>

namespace antipodal {

using Count = std::uint64_t;

// C(x, y), zero whenever y < 0, x < 0 or y > x. Intermediates are carried in
// 128 bits; a result that does not fit in 64 bits throws ErrorCode::Overflow.
Count binomial(std::int64_t x, std::int64_t y);

Count factorial(int x);

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

} // namespace antipodal
