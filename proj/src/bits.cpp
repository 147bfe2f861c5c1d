#include "shiftmin/bits.hpp"

#include <algorithm>

namespace shiftmin {

std::string to_decimal(Wide x)
{
    if (x == 0)
        return "0";
    std::string digits;
    while (x != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace shiftmin
