#include "ajforge/groups.hpp"

namespace ajforge {

std::string to_string(DiamondVariant v)
{
    switch (v) {
    case DiamondVariant::Units: return "units";
    case DiamondVariant::Diamond: return "diamond";
    case DiamondVariant::Bar: return "diamond-bar";
    case DiamondVariant::Hat: return "diamond-hat";
    }
    return "?";
}

} // namespace ajforge
