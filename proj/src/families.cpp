#include "fixedpoint/families.hpp"

#include "fixedpoint/checked.hpp"

#include <stdexcept>
#include <string>

namespace fixedpoint {

namespace {

void require_positive(Weight x, const char *what) {
    if (x <= 0)
        throw std::invalid_argument(std::string(what) + " must be a positive integer, got " +
                                    std::to_string(x));
}

} // namespace

Datum sphere2(Weight a) {
    require_positive(a, "a");
    return canonicalize(Datum{{a}, {-a}});
}

Datum sphere6(Weight a, Weight b) {
    require_positive(a, "a");
    require_positive(b, "b");
    const Weight s = checked_add(a, b);
    return canonicalize(Datum{{-s, a, b}, {-a, -b, s}});
}

Datum cp2_triple(Weight a, Weight b) {
    require_positive(a, "a");
    require_positive(b, "b");
    const Weight s = checked_add(a, b);
    return canonicalize(Datum{{s, a}, {-a, b}, {-b, -s}});
}

Datum family(std::string_view name, Weight a, Weight b) {
    if (name == "sphere2")
        return sphere2(a);
    if (name == "sphere6")
        return sphere6(a, b);
    if (name == "cp2")
        return cp2_triple(a, b);
    throw std::invalid_argument("unknown family \"" + std::string(name) + "\"");
}

} // namespace fixedpoint
