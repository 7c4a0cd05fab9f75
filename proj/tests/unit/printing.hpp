#pragma once

#include <doctest.h>

#include "spinblock/laurent.hpp"

namespace doctest {
template <>
struct StringMaker<spinblock::LaurentPoly> {
    static String convert(const spinblock::LaurentPoly& f) { return f.to_string().c_str(); }
};
}  // namespace doctest
