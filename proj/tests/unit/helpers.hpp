#pragma once

#include "haan/error.hpp"
#include "haan/model.hpp"

#include <doctest.h>

#include <vector>

namespace haan::test {

inline Instance make(std::size_t n, std::size_t m, std::vector<Edge> edges,
                     std::vector<std::vector<HouseId>> prefs)
{
    return validate_instance(RawInstance{n, m, std::move(edges), std::move(prefs)});
}

/// Triangle where every agent prefers house 0.
inline Instance triangle_all_h0(std::size_t m)
{
    return make(3, m, {{0, 1}, {1, 2}, {0, 2}}, {{0}, {0}, {0}});
}

template <class Fn>
ErrorCode error_of(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::IoError;
}

} // namespace haan::test
