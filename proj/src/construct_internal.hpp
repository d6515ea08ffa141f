#pragma once

#include <string>
#include <vector>

#include "ltdkit/construct.hpp"
#include "ltdkit/graph.hpp"

namespace ltdkit::detail {

long floor_two_thirds(long n);
long strict_two_thirds_cap(long n);
long ceil_half(long n);

Certificate finish_certificate(const Graph& g, VertexSet set, Theorem t, Rational bound,
                               bool strict, long cap, std::vector<std::string> trace);

}  // namespace ltdkit::detail
