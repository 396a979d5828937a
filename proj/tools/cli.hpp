#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sgd/core.hpp"

namespace sgd::cli {

/// Runs one command line (program name excluded). Returns 0 on success, 1 on a
/// computation error, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds a graph from a generator string such as "cycle:5:allneg",
/// "path:3:+-" or "random:8:p=0.4:seed=3". `seed` is used when the string
/// carries none. Throws InvalidArgument on a malformed string.
WeightedSignedGraph generate_from_spec(std::string_view spec, std::uint64_t seed = 1);

}  // namespace sgd::cli
