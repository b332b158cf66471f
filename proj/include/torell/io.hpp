#ifndef TORELL_IO_HPP
#define TORELL_IO_HPP

#include "torell/genus.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace torell {

/// {"dim": n, "rays": [[int,...],...], "max_cones": [[ray_index,...],...]}
/// Ray indices 0-based; validated on load.
Fan load_fan(const std::string& path);

/// Scenario: {"fan": <fan file>, "delta": ["p/q",...], "z": [re,im],
/// "tau": [re,im], "samples": k, "seed": int}.  Paths are resolved
/// relative to the scenario file.
struct Scenario {
    ToricPair pair;
    EvalContext ctx;
    int samples = 10;
    unsigned long long seed = 42;
};

Scenario load_scenario(const std::string& path);

/// {"rays": [int,...], "coefficients": ["p/q",...]}
StringyDivisor load_divisor(const std::string& path);

} // namespace torell

#endif
