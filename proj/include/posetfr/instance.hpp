#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "posetfr/group_space.hpp"

namespace posetfr {

struct RingConfig {
    enum class Kind { integer, rational, modp, symbolic };
    Kind kind = Kind::integer;
    std::int64_t modulus = 10007;

    static RingConfig parse(const std::string& text);  // "int", "rational", "modp:<p>", "symbolic"
    std::string str() const;
};

// Parsed instance file: poset + per-element cyclic factor lists + optional
// ring/parameter section. tau/eta literals are kept as strings and parsed by
// whichever ring ends up selected.
struct Instance {
    Poset poset;
    AmbientSpace space;
    std::optional<RingConfig> ring;
    bool generic_params = false;
    std::map<std::string, std::string> tau_literals;
    std::map<std::string, std::string> eta_literals;
};

Instance load_instance_text(const std::string& json_text);
Instance load_instance_file(const std::string& path);

}  // namespace posetfr
