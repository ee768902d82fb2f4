#pragma once

#include <cstdint>
#include <string>

#include "ei/errors.hpp"

namespace ei {

// Coefficient field for homology / regularity: the rationals or a prime field.
struct FieldSpec {
    bool rational = true;
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::int64_t p);
    static FieldSpec parse(const std::string& text); // "q", "f2", "fp:<p>"

    std::string to_string() const;
    bool operator==(const FieldSpec&) const = default;
};

} // namespace ei
