#pragma once

#include <cstdint>
#include <string>

#include "srtop/errors.hpp"

namespace srtop {

enum class CoeffKind { Rationals, PrimeField, Integers };

bool is_prime_u32(std::uint32_t n);

// Selects the exact-arithmetic backend: Q, F_p (p prime, p < 2^31) or Z.
struct CoefficientSpec {
    CoeffKind kind = CoeffKind::Rationals;
    std::uint32_t p = 0;  // set iff kind == PrimeField

    static CoefficientSpec rationals() { return {CoeffKind::Rationals, 0}; }
    static CoefficientSpec integers() { return {CoeffKind::Integers, 0}; }
    static CoefficientSpec prime_field(std::uint32_t p);

    bool is_field() const { return kind != CoeffKind::Integers; }
    std::string name() const;

    // "0" -> Q, "Z" -> integers, otherwise a prime.
    static CoefficientSpec parse(const std::string& s);

    bool operator==(const CoefficientSpec&) const = default;
};

}  // namespace srtop
