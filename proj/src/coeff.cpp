#include "srtop/coeff.hpp"

namespace srtop {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

CoefficientSpec CoefficientSpec::prime_field(std::uint32_t p) {
    if (p >= (1u << 31))
        throw ValidationError("prime field characteristic must be < 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
    return {CoeffKind::PrimeField, p};
}

std::string CoefficientSpec::name() const {
    switch (kind) {
        case CoeffKind::Rationals: return "Q";
        case CoeffKind::Integers: return "Z";
        case CoeffKind::PrimeField: return "F" + std::to_string(p);
    }
    return "?";
}

CoefficientSpec CoefficientSpec::parse(const std::string& s) {
    if (s == "Z" || s == "z") return integers();
    if (s == "0" || s == "Q" || s == "q") return rationals();
    try {
        unsigned long v = std::stoul(s);
        return prime_field(static_cast<std::uint32_t>(v));
    } catch (const ValidationError&) {
        throw;
    } catch (...) {
        throw UsageError("cannot parse coefficient spec '" + s + "' (expected 0, a prime, or Z)");
    }
}

}  // namespace srtop
