#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "srtop/coeff.hpp"
#include "srtop/errors.hpp"

namespace srtop {

// Exact rational arithmetic backed by GMP. Elements are kept canonical
// (lowest terms, positive denominator) by mpq_class itself.
struct RationalField {
    using Elem = mpq_class;

    static CoefficientSpec spec() { return CoefficientSpec::rationals(); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    bool is_zero(const Elem& x) const { return sgn(x) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw InvariantViolation("division by zero in Q");
        return Elem(1) / a;
    }
};

// F_p with p < 2^31; residues stored in [0, p), products fit in 64 bits.
struct PrimeField {
    using Elem = std::uint64_t;

    std::uint64_t p;

    explicit PrimeField(std::uint32_t prime) : p(prime) {}
    explicit PrimeField(const CoefficientSpec& s) : p(CoefficientSpec::prime_field(s.p).p) {}

    CoefficientSpec spec() const { return CoefficientSpec::prime_field(static_cast<std::uint32_t>(p)); }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elem>(r);
    }
    bool is_zero(const Elem& x) const { return x == 0; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw InvariantViolation("division by zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
};

}  // namespace srtop
