#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace chainmap {

// Exact rational scalar, kept in lowest terms with positive denominator by
// the backend.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// The two-element field.
struct Z2 {
    uint8_t v = 0;

    Z2() = default;
    explicit constexpr Z2(int x) : v(static_cast<uint8_t>(x & 1)) {}

    friend Z2 operator+(Z2 a, Z2 b) { return Z2(a.v ^ b.v); }
    friend Z2 operator-(Z2 a, Z2 b) { return Z2(a.v ^ b.v); }
    friend Z2 operator*(Z2 a, Z2 b) { return Z2(a.v & b.v); }
    friend Z2 operator/(Z2 a, Z2 b) {
        if (b.v == 0) throw std::domain_error("Z2 division by zero");
        return a;
    }
    Z2 operator-() const { return *this; }
    Z2& operator+=(Z2 o) { v ^= o.v; return *this; }
    Z2& operator-=(Z2 o) { v ^= o.v; return *this; }
    Z2& operator*=(Z2 o) { v &= o.v; return *this; }
    friend bool operator==(Z2 a, Z2 b) { return a.v == b.v; }
    friend bool operator!=(Z2 a, Z2 b) { return a.v != b.v; }
};

// Scalar-type hooks used by the generic linear algebra.  Floating point gets
// an absolute zero threshold; exact fields use true zero.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr const char* name = "q";
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long n) { return Rational(n); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static double to_double(const Rational& x) { return x.convert_to<double>(); }
    static std::string to_string(const Rational& x) { return x.str(); }
};

template <>
struct FieldTraits<Z2> {
    static constexpr const char* name = "z2";
    static constexpr bool exact = true;
    static Z2 zero() { return Z2(0); }
    static Z2 one() { return Z2(1); }
    static Z2 from_int(long long n) { return Z2(static_cast<int>(n & 1)); }
    static bool is_zero(Z2 x) { return x.v == 0; }
    static double to_double(Z2 x) { return x.v; }
    static std::string to_string(Z2 x) { return x.v ? "1" : "0"; }
};

template <>
struct FieldTraits<double> {
    static constexpr const char* name = "r64";
    static constexpr bool exact = false;
    // Shared absolute threshold for treating a floating value as zero.
    static constexpr double zero_tol = 1e-9;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long long n) { return static_cast<double>(n); }
    static bool is_zero(double x) { return std::abs(x) <= zero_tol; }
    static double to_double(double x) { return x; }
    static std::string to_string(double x) { return std::to_string(x); }
};

enum class FieldTag { Q, Z2Field, R64 };

inline const char* field_tag_name(FieldTag t) {
    switch (t) {
        case FieldTag::Q: return "q";
        case FieldTag::Z2Field: return "z2";
        default: return "r64";
    }
}

}  // namespace chainmap
