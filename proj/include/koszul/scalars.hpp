#ifndef KOSZUL_SCALARS_HPP
#define KOSZUL_SCALARS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace koszul {

/// Exact rational. gmpxx keeps values canonical as long as they are built
/// through make_rational() or arithmetic; never construct from raw mpq_t.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class FieldKind { rationals, prime };

/// The coefficient field of a computation: exact rationals or GF(p).
///
/// A context carries the characteristic floor it was created against, so
/// downstream code can assert "char 0 or char > floor" hypotheses without
/// re-deriving them.
class FieldContext {
public:
    FieldContext() = default;

    static FieldContext rationals(int required_char_floor = 0);
    /// Throws FieldError if p is not prime or p <= required_char_floor.
    static FieldContext prime(std::uint64_t p, int required_char_floor = 0);
    /// Parses "rat" or "p=<prime>".
    static FieldContext parse(const std::string& text, int required_char_floor = 0);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::rationals; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const { return p_; }
    int char_floor() const { return floor_; }

    /// Same field, re-validated against a stricter floor.
    FieldContext with_floor(int required_char_floor) const;

    std::string name() const;

    bool operator==(const FieldContext&) const = default;

private:
    FieldKind kind_ = FieldKind::rationals;
    std::uint64_t p_ = 0;
    int floor_ = 0;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) for p < 2^62.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {}

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const
    {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const
    {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem inv(Elem a) const;
    /// Throws FieldError when the denominator vanishes mod p.
    Elem from_rational(const Rational& q) const;
    Rational to_rational(Elem a) const { return Rational(static_cast<unsigned long>(a)); }

private:
    std::uint64_t p_;
};

/// Arithmetic in Q, same interface as PrimeField.
class RationalField {
public:
    using Elem = Rational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const;
    Elem from_rational(const Rational& q) const { return q; }
    Rational to_rational(const Elem& a) const { return a; }
};

/// Raised by SmallRationalField when a result leaves the 64-bit range.
struct SmallOverflow {};

/// Rationals with 64-bit numerator and denominator, reduced, denominator
/// positive. Any operation that would overflow throws SmallOverflow so the
/// caller can redo the work with Rational.
struct SmallRational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

class SmallRationalField {
public:
    using Elem = SmallRational;

    Elem zero() const { return {0, 1}; }
    Elem one() const { return {1, 1}; }
    bool is_zero(const Elem& a) const { return a.num == 0; }
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem from_rational(const Rational& q) const;
    Rational to_rational(const Elem& a) const;
};

} // namespace koszul

#endif // KOSZUL_SCALARS_HPP
