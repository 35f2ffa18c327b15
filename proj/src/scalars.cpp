#include "koszul/scalars.hpp"

#include <charconv>
#include <limits>

namespace koszul {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw FieldError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    mpz_class z(std::to_string(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

FieldContext FieldContext::rationals(int required_char_floor)
{
    FieldContext ctx;
    ctx.floor_ = required_char_floor;
    return ctx;
}

FieldContext FieldContext::prime(std::uint64_t p, int required_char_floor)
{
    if (p >= (std::uint64_t{1} << 62))
        throw FieldError("prime modulus must be below 2^62");
    if (!is_prime(p))
        throw FieldError("modulus " + std::to_string(p) + " is not prime");
    if (required_char_floor >= 0 && p <= static_cast<std::uint64_t>(required_char_floor))
        throw FieldError("characteristic " + std::to_string(p) + " must exceed "
                         + std::to_string(required_char_floor));
    FieldContext ctx;
    ctx.kind_ = FieldKind::prime;
    ctx.p_ = p;
    ctx.floor_ = required_char_floor;
    return ctx;
}

FieldContext FieldContext::parse(const std::string& text, int required_char_floor)
{
    if (text == "rat" || text == "Q" || text == "rationals")
        return rationals(required_char_floor);
    if (text.rfind("p=", 0) == 0) {
        std::uint64_t p = 0;
        const char* first = text.data() + 2;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec != std::errc() || ptr != last)
            throw FieldError("cannot parse prime in '" + text + "'");
        return prime(p, required_char_floor);
    }
    throw FieldError("unknown field '" + text + "' (expected rat or p=<prime>)");
}

FieldContext FieldContext::with_floor(int required_char_floor) const
{
    if (is_rational())
        return rationals(std::max(floor_, required_char_floor));
    return prime(p_, std::max(floor_, required_char_floor));
}

std::string FieldContext::name() const
{
    return is_rational() ? std::string("rat") : "p=" + std::to_string(p_);
}

PrimeField::Elem PrimeField::inv(Elem a) const
{
    if (a == 0)
        throw FieldError("inverse of zero");
    // Fermat: a^(p-2)
    Elem result = 1;
    Elem base = a;
    std::uint64_t e = p_ - 2;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

PrimeField::Elem PrimeField::from_rational(const Rational& q) const
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    Elem n = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
    Elem d = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
    if (d == 0)
        throw FieldError("denominator vanishes modulo " + std::to_string(p_));
    return d == 1 ? n : mul(n, inv(d));
}

RationalField::Elem RationalField::inv(const Elem& a) const
{
    if (sgn(a) == 0)
        throw FieldError("inverse of zero");
    return Elem(1) / a;
}

namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        Wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

SmallRational narrow(Wide num, Wide den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0)
        return {0, 1};
    Wide g = wide_gcd(num, den);
    num /= g;
    den /= g;
    constexpr Wide lo = std::numeric_limits<std::int64_t>::min() + 1;
    constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
        throw SmallOverflow{};
    return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

} // namespace

SmallRational SmallRationalField::add(const Elem& a, const Elem& b) const
{
    if (a.den == 1 && b.den == 1)
        return narrow(Wide(a.num) + b.num, 1);
    return narrow(Wide(a.num) * b.den + Wide(b.num) * a.den, Wide(a.den) * b.den);
}

SmallRational SmallRationalField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

SmallRational SmallRationalField::neg(const Elem& a) const { return {-a.num, a.den}; }

SmallRational SmallRationalField::mul(const Elem& a, const Elem& b) const
{
    if (a.den == 1 && b.den == 1)
        return narrow(Wide(a.num) * b.num, 1);
    return narrow(Wide(a.num) * b.num, Wide(a.den) * b.den);
}

SmallRational SmallRationalField::inv(const Elem& a) const
{
    if (a.num == 0)
        throw FieldError("division by zero");
    return narrow(a.den, a.num);
}

SmallRational SmallRationalField::from_rational(const Rational& q) const
{
    if (!mpz_fits_slong_p(q.get_num_mpz_t()) || !mpz_fits_slong_p(q.get_den_mpz_t()))
        throw SmallOverflow{};
    return {mpz_get_si(q.get_num_mpz_t()), mpz_get_si(q.get_den_mpz_t())};
}

Rational SmallRationalField::to_rational(const Elem& a) const
{
    Rational q(static_cast<long>(a.num), static_cast<long>(a.den));
    q.canonicalize();
    return q;
}

} // namespace koszul
