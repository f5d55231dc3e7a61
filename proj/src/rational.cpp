#include "effbound/rational.hpp"

#include "effbound/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace effbound {

Integer floor(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer least_integer_above(const Rational& q) { return floor(q) + 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_decimal(const Rational& q)
{
    const double d = q.get_d();
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), d);
    if (ec != std::errc{})
        return "nan";
    return std::string(buf.data(), end);
}

std::string to_string(const ExtendedRational& q)
{
    return q.infinite ? std::string("+inf") : to_string(q.value);
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto fail = [&]() -> Rational {
        throw Error(Errc::ParseError, "not a rational number: '" + std::string(text) + "'");
    };

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return fail();
        const Integer d{std::string(den)};
        if (d == 0)
            return fail();
        value = Rational(Integer{std::string(num)}, d);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            return fail();
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
        value = Rational(w * scale + Integer(std::string(frac)), scale);
        value.canonicalize();
    } else {
        if (!all_digits(s))
            return fail();
        value = Rational(Integer(std::string(s)));
    }
    return negative ? Rational(-value) : value;
}

bool exact_sqrt(const Rational& q, Rational& root)
{
    if (q < 0)
        return false;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
        return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

} // namespace effbound
