#include "lazyvor/rational.hpp"
#include "lazyvor/errors.hpp"

#include <cctype>
#include <cstdio>

namespace lazyvor {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    // Division canonicalizes (reduces and fixes the sign of the denominator);
    // the raw two-argument mpq constructor does not.
    return Rational(num) / Rational(den);
}

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto take_digits = [&](std::string_view& s) -> std::string {
        std::string out;
        while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
            out.push_back(s.front());
            s.remove_prefix(1);
        }
        return out;
    };
    const std::string num_digits = take_digits(text);
    if (num_digits.empty()) {
        throw SpecError("invalid rational '" + original + "': expected digits");
    }
    BigInt num(num_digits);
    BigInt den(1);
    if (!text.empty()) {
        if (text.front() != '/') {
            throw SpecError("invalid rational '" + original + "': unexpected '" +
                            std::string(1, text.front()) + "'");
        }
        text.remove_prefix(1);
        const std::string den_digits = take_digits(text);
        if (den_digits.empty() || !text.empty()) {
            throw SpecError("invalid rational '" + original + "': bad denominator");
        }
        den = BigInt(den_digits);
        if (den == 0) {
            throw SpecError("invalid rational '" + original + "': zero denominator");
        }
    }
    if (negative) {
        num = -num;
    }
    return make_rational(num, den);
}

std::string to_string(const Rational& r) {
    return r.str();
}

BigInt floor_int(const Rational& r) {
    BigInt q = numerator(r) / denominator(r); // truncates toward zero
    if (r < 0 && q * denominator(r) != numerator(r)) {
        q -= 1;
    }
    return q;
}

BigInt ceil_int(const Rational& r) {
    return -floor_int(-r);
}

Rational sqrt_upper_bound(const Rational& r) {
    if (r < 0) {
        throw DomainError("sqrt_upper_bound of negative value");
    }
    if (r == 0) {
        return Rational(0);
    }
    // sqrt(a/b) <= ceil(sqrt(a)) / floor(sqrt(b)); denominators are >= 1 so
    // the floor on the bottom is >= 1.
    const BigInt a = numerator(r);
    const BigInt b = denominator(r);
    BigInt sa = sqrt(a);
    if (sa * sa < a) {
        sa += 1;
    }
    const BigInt sb = sqrt(b);
    return make_rational(sa, sb);
}

std::string to_decimal_string(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.convert_to<double>());
    return buf;
}

} // namespace lazyvor
