#include <cctype>
#include <cstdlib>
#include <string>

#include "fermatlab/errors.hpp"
#include "fermatlab/scalars.hpp"

namespace fermatlab {

namespace {

struct ParsedReal {
    double value;
    Rational exact;
};

bool allDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

ParsedReal parseReal(std::string_view text, std::string_view whole) {
    auto fail = [&] { return InvalidInput("malformed number '" + std::string(whole) + "'"); };
    if (text.empty()) throw fail();

    std::string_view body = text;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!allDigits(num) || !allDigits(den)) throw fail();
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw InvalidInput("zero denominator in '" + std::string(whole) + "'");
        Rational q(n, d);
        q.canonicalize();
        if (negative) q = -q;
        return {q.get_d(), q};
    }

    // Decimal with optional exponent, converted exactly.
    std::string_view mantissa = body;
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = body.substr(0, e);
        std::string_view exp_text = body.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!allDigits(exp_text) || exp_text.size() > 4) throw fail();
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = mantissa.substr(0, dot);
        std::string_view frac_part = mantissa.substr(dot + 1);
        if ((!int_part.empty() && !allDigits(int_part)) || (!frac_part.empty() && !allDigits(frac_part)) ||
            (int_part.empty() && frac_part.empty())) {
            throw fail();
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!allDigits(mantissa)) throw fail();
        digits = std::string(mantissa);
    }
    mpz_class n(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(n, scale) : Rational(n * scale);
    q.canonicalize();
    if (negative) q = -q;
    const double value = std::strtod(std::string(text).c_str(), nullptr);
    return {value, q};
}

}  // namespace

ParsedNumber parseNumber(std::string_view text) {
    if (text.empty()) throw InvalidInput("empty number");
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            throw InvalidInput("numbers must not contain spaces: '" + std::string(text) + "'");
        }
    }

    std::size_t split = std::string_view::npos;
    for (std::size_t k = 1; k < text.size(); ++k) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') split = k;
    }

    std::string_view real_text = "0";
    std::string_view imag_text;
    bool has_imag = false;
    if (text.back() == 'i') {
        has_imag = true;
        std::string_view head = text.substr(0, text.size() - 1);
        if (split != std::string_view::npos) {
            real_text = head.substr(0, split);
            imag_text = head.substr(split);
        } else {
            imag_text = head;
        }
    } else {
        if (split != std::string_view::npos) throw InvalidInput("malformed number '" + std::string(text) + "'");
        real_text = text;
    }

    ParsedReal re = parseReal(real_text, text);
    ParsedReal im{0.0, Rational(0)};
    if (has_imag) {
        if (imag_text.empty() || imag_text == "+") {
            im = {1.0, Rational(1)};
        } else if (imag_text == "-") {
            im = {-1.0, Rational(-1)};
        } else {
            im = parseReal(imag_text, text);
        }
    }
    return {Complex(re.value, im.value), RationalComplex(re.exact, im.exact)};
}

}  // namespace fermatlab
