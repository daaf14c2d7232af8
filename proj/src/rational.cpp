#include "abcu/rational.hpp"

#include <cctype>
#include <cstddef>

#include "abcu/errors.hpp"

namespace abcu {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ValidationError("empty rational literal");
    std::string s = text.substr(begin, end - begin + 1);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) throw ValidationError("malformed rational literal '" + text + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ValidationError("malformed fraction '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw ValidationError("zero denominator in '" + text + "'");
        value = Rational(mpz_class(num), d);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ValidationError("malformed decimal '" + text + "'");
        if (!whole.empty() && !all_digits(whole))
            throw ValidationError("malformed decimal '" + text + "'");
        if (!frac.empty() && !all_digits(frac))
            throw ValidationError("malformed decimal '" + text + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class numerator = whole.empty() ? mpz_class(0) : mpz_class(whole);
        numerator *= scale;
        if (!frac.empty()) numerator += mpz_class(frac);
        value = Rational(numerator, scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw ValidationError("malformed rational literal '" + text + "'");
        value = Rational(mpz_class(s));
    }
    if (negative) value = -value;
    return value;
}

std::string to_fraction_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal_string(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    bool negative = sgn(r) < 0;
    mpz_class num = abs(r.get_num());
    mpz_class den = r.get_den();

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

    // Round half-up at the last printed digit: floor((num*scale*2 + den) / (den*2)).
    mpz_class scaled = num * scale * 2 + den;
    mpz_class rounded = scaled / (den * 2);

    mpz_class whole = rounded / scale;
    mpz_class frac = rounded % scale;

    std::string out = negative && (whole != 0 || frac != 0) ? "-" : "";
    out += whole.get_str();
    if (frac != 0) {
        std::string f = frac.get_str();
        f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

bool is_probability(const Rational& r) { return sgn(r) >= 0 && r <= 1; }

Rational rational_pow(const Rational& base, unsigned long exponent) {
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    out.canonicalize();
    return out;
}

}  // namespace abcu
