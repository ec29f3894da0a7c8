#include "torrig/rational.hpp"

#include <cctype>

namespace torrig {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text, bool allow_decimal) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s = s.substr(1);
    }

    Rat value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw parse_error("malformed rational '" + text + "'");
        // base 10 always: the auto-detecting constructor reads "025" as octal
        Int n(num, 10), d(den, 10);
        if (d == 0) throw parse_error("zero denominator in '" + text + "'");
        value = Rat(n, d);
        value.canonicalize();
    } else if (dot != std::string::npos) {
        if (!allow_decimal)
            throw parse_error("decimal '" + text +
                              "' not accepted outside float mode; use a rational like 1/4");
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
            throw parse_error("malformed decimal '" + text + "'");
        Int num(whole + frac, 10);
        Int den(1);
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        value = Rat(num, den);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw parse_error("malformed number '" + text + "'");
        value = Rat(Int(s, 10));
    }
    return negative ? Rat(-value) : value;
}

}  // namespace torrig
