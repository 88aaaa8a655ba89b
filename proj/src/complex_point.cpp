#include "zetaverify/complex_point.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace zv {

namespace {

double parse_real(const std::string& text, const std::string& whole) {
    if (text.empty() || text == "+")
        return 1.0;
    if (text == "-")
        return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw FormatError("cannot parse complex point '" + whole + "'");
    }
    if (used != text.size())
        throw FormatError("cannot parse complex point '" + whole + "'");
    return v;
}

}  // namespace

ComplexPoint parse_point(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            text += c;
    if (text.empty())
        throw FormatError("empty complex point");
    if (text.back() != 'i' && text.back() != 'j')
        return {parse_real(text, raw), 0.0};
    text.pop_back();
    // split at the last sign that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos)
        return {0.0, parse_real(text, raw)};
    return {parse_real(text.substr(0, split), raw), parse_real(text.substr(split), raw)};
}

std::string to_string(const ComplexPoint& s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", s.sigma(), s.t());
    return buf;
}

}  // namespace zv
