#include "qap/poly_text.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "qap/errors.hpp"

namespace qap {

namespace {

// Normalize: strip spaces, map U+2212 to '-', lowercase x to X.
std::string normalize(const std::string& in) {
    std::string out;
    out.reserve(in.size());
    for (size_t i = 0; i < in.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(in[i]);
        if (std::isspace(c)) continue;
        // U+2212 is e2 88 92
        if (c == 0xe2 && i + 2 < in.size() && static_cast<unsigned char>(in[i + 1]) == 0x88 &&
            static_cast<unsigned char>(in[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
            continue;
        }
        out.push_back(c == 'x' ? 'X' : in[i]);
    }
    return out;
}

IntPoly parse_coeff_list(const std::string& s) {
    if (s.size() < 2 || s.back() != ']') throw domain_error("unterminated coefficient list: " + s);
    std::vector<Int> coeffs;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) throw domain_error("empty coefficient list");
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw domain_error("empty coefficient in list");
        try {
            coeffs.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw domain_error("bad coefficient '" + item + "'");
        }
    }
    return IntPoly(std::move(coeffs));
}

IntPoly parse_terms(const std::string& s) {
    std::map<int, Int> terms;
    size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw domain_error("dangling sign in polynomial");
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        if (i < s.size() && s[i] == '*') ++i;
        int exp = 0;
        if (i < s.size() && s[i] == 'X') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
                if (e.empty()) throw domain_error("missing exponent after '^'");
                exp = std::stoi(e);
                if (exp > 64) throw domain_error("exponent too large");
            }
        } else if (digits.empty()) {
            throw domain_error("expected coefficient or X at '" + s.substr(i) + "'");
        }
        terms[exp] += sign * coeff;
        any = true;
    }
    if (!any) throw domain_error("empty polynomial");
    int deg = terms.rbegin()->first;
    std::vector<Int> coeffs(static_cast<size_t>(deg) + 1, Int(0));
    for (auto& [e, c] : terms) coeffs[static_cast<size_t>(e)] = c;
    return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
    std::string s = normalize(text);
    if (s.empty()) throw domain_error("empty polynomial text");
    if (s[0] == '[') return parse_coeff_list(s);
    return parse_terms(s);
}

std::pair<IntPoly, int> parse_poly_at(const std::string& text) {
    size_t at = text.rfind('@');
    if (at == std::string::npos)
        throw domain_error("expected \"<poly>@<k>\" with a root index, got: " + text);
    std::string idx = text.substr(at + 1);
    if (idx.empty()) throw domain_error("missing root index after '@'");
    for (char c : idx)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw domain_error("root index must be a nonnegative integer, got '" + idx + "'");
    return {parse_poly(text.substr(0, at)), std::stoi(idx)};
}

Rat parse_rat(const std::string& text) {
    std::string s = normalize(text);
    if (s.empty()) throw domain_error("empty rational text");
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw domain_error("zero denominator in '" + text + "'");
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw domain_error("bad rational '" + text + "'");
    }
}

std::string coeff_list_str(const IntPoly& p) {
    std::ostringstream os;
    os << "[";
    if (p.is_zero()) {
        os << "0";
    } else {
        for (int i = 0; i <= p.degree(); ++i) {
            if (i) os << ",";
            os << p.coeff(i).get_str();
        }
    }
    os << "]";
    return os.str();
}

}  // namespace qap
