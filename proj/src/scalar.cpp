#include "l1geo/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace l1geo {

std::optional<Scalar> parse_scalar(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string s = text;
    // strip surrounding whitespace
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return std::nullopt;
    s = s.substr(b, e - b + 1);

    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        mpz_class n(num), d(den);
        if (d == 0) return std::nullopt;
        Scalar q(n, d);
        q.canonicalize();
        return q;
    }

    size_t dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (ip == "-" || ip == "+" || ip.empty()) ip += "0";
        if (!is_int(ip) || fp.empty()) return std::nullopt;
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        mpz_class scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        mpz_class whole(ip);
        mpz_class frac(fp);
        mpz_class num = ::abs(whole) * scale + frac;
        Scalar q(num, scale);
        q.canonicalize();
        if (neg) q = -q;
        return q;
    }

    if (!is_int(s)) return std::nullopt;
    return Scalar(mpz_class(s));
}

Scalar scalar_from_double(double v) {
    Scalar q;
    mpq_set_d(q.get_mpq_t(), v);
    return q;
}

std::string format_scalar(const Scalar& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double to_double(const Scalar& v) { return v.get_d(); }

}  // namespace l1geo
