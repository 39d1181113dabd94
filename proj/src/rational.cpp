#include "hlf/rational.hpp"

#include <algorithm>
#include <cctype>

namespace hlf {

namespace {

Int pow10(std::size_t k) {
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= 10;
    return r;
}

bool parse_int(std::string_view text, Int& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '-') {
        neg = true;
        i = 1;
        if (i == text.size()) return false;
    }
    Int v = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = neg ? Int(-v) : v;
    return true;
}

}  // namespace

Rational::Rational(Int num, Int den) {
    if (den.is_zero())
        throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    Int num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(text, num))
            throw std::invalid_argument("rational: malformed literal '" + std::string(text) + "'");
    } else {
        if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den))
            throw std::invalid_argument("rational: malformed literal '" + std::string(text) + "'");
        if (den <= 0)
            throw std::invalid_argument("rational: denominator must be positive in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Int Rational::as_integer() const {
    if (!is_integer())
        throw std::domain_error("rational: " + fraction_string() + " is not an integer");
    return num();
}

Int Rational::floor() const {
    Int q = num() / den();
    if (num() < 0 && q * den() != num()) --q;
    return q;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_.is_zero())
        throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::fraction_string() const {
    return num().str() + "/" + den().str();
}

std::string Rational::decimal_string(int significant_digits) const {
    const int sig = significant_digits;
    if (sig < 1)
        throw std::invalid_argument("rational: significant_digits must be >= 1");
    if (is_zero()) return "0";

    const bool neg = sign() < 0;
    Int a = num();
    if (neg) a = -a;
    const Int b = den();

    // Decimal exponent e with 10^e <= a/b < 10^(e+1).
    long long e;
    if (a >= b) {
        Int q = a / b;
        e = static_cast<long long>(q.str().size()) - 1;
    } else {
        long long k = 0;
        Int t = a;
        while (t < b) {
            t *= 10;
            ++k;
        }
        e = -k;
    }

    // Round a/b to sig significant digits: digits = round(a * 10^shift / b).
    long long shift = sig - 1 - e;
    Int N = a, D = b;
    if (shift >= 0)
        N *= pow10(static_cast<std::size_t>(shift));
    else
        D *= pow10(static_cast<std::size_t>(-shift));
    Int digits = N / D;
    Int rem = N - digits * D;
    if (2 * rem >= D) ++digits;
    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > sig) {  // 999... rounded up to 1000...
        ds.pop_back();
        ++e;
    }

    std::string out;
    if (neg) out += '-';
    if (e < -4 || e >= sig) {
        // Scientific: d.ddddde±XX with trailing zeros stripped.
        std::string mant(1, ds[0]);
        std::string frac = ds.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) mant += "." + frac;
        out += mant;
        out += 'e';
        out += (e < 0) ? '-' : '+';
        std::string ex = std::to_string(e < 0 ? -e : e);
        if (ex.size() < 2) ex.insert(0, "0");
        out += ex;
    } else if (e >= 0) {
        std::string ip = ds.substr(0, static_cast<std::size_t>(e) + 1);
        std::string fp = ds.substr(static_cast<std::size_t>(e) + 1);
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        out += ip;
        if (!fp.empty()) out += "." + fp;
    } else {
        std::string fp(static_cast<std::size_t>(-e - 1), '0');
        fp += ds;
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        out += "0." + fp;
    }
    return out;
}

}  // namespace hlf
