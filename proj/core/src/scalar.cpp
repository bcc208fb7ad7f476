#include "pim/scalar.hpp"

#include <ostream>
#include <regex>

namespace pim {

std::string Scalar::str() const {
    if (d_ == 0) return a_.get_str();
    // Common positive denominator, content-free numerator pair.
    Int den;
    mpz_lcm(den.get_mpz_t(), a_.get_den().get_mpz_t(), b_.get_den().get_mpz_t());
    Int p = to_int(a_ * Rat(den));
    Int q = to_int(b_ * Rat(den));
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        p /= g;
        q /= g;
        den /= g;
    }
    std::string s = "(" + p.get_str() + (q >= 0 ? "+" : "") + q.get_str() + "*sqrt(" +
                    std::to_string(d_) + "))";
    if (den != 1) s += "/" + den.get_str();
    return s;
}

Scalar Scalar::parse(const std::string& s) {
    // Accepts "p/q" and "(p+q*sqrt(d))/r" (r optional, signs free).
    static const std::regex quad(
        R"(^\(\s*(-?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*(?:/\s*(-?\d+)\s*)?$)");
    std::smatch m;
    if (std::regex_match(s, m, quad)) {
        Rat p = rat_from_string(m[1].str());
        Rat q = rat_from_string(m[3].str());
        if (m[2].str() == "-") q = -q;
        long d = std::stol(m[4].str());
        Rat den(1);
        if (m[5].matched) den = rat_from_string(m[5].str());
        if (den == 0) throw Error("zero denominator in Scalar literal: " + s);
        return Scalar(p / den, q / den, d);
    }
    return Scalar(rat_from_string(s));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace pim
