#include "jetgroups/rational.hpp"

#include <ostream>

#include "jetgroups/errors.hpp"

namespace jetgroups {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw InputError("rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InputError("rational: empty string");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw InputError("rational: cannot parse \"" + text + "\"");
    }
}

std::string Rational::str() const {
    std::string s = num().get_str();
    if (den() != 1) s += "/" + den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace jetgroups
