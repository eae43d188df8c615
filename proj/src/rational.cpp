#include "ech/rational.hpp"

#include <cctype>
#include <ostream>

namespace ech {

std::string to_string(const Integer& n) { return n.get_str(10); }

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroValue("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_part = body.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part))
        throw ParseError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
    Integer num(std::string(num_part), 10);
    const Integer den(std::string(den_part), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

Integer Rational::floor() const {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Integer Rational::ceil() const {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

std::string Rational::str() const {
    if (is_integer()) return to_string(q_.get_num());
    return to_string(q_.get_num()) + "/" + to_string(q_.get_den());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) throw ZeroValue("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::string tilt_str(Tilt t) {
    switch (t) {
        case Tilt::Plus: return "+";
        case Tilt::Minus: return "-";
        case Tilt::None: return "0";
    }
    return "0";
}

Tilt parse_tilt(std::string_view text) {
    if (text == "+" || text == "+1") return Tilt::Plus;
    if (text == "-" || text == "-1") return Tilt::Minus;
    if (text == "0") return Tilt::None;
    throw ParseError("malformed tilt '" + std::string(text) + "' (expected +, - or 0)");
}

Integer floor_multiple(const PerturbedRational& r, std::int64_t k) {
    if (k < 1) throw PreconditionViolation("floor_multiple needs k >= 1");
    const Rational scaled = r.value * Rational(static_cast<long>(k));
    if (!scaled.is_integer()) return scaled.floor();
    switch (r.tilt) {
        case Tilt::Plus: return scaled.numerator();
        case Tilt::Minus: return scaled.numerator() - 1;
        case Tilt::None: break;
    }
    throw DegenerateRatio(k);
}

PerturbedRational reciprocal(const PerturbedRational& r) {
    if (r.value.sign() == 0) throw ZeroValue("reciprocal of zero");
    return {Rational(1) / r.value, flip(r.tilt)};
}

}  // namespace ech
