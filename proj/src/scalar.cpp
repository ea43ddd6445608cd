#include "affolab/scalar.hpp"

#include <cctype>
#include <ostream>

namespace affolab {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s = text;
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

bool is_square_free(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

Scalar::Scalar(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (!is_square_free(d_))
        throw std::invalid_argument("field discriminant must be a square-free positive integer, got " +
                                    std::to_string(d));
    a_.canonicalize();
    b_.canonicalize();
    normalize();
}

void Scalar::normalize() {
    if (d_ == 1 && b_ != 0) {  // sqrt(1) = 1
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

long Scalar::join_field(const Scalar& x, const Scalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1) return x.d_;
    throw std::invalid_argument("mixed quadratic fields: sqrt(" + std::to_string(x.d_) +
                                ") vs sqrt(" + std::to_string(y.d_) + ")");
}

Scalar Scalar::conjugate() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = join_field(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = join_field(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    long d = join_field(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm only
    // vanishes at 0 because d is square-free.
    Rational norm = a_ * a_ - b_ * b_ * d_;
    Scalar r = conjugate();
    r.a_ /= norm;
    r.b_ /= norm;
    r.normalize();
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

std::string Scalar::key() const {
    return a_.get_str() + "|" + b_.get_str() + "|" + std::to_string(d_);
}

std::string Scalar::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string coeff;
    if (b_ == 1)
        coeff = "";
    else if (b_ == -1)
        coeff = "-";
    else
        coeff = b_.get_str() + "*";
    std::string surd = coeff + "sqrt(" + std::to_string(d_) + ")";
    if (a_ == 0) return surd;
    return a_.get_str() + (b_ > 0 ? "+" : "") + surd;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

}  // namespace affolab
