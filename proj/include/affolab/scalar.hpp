#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace affolab {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into an exact rational. Throws std::invalid_argument
/// on malformed input (including q = 0).
Rational parse_rational(const std::string& text);

/// Renders a rational canonically: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);

/// An element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is a square-free positive integer shared by everything in one computation
/// context; d = 1 is plain Q. Canonical form: b == 0 forces d = 1, and a value
/// constructed with d = 1 folds b into a (sqrt(1) = 1). Mixing two values is
/// allowed when their discriminants agree or one of them is rational.
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(1) {}
    Scalar(int n) : a_(n), b_(0), d_(1) {}
    Scalar(long n) : a_(n), b_(0), d_(1) {}
    Scalar(const Rational& a) : a_(a), b_(0), d_(1) { a_.canonicalize(); }
    Scalar(const Rational& a, const Rational& b, long d);

    /// sqrt(d) itself.
    static Scalar surd(long d) { return Scalar(0, Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    long discriminant() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// Galois conjugate a - b*sqrt(d).
    Scalar conjugate() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar inverse() const;

    /// Canonical byte encoding; equal scalars encode identically.
    std::string key() const;

    std::string to_string() const;

private:
    Rational a_, b_;
    long d_;

    void normalize();
    static long join_field(const Scalar& x, const Scalar& y);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// True iff d >= 1 and no square > 1 divides d.
bool is_square_free(long d);

}  // namespace affolab
