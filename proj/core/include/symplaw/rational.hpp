#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace symplaw {

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational
{
public:
	Rational() = default;
	Rational(long v) : value_(v) {}
	Rational(int v) : value_(v) {}
	Rational(long long v);
	Rational(const mpz_class &v) : value_(v) {}
	Rational(const mpq_class &v) : value_(v) { value_.canonicalize(); }
	/// Throws ArgumentError when den == 0.
	Rational(const mpz_class &num, const mpz_class &den);

	/// Parses "p/q", "-p", "p". Throws ParseError.
	static Rational parse(std::string_view text);

	mpz_class numerator() const { return value_.get_num(); }
	mpz_class denominator() const { return value_.get_den(); }
	const mpq_class &raw() const { return value_; }

	bool is_zero() const { return sgn(value_) == 0; }
	bool is_one() const { return value_ == 1; }
	bool is_integer() const { return value_.get_den() == 1; }
	int sign() const { return sgn(value_); }

	/// Throws ArgumentError on zero.
	Rational inverse() const;
	Rational pow(int e) const;

	/// "p/q" or "p" for integers.
	std::string to_string() const;

	Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
	Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
	Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	Rational operator-() const { return Rational(mpq_class(-value_)); }

	friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.value_, b.value_);
		return c < 0 ? std::strong_ordering::less
		     : c > 0 ? std::strong_ordering::greater
		             : std::strong_ordering::equal;
	}

	friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
	mpq_class value_;
};

Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned n);

} // namespace symplaw
