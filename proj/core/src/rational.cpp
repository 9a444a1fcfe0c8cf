#include "symplaw/rational.hpp"

#include "symplaw/error.hpp"

#include <fmt/format.h>

#include <ostream>

namespace symplaw {

Rational::Rational(long long v)
{
	value_ = mpz_class(std::to_string(v));
}

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
	if (den == 0)
		throw ArgumentError("rational with zero denominator");
	value_ = mpq_class(num, den);
	value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	std::string s(text);
	auto trim = [](std::string &x) {
		auto b = x.find_first_not_of(" \t\n");
		auto e = x.find_last_not_of(" \t\n");
		x = b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
	};
	trim(s);
	auto valid_int = [](const std::string &x) {
		std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
		if (i == x.size())
			return false;
		for (; i < x.size(); ++i)
			if (x[i] < '0' || x[i] > '9')
				return false;
		return true;
	};
	auto slash = s.find('/');
	std::string num = s.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
	trim(num);
	trim(den);
	if (!num.empty() && num[0] == '+')
		num.erase(0, 1);
	if (!valid_int(num) || !valid_int(den))
		throw ParseError(fmt::format("not a rational literal: '{}'", text));
	return Rational(mpz_class(num), mpz_class(den));
}

Rational Rational::inverse() const
{
	if (is_zero())
		throw ArgumentError("inverse of zero");
	mpq_class r;
	mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
	return Rational(r);
}

Rational Rational::pow(int e) const
{
	if (e < 0)
		return inverse().pow(-e);
	mpz_class n, d;
	mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
	mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
	return Rational(n, d);
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw ArgumentError("division by zero");
	value_ /= o.value_;
	return *this;
}

std::string Rational::to_string() const
{
	if (is_integer())
		return value_.get_num().get_str();
	return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.to_string();
}

Rational binomial(unsigned n, unsigned k)
{
	if (k > n)
		return 0;
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return Rational(r);
}

Rational factorial(unsigned n)
{
	mpz_class r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return Rational(r);
}

} // namespace symplaw
