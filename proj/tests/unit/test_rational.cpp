#include <symplaw/error.hpp>
#include <symplaw/random.hpp>
#include <symplaw/rational.hpp>

#include <gtest/gtest.h>

using namespace symplaw;

TEST(Rational, LowestTerms)
{
	Rational r(mpz_class(6), mpz_class(-4));
	EXPECT_EQ(r.numerator(), -3);
	EXPECT_EQ(r.denominator(), 2);
	EXPECT_EQ(r.to_string(), "-3/2");
	EXPECT_EQ(Rational(4).to_string(), "4");
}

TEST(Rational, Parse)
{
	EXPECT_EQ(Rational::parse("3/4"), Rational(mpz_class(3), mpz_class(4)));
	EXPECT_EQ(Rational::parse("-12"), Rational(-12));
	EXPECT_EQ(Rational::parse("10/-4"), Rational(mpz_class(-5), mpz_class(2)));
	EXPECT_THROW(Rational::parse("1/0"), Error);
	EXPECT_THROW(Rational::parse("abc"), ParseError);
	EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, DivisionByZero)
{
	EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), ArgumentError);
	EXPECT_THROW(Rational(0).inverse(), ArgumentError);
	EXPECT_THROW(Rational(3) / Rational(0), ArgumentError);
}

TEST(Rational, Pow)
{
	Rational h(mpz_class(1), mpz_class(2));
	EXPECT_EQ(h.pow(3), Rational(mpz_class(1), mpz_class(8)));
	EXPECT_EQ(h.pow(-2), Rational(4));
	EXPECT_EQ(h.pow(0), Rational(1));
}

TEST(Rational, Binomial)
{
	EXPECT_EQ(binomial(8, 4), Rational(70));
	EXPECT_EQ(binomial(4, 0), Rational(1));
	EXPECT_EQ(binomial(3, 5), Rational(0));
	EXPECT_EQ(factorial(6), Rational(720));
}

TEST(Rational, FieldAxioms)
{
	Rng rng(11);
	for (int k = 0; k < 1000; ++k)
	{
		Rational a = rng.rational(50), b = rng.rational(50), c = rng.rational(50);
		EXPECT_EQ((a + b) + c, a + (b + c));
		EXPECT_EQ(a * (b + c), a * b + a * c);
		EXPECT_EQ(a * b, b * a);
		EXPECT_EQ(a - a, Rational(0));
		if (!a.is_zero())
			EXPECT_EQ(a * a.inverse(), Rational(1));
		EXPECT_EQ(Rational::parse(a.to_string()), a);
	}
}

TEST(Rational, Ordering)
{
	EXPECT_LT(Rational(mpz_class(1), mpz_class(3)), Rational(mpz_class(1), mpz_class(2)));
	EXPECT_GT(Rational(-1), Rational(-2));
}
