#include <symplaw/error.hpp>
#include <symplaw/poly.hpp>
#include <symplaw/random.hpp>

#include <gtest/gtest.h>

using namespace symplaw;

namespace {

Poly random_poly(Rng &rng)
{
	static const std::vector<std::string> vars{"a", "b", "c"};
	Poly p;
	const std::size_t terms = rng.index(4) + 1;
	for (std::size_t k = 0; k < terms; ++k)
	{
		std::vector<unsigned> e;
		for (std::size_t i = 0; i < vars.size(); ++i)
			e.push_back(static_cast<unsigned>(rng.index(3)));
		p += Poly(Monomial::from_exponents(vars, e), rng.rational(9));
	}
	return p;
}

} // namespace

TEST(Poly, ParseAndPrint)
{
	Poly p = Poly::parse("3/4*t1^2*t2 - (u + 1)^2");
	EXPECT_EQ(p.coefficient(Monomial::from_powers({{"t1", 2}, {"t2", 1}})), Rational(mpz_class(3), mpz_class(4)));
	EXPECT_EQ(p.coefficient(Monomial("u", 2)), Rational(-1));
	EXPECT_EQ(p.coefficient(Monomial("u")), Rational(-2));
	EXPECT_EQ(p.constant_term(), Rational(-1));
	EXPECT_EQ(Poly::parse(p.to_string()), p);
	EXPECT_THROW(Poly::parse("x +"), ParseError);
	EXPECT_THROW(Poly::parse("(x"), ParseError);
}

TEST(Poly, RingAxioms)
{
	Rng rng(5);
	for (int k = 0; k < 1000; ++k)
	{
		Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
		ASSERT_EQ((a + b) + c, a + (b + c));
		ASSERT_EQ((a * b) * c, a * (b * c));
		ASSERT_EQ(a * (b + c), a * b + a * c);
		ASSERT_EQ(a * b, b * a);
		ASSERT_EQ(a + Poly(), a);
		ASSERT_EQ(a * Poly(1), a);
		ASSERT_TRUE((a - a).is_zero());
	}
}

TEST(Poly, CoefficientExtraction)
{
	Poly p = Poly::parse("2*x^2*y + 5*x*y - 7");
	EXPECT_EQ(poly_coefficient(p, Monomial::from_powers({{"x", 2}, {"y", 1}})), Rational(2));
	EXPECT_EQ(poly_coefficient(p, Monomial("x", 3)), Rational(0));
	EXPECT_EQ(poly_coefficient(p, Monomial()), Rational(-7));
	EXPECT_THROW(poly_coefficient(p, Monomial("z")), VariableError);
	EXPECT_EQ(p.coefficient_in("x", 1), Poly::parse("5*y"));
	EXPECT_EQ(p.coefficient_in("x", 0), Poly(-7));
}

TEST(Poly, SubstituteAndEvaluate)
{
	Poly p = Poly::parse("x^2 + x*y");
	EXPECT_EQ(p.substitute("x", Poly::parse("y + 1")), Poly::parse("2*y^2 + 3*y + 1"));
	EXPECT_EQ(p.evaluate({{"x", Rational(2)}, {"y", Rational(3)}}), Rational(10));
	EXPECT_THROW(p.evaluate({{"x", Rational(2)}}), VariableError);
}

TEST(Poly, Degrees)
{
	Poly p = Poly::parse("x^3*y + y^5");
	EXPECT_EQ(p.degree_in("x"), 3u);
	EXPECT_EQ(p.degree_in("z"), 0u);
	EXPECT_EQ(p.total_degree(), 5u);
	EXPECT_EQ(p.variables(), (std::vector<std::string>{"x", "y"}));
}

TEST(MonomialIdeal, Reduce)
{
	MonomialIdeal ideal({Monomial("u", 2), Monomial::from_powers({{"u", 1}, {"v", 1}}), Monomial("v", 2)});
	Poly p = Poly::parse("(1 + u + v)^3");
	EXPECT_EQ(ideal.reduce(p), Poly::parse("1 + 3*u + 3*v"));
	EXPECT_TRUE(ideal.contains(Monomial::from_powers({{"u", 3}, {"w", 1}})));
	EXPECT_FALSE(ideal.contains(Monomial("w", 4)));
}

TEST(MonomialIdeal, QuotientIsRingMap)
{
	MonomialIdeal ideal({Monomial("a", 2), Monomial::from_powers({{"b", 1}, {"c", 1}})});
	Rng rng(9);
	for (int k = 0; k < 200; ++k)
	{
		Poly a = random_poly(rng), b = random_poly(rng);
		ASSERT_EQ(ideal.reduce(a * b), ideal.reduce(ideal.reduce(a) * ideal.reduce(b)));
		ASSERT_EQ(ideal.reduce(a + b), ideal.reduce(a) + ideal.reduce(b));
	}
}
