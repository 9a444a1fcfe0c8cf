#include <symplaw/gma.hpp>
#include <symplaw/symplectic.hpp>

#include <fixtures.hpp>

#include <gtest/gtest.h>

using namespace symplaw;

namespace {

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

std::vector<GmaSpec> valid_specs()
{
	return {fixtures::standard_mixed_gma(), fixtures::nilpotent_pair_gma(1), fixtures::nilpotent_pair_gma(-1)};
}

} // namespace

TEST(Gma, JDeltaOfPair)
{
	GmaSpec s = fixtures::nilpotent_pair_gma(1);
	EXPECT_EQ(build_J_delta(s.type), (QMatrix{{q(0), q(-1)}, {q(1), q(0)}}));
}

TEST(Gma, JDeltaIsAlternatingUnimodular)
{
	for (auto &s : valid_specs())
	{
		QMatrix jd = build_J_delta(s.type);
		EXPECT_TRUE(is_alternating(jd));
		EXPECT_EQ(pfaffian(jd) * pfaffian(jd), q(1));
	}
}

TEST(Gma, TypeValidation)
{
	GmaType t = fixtures::standard_mixed_gma().type;
	EXPECT_NO_THROW(t.validate());
	EXPECT_EQ(t.total(), 4u);
	EXPECT_EQ(t.offset(3), 3u);

	GmaType bad_sigma = t;
	bad_sigma.sigma = {1, 2, 3};
	EXPECT_THROW(bad_sigma.validate(), TypeError);

	GmaType bad_dims = t;
	bad_dims.dims = {2, 1, 2};
	EXPECT_THROW(bad_dims.validate(), TypeError);

	GmaType overlap = t;
	overlap.I2 = {2, 3};
	EXPECT_THROW(overlap.validate(), TypeError);
	EXPECT_THROW(build_J_delta(overlap), TypeError);
}

TEST(Gma, InvolutionOnSingleSymplecticBlock)
{
	GmaSpec s;
	s.type.I0 = {1};
	s.type.sigma = {1};
	s.type.dims = {4};
	SymplecticContext ctx(2);
	Rng rng(71);
	for (int k = 0; k < 10; ++k)
	{
		QMatrix m = rng.matrix(4, 4, 5);
		EXPECT_EQ(delta_involution(s, to_poly(m)), to_poly(symplectic_transpose(ctx, m)));
	}
}

TEST(Gma, InvolutionIsAntiAutomorphism)
{
	Rng rng(72);
	for (auto &s : valid_specs())
		for (int k = 0; k < 10; ++k)
		{
			PolyMatrix a = random_gma_element(s, rng, 4), b = random_gma_element(s, rng, 4);
			EXPECT_EQ(delta_involution(s, delta_involution(s, a)), a);
			EXPECT_EQ(delta_involution(s, s.reduce(a * b)),
			          s.reduce(delta_involution(s, b) * delta_involution(s, a)));
		}
}

TEST(Gma, Membership)
{
	GmaSpec s = fixtures::nilpotent_pair_gma(1);
	PolyMatrix m = PolyMatrix::identity(2);
	m(0, 1) = Poly::parse("2*u");
	EXPECT_NO_THROW(check_membership(s, m));
	m(0, 1) = Poly::parse("v");
	EXPECT_THROW(check_membership(s, m), MembershipError);
	EXPECT_THROW(delta_involution(s, m), MembershipError);
	EXPECT_TRUE(in_span(Poly::parse("3*u + u*v"), {Poly::parse("u")}, s.ideal));
	EXPECT_FALSE(in_span(Poly::parse("u + v"), {Poly::parse("u")}, s.ideal));
}

TEST(Gma, StandardSpecsValidate)
{
	for (auto &s : valid_specs())
		EXPECT_TRUE(validate_standard_gma(s).valid);
}

TEST(Gma, MissingRelationIsReported)
{
	GmaSpec s = fixtures::nilpotent_pair_gma(1);
	s.ideal = MonomialIdeal();
	auto v = validate_standard_gma(s);
	EXPECT_FALSE(v.valid);
	EXPECT_FALSE(v.violations.empty());
}

TEST(Gma, PfaffianSquaresToDeterminant)
{
	Rng rng(73);
	for (auto &s : valid_specs())
		for (int k = 0; k < 10; ++k)
		{
			PolyMatrix r = random_symmetric_gma_element(s, rng, 4);
			EXPECT_EQ(delta_involution(s, r), r);
			auto v = gma_trace_det_pf(s, r);
			ASSERT_TRUE(v.pf.has_value());
			EXPECT_EQ(s.reduce(*v.pf * *v.pf), v.det);
			EXPECT_EQ(v.trace, s.reduce(r.trace()));
		}
}

TEST(Gma, PfaffianOfNonSymmetricFails)
{
	GmaSpec s = fixtures::standard_mixed_gma();
	Rng rng(74);
	PolyMatrix a = random_gma_element(s, rng, 4);
	if (delta_involution(s, a) != a)
	{
		EXPECT_FALSE(gma_trace_det_pf(s, a).pf.has_value());
		EXPECT_THROW(gma_pfaffian(s, a), StructureError);
	}
}

TEST(Gma, PfaffianOfIdentity)
{
	for (auto &s : valid_specs())
	{
		const std::size_t n = s.type.total();
		EXPECT_EQ(gma_pfaffian(s, PolyMatrix::identity(n)), Poly(1));
		EXPECT_EQ(gma_pf_char_poly(s, PolyMatrix::identity(n), "t"),
		          Poly::parse("t - 1").pow(static_cast<unsigned>(n / 2)));
	}
}

TEST(Gma, SchConditionOnStandardSigns)
{
	EXPECT_TRUE(check_sch_condition(fixtures::standard_mixed_gma()).holds);
	EXPECT_TRUE(check_sch_condition(fixtures::nilpotent_pair_gma(1)).holds);
}

TEST(Gma, SchConditionFailsWithFlippedSign)
{
	auto r = check_sch_condition(fixtures::nilpotent_pair_gma(-1));
	EXPECT_FALSE(r.holds);
	ASSERT_TRUE(r.witness.has_value());
	EXPECT_EQ(r.witness->i, 1u);
	EXPECT_EQ(r.witness->j, 2u);
	EXPECT_EQ(r.witness->x, Poly::parse("u"));
	EXPECT_EQ(r.witness->image, r.witness->element);
}

TEST(Gma, ChiVanishesWhenConditionHolds)
{
	Rng rng(75);
	for (auto &s : {fixtures::standard_mixed_gma(), fixtures::nilpotent_pair_gma(1)})
	{
		const unsigned d = static_cast<unsigned>(s.type.total() / 2);
		for (int k = 0; k < 10; ++k)
		{
			PolyMatrix r = random_symmetric_gma_element(s, rng, 4);
			EXPECT_TRUE(gma_chi_alpha(s, {r}, {d}).is_zero());
		}
	}
}

TEST(Gma, ChiNonzeroOnCounterexample)
{
	GmaSpec s = fixtures::nilpotent_pair_gma(-1);
	PolyMatrix r{{Poly(q(3, 4)), Poly::parse("-2*u")}, {Poly(), Poly(q(3, 4))}};
	EXPECT_EQ(delta_involution(s, r), r);
	PolyMatrix chi = gma_chi_alpha(s, {r}, {1});
	EXPECT_EQ(chi, (PolyMatrix{{Poly(), Poly::parse("-2*u")}, {Poly(), Poly()}}));
}

TEST(Gma, WitnessActsAsZeroUnderDeterminant)
{
	GmaSpec s = fixtures::nilpotent_pair_gma(-1);
	const PolyMatrix w = check_sch_condition(s).witness->element;
	Rng rng(76);
	for (int k = 0; k < 10; ++k)
	{
		PolyMatrix a = random_gma_element(s, rng, 4);
		PolyMatrix id = PolyMatrix::identity(2);
		EXPECT_EQ(s.reduce(mat_det(s.reduce(id + w * a))), Poly(1));
	}
}
