#include "oracles.hpp"

#include <symplaw/det_laws.hpp>

#include <fixtures.hpp>

#include <gtest/gtest.h>

using namespace symplaw;

namespace {

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

QMatrix diag(const std::vector<long> &v)
{
	QMatrix m(v.size(), v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		m(i, i) = q(v[i]);
	return m;
}

// Lambda_i read off det(t - M) computed by the Leibniz oracle.
std::vector<Rational> lambdas_by_leibniz(const QMatrix &m)
{
	const std::size_t n = m.rows();
	PolyMatrix s = PolyMatrix::scalar(n, Poly::variable("t")) - to_poly(m);
	Poly chi = oracle::leibniz_det(s);
	std::vector<Rational> out;
	for (std::size_t i = 0; i <= n; ++i)
	{
		Rational c = chi.coefficient_in("t", static_cast<unsigned>(n - i)).constant_term();
		out.push_back(i % 2 ? -c : c);
	}
	return out;
}

} // namespace

TEST(DetLaws, NewtonAgreesWithDeterminantOracle)
{
	Rng rng(51);
	for (int k = 0; k < 20; ++k)
	{
		const std::size_t n = 1 + rng.index(6);
		QMatrix m = rng.matrix(n, n, 5);
		auto lv = newton_lambdas_from_traces(power_traces(m, n), n);
		EXPECT_EQ(lv.coeffs, lambdas_by_leibniz(m));
		EXPECT_EQ(lambdas_of(m).coeffs, lv.coeffs);
	}
	EXPECT_THROW(newton_lambdas_from_traces(std::vector<Rational>{q(1)}, 2), DimensionError);
	EXPECT_THROW(newton_lambdas_from_traces(std::vector<Rational>{}, 0), ArgumentError);
}

TEST(DetLaws, RecursionAgreesWithReducedPfaffian)
{
	Rng rng(52);
	for (unsigned d = 1; d <= 3; ++d)
	{
		SymplecticContext ctx(d);
		for (int k = 0; k < 15; ++k)
		{
			QMatrix m = random_j_symmetric(ctx, rng, 5);
			EXPECT_EQ(pfaffian_coeffs_from_lambdas(lambdas_of(m)), pfaffian_coeffs_of(ctx, m));
		}
	}
}

TEST(DetLaws, RecursionRejectsNonSquares)
{
	EXPECT_THROW(pfaffian_coeffs_from_lambdas(lambdas_of(diag({1, 2, 3, 4}))), SpectrumError);
	EXPECT_THROW(pfaffian_coeffs_from_lambdas(LambdaVector<Rational>{{q(1), q(2)}}), DimensionError);
	EXPECT_THROW(pfaffian_coeffs_from_lambdas(LambdaVector<Rational>{{q(2), q(0), q(0)}}), SpectrumError);
}

TEST(DetLaws, BinomialAtIdentity)
{
	for (unsigned d = 1; d <= 4; ++d)
	{
		SymplecticContext ctx(d);
		QMatrix id = QMatrix::identity(ctx.dim());
		auto viaPf = pfaffian_coeffs_of(ctx, id);
		auto viaRec = pfaffian_coeffs_from_lambdas(lambdas_of(id));
		for (unsigned i = 0; i <= d; ++i)
		{
			EXPECT_EQ(viaPf[i], binomial(d, i));
			EXPECT_EQ(viaRec[i], binomial(d, i));
		}
	}
}

TEST(DetLaws, LowDegreeClosedForms)
{
	Rng rng(53);
	SymplecticContext ctx(3);
	for (int k = 0; k < 10; ++k)
	{
		QMatrix m = random_j_symmetric(ctx, rng, 4);
		auto lv = lambdas_of(m);
		auto t = pfaffian_coeffs_of(ctx, m);
		const Rational h = q(1, 2);
		EXPECT_EQ(t[1], h * lv[1]);
		EXPECT_EQ(t[2], h * lv[2] - q(1, 8) * lv[1] * lv[1]);
	}
}

TEST(DetLaws, DegreeFourOnDiagonalExample)
{
	SymplecticContext ctx(4);
	QMatrix m = diag({1, 2, 3, 4, 1, 2, 3, 4});
	auto lv = lambdas_of(m);
	auto tr = power_traces(m, 4);
	EXPECT_EQ(pfaffian_coeffs_of(ctx, m)[4], q(24));
	EXPECT_EQ(t4_from_lambdas(lv), q(24));
	EXPECT_EQ(t4_from_traces(tr), q(24));
	auto printed = closed_form_check_d4(lv, tr);
	EXPECT_NE(printed.first, q(24));
	EXPECT_NE(printed.second, q(24));
}

TEST(DetLaws, PrintedDegreeFourFormsAtIdentity)
{
	QMatrix id = QMatrix::identity(8);
	auto printed = closed_form_check_d4(lambdas_of(id), power_traces(id, 4));
	EXPECT_EQ(printed.first, q(37));
	EXPECT_EQ(printed.second, q(37));
	EXPECT_EQ(t4_from_lambdas(lambdas_of(id)), q(1));
	EXPECT_EQ(t4_from_traces(power_traces(id, 4)), q(1));
}

TEST(DetLaws, CorrectedDegreeFourFormsOnRandomMatrices)
{
	Rng rng(54);
	SymplecticContext ctx(4);
	for (int k = 0; k < 10; ++k)
	{
		QMatrix m = random_j_symmetric(ctx, rng, 3);
		const Rational t4 = pfaffian_coeffs_of(ctx, m)[4];
		EXPECT_EQ(t4_from_lambdas(lambdas_of(m)), t4);
		EXPECT_EQ(t4_from_traces(power_traces(m, 4)), t4);
	}
	EXPECT_THROW(closed_form_check_d4(lambdas_of(QMatrix::identity(4)), power_traces(QMatrix::identity(4), 4)),
	             DimensionError);
}

TEST(DetLaws, PrintedFormsOvershootBySquareOfT2)
{
	Rng rng(59);
	SymplecticContext ctx(4);
	for (int k = 0; k < 20; ++k)
	{
		QMatrix m = random_j_symmetric(ctx, rng, 3);
		auto t = pfaffian_coeffs_of(ctx, m);
		auto [a, b] = closed_form_check_d4(lambdas_of(m), power_traces(m, 4));
		EXPECT_EQ(a, t[4] + t[2] * t[2]);
		EXPECT_EQ(b, t[4] + t[2] * t[2]);
	}
}

TEST(DetLaws, ElementExamples)
{
	auto rep = InvolutiveRepresentation::trivial(1, 1);
	Word g = Word::generator(1);
	GroupAlgebraElement x = GroupAlgebraElement(g, Poly::parse("t1")) + GroupAlgebraElement(g.inverse(), Poly::parse("t2"));
	EXPECT_EQ(eval_det_law(rep, x), Poly::parse("(t1 + t2)^2"));
	GroupAlgebraElement y = GroupAlgebraElement(g, Poly::parse("t")) + GroupAlgebraElement(g.inverse(), Poly::parse("t"));
	EXPECT_EQ(eval_pf_law(rep, y), Poly::parse("2*t"));
	EXPECT_THROW(eval_pf_law(rep, GroupAlgebraElement(g)), SymmetryError);
	auto rep2 = InvolutiveRepresentation::trivial(2, 0);
	EXPECT_EQ(eval_det_law(rep2, GroupAlgebraElement(Poly::parse("c"))), Poly::parse("c^4"));
	EXPECT_EQ(eval_pf_law(rep2, GroupAlgebraElement(Poly::parse("c"))), Poly::parse("c^2"));
	EXPECT_EQ(eval_pf_law(rep2, GroupAlgebraElement(Poly(1))), Poly(1));
}

TEST(DetLaws, PfaffianLawSquaresToDeterminantLaw)
{
	Rng rng(55);
	for (auto kind : {GroupKind::Sp, GroupKind::GSp})
		for (unsigned d = 1; d <= 2; ++d)
		{
			auto rep = fixtures::random_representation(d, kind, 2, 100 + d);
			for (int k = 0; k < 5; ++k)
			{
				auto x = symmetrize(rep, fixtures::random_element(rng, 2, 3, 2));
				EXPECT_EQ(eval_pf_law(rep, x).pow(2), eval_det_law(rep, x));
			}
		}
}

TEST(DetLaws, TransferIdentityForCommutingPairs)
{
	Rng rng(56);
	for (unsigned d = 1; d <= 2; ++d)
	{
		SymplecticContext ctx(d);
		for (int k = 0; k < 10; ++k)
		{
			QMatrix m = random_j_symmetric(ctx, rng, 4);
			QMatrix n = m * m + m * rng.rational(3) + QMatrix::scalar(ctx.dim(), rng.rational(3));
			EXPECT_EQ(reduced_pfaffian(ctx, m * n), reduced_pfaffian(ctx, m) * reduced_pfaffian(ctx, n));
		}
	}
}

TEST(DetLaws, Sl2Identities)
{
	Rng rng(57);
	for (int k = 0; k < 50; ++k)
	{
		auto [a, b] = sl2_identities(fixtures::random_sl2(rng));
		EXPECT_EQ(a, q(0));
		EXPECT_EQ(b, q(0));
	}
	auto [a, b] = sl2_identities(diag({2, 1}));
	EXPECT_FALSE(a.is_zero() && b.is_zero());
}

TEST(DetLaws, PolarizedCayleyHamiltonVanishes)
{
	for (auto kind : {GroupKind::Sp, GroupKind::GSp})
		for (unsigned d = 1; d <= 2; ++d)
		{
			auto rep = fixtures::random_representation(d, kind, 2, 200 + d);
			Rng rng(58 + d);
			std::vector<GroupAlgebraElement> r;
			for (unsigned i = 0; i < d; ++i)
				r.push_back(symmetrize(rep, fixtures::random_element(rng, 2, 2, 2)));
			std::vector<unsigned> alpha(d, 1);
			EXPECT_TRUE(chi_alpha(rep, r, alpha).is_zero());
			if (d == 2)
			{
				EXPECT_TRUE(chi_alpha(rep, {r[0]}, {2}).is_zero());
				EXPECT_THROW(chi_alpha(rep, {r[0]}, {1}), ArgumentError);
			}
		}
}
