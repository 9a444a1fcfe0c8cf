#include <symplaw/pseudochar.hpp>

#include <fixtures.hpp>

#include <gtest/gtest.h>

#include <thread>

using namespace symplaw;

namespace {

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

Invariant sigma(unsigned arity, unsigned s, const char *word)
{
	return Invariant(arity, SigmaOf{s, TraceWord::parse(word)});
}

Word w(const char *text) { return Word::parse(text); }

} // namespace

TEST(Word, Reduction)
{
	EXPECT_EQ(w("g1 g2 g2^-1 g1^-1"), Word());
	EXPECT_EQ(w("g1^3").length(), 3u);
	EXPECT_EQ(w("g1 g2").inverse(), w("g2^-1 g1^-1"));
	EXPECT_EQ(w("g1 g2").pow(-1), w("g2^-1 g1^-1"));
	EXPECT_EQ(w("1"), Word());
	EXPECT_THROW(w("h1"), ParseError);
	EXPECT_THROW(Word({0}), ArgumentError);
}

TEST(Theta, TrivialRepresentation)
{
	Pseudocharacter pc(InvolutiveRepresentation::trivial(2, 1));
	EXPECT_EQ(pc.theta(sigma(1, 1, "X1"), {Word()}), q(4));
	EXPECT_EQ(pc.theta(sigma(1, 2, "X1"), {w("g1")}), q(6));
	EXPECT_EQ(pc.theta(Invariant(1, std::vector<InvariantFunction>{}), {w("g1")}), q(1));
}

TEST(Theta, MatchesDirectEvaluation)
{
	auto rep = fixtures::random_representation(2, GroupKind::GSp, 2, 81);
	Pseudocharacter pc(rep);
	Invariant f(2, {SigmaOf{1, TraceWord::parse("X1 X2^j")}, SimilitudePower{2, -1}});
	WordTuple g{w("g1 g2"), w("g2^-1")};
	EXPECT_EQ(pc.theta(f, g), eval_invariant(rep.ctx(), f, {rep.image(g[0]), rep.image(g[1])}));
	EXPECT_EQ(pc.cache_size(), 1u);
	EXPECT_EQ(pc.theta(f, g), theta_eval(pc, f, g));
	EXPECT_EQ(pc.cache_size(), 1u);
}

TEST(Theta, Errors)
{
	Pseudocharacter sp(InvolutiveRepresentation::trivial(1, 1));
	EXPECT_THROW(sp.theta(sigma(2, 1, "X1"), {Word()}), ArityError);
	EXPECT_THROW(sp.theta(Invariant(1, SimilitudePower{1, -1}), {Word()}), UnsupportedKindError);
	EXPECT_THROW(sp.theta(Invariant(1, EntryProbe{1, 0, 0}), {Word()}), ArgumentError);
	EXPECT_THROW(sp.theta(sigma(1, 1, "X1"), {w("g2")}), GeneratorError);
}

TEST(Theta, ConcurrentAccess)
{
	Pseudocharacter pc(fixtures::random_representation(1, GroupKind::Sp, 2, 82));
	std::vector<Rational> results(4);
	std::vector<std::thread> threads;
	for (std::size_t i = 0; i < results.size(); ++i)
		threads.emplace_back([&, i] { results[i] = pc.theta(sigma(1, 1, "X1"), {w("g1 g2 g1")}); });
	for (auto &t : threads)
		t.join();
	for (auto &r : results)
		EXPECT_EQ(r, results.front());
	EXPECT_EQ(pc.cache_size(), 1u);
}

TEST(Axioms, SubstituteAndHat)
{
	Invariant f(2, SigmaOf{1, TraceWord::parse("X1 X2^j")});
	Invariant g = substitute(f, {3, 1}, 3);
	EXPECT_EQ(g.arity, 3u);
	EXPECT_EQ(g, Invariant(3, SigmaOf{1, TraceWord::parse("X3 X1^j")}));
	Invariant h = hat(f);
	EXPECT_EQ(h.arity, 3u);
	EXPECT_EQ(h, Invariant(3, SigmaOf{1, TraceWord::parse("X1 X3^j X2^j")}));
	Invariant l = hat(Invariant(1, SimilitudePower{1, -1}));
	EXPECT_EQ(l, Invariant(2, {SimilitudePower{1, -1}, SimilitudePower{2, -1}}));
}

TEST(Axioms, HoldForRepresentations)
{
	for (auto kind : {GroupKind::Sp, GroupKind::GSp})
		for (unsigned d = 1; d <= 2; ++d)
		{
			Pseudocharacter pc(fixtures::random_representation(d, kind, 2, 83 + d));
			AxiomReport r = verify_axioms(pc, 30, 7);
			EXPECT_TRUE(r.passed()) << to_string(kind) << " d=" << d;
			EXPECT_GT(r.axiom1_checks, 0u);
			EXPECT_GT(r.axiom2_checks, 0u);
		}
}

TEST(Axioms, CorruptedTableIsDetected)
{
	Pseudocharacter pc(fixtures::random_representation(1, GroupKind::Sp, 2, 85));
	Invariant f = sigma(1, 1, "X1");
	WordTuple g{w("g1 g2")};
	const Rational good = pc.theta(f, g);
	pc.override_entry(f, g, good + q(1));
	EXPECT_FALSE(check_axiom2(pc, sigma(1, 1, "X1"), {w("g1"), w("g2")}));
	EXPECT_FALSE(check_axiom1(pc, sigma(1, 1, "X1"), {1}, 2, {w("g1 g2"), w("g1")}));
}

TEST(Similitude, CharacterValues)
{
	SymplecticContext ctx(1);
	InvolutiveRepresentation a(ctx, GroupKind::GSp, {QMatrix::scalar(2, q(2))});
	EXPECT_EQ(similitude_character(Pseudocharacter(a), w("g1")), q(4));
	QMatrix d{{q(2), q(0)}, {q(0), q(3)}};
	InvolutiveRepresentation b(ctx, GroupKind::GSp, {d});
	EXPECT_EQ(similitude_character(Pseudocharacter(b), w("g1")), q(6));
	EXPECT_EQ(similitude_character(Pseudocharacter(b), w("g1^-2")), q(1, 36));
	Pseudocharacter sp(InvolutiveRepresentation::trivial(1, 1));
	EXPECT_THROW(similitude_character(sp, w("g1")), UnsupportedKindError);
}

TEST(Comparison, UnipotentExample)
{
	SymplecticContext ctx(1);
	InvolutiveRepresentation rep(ctx, GroupKind::Sp, {QMatrix{{q(1), q(1)}, {q(0), q(1)}}});
	auto cmp = comparison_to_det_law(Pseudocharacter(rep));
	GroupAlgebraElement x = GroupAlgebraElement(w("g1"), Poly::parse("c")) + GroupAlgebraElement(w("g1^-1"), Poly::parse("c"));
	EXPECT_EQ(cmp.P(x), Poly::parse("2*c"));
	EXPECT_EQ(cmp.D(x), Poly::parse("4*c^2"));
	EXPECT_EQ(cmp.P(GroupAlgebraElement(Poly(1))), Poly(1));
	EXPECT_THROW(cmp.P(GroupAlgebraElement(w("g1"))), SymmetryError);
}

TEST(Comparison, AgreesWithDeterminantLaws)
{
	Rng rng(86);
	for (auto kind : {GroupKind::Sp, GroupKind::GSp})
		for (unsigned d = 1; d <= 2; ++d)
		{
			auto rep = fixtures::random_representation(d, kind, 2, 87 + d);
			auto cmp = comparison_to_det_law(Pseudocharacter(rep));
			for (int k = 0; k < 5; ++k)
			{
				auto x = fixtures::random_element(rng, 2, 3, 2);
				EXPECT_EQ(cmp.D(x), eval_det_law(rep, x));
				auto s = symmetrize(rep, x);
				const Poly p = cmp.P(s);
				EXPECT_EQ(p, eval_pf_law(rep, s));
				EXPECT_EQ(p * p, cmp.D(s));
			}
		}
}

TEST(Comparison, PolynomialCoefficients)
{
	auto rep = fixtures::random_representation(1, GroupKind::GSp, 1, 90);
	auto cmp = comparison_to_det_law(Pseudocharacter(rep));
	GroupAlgebraElement x = GroupAlgebraElement(Poly::parse("a")) + GroupAlgebraElement(w("g1"), Poly::parse("b"));
	EXPECT_EQ(cmp.D(x), eval_det_law(rep, x));
	auto s = symmetrize(rep, x);
	EXPECT_EQ(cmp.P(s), eval_pf_law(rep, s));
}
