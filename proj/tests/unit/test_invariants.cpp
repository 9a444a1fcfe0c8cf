#include <symplaw/invariants.hpp>
#include <symplaw/linalg.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace symplaw;

namespace {

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

// Orbits of words under rotation and reversal-with-star, found by brute
// force over all words of the given length.
std::size_t orbit_count(unsigned m, unsigned len)
{
	using W = std::vector<std::pair<unsigned, bool>>;
	std::vector<W> all{{}};
	for (unsigned k = 0; k < len; ++k)
	{
		std::vector<W> next;
		for (auto &w : all)
			for (unsigned i = 1; i <= m; ++i)
				for (bool s : {false, true})
				{
					W x = w;
					x.emplace_back(i, s);
					next.push_back(x);
				}
		all = std::move(next);
	}
	std::set<W> seen;
	std::size_t orbits = 0;
	for (auto &w : all)
	{
		if (seen.count(w))
			continue;
		++orbits;
		W t = w;
		std::reverse(t.begin(), t.end());
		for (auto &[i, s] : t)
			s = !s;
		for (const W &base : {w, t})
			for (unsigned r = 0; r < len; ++r)
			{
				W rot(base.begin() + r, base.end());
				rot.insert(rot.end(), base.begin(), base.begin() + r);
				seen.insert(rot);
			}
	}
	return orbits;
}

QMatrix transvection(const SymplecticContext &ctx, Rng &rng, bool upper, int sign)
{
	const std::size_t d = ctx.d();
	QMatrix g = QMatrix::identity(2 * d);
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = i; j < d; ++j)
		{
			Rational s = Rational(rng.integer(-2, 2)) * Rational(sign);
			if (upper)
				g(i, d + j) = g(j, d + i) = s;
			else
				g(d + i, j) = g(d + j, i) = s;
		}
	return g;
}

// Multilinear invariants of conjugation by finitely many integral
// symplectic matrices, as the common fixed space of the induced action
// on coefficient tensors.
std::size_t fixed_space_dim(unsigned d, unsigned m)
{
	SymplecticContext ctx(d);
	const std::size_t n = ctx.dim();
	std::size_t N = 1;
	for (unsigned k = 0; k < 2 * m; ++k)
		N *= n;
	RowEchelon ech;
	Rng rng(1000 + 10 * d + m);
	for (int e = 0; e < 3; ++e)
	{
		const std::uint64_t s1 = rng.next(), s2 = rng.next(), s3 = rng.next();
		Rng r1(s1), r2(s2), r3(s3), i1(s1), i2(s2), i3(s3);
		QMatrix g = transvection(ctx, r1, true, 1) * transvection(ctx, r2, false, 1) * transvection(ctx, r3, true, 1);
		QMatrix gi = transvection(ctx, i3, true, -1) * transvection(ctx, i2, false, -1) * transvection(ctx, i1, true, -1);
		EXPECT_EQ(g * gi, QMatrix::identity(n));
		auto digits = [&](std::size_t t) {
			std::vector<std::size_t> v(2 * m);
			for (std::size_t k = 2 * m; k-- > 0;)
			{
				v[k] = t % n;
				t /= n;
			}
			return v;
		};
		for (std::size_t out = 0; out < N; ++out)
		{
			auto pq = digits(out);
			SparseRow row;
			for (std::size_t t = 0; t < N; ++t)
			{
				auto ab = digits(t);
				Rational c(1);
				for (unsigned k = 0; k < m && !c.is_zero(); ++k)
					c *= g(ab[2 * k], pq[2 * k]) * gi(pq[2 * k + 1], ab[2 * k + 1]);
				if (!c.is_zero())
					row[t] = c;
			}
			row[out] -= Rational(1);
			if (row[out].is_zero())
				row.erase(out);
			ech.insert(std::move(row));
		}
	}
	return N - ech.rank();
}

} // namespace

TEST(TraceWord, Canonicalization)
{
	EXPECT_EQ(TraceWord::parse("X2 X1"), TraceWord::parse("X1 X2"));
	EXPECT_EQ(TraceWord::parse("X1^j X2^j"), TraceWord::parse("X2 X1"));
	EXPECT_EQ(TraceWord::parse("X1^j"), TraceWord::parse("X1"));
	EXPECT_NE(TraceWord::parse("X1 X2 X3"), TraceWord::parse("X1 X3 X2"));
	EXPECT_THROW(TraceWord::parse(""), ParseError);
	EXPECT_THROW(TraceWord::parse("Y1"), ParseError);
	EXPECT_THROW(TraceWord(std::vector<Letter>{}), ArgumentError);
}

TEST(TraceWord, CanonicalIsOrbitMinimum)
{
	for (auto &w : enumerate_trace_words(2, 4))
		EXPECT_EQ(canonical_letters(w.letters()), w.letters());
}

TEST(TraceWord, EnumerationMatchesOrbitCount)
{
	for (unsigned m = 1; m <= 3; ++m)
		for (unsigned len = 1; len <= 4; ++len)
		{
			auto words = enumerate_trace_words(m, len);
			std::size_t exact = 0;
			for (auto &w : words)
				exact += w.length() == len;
			EXPECT_EQ(exact, orbit_count(m, len)) << "m=" << m << " len=" << len;
		}
}

TEST(Invariants, TraceOfXXj)
{
	SymplecticContext ctx(1);
	QMatrix x{{q(1), q(2)}, {q(3), q(4)}};
	Invariant f(1, SigmaOf{1, TraceWord::parse("X1 X1^j")});
	EXPECT_EQ(eval_invariant(ctx, f, {x}), q(-4));
	Invariant g(1, SigmaOf{2, TraceWord::parse("X1")});
	EXPECT_EQ(eval_invariant(ctx, g, {x}), q(-2));
}

TEST(Invariants, Errors)
{
	SymplecticContext ctx(1);
	QMatrix x = QMatrix::identity(2);
	EXPECT_THROW(eval_invariant(ctx, Invariant(2, SigmaOf{1, TraceWord::parse("X1")}), {x}), ArityError);
	EXPECT_THROW(eval_invariant(ctx, Invariant(1, SigmaOf{3, TraceWord::parse("X1")}), {x}), ArgumentError);
	QMatrix bad{{q(1), q(0)}, {q(0), q(0)}};
	EXPECT_THROW(eval_invariant(ctx, Invariant(1, SimilitudePower{1, -1}), {bad}), Error);
}

TEST(Invariants, SimilitudeFactor)
{
	SymplecticContext ctx(2);
	QMatrix g = QMatrix::scalar(4, q(2));
	EXPECT_EQ(eval_invariant(ctx, Invariant(1, SimilitudePower{1, -1}), {g}), q(1, 4));
	EXPECT_EQ(eval_invariant(ctx, Invariant(1, SimilitudePower{1, 2}), {g}), q(16));
}

TEST(Invariants, ConjugationInvariance)
{
	Rng rng(61);
	for (unsigned d = 1; d <= 2; ++d)
	{
		SymplecticContext ctx(d);
		for (auto &w : enumerate_trace_words(2, 3))
			for (unsigned s = 1; s <= 2 * d; ++s)
			{
				Invariant f(2, SigmaOf{s, w});
				std::vector<QMatrix> x{rng.matrix(ctx.dim(), ctx.dim(), 3), rng.matrix(ctx.dim(), ctx.dim(), 3)};
				EXPECT_TRUE(check_invariance(ctx, f, x, sample_symplectic(ctx, rng.next(), 2)));
			}
	}
}

TEST(Invariants, EntryProbeIsNotInvariant)
{
	SymplecticContext ctx(1);
	Invariant f(1, EntryProbe{1, 0, 0});
	QMatrix x{{q(1), q(2)}, {q(3), q(4)}};
	QMatrix g{{q(1), q(1)}, {q(0), q(1)}};
	EXPECT_FALSE(check_invariance(ctx, f, {x}, g));
}

TEST(Invariants, OracleMatchesFixedSpace)
{
	for (auto [d, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}})
		EXPECT_EQ(multilinear_invariant_dim(d, m), fixed_space_dim(d, m)) << "d=" << d << " m=" << m;
}

TEST(Invariants, KnownDimensions)
{
	EXPECT_EQ(multilinear_invariant_dim(1, 1), 1u);
	EXPECT_EQ(multilinear_invariant_dim(1, 2), 2u);
	EXPECT_EQ(multilinear_invariant_dim(1, 3), 5u);
	EXPECT_EQ(multilinear_invariant_dim(2, 1), 1u);
	EXPECT_EQ(multilinear_invariant_dim(2, 2), 3u);
	EXPECT_THROW(multilinear_invariant_dim(4, 3), CapacityError);
}

TEST(Invariants, TraceWordsSpanInvariants)
{
	for (auto [d, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}})
		EXPECT_EQ(trace_word_span_dim(d, m), multilinear_invariant_dim(d, m)) << "d=" << d << " m=" << m;
}

TEST(Invariants, TraceProductsAreMultilinear)
{
	for (auto &prod : multilinear_trace_products(3))
	{
		std::vector<int> uses(4, 0);
		for (auto &w : prod)
			for (auto &l : w.letters())
				++uses.at(l.index);
		EXPECT_EQ(uses[1], 1);
		EXPECT_EQ(uses[2], 1);
		EXPECT_EQ(uses[3], 1);
	}
}
