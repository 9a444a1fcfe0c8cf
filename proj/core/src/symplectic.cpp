#include "symplaw/symplectic.hpp"

namespace symplaw {

SymplecticContext::SymplecticContext(unsigned d) : d_(d)
{
	if (d == 0)
		throw ArgumentError("half-dimension d must be positive");
	J_ = QMatrix(2 * d, 2 * d);
	for (std::size_t i = 0; i < d; ++i)
	{
		J_(i, d + i) = Rational(1);
		J_(d + i, i) = Rational(-1);
	}
	pf_J_ = (d * (d - 1) / 2) % 2 ? -1 : 1;
}

Poly pfaffian_char_poly(const SymplecticContext &ctx, const QMatrix &m, const std::string &var)
{
	return pfaffian_char_poly(ctx, to_poly(m), var);
}

Poly pfaffian_char_poly(const SymplecticContext &ctx, const PolyMatrix &m, const std::string &var)
{
	ctx.require_dim(m, "pfaffian_char_poly");
	if (!is_j_symmetric(ctx, m))
		throw StructureError("pfaffian_char_poly needs a j-symmetric matrix");
	for (auto &x : m.data())
		if (x.degree_in(var) > 0)
			throw VariableError(fmt::format("variable '{}' already occurs in the matrix", var));
	PolyMatrix tm = -m;
	const Poly t = Poly::variable(var);
	for (std::size_t i = 0; i < tm.rows(); ++i)
		tm(i, i) += t;
	return reduced_pfaffian(ctx, tm);
}

QMatrix cayley_transform(const QMatrix &h)
{
	h.require_square("cayley_transform");
	const auto id = QMatrix::identity(h.rows());
	return inverse(id - h) * (id + h);
}

QMatrix sample_lie_algebra(const SymplecticContext &ctx, Rng &rng, long magnitude)
{
	const std::size_t n = ctx.dim();
	QMatrix s(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
		{
			Rational v(rng.integer(-magnitude, magnitude));
			s(i, j) = v;
			s(j, i) = v;
		}
	return ctx.J() * s;
}

QMatrix sample_symplectic(const SymplecticContext &ctx, std::uint64_t seed, long magnitude)
{
	if (magnitude < 1)
		throw ArgumentError("magnitude must be positive");
	for (std::uint64_t attempt = 0;; ++attempt)
	{
		Rng rng(seed + attempt * 0x9E3779B97F4A7C15ull);
		QMatrix h = sample_lie_algebra(ctx, rng, magnitude);
		try
		{
			return cayley_transform(h);
		}
		catch (const SingularError &)
		{
		}
	}
}

Rational similitude(const SymplecticContext &ctx, const QMatrix &m)
{
	ctx.require_dim(m, "similitude");
	QMatrix p = symplectic_transpose(ctx, m) * m;
	const Rational lambda = p(0, 0);
	for (std::size_t i = 0; i < p.rows(); ++i)
		for (std::size_t j = 0; j < p.cols(); ++j)
			if (!(p(i, j) == (i == j ? lambda : Rational(0))))
				throw NotASimilitudeError("M^j M is not a scalar matrix");
	if (lambda.is_zero())
		throw SingularError("similitude factor is zero");
	return lambda;
}

QMatrix random_alternating(std::size_t n, Rng &rng, long magnitude)
{
	QMatrix a(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
		{
			Rational v(rng.integer(-magnitude, magnitude));
			a(i, j) = v;
			a(j, i) = -v;
		}
	return a;
}

QMatrix random_j_symmetric(const SymplecticContext &ctx, Rng &rng, long magnitude)
{
	return -(random_alternating(ctx.dim(), rng, magnitude) * ctx.J());
}

QMatrix random_similitude(const SymplecticContext &ctx, Rng &rng, long magnitude)
{
	const std::size_t d = ctx.d();
	QMatrix s = sample_symplectic(ctx, rng.next(), magnitude);
	const Rational a(rng.integer(1, magnitude + 1)), b(rng.integer(1, magnitude + 1));
	QMatrix g = QMatrix::identity(2 * d);
	for (std::size_t i = 0; i < d; ++i)
	{
		g(i, i) = a;
		g(d + i, d + i) = b;
	}
	const Rational c = rng.coin() ? Rational(1) : Rational(-1);
	return (g * s) * c;
}

} // namespace symplaw
