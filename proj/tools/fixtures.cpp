#include "fixtures.hpp"

#include <symplaw/symplectic.hpp>

namespace symplaw::fixtures {

GmaSpec standard_mixed_gma()
{
	GmaSpec s;
	s.type.I0 = {1};
	s.type.I1 = {2};
	s.type.I2 = {3};
	s.type.sigma = {1, 3, 2};
	s.type.dims = {2, 1, 1};
	for (unsigned i = 1; i <= 3; ++i)
		for (unsigned j = 1; j <= 3; ++j)
			if (i != j)
				s.blocks[{i, j}] = {Poly(1)};
	return s;
}

GmaSpec nilpotent_pair_gma(int eps12)
{
	GmaSpec s;
	s.type.I1 = {1};
	s.type.I2 = {2};
	s.type.sigma = {2, 1};
	s.type.dims = {1, 1};
	s.base_vars = {"u", "v"};
	s.ideal = MonomialIdeal({Monomial("u", 2), Monomial::from_powers({{"u", 1}, {"v", 1}}), Monomial("v", 2)});
	s.blocks[{1, 2}] = {Poly::variable("u")};
	s.blocks[{2, 1}] = {Poly::variable("v")};
	s.tau_signs[{1, 2}] = eps12;
	return s;
}

InvolutiveRepresentation random_representation(unsigned d, GroupKind kind, unsigned generators,
                                               std::uint64_t seed)
{
	SymplecticContext ctx(d);
	Rng rng(seed);
	std::vector<QMatrix> imgs;
	for (unsigned g = 0; g < generators; ++g)
		imgs.push_back(kind == GroupKind::Sp ? sample_symplectic(ctx, rng.next(), 2)
		                                     : random_similitude(ctx, rng, 2));
	return InvolutiveRepresentation(ctx, kind, std::move(imgs));
}

GroupAlgebraElement random_element(Rng &rng, unsigned generators, unsigned terms, unsigned max_len)
{
	GroupAlgebraElement x;
	const std::size_t n = rng.index(terms) + 1;
	for (std::size_t k = 0; k < n; ++k)
	{
		std::vector<int> l;
		const std::size_t len = rng.index(max_len + 1);
		for (std::size_t i = 0; i < len; ++i)
		{
			const int g = static_cast<int>(rng.index(generators)) + 1;
			l.push_back(rng.coin() ? g : -g);
		}
		x.add(Word(std::move(l)), Poly(rng.nonzero_rational(3)));
	}
	return x;
}

QMatrix random_sl2(Rng &rng)
{
	QMatrix g = QMatrix::identity(2);
	for (int k = 0; k < 4; ++k)
	{
		QMatrix e = QMatrix::identity(2);
		if (k % 2)
			e(1, 0) = rng.rational(4);
		else
			e(0, 1) = rng.rational(4);
		g = g * e;
	}
	return g;
}

} // namespace symplaw::fixtures
