#pragma once

#include "symplaw/matrix.hpp"
#include "symplaw/rational.hpp"

#include <cstdint>
#include <random>

namespace symplaw {

/// Seeded generator with library-independent reductions, so identical
/// seeds give identical samples on every standard library.
class Rng
{
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	std::uint64_t next() { return engine_(); }

	/// Uniform-ish integer in [lo, hi].
	long integer(long lo, long hi)
	{
		const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
		return lo + static_cast<long>(engine_() % span);
	}

	std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

	bool coin() { return (engine_() & 1u) != 0; }

	/// p/q with |p| <= magnitude and 1 <= q <= magnitude.
	Rational rational(long magnitude)
	{
		const long p = integer(-magnitude, magnitude);
		const long q = integer(1, magnitude);
		return Rational(mpz_class(p), mpz_class(q));
	}

	Rational nonzero_rational(long magnitude)
	{
		for (;;)
		{
			Rational r = rational(magnitude);
			if (!r.is_zero())
				return r;
		}
	}

	QMatrix matrix(std::size_t rows, std::size_t cols, long magnitude)
	{
		QMatrix m(rows, cols);
		for (std::size_t i = 0; i < rows; ++i)
			for (std::size_t j = 0; j < cols; ++j)
				m(i, j) = rational(magnitude);
		return m;
	}

	QMatrix integer_matrix(std::size_t rows, std::size_t cols, long magnitude)
	{
		QMatrix m(rows, cols);
		for (std::size_t i = 0; i < rows; ++i)
			for (std::size_t j = 0; j < cols; ++j)
				m(i, j) = Rational(integer(-magnitude, magnitude));
		return m;
	}

private:
	std::mt19937_64 engine_;
};

} // namespace symplaw
