#pragma once

#include "symplaw/error.hpp"
#include "symplaw/linalg.hpp"
#include "symplaw/matrix.hpp"
#include "symplaw/random.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

namespace symplaw {

/// Standard symplectic form J = [[0, Id], [-Id, 0]] on Q^(2d).
class SymplecticContext
{
public:
	explicit SymplecticContext(unsigned d);

	unsigned d() const { return d_; }
	std::size_t dim() const { return 2 * std::size_t{d_}; }
	const QMatrix &J() const { return J_; }
	/// Pf(J) = (-1)^(d(d-1)/2).
	int pfaffian_of_J() const { return pf_J_; }

	template <class T>
	void require_dim(const Matrix<T> &m, const char *what) const
	{
		if (m.rows() != dim() || m.cols() != dim())
			throw DimensionError(fmt::format("{}: expected {}x{} matrix, got {}x{}", what, dim(),
			                                 dim(), m.rows(), m.cols()));
	}

	friend bool operator==(const SymplecticContext &a, const SymplecticContext &b)
	{
		return a.d_ == b.d_;
	}

private:
	unsigned d_;
	QMatrix J_;
	int pf_J_;
};

/// M^j = J M^T J^-1. In d x d blocks [[A, B], [C, D]] maps to
/// [[D^T, -B^T], [-C^T, A^T]].
template <class T>
Matrix<T> symplectic_transpose(const SymplecticContext &ctx, const Matrix<T> &m)
{
	ctx.require_dim(m, "symplectic_transpose");
	const std::size_t d = ctx.d();
	Matrix<T> r(2 * d, 2 * d);
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
		{
			r(i, j) = m(d + j, d + i);
			r(i, d + j) = -m(j, d + i);
			r(d + i, j) = -m(d + j, i);
			r(d + i, d + j) = m(j, i);
		}
	return r;
}

template <class T>
bool is_alternating(const Matrix<T> &a)
{
	if (!a.is_square())
		return false;
	for (std::size_t i = 0; i < a.rows(); ++i)
	{
		if (!(a(i, i) == T{}))
			return false;
		for (std::size_t j = i + 1; j < a.cols(); ++j)
			if (!(a(i, j) == -a(j, i)))
				return false;
	}
	return true;
}

template <class T>
bool is_j_symmetric(const SymplecticContext &ctx, const Matrix<T> &m)
{
	return symplectic_transpose(ctx, m) == m;
}

namespace detail {

template <class T>
class PfaffianExpander
{
public:
	explicit PfaffianExpander(const Matrix<T> &a) : a_(a) {}

	T operator()(std::uint64_t mask)
	{
		if (mask == 0)
			return T(1);
		if (auto it = memo_.find(mask); it != memo_.end())
			return it->second;
		const int i = std::countr_zero(mask);
		const std::uint64_t rest = mask & (mask - 1);
		T acc{};
		int pos = 0;
		for (std::uint64_t scan = rest; scan; scan &= scan - 1)
		{
			const int j = std::countr_zero(scan);
			++pos;
			const T &aij = a_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
			if (aij == T{})
				continue;
			T minor = (*this)(rest & ~(std::uint64_t{1} << j));
			if (minor == T{})
				continue;
			if (pos % 2)
				acc += aij * minor;
			else
				acc -= aij * minor;
		}
		return memo_.emplace(mask, std::move(acc)).first->second;
	}

private:
	const Matrix<T> &a_;
	std::unordered_map<std::uint64_t, T> memo_;
};

} // namespace detail

/// Pfaffian by first-row expansion, memoized on the remaining index set.
/// Throws StructureError unless `a` is alternating of even size.
template <class T>
T pfaffian(const Matrix<T> &a)
{
	if (!a.is_square() || a.rows() % 2)
		throw StructureError(fmt::format("pfaffian needs an even square matrix, got {}x{}",
		                                 a.rows(), a.cols()));
	if (!is_alternating(a))
		throw StructureError("pfaffian needs an alternating matrix");
	if (a.rows() > 62)
		throw CapacityError("pfaffian limited to size 62");
	if (a.rows() == 0)
		return T(1);
	detail::PfaffianExpander<T> ex(a);
	return ex((std::uint64_t{1} << a.rows()) - 1);
}

/// Pf(M J) / Pf(J); defined on j-symmetric M, squares to det(M).
template <class T>
T reduced_pfaffian(const SymplecticContext &ctx, const Matrix<T> &m)
{
	ctx.require_dim(m, "reduced_pfaffian");
	Matrix<T> mj = m * ctx.J().map([](const Rational &x) { return T(x); });
	if (!is_alternating(mj))
		throw StructureError("reduced_pfaffian needs a j-symmetric matrix");
	T p = pfaffian(mj);
	return ctx.pfaffian_of_J() < 0 ? -p : p;
}

/// Reduced Pfaffian of t*Id - M as a polynomial in `var` (monic, degree d).
Poly pfaffian_char_poly(const SymplecticContext &ctx, const QMatrix &m,
                        const std::string &var = "t");
Poly pfaffian_char_poly(const SymplecticContext &ctx, const PolyMatrix &m,
                        const std::string &var = "t");

/// (Id - H)^-1 (Id + H). Throws SingularError when Id - H is singular.
QMatrix cayley_transform(const QMatrix &h);

/// Random element H = J S of the Lie algebra sp_2d, S symmetric with
/// integer entries in [-magnitude, magnitude].
QMatrix sample_lie_algebra(const SymplecticContext &ctx, Rng &rng, long magnitude);

/// Deterministic element of Sp_2d(Q) obtained by a Cayley transform.
QMatrix sample_symplectic(const SymplecticContext &ctx, std::uint64_t seed, long magnitude);

/// lambda with M^j M = lambda Id. Throws NotASimilitudeError or
/// SingularError.
Rational similitude(const SymplecticContext &ctx, const QMatrix &m);

/// Random alternating n x n matrix with entries in [-magnitude, magnitude].
QMatrix random_alternating(std::size_t n, Rng &rng, long magnitude);
/// Random j-symmetric matrix (A J^-1 with A alternating).
QMatrix random_j_symmetric(const SymplecticContext &ctx, Rng &rng, long magnitude);
/// Random similitude diag(a Id, b Id) * S * (+-1) with S symplectic and
/// similitude factor ab.
QMatrix random_similitude(const SymplecticContext &ctx, Rng &rng, long magnitude);

} // namespace symplaw
