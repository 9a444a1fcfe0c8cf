#pragma once

#include "symplaw/error.hpp"
#include "symplaw/poly.hpp"
#include "symplaw/rational.hpp"

#include <fmt/format.h>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

namespace symplaw {

/// Dense row-major matrix over a commutative ring (Rational or Poly).
template <class T>
class Matrix
{
public:
	using value_type = T;

	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
	Matrix(std::size_t rows, std::size_t cols, const T &fill)
		: rows_(rows), cols_(cols), data_(rows * cols, fill)
	{
	}
	Matrix(std::initializer_list<std::initializer_list<T>> rows)
	{
		rows_ = rows.size();
		cols_ = rows_ ? rows.begin()->size() : 0;
		data_.reserve(rows_ * cols_);
		for (auto &r : rows)
		{
			if (r.size() != cols_)
				throw DimensionError("ragged matrix literal");
			data_.insert(data_.end(), r.begin(), r.end());
		}
	}

	static Matrix identity(std::size_t n)
	{
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = T(1);
		return m;
	}

	static Matrix scalar(std::size_t n, const T &c)
	{
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = c;
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool is_square() const { return rows_ == cols_; }

	T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	const std::vector<T> &data() const { return data_; }

	Matrix transpose() const
	{
		Matrix t(cols_, rows_);
		for (std::size_t i = 0; i < rows_; ++i)
			for (std::size_t j = 0; j < cols_; ++j)
				t(j, i) = (*this)(i, j);
		return t;
	}

	T trace() const
	{
		require_square("trace");
		T s{};
		for (std::size_t i = 0; i < rows_; ++i)
			s += (*this)(i, i);
		return s;
	}

	bool is_zero() const
	{
		for (auto &x : data_)
			if (!(x == T{}))
				return false;
		return true;
	}

	template <class F>
	auto map(F &&f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T &>()))>>
	{
		Matrix<std::decay_t<decltype(f(std::declval<const T &>()))>> r(rows_, cols_);
		for (std::size_t i = 0; i < rows_; ++i)
			for (std::size_t j = 0; j < cols_; ++j)
				r(i, j) = f((*this)(i, j));
		return r;
	}

	Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
	{
		if (r0 + nr > rows_ || c0 + nc > cols_)
			throw DimensionError("block outside matrix");
		Matrix b(nr, nc);
		for (std::size_t i = 0; i < nr; ++i)
			for (std::size_t j = 0; j < nc; ++j)
				b(i, j) = (*this)(r0 + i, c0 + j);
		return b;
	}

	void set_block(std::size_t r0, std::size_t c0, const Matrix &b)
	{
		if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
			throw DimensionError("block outside matrix");
		for (std::size_t i = 0; i < b.rows(); ++i)
			for (std::size_t j = 0; j < b.cols(); ++j)
				(*this)(r0 + i, c0 + j) = b(i, j);
	}

	Matrix &operator+=(const Matrix &o)
	{
		require_same_shape(o, "+");
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] += o.data_[k];
		return *this;
	}

	Matrix &operator-=(const Matrix &o)
	{
		require_same_shape(o, "-");
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] -= o.data_[k];
		return *this;
	}

	Matrix &operator*=(const T &c)
	{
		for (auto &x : data_)
			x *= c;
		return *this;
	}

	friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
	friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
	friend Matrix operator*(Matrix a, const T &c) { return a *= c; }
	friend Matrix operator*(const T &c, Matrix a) { return a *= c; }
	Matrix operator-() const
	{
		Matrix r(*this);
		for (auto &x : r.data_)
			x = -x;
		return r;
	}

	friend Matrix operator*(const Matrix &a, const Matrix &b)
	{
		if (a.cols_ != b.rows_)
			throw DimensionError(fmt::format("cannot multiply {}x{} by {}x{}", a.rows_, a.cols_,
			                                 b.rows_, b.cols_));
		Matrix r(a.rows_, b.cols_);
		for (std::size_t i = 0; i < a.rows_; ++i)
			for (std::size_t k = 0; k < a.cols_; ++k)
			{
				const T &aik = a(i, k);
				if (aik == T{})
					continue;
				for (std::size_t j = 0; j < b.cols_; ++j)
					if (!(b(k, j) == T{}))
						r(i, j) += aik * b(k, j);
			}
		return r;
	}

	friend bool operator==(const Matrix &, const Matrix &) = default;

	void require_square(const char *what) const
	{
		if (!is_square())
			throw DimensionError(fmt::format("{} needs a square matrix, got {}x{}", what, rows_, cols_));
	}

private:
	void require_same_shape(const Matrix &o, const char *op) const
	{
		if (rows_ != o.rows_ || cols_ != o.cols_)
			throw DimensionError(fmt::format("shape mismatch in '{}': {}x{} vs {}x{}", op, rows_,
			                                 cols_, o.rows_, o.cols_));
	}

	std::size_t rows_ = 0, cols_ = 0;
	std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;

inline PolyMatrix to_poly(const QMatrix &m)
{
	return m.map([](const Rational &x) { return Poly(x); });
}

/// Throws StructureError when an entry is not constant.
QMatrix to_rational(const PolyMatrix &m);

template <class T>
Matrix<T> matrix_pow(const Matrix<T> &m, unsigned e)
{
	m.require_square("matrix_pow");
	Matrix<T> r = Matrix<T>::identity(m.rows()), base = m;
	while (e > 0)
	{
		if (e & 1u)
			r = r * base;
		e >>= 1;
		if (e > 0)
			base = base * base;
	}
	return r;
}

namespace detail {

inline constexpr std::size_t kLaplaceLimit = 16;

// Division-free determinant: dp over the set of columns consumed by the
// leading rows. O(2^n n) ring operations.
template <class T>
T laplace_det(const Matrix<T> &m)
{
	const std::size_t n = m.rows();
	if (n == 0)
		return T(1);
	if (n > kLaplaceLimit)
		throw CapacityError(fmt::format("cofactor determinant limited to n <= {}", kLaplaceLimit));
	const std::uint32_t full = (std::uint32_t{1} << n) - 1;
	std::vector<T> dp(std::size_t{full} + 1);
	std::vector<bool> live(std::size_t{full} + 1, false);
	dp[0] = T(1);
	live[0] = true;
	for (std::uint32_t mask = 1; mask <= full; ++mask)
	{
		const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
		T acc{};
		bool any = false;
		for (std::size_t j = 0; j < n; ++j)
		{
			const std::uint32_t bit = std::uint32_t{1} << j;
			if (!(mask & bit))
				continue;
			const std::uint32_t prev = mask ^ bit;
			if (!live[prev] || m(row, j) == T{})
				continue;
			const int above = std::popcount(mask >> (j + 1));
			T term = m(row, j) * dp[prev];
			if (above % 2)
				acc -= term;
			else
				acc += term;
			any = true;
		}
		if (any && !(acc == T{}))
		{
			dp[mask] = std::move(acc);
			live[mask] = true;
		}
	}
	return live[full] ? dp[full] : T{};
}

Rational bareiss_det(QMatrix m);

} // namespace detail

/// Exact determinant. Polynomial entries and rational matrices up to 6x6
/// use cofactor expansion; larger rational matrices use fraction-free
/// elimination.
template <class T>
T mat_det(const Matrix<T> &m)
{
	m.require_square("determinant");
	if constexpr (std::is_same_v<T, Rational>)
		if (m.rows() > 6)
			return detail::bareiss_det(m);
	return detail::laplace_det(m);
}

/// det(t*Id - M) as a polynomial in `var`.
Poly char_poly(const QMatrix &m, const std::string &var = "t");
/// det(t*Id - M) for polynomial entries; `var` must not occur in M.
Poly char_poly(const PolyMatrix &m, const std::string &var = "t");

/// Evaluates p (a polynomial in `var` whose coefficients may involve other
/// variables) at the square matrix x.
PolyMatrix evaluate_at_matrix(const Poly &p, const std::string &var, const PolyMatrix &x);
QMatrix evaluate_at_matrix(const Poly &p, const std::string &var, const QMatrix &x);

} // namespace symplaw
