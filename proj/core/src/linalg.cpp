#include "symplaw/linalg.hpp"

#include "symplaw/error.hpp"

#include <utility>

namespace symplaw {

QMatrix to_rational(const PolyMatrix &m)
{
	QMatrix r(m.rows(), m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
		{
			auto c = m(i, j).as_constant();
			if (!c)
				throw StructureError(fmt::format("entry ({}, {}) is not constant: {}", i, j,
				                                 m(i, j).to_string()));
			r(i, j) = *c;
		}
	return r;
}

namespace detail {

Rational bareiss_det(QMatrix m)
{
	const std::size_t n = m.rows();
	Rational prev(1);
	int sign = 1;
	for (std::size_t k = 0; k + 1 < n; ++k)
	{
		if (m(k, k).is_zero())
		{
			std::size_t p = k + 1;
			while (p < n && m(p, k).is_zero())
				++p;
			if (p == n)
				return Rational(0);
			for (std::size_t j = 0; j < n; ++j)
				std::swap(m(k, j), m(p, j));
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i)
		{
			for (std::size_t j = k + 1; j < n; ++j)
				m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
			m(i, k) = Rational(0);
		}
		prev = m(k, k);
	}
	Rational d = n ? m(n - 1, n - 1) : Rational(1);
	return sign < 0 ? -d : d;
}

} // namespace detail

std::vector<Rational> char_lambdas(const QMatrix &m)
{
	m.require_square("char_lambdas");
	const std::size_t n = m.rows();
	// c[k] is the coefficient of t^k.
	std::vector<Rational> c(n + 1);
	c[n] = Rational(1);
	QMatrix mk(n, n);
	for (std::size_t k = 1; k <= n; ++k)
	{
		mk = m * mk;
		for (std::size_t i = 0; i < n; ++i)
			mk(i, i) += c[n - k + 1];
		c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
	}
	std::vector<Rational> lambdas(n + 1);
	for (std::size_t i = 0; i <= n; ++i)
		lambdas[i] = i % 2 ? -c[n - i] : c[n - i];
	return lambdas;
}

Poly char_poly(const QMatrix &m, const std::string &var)
{
	m.require_square("char_poly");
	auto lambdas = char_lambdas(m);
	const std::size_t n = m.rows();
	Poly p;
	for (std::size_t i = 0; i <= n; ++i)
	{
		Rational c = i % 2 ? -lambdas[i] : lambdas[i];
		if (!c.is_zero())
			p += Poly(Monomial(var, static_cast<unsigned>(n - i)), c);
	}
	return p;
}

Poly char_poly(const PolyMatrix &m, const std::string &var)
{
	m.require_square("char_poly");
	for (auto &x : m.data())
		if (x.degree_in(var) > 0)
			throw VariableError(fmt::format("variable '{}' already occurs in the matrix", var));
	PolyMatrix tm = -m;
	const Poly t = Poly::variable(var);
	for (std::size_t i = 0; i < m.rows(); ++i)
		tm(i, i) += t;
	return mat_det(tm);
}

PolyMatrix evaluate_at_matrix(const Poly &p, const std::string &var, const PolyMatrix &x)
{
	x.require_square("evaluate_at_matrix");
	const unsigned deg = p.degree_in(var);
	PolyMatrix acc(x.rows(), x.cols());
	for (unsigned k = deg + 1; k-- > 0;)
	{
		acc = acc * x;
		Poly c = p.coefficient_in(var, k);
		if (!c.is_zero())
			for (std::size_t i = 0; i < x.rows(); ++i)
				acc(i, i) += c;
	}
	return acc;
}

QMatrix evaluate_at_matrix(const Poly &p, const std::string &var, const QMatrix &x)
{
	return to_rational(evaluate_at_matrix(p, var, to_poly(x)));
}

QMatrix inverse(const QMatrix &m)
{
	m.require_square("inverse");
	const std::size_t n = m.rows();
	QMatrix a = m, inv = QMatrix::identity(n);
	for (std::size_t k = 0; k < n; ++k)
	{
		std::size_t p = k;
		while (p < n && a(p, k).is_zero())
			++p;
		if (p == n)
			throw SingularError("matrix is singular");
		if (p != k)
			for (std::size_t j = 0; j < n; ++j)
			{
				std::swap(a(k, j), a(p, j));
				std::swap(inv(k, j), inv(p, j));
			}
		const Rational piv = a(k, k).inverse();
		for (std::size_t j = 0; j < n; ++j)
		{
			a(k, j) *= piv;
			inv(k, j) *= piv;
		}
		for (std::size_t i = 0; i < n; ++i)
		{
			if (i == k || a(i, k).is_zero())
				continue;
			const Rational f = a(i, k);
			for (std::size_t j = 0; j < n; ++j)
			{
				a(i, j) -= f * a(k, j);
				inv(i, j) -= f * inv(k, j);
			}
		}
	}
	return inv;
}

SparseRow RowEchelon::reduce(SparseRow row) const
{
	for (auto it = row.begin(); it != row.end();)
	{
		auto piv = pivots_.find(it->first);
		if (piv == pivots_.end())
		{
			++it;
			continue;
		}
		const Rational f = it->second;
		const std::size_t col = it->first;
		for (auto &[c, v] : piv->second)
		{
			auto [pos, fresh] = row.try_emplace(c, Rational(0));
			pos->second -= f * v;
			if (pos->second.is_zero())
				row.erase(pos);
		}
		it = row.upper_bound(col);
	}
	return row;
}

bool RowEchelon::insert(SparseRow row)
{
	row = reduce(std::move(row));
	if (row.empty())
		return false;
	const std::size_t lead = row.begin()->first;
	const Rational inv = row.begin()->second.inverse();
	for (auto &[c, v] : row)
		v *= inv;
	pivots_.emplace(lead, std::move(row));
	return true;
}

std::size_t rank(const QMatrix &m)
{
	RowEchelon e;
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		SparseRow r;
		for (std::size_t j = 0; j < m.cols(); ++j)
			if (!m(i, j).is_zero())
				r.emplace(j, m(i, j));
		e.insert(std::move(r));
	}
	return e.rank();
}

} // namespace symplaw
