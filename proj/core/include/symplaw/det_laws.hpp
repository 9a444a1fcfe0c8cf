#pragma once

#include "symplaw/group_algebra.hpp"
#include "symplaw/linalg.hpp"
#include "symplaw/symplectic.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace symplaw {

/// [L0, ..., Ln] with det(t - M) = sum (-1)^i Li t^(n-i); L0 = 1.
template <class T>
struct LambdaVector
{
	std::vector<T> coeffs;

	std::size_t dim() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
	const T &operator[](std::size_t i) const { return coeffs.at(i); }
	friend bool operator==(const LambdaVector &, const LambdaVector &) = default;
};

/// [T0, ..., Td] with P(t - M) = sum (-1)^i Ti t^(d-i); T0 = 1.
template <class T>
struct PfaffianCoeffVector
{
	std::vector<T> coeffs;

	std::size_t dim() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
	const T &operator[](std::size_t i) const { return coeffs.at(i); }
	friend bool operator==(const PfaffianCoeffVector &, const PfaffianCoeffVector &) = default;
};

struct Identity
{
	template <class T>
	T operator()(T x) const
	{
		return x;
	}
};

/// Newton relations i Li = sum_{k=1..i} (-1)^(k-1) L_{i-k} s_k, given
/// traces s = [s1, ..., sn] of the powers M^k.
template <class T, class Reduce = Identity>
LambdaVector<T> newton_lambdas_from_traces(const std::vector<T> &s, std::size_t n, Reduce reduce = {})
{
	if (n < 1)
		throw ArgumentError("newton_lambdas_from_traces needs n >= 1");
	if (s.size() < n)
		throw DimensionError(fmt::format("need {} power traces, got {}", n, s.size()));
	std::vector<T> l(n + 1);
	l[0] = T(1);
	for (std::size_t i = 1; i <= n; ++i)
	{
		T acc{};
		for (std::size_t k = 1; k <= i; ++k)
		{
			T term = l[i - k] * s[k - 1];
			if (k % 2)
				acc += term;
			else
				acc -= term;
		}
		l[i] = reduce(T(acc * Rational(Rational(1) / Rational(static_cast<long>(i)))));
	}
	return {std::move(l)};
}

/// Solves Li = sum_j Tj T_{i-j} with T0 = 1, Ti = 0 for i > d, where the
/// Lambda vector has length 2d + 1. Throws SpectrumError when the rows
/// d < i <= 2d are inconsistent.
template <class T, class Reduce = Identity>
PfaffianCoeffVector<T> pfaffian_coeffs_from_lambdas(const LambdaVector<T> &lv, Reduce reduce = {})
{
	if (lv.coeffs.empty() || lv.dim() % 2)
		throw DimensionError(fmt::format("Lambda vector must have odd length 2d+1, got {}",
		                                 lv.coeffs.size()));
	if (!(reduce(lv.coeffs[0]) == T(1)))
		throw SpectrumError("Lambda_0 must be 1");
	const std::size_t d = lv.dim() / 2;
	std::vector<T> t(d + 1);
	t[0] = T(1);
	const Rational half = Rational(1) / Rational(2);
	for (std::size_t i = 1; i <= d; ++i)
	{
		T acc = lv.coeffs[i];
		for (std::size_t j = 1; j < i; ++j)
			acc -= t[j] * t[i - j];
		t[i] = reduce(T(acc * half));
	}
	for (std::size_t i = d + 1; i <= 2 * d; ++i)
	{
		T acc{};
		for (std::size_t j = i - d; j <= d; ++j)
			acc += t[j] * t[i - j];
		if (!(reduce(T(lv.coeffs[i] - acc)) == T{}))
			throw SpectrumError(fmt::format("Lambda_{} is not the square convolution of the "
			                                "Pfaffian coefficients",
			                                i));
	}
	return {std::move(t)};
}

/// Lambda vector of a rational matrix.
LambdaVector<Rational> lambdas_of(const QMatrix &m);
/// Power traces tr(M^k), k = 1..n.
std::vector<Rational> power_traces(const QMatrix &m, std::size_t n);
/// Coefficients [T0..Td] read off the reduced Pfaffian characteristic
/// polynomial of a j-symmetric matrix.
PfaffianCoeffVector<Rational> pfaffian_coeffs_of(const SymplecticContext &ctx, const QMatrix &m);

/// The two d = 4 closed forms with the printed coefficients:
///   1/2 L4 - 1/4 L1 L3 + 1/16 L1^2 L2 + 1/8 L2^2 - 3/128 L1^4
///   7/384 s1^4 - 3/32 s1^2 s2 + 1/12 s1 s3 + 3/32 s2^2 - 1/8 s4
/// Throws DimensionError unless lv has length 9 and at least 4 traces.
std::pair<Rational, Rational> closed_form_check_d4(const LambdaVector<Rational> &lv,
                                                   const std::vector<Rational> &traces);
/// The forms that actually solve the recursion for T4:
///   1/2 L4 - 1/4 L1 L3 + 3/16 L1^2 L2 - 1/8 L2^2 - 5/128 L1^4
///   1/384 s1^4 - 1/32 s1^2 s2 + 1/12 s1 s3 + 1/32 s2^2 - 1/8 s4
Rational t4_from_lambdas(const LambdaVector<Rational> &lv);
Rational t4_from_traces(const std::vector<Rational> &traces);

/// D(x) = det(rho(x)).
Poly eval_det_law(const InvolutiveRepresentation &rep, const GroupAlgebraElement &x);
/// P(x) = reduced Pfaffian of rho(x). Throws SymmetryError unless x* = x.
Poly eval_pf_law(const InvolutiveRepresentation &rep, const GroupAlgebraElement &x);

/// Reduced-Pfaffian characteristic polynomial of a square matrix, as a
/// polynomial in the given variable.
using PfCharPoly = std::function<Poly(const PolyMatrix &, const std::string &)>;

/// Coefficient of t1^a1 ... tn^an in chi(s, s), s = sum ti mats[i], where
/// chi is the characteristic polynomial returned by `pf_char`. Entries
/// are passed through `reduce`. Throws ArgumentError when sum(alpha) != d.
PolyMatrix polarized_cayley_hamilton(const std::vector<PolyMatrix> &mats,
                                     const std::vector<unsigned> &alpha, unsigned d,
                                     const PfCharPoly &pf_char,
                                     const std::function<Poly(const Poly &)> &reduce = {});

/// chi_alpha for symmetric elements r1..rn under a representation.
PolyMatrix chi_alpha(const InvolutiveRepresentation &rep, const std::vector<GroupAlgebraElement> &elems,
                     const std::vector<unsigned> &alpha);

/// The two d = 1 identities in t = tr rho(gamma) for gamma in SL2:
/// t(g)^2 + 2 t(g) t(g^-1) + t(g^-1)^2 - 2 t(g^2) - 2 t(g^-2) - 8 and
/// 4 t(g)^2 - 4 t(g^2) - 8. Both vanish on SL2.
std::pair<Rational, Rational> sl2_identities(const QMatrix &g);

} // namespace symplaw
