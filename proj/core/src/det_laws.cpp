#include "symplaw/det_laws.hpp"

namespace symplaw {

LambdaVector<Rational> lambdas_of(const QMatrix &m)
{
	return {char_lambdas(m)};
}

std::vector<Rational> power_traces(const QMatrix &m, std::size_t n)
{
	m.require_square("power_traces");
	std::vector<Rational> s;
	QMatrix p = m;
	for (std::size_t k = 1; k <= n; ++k)
	{
		s.push_back(p.trace());
		if (k < n)
			p = p * m;
	}
	return s;
}

PfaffianCoeffVector<Rational> pfaffian_coeffs_of(const SymplecticContext &ctx, const QMatrix &m)
{
	const Poly p = pfaffian_char_poly(ctx, m, "t");
	std::vector<Rational> t(ctx.d() + 1);
	for (unsigned i = 0; i <= ctx.d(); ++i)
	{
		Rational c = p.coefficient(Monomial("t", ctx.d() - i));
		t[i] = i % 2 ? -c : c;
	}
	return {std::move(t)};
}

namespace {

void require_d4(const LambdaVector<Rational> &lv)
{
	if (lv.coeffs.size() != 9)
		throw DimensionError(fmt::format("d = 4 closed forms need 2d = 8, got {}", lv.dim()));
}

void require_traces(const std::vector<Rational> &s)
{
	if (s.size() < 4)
		throw DimensionError(fmt::format("d = 4 closed forms need 4 power traces, got {}", s.size()));
}

Rational q(long p, long d)
{
	return Rational(mpz_class(p), mpz_class(d));
}

} // namespace

std::pair<Rational, Rational> closed_form_check_d4(const LambdaVector<Rational> &lv,
                                                   const std::vector<Rational> &traces)
{
	require_d4(lv);
	require_traces(traces);
	const auto &l = lv.coeffs;
	const auto &s = traces;
	Rational from_l = q(1, 2) * l[4] - q(1, 4) * l[1] * l[3] + q(1, 16) * l[1].pow(2) * l[2] +
	                  q(1, 8) * l[2].pow(2) - q(3, 128) * l[1].pow(4);
	Rational from_s = q(7, 384) * s[0].pow(4) - q(3, 32) * s[0].pow(2) * s[1] +
	                  q(1, 12) * s[0] * s[2] + q(3, 32) * s[1].pow(2) - q(1, 8) * s[3];
	return {from_l, from_s};
}

Rational t4_from_lambdas(const LambdaVector<Rational> &lv)
{
	require_d4(lv);
	const auto &l = lv.coeffs;
	return q(1, 2) * l[4] - q(1, 4) * l[1] * l[3] + q(3, 16) * l[1].pow(2) * l[2] -
	       q(1, 8) * l[2].pow(2) - q(5, 128) * l[1].pow(4);
}

Rational t4_from_traces(const std::vector<Rational> &traces)
{
	require_traces(traces);
	const auto &s = traces;
	return q(1, 384) * s[0].pow(4) - q(1, 32) * s[0].pow(2) * s[1] + q(1, 12) * s[0] * s[2] +
	       q(1, 32) * s[1].pow(2) - q(1, 8) * s[3];
}

Poly eval_det_law(const InvolutiveRepresentation &rep, const GroupAlgebraElement &x)
{
	return mat_det(rep.image(x));
}

Poly eval_pf_law(const InvolutiveRepresentation &rep, const GroupAlgebraElement &x)
{
	if (!(star(rep, x) == x))
		throw SymmetryError(fmt::format("element is not fixed by the involution: {}", x.to_string()));
	return reduced_pfaffian(rep.ctx(), rep.image(x));
}

namespace {

const std::string kCharVar = "_t";

std::string polar_var(std::size_t i)
{
	return fmt::format("_t{}", i + 1);
}

} // namespace

PolyMatrix polarized_cayley_hamilton(const std::vector<PolyMatrix> &mats,
                                     const std::vector<unsigned> &alpha, unsigned d,
                                     const PfCharPoly &pf_char,
                                     const std::function<Poly(const Poly &)> &reduce)
{
	if (mats.empty())
		throw ArgumentError("chi_alpha needs at least one element");
	if (alpha.size() != mats.size())
		throw ArgumentError(fmt::format("alpha has {} entries for {} elements", alpha.size(),
		                                mats.size()));
	unsigned total = 0;
	for (unsigned a : alpha)
		total += a;
	if (total != d)
		throw ArgumentError(fmt::format("alpha must sum to d = {}, got {}", d, total));

	const std::size_t n = mats.front().rows();
	PolyMatrix s(n, n);
	std::vector<std::string> vars;
	for (std::size_t i = 0; i < mats.size(); ++i)
	{
		if (mats[i].rows() != n || mats[i].cols() != n)
			throw DimensionError("chi_alpha elements must share one shape");
		vars.push_back(polar_var(i));
		s += mats[i] * Poly::variable(vars.back());
	}
	auto red = [&](PolyMatrix m) {
		if (reduce)
			m = m.map(reduce);
		return m;
	};
	const Poly chi = pf_char(s, kCharVar);
	PolyMatrix value = red(evaluate_at_matrix(chi, kCharVar, s));

	std::vector<Monomial::Power> powers;
	for (std::size_t i = 0; i < alpha.size(); ++i)
		powers.emplace_back(vars[i], alpha[i]);
	const Monomial pattern = Monomial::from_powers(powers);
	return value.map([&](const Poly &p) { return p.coefficient_of(pattern, vars); });
}

PolyMatrix chi_alpha(const InvolutiveRepresentation &rep, const std::vector<GroupAlgebraElement> &elems,
                     const std::vector<unsigned> &alpha)
{
	std::vector<PolyMatrix> mats;
	for (auto &r : elems)
	{
		if (!(star(rep, r) == r))
			throw ArgumentError(fmt::format("chi_alpha needs symmetric elements: {}", r.to_string()));
		mats.push_back(rep.image(r));
	}
	const SymplecticContext &ctx = rep.ctx();
	return polarized_cayley_hamilton(mats, alpha, ctx.d(),
	                                 [&ctx](const PolyMatrix &m, const std::string &var) {
		                                 return pfaffian_char_poly(ctx, m, var);
	                                 });
}

std::pair<Rational, Rational> sl2_identities(const QMatrix &g)
{
	if (g.rows() != 2 || g.cols() != 2)
		throw DimensionError("SL2 identities need a 2x2 matrix");
	const QMatrix gi = inverse(g);
	const Rational t = g.trace(), ti = gi.trace();
	const Rational t2 = (g * g).trace(), ti2 = (gi * gi).trace();
	return {t * t + Rational(2) * t * ti + ti * ti - Rational(2) * t2 - Rational(2) * ti2 - Rational(8),
	        Rational(4) * t * t - Rational(4) * t2 - Rational(8)};
}

} // namespace symplaw
