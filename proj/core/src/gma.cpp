#include "symplaw/gma.hpp"

#include "symplaw/linalg.hpp"
#include "symplaw/symplectic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symplaw {

std::size_t GmaType::total() const
{
	return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

std::size_t GmaType::offset(unsigned i) const
{
	std::size_t o = 0;
	for (unsigned k = 1; k < i; ++k)
		o += dims[k - 1];
	return o;
}

void GmaType::validate() const
{
	const std::size_t r = dims.size();
	if (r == 0)
		throw TypeError("GMA type needs at least one block");
	if (sigma.size() != r)
		throw TypeError(fmt::format("sigma has {} entries for {} blocks", sigma.size(), r));
	std::vector<int> owner(r + 1, -1);
	auto claim = [&](const std::vector<unsigned> &set, int tag, const char *name) {
		for (unsigned i : set)
		{
			if (i < 1 || i > r)
				throw TypeError(fmt::format("{} contains block {} outside 1..{}", name, i, r));
			if (owner[i] != -1)
				throw TypeError(fmt::format("block {} appears in more than one of I0, I1, I2", i));
			owner[i] = tag;
		}
	};
	claim(I0, 0, "I0");
	claim(I1, 1, "I1");
	claim(I2, 2, "I2");
	for (std::size_t i = 1; i <= r; ++i)
		if (owner[i] == -1)
			throw TypeError(fmt::format("block {} is in none of I0, I1, I2", i));
	for (std::size_t i = 1; i <= r; ++i)
	{
		const unsigned s = sigma[i - 1];
		if (s < 1 || s > r)
			throw TypeError(fmt::format("sigma({}) = {} outside 1..{}", i, s, r));
		if (sigma[s - 1] != i)
			throw TypeError(fmt::format("sigma is not an involution at {}", i));
		if (dims[i - 1] == 0)
			throw TypeError(fmt::format("block {} has dimension 0", i));
		if (dims[s - 1] != dims[i - 1])
			throw TypeError(fmt::format("d_{} != d_sigma({})", i, i));
		switch (owner[i])
		{
		case 0:
			if (s != i)
				throw TypeError(fmt::format("sigma moves I0 block {}", i));
			if (dims[i - 1] % 2)
				throw TypeError(fmt::format("I0 block {} has odd dimension", i));
			break;
		case 1:
			if (owner[s] != 2)
				throw TypeError(fmt::format("sigma({}) is not in I2", i));
			break;
		default:
			if (owner[s] != 1)
				throw TypeError(fmt::format("sigma({}) is not in I1", i));
		}
	}
}

std::vector<Poly> GmaSpec::span(unsigned i, unsigned j) const
{
	auto it = blocks.find({i, j});
	if (it != blocks.end())
		return it->second;
	if (i == j)
		return {Poly(1)};
	return {};
}

int GmaSpec::epsilon(unsigned i, unsigned j) const
{
	if (auto it = tau_signs.find({i, j}); it != tau_signs.end())
		return it->second;
	if (auto it = tau_signs.find({j, i}); it != tau_signs.end())
		return it->second;
	return 1;
}

PolyMatrix GmaSpec::reduce(const PolyMatrix &m) const
{
	return m.map([this](const Poly &p) { return ideal.reduce(p); });
}

namespace {

// Coordinates of reduced polynomials in a shared monomial index.
class MonomialCoords
{
public:
	SparseRow row(const Poly &p)
	{
		SparseRow r;
		for (auto &[m, c] : p.terms())
		{
			auto [it, fresh] = index_.try_emplace(m, index_.size());
			r.emplace(it->second, c);
		}
		return r;
	}

private:
	std::map<Monomial, std::size_t> index_;
};

} // namespace

bool in_span(const Poly &p, const std::vector<Poly> &span, const MonomialIdeal &ideal)
{
	const Poly target = ideal.reduce(p);
	if (target.is_zero())
		return true;
	MonomialCoords coords;
	RowEchelon e;
	for (auto &s : span)
		e.insert(coords.row(ideal.reduce(s)));
	return e.reduce(coords.row(target)).empty();
}

QMatrix build_J_delta(const GmaType &t)
{
	t.validate();
	const std::size_t n = t.total();
	QMatrix j(n, n);
	std::set<unsigned> i1(t.I1.begin(), t.I1.end());
	for (unsigned i = 1; i <= t.blocks(); ++i)
	{
		const unsigned s = t.sigma[i - 1];
		const std::size_t di = t.dims[i - 1], ri = t.offset(i), cs = t.offset(s);
		if (s == i)
		{
			const std::size_t h = di / 2;
			for (std::size_t k = 0; k < h; ++k)
			{
				j(ri + k, ri + h + k) = Rational(1);
				j(ri + h + k, ri + k) = Rational(-1);
			}
		}
		else
		{
			const Rational v(i1.count(i) ? -1 : 1);
			for (std::size_t k = 0; k < di; ++k)
				j(ri + k, cs + k) = v;
		}
	}
	return j;
}

namespace {

void require_shape(const GmaSpec &spec, const PolyMatrix &m)
{
	const std::size_t n = spec.type.total();
	if (m.rows() != n || m.cols() != n)
		throw DimensionError(fmt::format("GMA element must be {}x{}, got {}x{}", n, n, m.rows(),
		                                 m.cols()));
}

template <class F>
void for_each_entry(const GmaType &t, F &&f)
{
	for (unsigned bi = 1; bi <= t.blocks(); ++bi)
		for (unsigned bj = 1; bj <= t.blocks(); ++bj)
			for (std::size_t r = 0; r < t.dims[bi - 1]; ++r)
				for (std::size_t c = 0; c < t.dims[bj - 1]; ++c)
					f(bi, bj, t.offset(bi) + r, t.offset(bj) + c);
}

} // namespace

void check_membership(const GmaSpec &spec, const PolyMatrix &m)
{
	spec.type.validate();
	require_shape(spec, m);
	std::map<BlockKey, std::vector<Poly>> spans;
	for_each_entry(spec.type, [&](unsigned bi, unsigned bj, std::size_t r, std::size_t c) {
		const Poly &x = m(r, c);
		if (x.is_zero())
			return;
		auto [it, fresh] = spans.try_emplace({bi, bj});
		if (fresh)
			it->second = spec.span(bi, bj);
		if (!in_span(x, it->second, spec.ideal))
			throw MembershipError(fmt::format("entry ({}, {}) = {} is not in A_{},{}", r, c,
			                                  x.to_string(), bi, bj));
	});
}

namespace {

PolyMatrix apply_involution(const GmaSpec &spec, const PolyMatrix &m)
{
	require_shape(spec, m);
	PolyMatrix tau = m;
	for_each_entry(spec.type, [&](unsigned bi, unsigned bj, std::size_t r, std::size_t c) {
		if (spec.epsilon(bi, bj) < 0)
			tau(r, c) = -tau(r, c);
	});
	const PolyMatrix jd = to_poly(build_J_delta(spec.type));
	return spec.reduce(jd * tau.transpose() * (-jd));
}

} // namespace

PolyMatrix delta_involution(const GmaSpec &spec, const PolyMatrix &m)
{
	check_membership(spec, m);
	return apply_involution(spec, m);
}

GmaValidation validate_standard_gma(const GmaSpec &spec)
{
	GmaValidation rep;
	auto fail = [&](std::string msg) {
		rep.valid = false;
		rep.violations.push_back(std::move(msg));
	};
	try
	{
		spec.type.validate();
	}
	catch (const TypeError &e)
	{
		fail(fmt::format("type: {}", e.what()));
		return rep;
	}
	const unsigned r = static_cast<unsigned>(spec.type.blocks());
	for (auto &[key, sign] : spec.tau_signs)
	{
		if (key.first < 1 || key.first > r || key.second < 1 || key.second > r)
			fail(fmt::format("tau sign for block ({}, {}) outside 1..{}", key.first, key.second, r));
		if (sign != 1 && sign != -1)
			fail(fmt::format("tau sign for ({}, {}) must be +1 or -1", key.first, key.second));
	}
	for (auto &[key, span] : spec.blocks)
	{
		if (key.first < 1 || key.first > r || key.second < 1 || key.second > r)
			fail(fmt::format("span for block ({}, {}) outside 1..{}", key.first, key.second, r));
	}
	const std::vector<Poly> scalars{Poly(1)};
	auto same_span = [&](const std::vector<Poly> &a, const std::vector<Poly> &b) {
		return std::all_of(a.begin(), a.end(), [&](auto &x) { return in_span(x, b, spec.ideal); }) &&
		       std::all_of(b.begin(), b.end(), [&](auto &x) { return in_span(x, a, spec.ideal); });
	};
	for (unsigned i = 1; i <= r; ++i)
		if (!same_span(spec.span(i, i), scalars))
			fail(fmt::format("A_{},{} is not Q", i, i));
	const auto &sig = spec.type.sigma;
	for (unsigned i = 1; i <= r; ++i)
		for (unsigned j = 1; j <= r; ++j)
		{
			const unsigned si = sig[i - 1], sj = sig[j - 1];
			if (!same_span(spec.span(i, j), spec.span(sj, si)))
				fail(fmt::format("A_{},{} != A_{},{}", i, j, sj, si));
			if (spec.epsilon(sj, si) * spec.epsilon(i, j) != 1)
				fail(fmt::format("eps_{},{} * eps_{},{} != 1", sj, si, i, j));
		}
	for (unsigned i = 1; i <= r; ++i)
		for (unsigned j = 1; j <= r; ++j)
			for (unsigned k = 1; k <= r; ++k)
			{
				const auto target = spec.span(i, k);
				bool nonzero = false;
				bool closed = true;
				for (auto &x : spec.span(i, j))
					for (auto &y : spec.span(j, k))
					{
						const Poly xy = spec.reduce(x * y);
						if (xy.is_zero())
							continue;
						nonzero = true;
						if (closed && !in_span(xy, target, spec.ideal))
						{
							closed = false;
							fail(fmt::format("A_{},{} A_{},{} is not contained in A_{},{} (product {})", i,
							                 j, j, k, i, k, xy.to_string()));
						}
					}
				if (nonzero && spec.epsilon(j, k) * spec.epsilon(i, j) != spec.epsilon(i, k))
					fail(fmt::format("eps_{},{} * eps_{},{} != eps_{},{}", j, k, i, j, i, k));
			}
	return rep;
}

namespace {

bool symmetric_element(const GmaSpec &spec, const PolyMatrix &m)
{
	return apply_involution(spec, m) == spec.reduce(m);
}

LambdaVector<Poly> reduced_lambdas(const GmaSpec &spec, const PolyMatrix &m, const std::string &var)
{
	const Poly cp = spec.reduce(char_poly(m, var));
	const std::size_t n = m.rows();
	std::vector<Poly> l(n + 1);
	for (std::size_t i = 0; i <= n; ++i)
	{
		Poly c = cp.coefficient_in(var, static_cast<unsigned>(n - i));
		l[i] = i % 2 ? -c : c;
	}
	return {std::move(l)};
}

const std::string kScratchVar = "_s";

} // namespace

Poly gma_pf_char_poly(const GmaSpec &spec, const PolyMatrix &m, const std::string &var)
{
	require_shape(spec, m);
	const std::size_t n = m.rows();
	const QMatrix jd = build_J_delta(spec.type);
	const PolyMatrix jdp = to_poly(jd);
	PolyMatrix tm = -spec.reduce(m);
	const Poly t = Poly::variable(var);
	for (std::size_t i = 0; i < n; ++i)
		tm(i, i) += t;
	PolyMatrix a = spec.reduce(tm * jdp);
	if (is_alternating(a))
	{
		Poly p = spec.reduce(pfaffian(a));
		return pfaffian(jd).sign() < 0 ? -p : p;
	}
	if (!symmetric_element(spec, m))
		throw StructureError("GMA Pfaffian needs a symmetric element");
	auto red = [&spec](Poly p) { return spec.reduce(p); };
	auto lv = reduced_lambdas(spec, m, kScratchVar);
	auto tv = pfaffian_coeffs_from_lambdas(lv, red);
	const std::size_t d = n / 2;
	Poly out;
	for (std::size_t i = 0; i <= d; ++i)
	{
		Poly c = tv.coeffs[i] * Poly(Monomial(var, static_cast<unsigned>(d - i)));
		out += i % 2 ? -c : c;
	}
	return spec.reduce(out);
}

Poly gma_pfaffian(const GmaSpec &spec, const PolyMatrix &m)
{
	require_shape(spec, m);
	const QMatrix jd = build_J_delta(spec.type);
	PolyMatrix a = spec.reduce(spec.reduce(m) * to_poly(jd));
	if (is_alternating(a))
	{
		Poly p = spec.reduce(pfaffian(a));
		return pfaffian(jd).sign() < 0 ? -p : p;
	}
	if (!symmetric_element(spec, m))
		throw StructureError("GMA Pfaffian needs a symmetric element");
	auto red = [&spec](Poly p) { return spec.reduce(p); };
	auto tv = pfaffian_coeffs_from_lambdas(reduced_lambdas(spec, m, kScratchVar), red);
	return tv.coeffs.back();
}

GmaValues gma_trace_det_pf(const GmaSpec &spec, const PolyMatrix &m)
{
	check_membership(spec, m);
	const PolyMatrix r = spec.reduce(m);
	GmaValues v{spec.reduce(r.trace()), spec.reduce(mat_det(r)), std::nullopt};
	if (symmetric_element(spec, r))
		v.pf = gma_pfaffian(spec, r);
	return v;
}

PolyMatrix gma_chi_alpha(const GmaSpec &spec, const std::vector<PolyMatrix> &elems,
                         const std::vector<unsigned> &alpha)
{
	for (auto &e : elems)
		if (!symmetric_element(spec, e))
			throw ArgumentError("gma_chi_alpha needs symmetric elements");
	const unsigned d = static_cast<unsigned>(spec.type.total() / 2);
	return polarized_cayley_hamilton(
		elems, alpha, d,
		[&spec](const PolyMatrix &s, const std::string &var) { return gma_pf_char_poly(spec, s, var); },
		[&spec](const Poly &p) { return spec.reduce(p); });
}

SchResult check_sch_condition(const GmaSpec &spec)
{
	spec.type.validate();
	const std::size_t n = spec.type.total();
	std::vector<unsigned> moved(spec.type.I1);
	moved.insert(moved.end(), spec.type.I2.begin(), spec.type.I2.end());
	std::sort(moved.begin(), moved.end());
	for (unsigned i : moved)
	{
		const unsigned j = spec.type.sigma[i - 1];
		for (auto &x : spec.span(i, j))
		{
			const Poly rx = spec.reduce(x);
			if (rx.is_zero())
				continue;
			PolyMatrix e(n, n);
			e(spec.type.offset(i), spec.type.offset(j)) = rx;
			PolyMatrix img = delta_involution(spec, e);
			if (!(img == -e))
				return {false, SchWitness{i, j, rx, e, img}};
		}
	}
	return {true, std::nullopt};
}

PolyMatrix random_gma_element(const GmaSpec &spec, Rng &rng, long magnitude)
{
	spec.type.validate();
	const std::size_t n = spec.type.total();
	PolyMatrix m(n, n);
	std::map<BlockKey, std::vector<Poly>> spans;
	for_each_entry(spec.type, [&](unsigned bi, unsigned bj, std::size_t r, std::size_t c) {
		auto [it, fresh] = spans.try_emplace({bi, bj});
		if (fresh)
			it->second = spec.span(bi, bj);
		Poly v;
		for (auto &s : it->second)
			v += s * rng.rational(magnitude);
		m(r, c) = spec.reduce(v);
	});
	return m;
}

PolyMatrix random_symmetric_gma_element(const GmaSpec &spec, Rng &rng, long magnitude)
{
	PolyMatrix m = random_gma_element(spec, rng, magnitude);
	return spec.reduce(m + delta_involution(spec, m));
}

} // namespace symplaw
