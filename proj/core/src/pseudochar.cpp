#include "symplaw/pseudochar.hpp"

#include <algorithm>

namespace symplaw {

std::string to_string(const WordTuple &gammas)
{
	std::string out = "(";
	for (std::size_t i = 0; i < gammas.size(); ++i)
		out += (i ? ", " : "") + gammas[i].to_string();
	return out + ")";
}

Pseudocharacter::Pseudocharacter(InvolutiveRepresentation rep) : rep_(std::move(rep)) {}

Pseudocharacter::Pseudocharacter(const Pseudocharacter &other) : rep_(other.rep_)
{
	std::lock_guard lock(other.mutex_);
	cache_ = other.cache_;
}

Rational Pseudocharacter::theta(const Invariant &f, const WordTuple &gammas) const
{
	if (gammas.size() != f.arity)
		throw ArityError(fmt::format("{} takes {} arguments, got {}", f.to_string(), f.arity,
		                             gammas.size()));
	if (!f.is_invariant_function())
		throw ArgumentError(fmt::format("{} is not a conjugation invariant", f.to_string()));
	if (f.uses_similitude() && kind() != GroupKind::GSp)
		throw UnsupportedKindError("similitude generators need a GSp pseudocharacter");
	Key key{f, gammas};
	{
		std::lock_guard lock(mutex_);
		if (auto it = cache_.find(key); it != cache_.end())
			return it->second;
	}
	std::vector<QMatrix> mats;
	mats.reserve(gammas.size());
	for (auto &g : gammas)
		mats.push_back(rep_.image(g));
	Rational v = eval_invariant(rep_.ctx(), f, mats);
	std::lock_guard lock(mutex_);
	return cache_.emplace(std::move(key), std::move(v)).first->second;
}

void Pseudocharacter::override_entry(const Invariant &f, const WordTuple &gammas, const Rational &value)
{
	std::lock_guard lock(mutex_);
	cache_[Key{f, gammas}] = value;
}

std::size_t Pseudocharacter::cache_size() const
{
	std::lock_guard lock(mutex_);
	return cache_.size();
}

Rational theta_eval(const Pseudocharacter &pc, const Invariant &f, const WordTuple &gammas)
{
	return pc.theta(f, gammas);
}

Invariant substitute(const Invariant &f, const std::vector<unsigned> &zeta, unsigned n)
{
	if (zeta.size() != f.arity)
		throw ArityError(fmt::format("zeta has {} entries for arity {}", zeta.size(), f.arity));
	for (unsigned z : zeta)
		if (z < 1 || z > n)
			throw ArgumentError(fmt::format("zeta value {} outside 1..{}", z, n));
	std::vector<InvariantFunction> out;
	for (auto &factor : f.factors)
		out.push_back(std::visit(
			[&](const auto &v) -> InvariantFunction {
				using V = std::decay_t<decltype(v)>;
				if constexpr (std::is_same_v<V, SigmaOf>)
				{
					std::vector<Letter> l = v.word.letters();
					for (auto &x : l)
						x.index = zeta[x.index - 1];
					return SigmaOf{v.sigma, TraceWord(std::move(l))};
				}
				else
				{
					V w = v;
					w.index = zeta[v.index - 1];
					return w;
				}
			},
			factor));
	return Invariant(n, std::move(out));
}

Invariant hat(const Invariant &f)
{
	const unsigned m = f.arity;
	std::vector<InvariantFunction> out;
	for (auto &factor : f.factors)
		std::visit(
			[&](const auto &v) {
				using V = std::decay_t<decltype(v)>;
				if constexpr (std::is_same_v<V, SigmaOf>)
				{
					std::vector<Letter> l;
					for (auto &x : v.word.letters())
					{
						if (x.index != m)
							l.push_back(x);
						else if (!x.starred)
						{
							l.push_back({m, false});
							l.push_back({m + 1, false});
						}
						else
						{
							l.push_back({m + 1, true});
							l.push_back({m, true});
						}
					}
					out.push_back(SigmaOf{v.sigma, TraceWord(std::move(l))});
				}
				else if constexpr (std::is_same_v<V, SimilitudePower>)
				{
					out.push_back(v);
					if (v.index == m)
						out.push_back(SimilitudePower{m + 1, v.power});
				}
				else
					throw ArgumentError("entry probes have no product rule");
			},
			factor);
	return Invariant(m + 1, std::move(out));
}

namespace {

Word random_word(Rng &rng, std::size_t generators, std::size_t max_len)
{
	std::vector<int> l;
	const std::size_t len = rng.index(max_len + 1);
	for (std::size_t k = 0; k < len; ++k)
	{
		const int g = static_cast<int>(rng.index(generators)) + 1;
		l.push_back(rng.coin() ? g : -g);
	}
	return Word(std::move(l));
}

InvariantFunction random_factor(Rng &rng, unsigned m, unsigned two_d, bool gsp)
{
	if (gsp && rng.index(4) == 0)
		return SimilitudePower{static_cast<unsigned>(rng.index(m)) + 1, rng.coin() ? -1 : 1};
	const std::size_t len = rng.index(4) + 1;
	std::vector<Letter> l;
	for (std::size_t k = 0; k < len; ++k)
		l.push_back({static_cast<unsigned>(rng.index(m)) + 1, rng.coin()});
	return SigmaOf{static_cast<unsigned>(rng.index(two_d)) + 1, TraceWord(std::move(l))};
}

} // namespace

std::vector<AxiomTrial> sample_axiom_trials(const Pseudocharacter &pc, unsigned trials, std::uint64_t seed)
{
	Rng rng(seed);
	const auto &rep = pc.rep();
	const std::size_t gens = std::max<std::size_t>(rep.generator_count(), 1);
	const unsigned two_d = static_cast<unsigned>(rep.ctx().dim());
	const bool gsp = pc.kind() == GroupKind::GSp;
	std::vector<AxiomTrial> out;
	for (unsigned t = 0; t < trials; ++t)
	{
		AxiomTrial tr;
		const unsigned m = static_cast<unsigned>(rng.index(3)) + 1;
		std::vector<InvariantFunction> factors;
		const std::size_t nf = rng.index(2) + 1;
		for (std::size_t k = 0; k < nf; ++k)
			factors.push_back(random_factor(rng, m, two_d, gsp));
		tr.f = Invariant(m, std::move(factors));
		tr.n = static_cast<unsigned>(rng.index(3)) + 1;
		for (unsigned i = 0; i < m; ++i)
			tr.zeta.push_back(static_cast<unsigned>(rng.index(tr.n)) + 1);
		auto words = [&](std::size_t k) {
			WordTuple w;
			for (std::size_t i = 0; i < k; ++i)
				w.push_back(rep.generator_count() ? random_word(rng, gens, 3) : Word());
			return w;
		};
		tr.gammas1 = words(tr.n);
		tr.gammas2 = words(m + 1);
		out.push_back(std::move(tr));
	}
	return out;
}

bool check_axiom1(const Pseudocharacter &pc, const Invariant &f, const std::vector<unsigned> &zeta,
                  unsigned n, const WordTuple &gammas, Rational *lhs, Rational *rhs)
{
	const Invariant fz = substitute(f, zeta, n);
	WordTuple pulled;
	for (unsigned z : zeta)
		pulled.push_back(gammas.at(z - 1));
	Rational l = pc.theta(fz, gammas), r = pc.theta(f, pulled);
	if (lhs)
		*lhs = l;
	if (rhs)
		*rhs = r;
	return l == r;
}

bool check_axiom2(const Pseudocharacter &pc, const Invariant &f, const WordTuple &gammas,
                  Rational *lhs, Rational *rhs)
{
	if (gammas.size() != f.arity + 1)
		throw ArityError(fmt::format("axiom (2) needs {} words, got {}", f.arity + 1, gammas.size()));
	WordTuple merged(gammas.begin(), gammas.end() - 1);
	merged.back() = merged.back() * gammas.back();
	Rational l = pc.theta(hat(f), gammas), r = pc.theta(f, merged);
	if (lhs)
		*lhs = l;
	if (rhs)
		*rhs = r;
	return l == r;
}

AxiomReport verify_axioms(const Pseudocharacter &pc, unsigned trials, std::uint64_t seed)
{
	AxiomReport rep;
	const auto ts = sample_axiom_trials(pc, trials, seed);
	rep.trials = ts.size();
	for (std::size_t k = 0; k < ts.size(); ++k)
	{
		const auto &t = ts[k];
		Rational l, r;
		++rep.axiom1_checks;
		if (!check_axiom1(pc, t.f, t.zeta, t.n, t.gammas1, &l, &r))
			rep.failures.push_back({1, k, t.f.to_string(), to_string(t.gammas1), l, r});
		++rep.axiom2_checks;
		if (!check_axiom2(pc, t.f, t.gammas2, &l, &r))
			rep.failures.push_back({2, k, t.f.to_string(), to_string(t.gammas2), l, r});
	}
	return rep;
}

Rational similitude_character(const Pseudocharacter &pc, const Word &gamma)
{
	if (pc.kind() != GroupKind::GSp)
		throw UnsupportedKindError("similitude character needs a GSp pseudocharacter");
	return pc.theta(Invariant(1, SimilitudePower{1, 1}), {gamma});
}

namespace {

// tr(Y^k) for Y = sum_i c_i Z_i, Z_i ranging over `letters` of a trace
// word in the words `gammas`; expanded over all letter sequences.
std::vector<Poly> power_traces_via_theta(const Pseudocharacter &pc, const WordTuple &gammas,
                                         const std::vector<std::pair<Letter, Poly>> &letters,
                                         std::size_t kmax)
{
	const unsigned arity = static_cast<unsigned>(gammas.size());
	std::vector<Poly> s;
	std::vector<std::size_t> idx;
	for (std::size_t k = 1; k <= kmax; ++k)
	{
		Poly acc;
		idx.assign(k, 0);
		for (;;)
		{
			Poly coef(1);
			std::vector<Letter> w;
			for (std::size_t p = 0; p < k; ++p)
			{
				coef *= letters[idx[p]].second;
				w.push_back(letters[idx[p]].first);
			}
			if (!coef.is_zero())
			{
				Invariant f(arity, SigmaOf{1, TraceWord(std::move(w))});
				acc += coef * pc.theta(f, gammas);
			}
			std::size_t p = 0;
			while (p < k && ++idx[p] == letters.size())
				idx[p++] = 0;
			if (p == k)
				break;
		}
		s.push_back(std::move(acc));
	}
	return s;
}

Rational lambda_of(const Pseudocharacter &pc, const Word &w)
{
	return pc.kind() == GroupKind::GSp ? similitude_character(pc, w) : Rational(1);
}

} // namespace

ComparisonMap comparison_to_det_law(const Pseudocharacter &pc)
{
	const std::size_t two_d = pc.rep().ctx().dim();
	const std::size_t d = two_d / 2;

	auto D = [pc, two_d](const GroupAlgebraElement &x) -> Poly {
		if (x.is_zero())
			return Poly();
		WordTuple gammas;
		std::vector<std::pair<Letter, Poly>> letters;
		for (auto &[w, c] : x.terms())
		{
			gammas.push_back(w);
			letters.push_back({Letter{static_cast<unsigned>(gammas.size()), false}, c});
		}
		auto s = power_traces_via_theta(pc, gammas, letters, two_d);
		return newton_lambdas_from_traces(s, two_d).coeffs.back();
	};

	auto P = [pc, d](const GroupAlgebraElement &x) -> Poly {
		// x = sum c_i (gamma_i + lambda(gamma_i) gamma_i^-1), one gamma per
		// {w, w^-1} pair; the identity contributes c/2 (1 + 1).
		WordTuple gammas;
		std::vector<std::pair<Letter, Poly>> letters;
		std::map<Word, bool> done;
		for (auto &[w, c] : x.terms())
		{
			if (done.count(w))
				continue;
			const Word wi = w.inverse();
			const Rational lam = lambda_of(pc, w);
			if (!(x.coefficient(wi) == c * lam))
				throw SymmetryError(fmt::format("element is not fixed by the involution: {}", x.to_string()));
			done[w] = done[wi] = true;
			const Poly ci = w.is_identity() ? c / Rational(2) : c;
			gammas.push_back(w);
			const unsigned idx = static_cast<unsigned>(gammas.size());
			letters.push_back({Letter{idx, false}, ci});
			letters.push_back({Letter{idx, true}, ci});
		}
		if (gammas.empty())
			return Poly();
		auto s = power_traces_via_theta(pc, gammas, letters, d);
		auto lv = newton_lambdas_from_traces(s, d);
		std::vector<Poly> t(d + 1);
		t[0] = Poly(1);
		for (std::size_t i = 1; i <= d; ++i)
		{
			Poly acc = lv.coeffs[i];
			for (std::size_t j = 1; j < i; ++j)
				acc -= t[j] * t[i - j];
			t[i] = acc / Rational(2);
		}
		return t[d];
	};

	return {D, P};
}

} // namespace symplaw
