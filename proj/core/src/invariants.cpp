#include "symplaw/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <set>

namespace symplaw {

namespace {

std::vector<Letter> transposed(const std::vector<Letter> &w)
{
	std::vector<Letter> r(w.rbegin(), w.rend());
	for (auto &l : r)
		l.starred = !l.starred;
	return r;
}

} // namespace

std::vector<Letter> canonical_letters(const std::vector<Letter> &letters)
{
	std::vector<Letter> best = letters;
	for (const auto &base : {letters, transposed(letters)})
	{
		std::vector<Letter> rot = base;
		for (std::size_t k = 0; k < base.size(); ++k)
		{
			std::rotate(rot.begin(), rot.begin() + 1, rot.end());
			if (rot < best)
				best = rot;
		}
	}
	return best;
}

TraceWord::TraceWord(std::vector<Letter> letters)
{
	if (letters.empty())
		throw ArgumentError("trace word must be nonempty");
	for (auto &l : letters)
		if (l.index == 0)
			throw ArgumentError("trace word indices are 1-based");
	letters_ = canonical_letters(letters);
}

TraceWord TraceWord::parse(std::string_view text)
{
	std::vector<Letter> letters;
	std::size_t i = 0;
	while (i < text.size())
	{
		if (std::isspace(static_cast<unsigned char>(text[i])))
		{
			++i;
			continue;
		}
		if (text[i] != 'X')
			throw ParseError(fmt::format("expected 'X<i>' in trace word '{}'", text));
		std::size_t j = ++i;
		while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
			++j;
		unsigned idx = 1;
		if (j > i)
		{
			auto [p, ec] = std::from_chars(text.data() + i, text.data() + j, idx);
			if (ec != std::errc() || idx == 0)
				throw ParseError(fmt::format("bad index in trace word '{}'", text));
		}
		i = j;
		bool star = false;
		if (text.substr(i, 2) == "^j")
		{
			star = true;
			i += 2;
		}
		letters.push_back({idx, star});
	}
	if (letters.empty())
		throw ParseError("empty trace word");
	return TraceWord(std::move(letters));
}

unsigned TraceWord::max_index() const
{
	unsigned m = 0;
	for (auto &l : letters_)
		m = std::max(m, l.index);
	return m;
}

std::string TraceWord::to_string() const
{
	std::string out;
	for (auto &l : letters_)
	{
		if (!out.empty())
			out += ' ';
		out += fmt::format("X{}{}", l.index, l.starred ? "^j" : "");
	}
	return out;
}

QMatrix TraceWord::evaluate(const SymplecticContext &ctx, const std::vector<QMatrix> &mats) const
{
	if (max_index() > mats.size())
		throw ArityError(fmt::format("word '{}' needs {} matrices, got {}", to_string(), max_index(),
		                             mats.size()));
	QMatrix r = QMatrix::identity(ctx.dim());
	for (auto &l : letters_)
	{
		const QMatrix &x = mats[l.index - 1];
		r = r * (l.starred ? symplectic_transpose(ctx, x) : x);
	}
	return r;
}

std::string to_string(const InvariantFunction &f)
{
	return std::visit(
		[](const auto &v) -> std::string {
			using V = std::decay_t<decltype(v)>;
			if constexpr (std::is_same_v<V, SigmaOf>)
				return fmt::format("sigma{}({})", v.sigma, v.word.to_string());
			else if constexpr (std::is_same_v<V, SimilitudePower>)
				return fmt::format("lambda(X{})^{}", v.index, v.power);
			else
				return fmt::format("entry(X{},{},{})", v.index, v.row, v.col);
		},
		f);
}

unsigned max_index(const InvariantFunction &f)
{
	return std::visit(
		[](const auto &v) -> unsigned {
			using V = std::decay_t<decltype(v)>;
			if constexpr (std::is_same_v<V, SigmaOf>)
				return v.word.max_index();
			else
				return v.index;
		},
		f);
}

Invariant::Invariant(unsigned arity_, std::vector<InvariantFunction> factors_)
	: arity(arity_), factors(std::move(factors_))
{
	for (auto &f : factors)
		if (max_index(f) > arity)
			throw ArityError(fmt::format("factor {} exceeds arity {}", symplaw::to_string(f), arity));
}

bool Invariant::uses_similitude() const
{
	return std::any_of(factors.begin(), factors.end(),
	                   [](auto &f) { return std::holds_alternative<SimilitudePower>(f); });
}

bool Invariant::is_invariant_function() const
{
	return std::none_of(factors.begin(), factors.end(),
	                    [](auto &f) { return std::holds_alternative<EntryProbe>(f); });
}

std::string Invariant::to_string() const
{
	std::string out = fmt::format("[{}]", arity);
	if (factors.empty())
		return out + " 1";
	for (std::size_t i = 0; i < factors.size(); ++i)
		out += (i ? " * " : " ") + symplaw::to_string(factors[i]);
	return out;
}

Rational eval_invariant(const SymplecticContext &ctx, const InvariantFunction &f,
                        const std::vector<QMatrix> &mats)
{
	if (max_index(f) > mats.size())
		throw ArityError(fmt::format("{} needs {} matrices, got {}", to_string(f), max_index(f),
		                             mats.size()));
	for (auto &m : mats)
		ctx.require_dim(m, "eval_invariant");
	return std::visit(
		[&](const auto &v) -> Rational {
			using V = std::decay_t<decltype(v)>;
			if constexpr (std::is_same_v<V, SigmaOf>)
			{
				if (v.sigma > ctx.dim())
					throw ArgumentError(fmt::format("sigma index {} exceeds 2d = {}", v.sigma, ctx.dim()));
				QMatrix w = v.word.evaluate(ctx, mats);
				if (v.sigma == 0)
					return Rational(1);
				if (v.sigma == 1)
					return w.trace();
				return char_lambdas(w)[v.sigma];
			}
			else if constexpr (std::is_same_v<V, SimilitudePower>)
				return similitude(ctx, mats[v.index - 1]).pow(v.power);
			else
			{
				const QMatrix &x = mats[v.index - 1];
				if (v.row >= x.rows() || v.col >= x.cols())
					throw ArgumentError("entry probe outside the matrix");
				return x(v.row, v.col);
			}
		},
		f);
}

Rational eval_invariant(const SymplecticContext &ctx, const Invariant &f, const std::vector<QMatrix> &mats)
{
	if (mats.size() != f.arity)
		throw ArityError(fmt::format("invariant of arity {} given {} matrices", f.arity, mats.size()));
	Rational r(1);
	for (auto &factor : f.factors)
	{
		r *= eval_invariant(ctx, factor, mats);
	}
	return r;
}

bool check_invariance(const SymplecticContext &ctx, const Invariant &f, const std::vector<QMatrix> &mats,
                      const QMatrix &g)
{
	ctx.require_dim(g, "check_invariance");
	const QMatrix gi = inverse(g);
	std::vector<QMatrix> conj;
	conj.reserve(mats.size());
	for (auto &m : mats)
		conj.push_back(g * m * gi);
	return eval_invariant(ctx, f, conj) == eval_invariant(ctx, f, mats);
}

std::vector<TraceWord> enumerate_trace_words(unsigned m, unsigned max_len)
{
	if (m < 1 || max_len < 1)
		throw ArgumentError("enumerate_trace_words needs m >= 1 and max_len >= 1");
	std::set<std::vector<Letter>> seen;
	std::vector<TraceWord> out;
	for (unsigned len = 1; len <= max_len; ++len)
	{
		std::vector<Letter> w(len, Letter{1, false});
		std::set<std::vector<Letter>> level;
		std::function<void(unsigned)> rec = [&](unsigned pos) {
			if (pos == len)
			{
				level.insert(canonical_letters(w));
				return;
			}
			for (unsigned i = 1; i <= m; ++i)
				for (bool s : {false, true})
				{
					w[pos] = {i, s};
					rec(pos + 1);
				}
		};
		rec(0);
		for (auto &c : level)
			out.emplace_back(c);
	}
	return out;
}

namespace {

std::uint64_t checked_unknowns(unsigned d, unsigned m)
{
	std::uint64_t n = 2ull * d, total = 1;
	for (unsigned k = 0; k < 2 * m; ++k)
	{
		total *= n;
		if (total > kOracleCapacity)
			throw CapacityError(fmt::format("(2d)^(2m) exceeds {} for d = {}, m = {}", kOracleCapacity,
			                                d, m));
	}
	return total;
}

// Basis of sp_2d: J (E_ij + E_ji), i <= j.
std::vector<QMatrix> lie_algebra_basis(const SymplecticContext &ctx)
{
	const std::size_t n = ctx.dim();
	std::vector<QMatrix> basis;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
		{
			QMatrix s(n, n);
			s(i, j) = Rational(1);
			s(j, i) = Rational(1);
			basis.push_back(ctx.J() * s);
		}
	return basis;
}

} // namespace

std::size_t multilinear_invariant_dim(unsigned d, unsigned m)
{
	if (d < 1 || m < 1)
		throw ArgumentError("multilinear_invariant_dim needs d >= 1 and m >= 1");
	const std::uint64_t unknowns = checked_unknowns(d, m);
	const SymplecticContext ctx(d);
	const std::size_t n = ctx.dim();
	const std::size_t slots = 2 * m;

	// Unknown c_t for t = (a1, b1, ..., am, bm), index = sum t_s n^(slots-1-s).
	std::vector<std::size_t> stride(slots);
	for (std::size_t s = slots; s-- > 0;)
		stride[s] = s + 1 == slots ? 1 : stride[s + 1] * n;

	RowEchelon echelon;
	std::vector<std::size_t> t(slots);
	for (const QMatrix &h : lie_algebra_basis(ctx))
	{
		// One equation per output monomial t': sum over positions k of
		//   sum_a c[.. (a, b'_k) ..] H[a][a'_k] - sum_b c[.. (a'_k, b) ..] H[b'_k][b].
		for (std::uint64_t idx = 0; idx < unknowns; ++idx)
		{
			std::uint64_t rem = idx;
			for (std::size_t s = 0; s < slots; ++s)
			{
				t[s] = static_cast<std::size_t>(rem / stride[s]);
				rem %= stride[s];
			}
			SparseRow row;
			auto bump = [&row](std::size_t col, const Rational &v) {
				auto [it, fresh] = row.try_emplace(col, v);
				if (!fresh)
				{
					it->second += v;
					if (it->second.is_zero())
						row.erase(it);
				}
			};
			for (std::size_t k = 0; k < m; ++k)
			{
				const std::size_t ak = t[2 * k], bk = t[2 * k + 1];
				const std::size_t base = idx - ak * stride[2 * k] - bk * stride[2 * k + 1];
				for (std::size_t a = 0; a < n; ++a)
					if (!h(a, ak).is_zero())
						bump(base + a * stride[2 * k] + bk * stride[2 * k + 1], h(a, ak));
				for (std::size_t b = 0; b < n; ++b)
					if (!h(bk, b).is_zero())
						bump(base + ak * stride[2 * k] + b * stride[2 * k + 1], -h(bk, b));
			}
			if (!row.empty())
				echelon.insert(std::move(row));
		}
	}
	return static_cast<std::size_t>(unknowns) - echelon.rank();
}

namespace {

// Set partitions of {1..m}, blocks in increasing order of least element.
void set_partitions(unsigned m, unsigned next, std::vector<std::vector<unsigned>> &cur,
                    std::vector<std::vector<std::vector<unsigned>>> &out)
{
	if (next > m)
	{
		out.push_back(cur);
		return;
	}
	for (std::size_t b = 0; b < cur.size(); ++b)
	{
		cur[b].push_back(next);
		set_partitions(m, next + 1, cur, out);
		cur[b].pop_back();
	}
	cur.push_back({next});
	set_partitions(m, next + 1, cur, out);
	cur.pop_back();
}

// Canonical trace words using each index of `block` exactly once.
std::vector<TraceWord> block_words(const std::vector<unsigned> &block)
{
	std::set<std::vector<Letter>> seen;
	std::vector<unsigned> order = block;
	std::sort(order.begin(), order.end());
	const std::size_t k = order.size();
	do
	{
		for (unsigned mask = 0; mask < (1u << k); ++mask)
		{
			std::vector<Letter> w;
			for (std::size_t i = 0; i < k; ++i)
				w.push_back({order[i], ((mask >> i) & 1u) != 0});
			seen.insert(canonical_letters(w));
		}
	} while (std::next_permutation(order.begin(), order.end()));
	std::vector<TraceWord> out;
	for (auto &w : seen)
		out.emplace_back(w);
	return out;
}

} // namespace

std::vector<std::vector<TraceWord>> multilinear_trace_products(unsigned m)
{
	if (m < 1)
		throw ArgumentError("multilinear_trace_products needs m >= 1");
	std::vector<std::vector<std::vector<unsigned>>> parts;
	std::vector<std::vector<unsigned>> cur;
	set_partitions(m, 1, cur, parts);
	std::vector<std::vector<TraceWord>> out;
	for (auto &p : parts)
	{
		std::vector<std::vector<TraceWord>> choices;
		for (auto &b : p)
			choices.push_back(block_words(b));
		std::vector<TraceWord> prod;
		std::function<void(std::size_t)> rec = [&](std::size_t i) {
			if (i == choices.size())
			{
				out.push_back(prod);
				return;
			}
			for (auto &w : choices[i])
			{
				prod.push_back(w);
				rec(i + 1);
				prod.pop_back();
			}
		};
		rec(0);
	}
	return out;
}

std::size_t trace_word_span_dim(unsigned d, unsigned m, std::uint64_t seed)
{
	if (d < 1 || m < 1)
		throw ArgumentError("trace_word_span_dim needs d >= 1 and m >= 1");
	checked_unknowns(d, m);
	const SymplecticContext ctx(d);
	const auto funcs = multilinear_trace_products(m);
	Rng rng(seed);
	RowEchelon echelon;
	const std::size_t batch = std::max<std::size_t>(funcs.size(), 1);
	std::size_t stable_rounds = 0, last = 0;
	while (stable_rounds < 3 && echelon.rank() < funcs.size())
	{
		for (std::size_t s = 0; s < batch; ++s)
		{
			std::vector<QMatrix> mats;
			for (unsigned i = 0; i < m; ++i)
				mats.push_back(rng.integer_matrix(ctx.dim(), ctx.dim(), 5));
			SparseRow row;
			for (std::size_t f = 0; f < funcs.size(); ++f)
			{
				Rational v(1);
				for (auto &w : funcs[f])
					v *= w.evaluate(ctx, mats).trace();
				if (!v.is_zero())
					row.emplace(f, v);
			}
			echelon.insert(std::move(row));
		}
		stable_rounds = echelon.rank() == last ? stable_rounds + 1 : 0;
		last = echelon.rank();
	}
	return echelon.rank();
}

} // namespace symplaw
