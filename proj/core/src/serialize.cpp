#include "symplaw/serialize.hpp"

#include <algorithm>
#include <charconv>

namespace symplaw {

namespace {

[[noreturn]] void bad(const std::string &what)
{
	throw ParseError(what);
}

const json &field(const json &j, const char *key)
{
	if (!j.is_object())
		bad(fmt::format("expected an object with key '{}'", key));
	auto it = j.find(key);
	if (it == j.end())
		bad(fmt::format("missing key '{}'", key));
	return *it;
}

unsigned as_unsigned(const json &j, const char *what)
{
	if (!j.is_number_integer() || j.get<long long>() < 0)
		bad(fmt::format("'{}' must be a nonnegative integer", what));
	return j.get<unsigned>();
}

int as_int(const json &j, const char *what)
{
	if (!j.is_number_integer())
		bad(fmt::format("'{}' must be an integer", what));
	return j.get<int>();
}

std::vector<unsigned> unsigned_list(const json &j, const char *what)
{
	if (!j.is_array())
		bad(fmt::format("'{}' must be an array", what));
	std::vector<unsigned> out;
	for (auto &x : j)
		out.push_back(as_unsigned(x, what));
	return out;
}

template <class T, class F>
Matrix<T> matrix_from(const json &j, F &&entry)
{
	if (!j.is_array())
		bad("matrix must be an array of rows");
	const std::size_t rows = j.size();
	const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
	Matrix<T> m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
	{
		if (!j[i].is_array() || j[i].size() != cols)
			bad("matrix rows must be arrays of equal length");
		for (std::size_t k = 0; k < cols; ++k)
			m(i, k) = entry(j[i][k]);
	}
	return m;
}

BlockKey parse_block_key(const std::string &s)
{
	auto comma = s.find(',');
	if (comma == std::string::npos)
		bad(fmt::format("block key '{}' must look like 'i,j'", s));
	auto num = [&](std::string_view part) {
		while (!part.empty() && part.front() == ' ')
			part.remove_prefix(1);
		while (!part.empty() && part.back() == ' ')
			part.remove_suffix(1);
		unsigned v = 0;
		auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
		if (ec != std::errc() || p != part.data() + part.size())
			bad(fmt::format("block key '{}' must look like 'i,j'", s));
		return v;
	};
	std::string_view sv(s);
	return {num(sv.substr(0, comma)), num(sv.substr(comma + 1))};
}

std::string block_key(const BlockKey &k)
{
	return fmt::format("{},{}", k.first, k.second);
}

} // namespace

json to_json(const Rational &r)
{
	return r.to_string();
}

Rational rational_from_json(const json &j)
{
	if (j.is_number_integer())
		return Rational(j.get<long long>());
	if (j.is_string())
		return Rational::parse(j.get<std::string>());
	bad(fmt::format("expected a rational (\"p/q\" or integer), got {}", j.dump()));
}

json to_json(const QMatrix &m)
{
	json rows = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		json row = json::array();
		for (std::size_t k = 0; k < m.cols(); ++k)
			row.push_back(to_json(m(i, k)));
		rows.push_back(std::move(row));
	}
	return rows;
}

QMatrix qmatrix_from_json(const json &j)
{
	return matrix_from<Rational>(j, [](const json &x) { return rational_from_json(x); });
}

json to_json(const Poly &p)
{
	const auto vars = p.variables();
	json terms = json::array();
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
	{
		json exp = json::array();
		for (auto &v : vars)
			exp.push_back(it->first.exponent(v));
		terms.push_back({{"exp", std::move(exp)}, {"coef", to_json(it->second)}});
	}
	return {{"vars", vars}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const json &j)
{
	if (j.is_number_integer())
		return Poly(Rational(j.get<long long>()));
	if (j.is_string())
		return Poly::parse(j.get<std::string>());
	if (!j.is_object())
		bad(fmt::format("expected a polynomial, got {}", j.dump()));
	const json &vars = field(j, "vars");
	if (!vars.is_array() || !std::all_of(vars.begin(), vars.end(), [](auto &v) { return v.is_string(); }))
		bad("'vars' must be an array of names");
	const auto names = vars.get<std::vector<std::string>>();
	Poly p;
	for (auto &t : field(j, "terms"))
	{
		const auto exps = unsigned_list(field(t, "exp"), "exp");
		if (exps.size() != names.size())
			bad("exponent vector length differs from 'vars'");
		p += Poly(Monomial::from_exponents(names, exps), rational_from_json(field(t, "coef")));
	}
	return p;
}

json to_json(const PolyMatrix &m)
{
	json rows = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		json row = json::array();
		for (std::size_t k = 0; k < m.cols(); ++k)
			row.push_back(m(i, k).to_string());
		rows.push_back(std::move(row));
	}
	return rows;
}

PolyMatrix polymatrix_from_json(const json &j)
{
	return matrix_from<Poly>(j, [](const json &x) { return poly_from_json(x); });
}

json to_json(const SymplecticContext &ctx)
{
	return {{"d", ctx.d()}};
}

SymplecticContext context_from_json(const json &j)
{
	const unsigned d = as_unsigned(field(j, "d"), "d");
	if (d == 0)
		bad("'d' must be positive");
	return SymplecticContext(d);
}

json to_json(const GroupAlgebraElement &x)
{
	json terms = json::array();
	for (auto &[w, c] : x.terms())
		terms.push_back({{"word", w.to_string()}, {"coef", c.to_string()}});
	return {{"terms", std::move(terms)}};
}

GroupAlgebraElement element_from_json(const json &j)
{
	const json &terms = field(j, "terms");
	if (!terms.is_array())
		bad("'terms' must be an array");
	GroupAlgebraElement x;
	for (auto &t : terms)
	{
		const json &w = field(t, "word");
		if (!w.is_string())
			bad("'word' must be a string");
		x.add(Word::parse(w.get<std::string>()), poly_from_json(field(t, "coef")));
	}
	return x;
}

json to_json(const InvolutiveRepresentation &rep)
{
	json gens = json::array(), lams = json::array();
	for (auto &m : rep.images())
		gens.push_back(to_json(m));
	for (auto &l : rep.lambdas())
		lams.push_back(to_json(l));
	return {{"d", rep.ctx().d()},
	        {"kind", to_string(rep.kind())},
	        {"generators", std::move(gens)},
	        {"lambdas", std::move(lams)}};
}

InvolutiveRepresentation representation_from_json(const json &j)
{
	SymplecticContext ctx = context_from_json(j);
	GroupKind kind = GroupKind::Sp;
	if (j.contains("kind"))
	{
		if (!j["kind"].is_string())
			bad("'kind' must be \"Sp\" or \"GSp\"");
		kind = parse_group_kind(j["kind"].get<std::string>());
	}
	const json &gens = field(j, "generators");
	if (!gens.is_array())
		bad("'generators' must be an array of matrices");
	std::vector<QMatrix> images;
	for (auto &g : gens)
		images.push_back(qmatrix_from_json(g));
	if (!j.contains("lambdas"))
		return InvolutiveRepresentation(ctx, kind, std::move(images));
	std::vector<Rational> lams;
	for (auto &l : j["lambdas"])
		lams.push_back(rational_from_json(l));
	return InvolutiveRepresentation(ctx, kind, std::move(images), std::move(lams));
}

json to_json(const Invariant &f)
{
	json factors = json::array();
	for (auto &factor : f.factors)
		factors.push_back(std::visit(
			[](const auto &v) -> json {
				using V = std::decay_t<decltype(v)>;
				if constexpr (std::is_same_v<V, SigmaOf>)
					return {{"sigma", v.sigma}, {"word", v.word.to_string()}};
				else if constexpr (std::is_same_v<V, SimilitudePower>)
					return {{"lambda", v.index}, {"power", v.power}};
				else
					return {{"entry", v.index}, {"row", v.row}, {"col", v.col}};
			},
			factor));
	return {{"arity", f.arity}, {"factors", std::move(factors)}};
}

namespace {

InvariantFunction factor_from_json(const json &j)
{
	if (!j.is_object())
		bad("invariant factor must be an object");
	if (j.contains("sigma"))
	{
		const json &w = field(j, "word");
		if (!w.is_string())
			bad("'word' must be a string");
		return SigmaOf{as_unsigned(j["sigma"], "sigma"), TraceWord::parse(w.get<std::string>())};
	}
	if (j.contains("lambda"))
	{
		const unsigned idx = as_unsigned(j["lambda"], "lambda");
		if (idx == 0)
			bad("'lambda' index is 1-based");
		return SimilitudePower{idx, j.contains("power") ? as_int(j["power"], "power") : -1};
	}
	if (j.contains("entry"))
	{
		const unsigned idx = as_unsigned(j["entry"], "entry");
		if (idx == 0)
			bad("'entry' index is 1-based");
		return EntryProbe{idx, as_unsigned(field(j, "row"), "row"), as_unsigned(field(j, "col"), "col")};
	}
	bad("invariant factor needs one of 'sigma', 'lambda', 'entry'");
}

} // namespace

Invariant invariant_from_json(const json &j)
{
	if (j.is_object() && !j.contains("factors"))
	{
		InvariantFunction f = factor_from_json(j);
		const unsigned arity = j.contains("arity") ? as_unsigned(j["arity"], "arity") : max_index(f);
		return Invariant(arity, std::move(f));
	}
	const json &fs = field(j, "factors");
	if (!fs.is_array())
		bad("'factors' must be an array");
	std::vector<InvariantFunction> factors;
	unsigned need = 1;
	for (auto &x : fs)
	{
		factors.push_back(factor_from_json(x));
		need = std::max(need, max_index(factors.back()));
	}
	const unsigned arity = j.contains("arity") ? as_unsigned(j["arity"], "arity") : need;
	return Invariant(arity, std::move(factors));
}

json to_json(const GmaSpec &spec)
{
	json blocks = json::object(), signs = json::object();
	for (auto &[k, span] : spec.blocks)
	{
		json arr = json::array();
		for (auto &p : span)
			arr.push_back(p.to_string());
		blocks[block_key(k)] = std::move(arr);
	}
	for (auto &[k, s] : spec.tau_signs)
		signs[block_key(k)] = s;
	json nil = json::array();
	for (auto &m : spec.ideal.generators())
		nil.push_back(m.to_string());
	return {{"I0", spec.type.I0},     {"I1", spec.type.I1},
	        {"I2", spec.type.I2},     {"sigma", spec.type.sigma},
	        {"dims", spec.type.dims}, {"base_vars", spec.base_vars},
	        {"nil_monomials", nil},   {"blocks", std::move(blocks)},
	        {"tau_signs", std::move(signs)}};
}

GmaSpec gma_spec_from_json(const json &j)
{
	GmaSpec spec;
	auto opt_list = [&](const char *key) {
		return j.contains(key) ? unsigned_list(j[key], key) : std::vector<unsigned>{};
	};
	if (!j.is_object())
		bad("GMA spec must be an object");
	spec.type.I0 = opt_list("I0");
	spec.type.I1 = opt_list("I1");
	spec.type.I2 = opt_list("I2");
	spec.type.sigma = unsigned_list(field(j, "sigma"), "sigma");
	spec.type.dims = unsigned_list(field(j, "dims"), "dims");
	if (j.contains("base_vars"))
	{
		for (auto &v : j["base_vars"])
		{
			if (!v.is_string())
				bad("'base_vars' must be names");
			spec.base_vars.push_back(v.get<std::string>());
		}
	}
	std::vector<Monomial> nil;
	if (j.contains("nil_monomials"))
		for (auto &m : j["nil_monomials"])
		{
			Poly p = poly_from_json(m);
			if (p.term_count() != 1)
				bad(fmt::format("nil monomial {} is not a monomial", m.dump()));
			nil.push_back(p.terms().begin()->first);
		}
	try
	{
		spec.ideal = MonomialIdeal(std::move(nil));
	}
	catch (const Error &e)
	{
		bad(e.what());
	}
	if (j.contains("blocks"))
	{
		if (!j["blocks"].is_object())
			bad("'blocks' must be an object keyed by \"i,j\"");
		for (auto &[k, v] : j["blocks"].items())
		{
			if (!v.is_array())
				bad("block spans must be arrays");
			std::vector<Poly> span;
			for (auto &p : v)
				span.push_back(poly_from_json(p));
			spec.blocks[parse_block_key(k)] = std::move(span);
		}
	}
	if (j.contains("tau_signs"))
	{
		if (!j["tau_signs"].is_object())
			bad("'tau_signs' must be an object keyed by \"i,j\"");
		for (auto &[k, v] : j["tau_signs"].items())
			spec.tau_signs[parse_block_key(k)] = as_int(v, "tau sign");
	}
	for (auto &[k, span] : spec.blocks)
		for (auto &p : span)
			for (auto &var : p.variables())
				if (std::find(spec.base_vars.begin(), spec.base_vars.end(), var) == spec.base_vars.end())
					bad(fmt::format("block ({}, {}) uses undeclared variable '{}'", k.first, k.second, var));
	return spec;
}

json parse_json(const std::string &text)
{
	try
	{
		return json::parse(text);
	}
	catch (const json::parse_error &e)
	{
		throw ParseError(fmt::format("malformed JSON: {}", e.what()));
	}
}

} // namespace symplaw
