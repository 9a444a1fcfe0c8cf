#include "symplaw/poly.hpp"

#include "symplaw/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <ostream>

namespace symplaw {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::string var, unsigned exponent)
{
	if (exponent > 0)
		powers_.emplace_back(std::move(var), exponent);
}

Monomial Monomial::from_powers(std::vector<Power> powers)
{
	std::sort(powers.begin(), powers.end(),
	          [](const Power &a, const Power &b) { return a.first < b.first; });
	Monomial m;
	for (auto &p : powers)
	{
		if (!m.powers_.empty() && m.powers_.back().first == p.first)
			m.powers_.back().second += p.second;
		else
			m.powers_.push_back(std::move(p));
	}
	std::erase_if(m.powers_, [](const Power &p) { return p.second == 0; });
	return m;
}

Monomial Monomial::from_exponents(const std::vector<std::string> &vars,
                                  const std::vector<unsigned> &exps)
{
	if (vars.size() != exps.size())
		throw DimensionError(fmt::format("exponent vector has {} entries for {} variables",
		                                 exps.size(), vars.size()));
	std::vector<Power> powers;
	for (std::size_t i = 0; i < vars.size(); ++i)
		powers.emplace_back(vars[i], exps[i]);
	return from_powers(std::move(powers));
}

unsigned Monomial::degree() const
{
	unsigned d = 0;
	for (auto &p : powers_)
		d += p.second;
	return d;
}

unsigned Monomial::exponent(std::string_view var) const
{
	for (auto &p : powers_)
		if (p.first == var)
			return p.second;
	return 0;
}

bool Monomial::divides(const Monomial &other) const
{
	for (auto &p : powers_)
		if (other.exponent(p.first) < p.second)
			return false;
	return true;
}

Monomial Monomial::restricted_to(const std::vector<std::string> &vars) const
{
	Monomial m;
	for (auto &p : powers_)
		if (std::find(vars.begin(), vars.end(), p.first) != vars.end())
			m.powers_.push_back(p);
	return m;
}

Monomial Monomial::without(const std::vector<std::string> &vars) const
{
	Monomial m;
	for (auto &p : powers_)
		if (std::find(vars.begin(), vars.end(), p.first) == vars.end())
			m.powers_.push_back(p);
	return m;
}

std::string Monomial::to_string() const
{
	if (powers_.empty())
		return "1";
	std::string s;
	for (auto &[var, e] : powers_)
	{
		if (!s.empty())
			s += '*';
		s += var;
		if (e != 1)
			s += fmt::format("^{}", e);
	}
	return s;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
	Monomial r;
	r.powers_.reserve(a.powers_.size() + b.powers_.size());
	auto i = a.powers_.begin(), j = b.powers_.begin();
	while (i != a.powers_.end() || j != b.powers_.end())
	{
		if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first))
			r.powers_.push_back(*i++);
		else if (i == a.powers_.end() || j->first < i->first)
			r.powers_.push_back(*j++);
		else
		{
			r.powers_.emplace_back(i->first, i->second + j->second);
			++i;
			++j;
		}
	}
	return r;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
{
	auto i = a.powers_.begin(), j = b.powers_.begin();
	while (i != a.powers_.end() && j != b.powers_.end())
	{
		if (i->first < j->first)
			return std::strong_ordering::greater; // a has a positive power b lacks
		if (j->first < i->first)
			return std::strong_ordering::less;
		if (i->second != j->second)
			return i->second <=> j->second;
		++i;
		++j;
	}
	if (i != a.powers_.end())
		return std::strong_ordering::greater;
	if (j != b.powers_.end())
		return std::strong_ordering::less;
	return std::strong_ordering::equal;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational &c)
{
	if (!c.is_zero())
		terms_.emplace(Monomial(), c);
}

Poly::Poly(Monomial m, Rational c)
{
	if (!c.is_zero())
		terms_.emplace(std::move(m), std::move(c));
}

void Poly::add_term(const Monomial &m, const Rational &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

bool Poly::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::as_constant() const
{
	if (!is_constant())
		return std::nullopt;
	return constant_term();
}

Rational Poly::constant_term() const
{
	auto it = terms_.find(Monomial());
	return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> Poly::variables() const
{
	std::vector<std::string> vars;
	for (auto &[m, c] : terms_)
		for (auto &p : m.powers())
			vars.push_back(p.first);
	std::sort(vars.begin(), vars.end());
	vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
	return vars;
}

unsigned Poly::degree_in(std::string_view var) const
{
	unsigned d = 0;
	for (auto &[m, c] : terms_)
		d = std::max(d, m.exponent(var));
	return d;
}

unsigned Poly::total_degree() const
{
	unsigned d = 0;
	for (auto &[m, c] : terms_)
		d = std::max(d, m.degree());
	return d;
}

Rational Poly::coefficient(const Monomial &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::coefficient_in(std::string_view var, unsigned k) const
{
	Poly r;
	std::vector<std::string> v{std::string(var)};
	for (auto &[m, c] : terms_)
		if (m.exponent(var) == k)
			r.add_term(m.without(v), c);
	return r;
}

Poly Poly::coefficient_of(const Monomial &pattern, const std::vector<std::string> &vars) const
{
	Poly r;
	for (auto &[m, c] : terms_)
		if (m.restricted_to(vars) == pattern)
			r.add_term(m.without(vars), c);
	return r;
}

Poly Poly::substitute(std::string_view var, const Poly &value) const
{
	unsigned deg = degree_in(var);
	std::vector<Poly> powers{Poly(1)};
	for (unsigned k = 1; k <= deg; ++k)
		powers.push_back(powers.back() * value);
	std::vector<std::string> v{std::string(var)};
	Poly r;
	for (auto &[m, c] : terms_)
		r += Poly(m.without(v), c) * powers[m.exponent(var)];
	return r;
}

Rational Poly::evaluate(const std::map<std::string, Rational, std::less<>> &values) const
{
	Rational r;
	for (auto &[m, c] : terms_)
	{
		Rational t = c;
		for (auto &[var, e] : m.powers())
		{
			auto it = values.find(var);
			if (it == values.end())
				throw VariableError(fmt::format("no value bound for variable '{}'", var));
			t *= it->second.pow(static_cast<int>(e));
		}
		r += t;
	}
	return r;
}

Poly Poly::pow(unsigned e) const
{
	Poly result(1), base = *this;
	while (e > 0)
	{
		if (e & 1u)
			result *= base;
		e >>= 1;
		if (e > 0)
			base *= base;
	}
	return result;
}

Poly &Poly::operator+=(const Poly &o)
{
	for (auto &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
	for (auto &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
	Poly r;
	if (a.is_zero() || b.is_zero())
		return r;
	if (auto c = b.as_constant())
		return a * *c;
	if (auto c = a.as_constant())
		return b * *c;
	for (auto &[ma, ca] : a.terms_)
		for (auto &[mb, cb] : b.terms_)
			r.add_term(ma * mb, ca * cb);
	return r;
}

Poly &Poly::operator*=(const Poly &o)
{
	*this = *this * o;
	return *this;
}

Poly &Poly::operator*=(const Rational &c)
{
	if (c.is_zero())
		terms_.clear();
	else
		for (auto &[m, v] : terms_)
			v *= c;
	return *this;
}

Poly &Poly::operator/=(const Rational &c)
{
	return *this *= c.inverse();
}

Poly Poly::operator-() const
{
	Poly r = *this;
	for (auto &[m, v] : r.terms_)
		v = -v;
	return r;
}

std::string Poly::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		const auto &[m, c] = *it;
		Rational mag = c.sign() < 0 ? -c : c;
		if (s.empty())
			s += c.sign() < 0 ? "-" : "";
		else
			s += c.sign() < 0 ? " - " : " + ";
		if (m.is_one())
			s += mag.to_string();
		else if (mag.is_one())
			s += m.to_string();
		else
			s += mag.to_string() + "*" + m.to_string();
	}
	return s;
}

std::ostream &operator<<(std::ostream &os, const Poly &p)
{
	return os << p.to_string();
}

Rational poly_coefficient(const Poly &p, const Monomial &m)
{
	auto vars = p.variables();
	for (auto &[var, e] : m.powers())
		if (!std::binary_search(vars.begin(), vars.end(), var))
			throw VariableError(fmt::format("variable '{}' does not occur in {}", var, p.to_string()));
	return p.coefficient(m);
}

// ------------------------------------------------------------------ parser

namespace {

class PolyParser
{
public:
	explicit PolyParser(std::string_view text) : s_(text) {}

	Poly run()
	{
		Poly p = expr();
		skip();
		if (pos_ != s_.size())
			fail("unexpected character");
		return p;
	}

private:
	[[noreturn]] void fail(std::string_view what) const
	{
		throw ParseError(fmt::format("polynomial '{}': {} at offset {}", s_, what, pos_));
	}

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool accept(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c)
		{
			++pos_;
			return true;
		}
		return false;
	}

	Poly expr()
	{
		Poly r;
		bool neg = false;
		skip();
		if (accept('-'))
			neg = true;
		else
			accept('+');
		r = neg ? -term() : term();
		for (;;)
		{
			if (accept('+'))
				r += term();
			else if (accept('-'))
				r -= term();
			else
				return r;
		}
	}

	Poly term()
	{
		Poly r = factor();
		for (;;)
		{
			if (accept('*'))
				r *= factor();
			else if (accept('/'))
			{
				auto c = factor().as_constant();
				if (!c)
					fail("division by a non-constant");
				if (c->is_zero())
					fail("division by zero");
				r /= *c;
			}
			else
				return r;
		}
	}

	Poly factor()
	{
		Poly base = primary();
		if (accept('^'))
		{
			skip();
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			if (start == pos_)
				fail("expected exponent");
			base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
		}
		return base;
	}

	Poly primary()
	{
		skip();
		if (pos_ >= s_.size())
			fail("unexpected end");
		char c = s_[pos_];
		if (c == '(')
		{
			++pos_;
			Poly r = expr();
			if (!accept(')'))
				fail("expected ')'");
			return r;
		}
		if (c == '-')
		{
			++pos_;
			return -factor();
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			return Poly(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			std::size_t start = pos_;
			while (pos_ < s_.size() &&
			       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
				++pos_;
			return Poly::variable(std::string(s_.substr(start, pos_ - start)));
		}
		fail("unexpected character");
	}

	std::string_view s_;
	std::size_t pos_ = 0;
};

} // namespace

Poly Poly::parse(std::string_view text)
{
	return PolyParser(text).run();
}

// ----------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators)
	: generators_(std::move(generators))
{
	for (auto &g : generators_)
		if (g.is_one())
			throw ArgumentError("monomial ideal containing 1 collapses the ring");
}

bool MonomialIdeal::contains(const Monomial &m) const
{
	return std::any_of(generators_.begin(), generators_.end(),
	                   [&](const Monomial &g) { return g.divides(m); });
}

Poly MonomialIdeal::reduce(const Poly &p) const
{
	if (generators_.empty())
		return p;
	Poly r;
	for (auto &[m, c] : p.terms())
		if (!contains(m))
			r += Poly(m, c);
	return r;
}

} // namespace symplaw
