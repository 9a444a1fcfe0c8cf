#pragma once

#include "symplaw/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symplaw {

/// Power product of named indeterminates. Powers are sorted by variable name
/// and never carry a zero exponent.
class Monomial
{
public:
	using Power = std::pair<std::string, unsigned>;

	Monomial() = default;
	explicit Monomial(std::string var, unsigned exponent = 1);
	/// Sorts, merges repeated variables and drops zero exponents.
	static Monomial from_powers(std::vector<Power> powers);
	/// Exponent vector aligned with `vars`.
	static Monomial from_exponents(const std::vector<std::string> &vars,
	                               const std::vector<unsigned> &exps);

	const std::vector<Power> &powers() const { return powers_; }
	bool is_one() const { return powers_.empty(); }
	unsigned degree() const;
	unsigned exponent(std::string_view var) const;
	bool divides(const Monomial &other) const;

	/// Restriction to (resp. removal of) the listed variables.
	Monomial restricted_to(const std::vector<std::string> &vars) const;
	Monomial without(const std::vector<std::string> &vars) const;

	std::string to_string() const;

	friend Monomial operator*(const Monomial &a, const Monomial &b);
	friend bool operator==(const Monomial &, const Monomial &) = default;
	/// Lexicographic order: variables compared in name order, the first
	/// differing exponent decides.
	friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b);

private:
	std::vector<Power> powers_;
};

/// Sparse multivariate polynomial over the rationals.
class Poly
{
public:
	using TermMap = std::map<Monomial, Rational>;

	Poly() = default;
	Poly(int c) : Poly(Rational(c)) {}
	Poly(long c) : Poly(Rational(c)) {}
	Poly(const Rational &c);
	Poly(Monomial m, Rational c = 1);

	static Poly variable(std::string name) { return Poly(Monomial(std::move(name))); }
	/// Parses expressions such as "3/4*t1^2*t2 - (u + 1)^3". Throws ParseError.
	static Poly parse(std::string_view text);

	const TermMap &terms() const { return terms_; }
	std::size_t term_count() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	std::optional<Rational> as_constant() const;
	Rational constant_term() const;

	/// Variables actually occurring, sorted by name.
	std::vector<std::string> variables() const;
	unsigned degree_in(std::string_view var) const;
	unsigned total_degree() const;

	Rational coefficient(const Monomial &m) const;
	/// Coefficient of var^k, as a polynomial in the other variables.
	Poly coefficient_in(std::string_view var, unsigned k) const;
	/// Collects the terms whose exponents on `vars` are exactly those of
	/// `pattern` and strips those variables.
	Poly coefficient_of(const Monomial &pattern, const std::vector<std::string> &vars) const;

	Poly substitute(std::string_view var, const Poly &value) const;
	/// Throws VariableError when a variable is left unbound.
	Rational evaluate(const std::map<std::string, Rational, std::less<>> &values) const;

	Poly pow(unsigned e) const;

	std::string to_string() const;

	Poly &operator+=(const Poly &o);
	Poly &operator-=(const Poly &o);
	Poly &operator*=(const Poly &o);
	Poly &operator*=(const Rational &c);
	Poly &operator/=(const Rational &c);

	friend Poly operator+(Poly a, const Poly &b) { return a += b; }
	friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
	friend Poly operator*(const Poly &a, const Poly &b);
	friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
	friend Poly operator*(const Rational &c, Poly a) { return a *= c; }
	friend Poly operator/(Poly a, const Rational &c) { return a /= c; }
	Poly operator-() const;

	friend bool operator==(const Poly &, const Poly &) = default;

private:
	void add_term(const Monomial &m, const Rational &c);

	TermMap terms_;
};

std::ostream &operator<<(std::ostream &os, const Poly &p);

/// Exact coefficient of `m` in `p`. Throws VariableError when `m` mentions
/// a variable that does not occur in `p`.
Rational poly_coefficient(const Poly &p, const Monomial &m);

/// Ideal generated by monomials; reduce() is the quotient map onto the
/// span of the standard monomials.
class MonomialIdeal
{
public:
	MonomialIdeal() = default;
	explicit MonomialIdeal(std::vector<Monomial> generators);

	const std::vector<Monomial> &generators() const { return generators_; }
	bool contains(const Monomial &m) const;
	Poly reduce(const Poly &p) const;

private:
	std::vector<Monomial> generators_;
};

} // namespace symplaw
