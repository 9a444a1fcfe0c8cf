#pragma once

#include "symplaw/matrix.hpp"
#include "symplaw/poly.hpp"
#include "symplaw/symplectic.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace symplaw {

/// Reduced word in a free group. Letter +k is generator g_k, -k its inverse
/// (k >= 1). The empty word is the identity.
class Word
{
public:
	Word() = default;
	/// Freely reduces the letters. Throws ArgumentError on a zero letter.
	explicit Word(std::vector<int> letters);
	static Word generator(int k) { return Word({k}); }
	/// Parses "g1 g2^-1 g1^3" or "1". Throws ParseError.
	static Word parse(std::string_view text);

	const std::vector<int> &letters() const { return letters_; }
	bool is_identity() const { return letters_.empty(); }
	std::size_t length() const { return letters_.size(); }
	int max_generator() const;

	Word inverse() const;
	Word pow(int e) const;
	std::string to_string() const;

	friend Word operator*(const Word &a, const Word &b);
	friend bool operator==(const Word &, const Word &) = default;
	friend auto operator<=>(const Word &a, const Word &b)
	{
		if (a.letters_.size() != b.letters_.size())
			return a.letters_.size() <=> b.letters_.size();
		return a.letters_ <=> b.letters_;
	}

private:
	std::vector<int> letters_;
};

/// Finite linear combination of reduced words with polynomial coefficients.
class GroupAlgebraElement
{
public:
	using TermMap = std::map<Word, Poly>;

	GroupAlgebraElement() = default;
	GroupAlgebraElement(const Poly &c) { add(Word(), c); }
	GroupAlgebraElement(const Word &w, const Poly &c = Poly(1)) { add(w, c); }

	static GroupAlgebraElement parse_terms(const std::vector<std::pair<std::string, std::string>> &terms);

	const TermMap &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Poly coefficient(const Word &w) const;
	int max_generator() const;
	std::string to_string() const;

	GroupAlgebraElement &add(const Word &w, const Poly &c);
	GroupAlgebraElement &operator+=(const GroupAlgebraElement &o);
	GroupAlgebraElement &operator-=(const GroupAlgebraElement &o);
	GroupAlgebraElement &operator*=(const Poly &c);

	friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement &b) { return a += b; }
	friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement &b) { return a -= b; }
	friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Poly &c) { return a *= c; }
	friend GroupAlgebraElement operator*(const Poly &c, GroupAlgebraElement a) { return a *= c; }
	friend GroupAlgebraElement operator*(const GroupAlgebraElement &a, const GroupAlgebraElement &b);
	friend bool operator==(const GroupAlgebraElement &, const GroupAlgebraElement &) = default;

private:
	TermMap terms_;
};

enum class GroupKind
{
	Sp,
	GSp,
};

std::string to_string(GroupKind k);
/// Throws ParseError.
GroupKind parse_group_kind(std::string_view s);

/// Free group on k generators mapped into GSp_2d(Q), gamma* = lambda(gamma) gamma^-1.
class InvolutiveRepresentation
{
public:
	/// Validates M_i^j M_i = lambda_i Id with lambda_i != 0 (lambda_i = 1
	/// for Sp). Throws NotASimilitudeError, SingularError, DimensionError.
	InvolutiveRepresentation(SymplecticContext ctx, GroupKind kind, std::vector<QMatrix> images,
	                         std::vector<Rational> lambdas);
	/// Lambdas computed from the images.
	InvolutiveRepresentation(SymplecticContext ctx, GroupKind kind, std::vector<QMatrix> images);

	/// Representation of the free group on `generators` letters sending
	/// everything to the identity.
	static InvolutiveRepresentation trivial(unsigned d, unsigned generators, GroupKind kind = GroupKind::Sp);

	const SymplecticContext &ctx() const { return ctx_; }
	GroupKind kind() const { return kind_; }
	std::size_t generator_count() const { return images_.size(); }
	const std::vector<QMatrix> &images() const { return images_; }
	const std::vector<Rational> &lambdas() const { return lambdas_; }

	/// Throws GeneratorError for letters beyond generator_count().
	QMatrix image(const Word &w) const;
	Rational lambda(const Word &w) const;
	PolyMatrix image(const GroupAlgebraElement &x) const;
	void require_generators(const Word &w) const;

	/// The same representation conjugated by g (a similitude).
	InvolutiveRepresentation conjugated(const QMatrix &g) const;

private:
	SymplecticContext ctx_;
	GroupKind kind_;
	std::vector<QMatrix> images_;
	std::vector<QMatrix> inverses_;
	std::vector<Rational> lambdas_;
};

/// Linear extension of w -> lambda(w) w^-1.
GroupAlgebraElement star(const InvolutiveRepresentation &rep, const GroupAlgebraElement &x);

/// x + x*, always symmetric.
GroupAlgebraElement symmetrize(const InvolutiveRepresentation &rep, const GroupAlgebraElement &x);

} // namespace symplaw
