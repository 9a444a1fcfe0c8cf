#include "symplaw/group_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace symplaw {

Word::Word(std::vector<int> letters)
{
	letters_.reserve(letters.size());
	for (int l : letters)
	{
		if (l == 0)
			throw ArgumentError("word letter 0 is not a generator");
		if (!letters_.empty() && letters_.back() == -l)
			letters_.pop_back();
		else
			letters_.push_back(l);
	}
}

namespace {

int parse_int(std::string_view s, std::string_view context)
{
	int v = 0;
	auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
	if (ec != std::errc() || p != s.data() + s.size())
		throw ParseError(fmt::format("bad integer '{}' in word '{}'", s, context));
	return v;
}

} // namespace

Word Word::parse(std::string_view text)
{
	std::vector<int> letters;
	std::size_t i = 0;
	auto skip = [&] {
		while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
			++i;
	};
	skip();
	if (text.substr(i) == "1" || i == text.size())
		return Word();
	while (i < text.size())
	{
		if (text[i] != 'g')
			throw ParseError(fmt::format("expected generator 'gK' in word '{}'", text));
		std::size_t j = ++i;
		while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
			++j;
		const int gen = parse_int(text.substr(i, j - i), text);
		if (gen < 1)
			throw ParseError(fmt::format("generator index must be >= 1 in '{}'", text));
		int e = 1;
		i = j;
		if (i < text.size() && text[i] == '^')
		{
			j = ++i;
			if (j < text.size() && (text[j] == '-' || text[j] == '+'))
				++j;
			while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
				++j;
			e = parse_int(text.substr(i, j - i), text);
			i = j;
		}
		for (int k = 0; k < std::abs(e); ++k)
			letters.push_back(e < 0 ? -gen : gen);
		skip();
	}
	return Word(std::move(letters));
}

int Word::max_generator() const
{
	int m = 0;
	for (int l : letters_)
		m = std::max(m, std::abs(l));
	return m;
}

Word Word::inverse() const
{
	std::vector<int> r(letters_.rbegin(), letters_.rend());
	for (int &l : r)
		l = -l;
	return Word(std::move(r));
}

Word Word::pow(int e) const
{
	Word base = e < 0 ? inverse() : *this;
	Word r;
	for (int k = 0; k < std::abs(e); ++k)
		r = r * base;
	return r;
}

std::string Word::to_string() const
{
	if (letters_.empty())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < letters_.size();)
	{
		std::size_t j = i;
		while (j < letters_.size() && letters_[j] == letters_[i])
			++j;
		const int run = static_cast<int>(j - i) * (letters_[i] < 0 ? -1 : 1);
		if (!out.empty())
			out += ' ';
		out += fmt::format("g{}", std::abs(letters_[i]));
		if (run != 1)
			out += fmt::format("^{}", run);
		i = j;
	}
	return out;
}

Word operator*(const Word &a, const Word &b)
{
	std::vector<int> l = a.letters_;
	l.insert(l.end(), b.letters_.begin(), b.letters_.end());
	return Word(std::move(l));
}

GroupAlgebraElement
GroupAlgebraElement::parse_terms(const std::vector<std::pair<std::string, std::string>> &terms)
{
	GroupAlgebraElement x;
	for (auto &[w, c] : terms)
		x.add(Word::parse(w), Poly::parse(c));
	return x;
}

Poly GroupAlgebraElement::coefficient(const Word &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Poly() : it->second;
}

int GroupAlgebraElement::max_generator() const
{
	int m = 0;
	for (auto &[w, c] : terms_)
		m = std::max(m, w.max_generator());
	return m;
}

std::string GroupAlgebraElement::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (auto &[w, c] : terms_)
	{
		if (!out.empty())
			out += " + ";
		out += fmt::format("({})*[{}]", c.to_string(), w.to_string());
	}
	return out;
}

GroupAlgebraElement &GroupAlgebraElement::add(const Word &w, const Poly &c)
{
	if (c.is_zero())
		return *this;
	auto [it, fresh] = terms_.try_emplace(w, c);
	if (!fresh)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
	return *this;
}

GroupAlgebraElement &GroupAlgebraElement::operator+=(const GroupAlgebraElement &o)
{
	for (auto &[w, c] : o.terms_)
		add(w, c);
	return *this;
}

GroupAlgebraElement &GroupAlgebraElement::operator-=(const GroupAlgebraElement &o)
{
	for (auto &[w, c] : o.terms_)
		add(w, -c);
	return *this;
}

GroupAlgebraElement &GroupAlgebraElement::operator*=(const Poly &c)
{
	if (c.is_zero())
	{
		terms_.clear();
		return *this;
	}
	for (auto &[w, v] : terms_)
		v *= c;
	return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement &a, const GroupAlgebraElement &b)
{
	GroupAlgebraElement r;
	for (auto &[wa, ca] : a.terms_)
		for (auto &[wb, cb] : b.terms_)
			r.add(wa * wb, ca * cb);
	return r;
}

std::string to_string(GroupKind k)
{
	return k == GroupKind::Sp ? "Sp" : "GSp";
}

GroupKind parse_group_kind(std::string_view s)
{
	if (s == "Sp")
		return GroupKind::Sp;
	if (s == "GSp")
		return GroupKind::GSp;
	throw ParseError(fmt::format("unknown group kind '{}'", s));
}

InvolutiveRepresentation::InvolutiveRepresentation(SymplecticContext ctx, GroupKind kind,
                                                   std::vector<QMatrix> images,
                                                   std::vector<Rational> lambdas)
	: ctx_(std::move(ctx)), kind_(kind), images_(std::move(images)), lambdas_(std::move(lambdas))
{
	if (lambdas_.size() != images_.size())
		throw DimensionError(fmt::format("{} generator images but {} lambda values", images_.size(),
		                                 lambdas_.size()));
	inverses_.reserve(images_.size());
	for (std::size_t i = 0; i < images_.size(); ++i)
	{
		ctx_.require_dim(images_[i], "generator image");
		const Rational lam = similitude(ctx_, images_[i]);
		if (!(lam == lambdas_[i]))
			throw NotASimilitudeError(fmt::format("generator g{} has similitude {}, declared {}", i + 1,
			                                      lam.to_string(), lambdas_[i].to_string()));
		if (kind_ == GroupKind::Sp && !lam.is_one())
			throw NotASimilitudeError(fmt::format("generator g{} is not symplectic (lambda = {})", i + 1,
			                                      lam.to_string()));
		QMatrix inv = symplectic_transpose(ctx_, images_[i]);
		inv *= lam.inverse();
		inverses_.push_back(std::move(inv));
	}
}

namespace {

std::vector<Rational> lambdas_of(const SymplecticContext &ctx, const std::vector<QMatrix> &images)
{
	std::vector<Rational> l;
	for (auto &m : images)
	{
		ctx.require_dim(m, "generator image");
		l.push_back(similitude(ctx, m));
	}
	return l;
}

} // namespace

InvolutiveRepresentation::InvolutiveRepresentation(SymplecticContext ctx, GroupKind kind,
                                                   std::vector<QMatrix> images)
	: InvolutiveRepresentation(ctx, kind, images, lambdas_of(ctx, images))
{
}

InvolutiveRepresentation InvolutiveRepresentation::trivial(unsigned d, unsigned generators,
                                                           GroupKind kind)
{
	SymplecticContext ctx(d);
	std::vector<QMatrix> imgs(generators, QMatrix::identity(ctx.dim()));
	return InvolutiveRepresentation(ctx, kind, imgs, std::vector<Rational>(generators, Rational(1)));
}

void InvolutiveRepresentation::require_generators(const Word &w) const
{
	if (w.max_generator() > static_cast<int>(images_.size()))
		throw GeneratorError(fmt::format("word '{}' uses a generator beyond g{}", w.to_string(),
		                                 images_.size()));
}

QMatrix InvolutiveRepresentation::image(const Word &w) const
{
	require_generators(w);
	QMatrix r = QMatrix::identity(ctx_.dim());
	for (int l : w.letters())
		r = r * (l > 0 ? images_[l - 1] : inverses_[-l - 1]);
	return r;
}

Rational InvolutiveRepresentation::lambda(const Word &w) const
{
	require_generators(w);
	Rational r(1);
	for (int l : w.letters())
		r *= l > 0 ? lambdas_[l - 1] : lambdas_[-l - 1].inverse();
	return r;
}

PolyMatrix InvolutiveRepresentation::image(const GroupAlgebraElement &x) const
{
	PolyMatrix r(ctx_.dim(), ctx_.dim());
	for (auto &[w, c] : x.terms())
	{
		QMatrix m = image(w);
		for (std::size_t i = 0; i < r.rows(); ++i)
			for (std::size_t j = 0; j < r.cols(); ++j)
				if (!m(i, j).is_zero())
					r(i, j) += c * m(i, j);
	}
	return r;
}

InvolutiveRepresentation InvolutiveRepresentation::conjugated(const QMatrix &g) const
{
	const QMatrix gi = inverse(g);
	std::vector<QMatrix> imgs;
	for (auto &m : images_)
		imgs.push_back(g * m * gi);
	return InvolutiveRepresentation(ctx_, kind_, std::move(imgs), lambdas_);
}

GroupAlgebraElement star(const InvolutiveRepresentation &rep, const GroupAlgebraElement &x)
{
	GroupAlgebraElement r;
	for (auto &[w, c] : x.terms())
		r.add(w.inverse(), c * rep.lambda(w));
	return r;
}

GroupAlgebraElement symmetrize(const InvolutiveRepresentation &rep, const GroupAlgebraElement &x)
{
	return x + star(rep, x);
}

} // namespace symplaw
