#pragma once

#include "symplaw/random.hpp"
#include "symplaw/symplectic.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace symplaw {

/// X_index, or its symplectic transpose when starred. Indices are 1-based.
struct Letter
{
	unsigned index = 1;
	bool starred = false;

	friend auto operator<=>(const Letter &, const Letter &) = default;
};

/// Word in generic matrices and their transposes, in canonical form: the
/// least representative under rotation and W -> W^j.
class TraceWord
{
public:
	/// Canonicalizes. Throws ArgumentError on an empty word or index 0.
	explicit TraceWord(std::vector<Letter> letters);
	/// Parses "X1 X2^j X1". Throws ParseError.
	static TraceWord parse(std::string_view text);

	const std::vector<Letter> &letters() const { return letters_; }
	std::size_t length() const { return letters_.size(); }
	unsigned max_index() const;
	std::string to_string() const;

	/// Evaluates the word at the given matrices.
	QMatrix evaluate(const SymplecticContext &ctx, const std::vector<QMatrix> &mats) const;

	friend auto operator<=>(const TraceWord &, const TraceWord &) = default;

private:
	std::vector<Letter> letters_;
};

/// Least element of the rotation / reversal-with-star orbit of `letters`.
std::vector<Letter> canonical_letters(const std::vector<Letter> &letters);

/// sigma_i(W): the i-th coefficient Lambda_i of the characteristic
/// polynomial of W.
struct SigmaOf
{
	unsigned sigma = 1;
	TraceWord word;

	friend auto operator<=>(const SigmaOf &, const SigmaOf &) = default;
};

/// lambda(X_index)^power; the GSp generator is power -1.
struct SimilitudePower
{
	unsigned index = 1;
	int power = -1;

	friend auto operator<=>(const SimilitudePower &, const SimilitudePower &) = default;
};

/// Entry (row, col) of X_index, 0-based. Not an invariant.
struct EntryProbe
{
	unsigned index = 1;
	unsigned row = 0;
	unsigned col = 0;

	friend auto operator<=>(const EntryProbe &, const EntryProbe &) = default;
};

using InvariantFunction = std::variant<SigmaOf, SimilitudePower, EntryProbe>;

std::string to_string(const InvariantFunction &f);
unsigned max_index(const InvariantFunction &f);

/// Product of InvariantFunction factors in `arity` matrix variables; the
/// empty product is the constant 1.
struct Invariant
{
	unsigned arity = 1;
	std::vector<InvariantFunction> factors;

	Invariant() = default;
	Invariant(unsigned arity, std::vector<InvariantFunction> factors);
	Invariant(unsigned arity, InvariantFunction f) : Invariant(arity, std::vector{std::move(f)}) {}

	bool uses_similitude() const;
	bool is_invariant_function() const;
	std::string to_string() const;

	friend auto operator<=>(const Invariant &, const Invariant &) = default;
};

/// Throws ArityError when mats.size() != f.arity, ArgumentError when a
/// sigma index exceeds 2d, NotASimilitudeError for lambda factors at
/// non-similitudes.
Rational eval_invariant(const SymplecticContext &ctx, const Invariant &f, const std::vector<QMatrix> &mats);
Rational eval_invariant(const SymplecticContext &ctx, const InvariantFunction &f,
                        const std::vector<QMatrix> &mats);

/// f(g X g^-1) == f(X).
bool check_invariance(const SymplecticContext &ctx, const Invariant &f, const std::vector<QMatrix> &mats,
                      const QMatrix &g);

/// Canonical trace words of length 1..max_len in m variables, ordered by
/// length then lexicographically.
std::vector<TraceWord> enumerate_trace_words(unsigned m, unsigned max_len);

/// Upper bound on (2d)^(2m) for the invariance oracle.
inline constexpr std::uint64_t kOracleCapacity = 100000;

/// Dimension of the multilinear Sp-conjugation invariants on (M_2d)^m,
/// as the kernel of the infinitesimal invariance system. Throws
/// CapacityError.
std::size_t multilinear_invariant_dim(unsigned d, unsigned m);

/// Products of traces of words that use each of 1..m exactly once.
std::vector<std::vector<TraceWord>> multilinear_trace_products(unsigned m);

/// Rank of the evaluations of multilinear_trace_products(m) at seeded
/// random tuples, grown until stable for three rounds. Throws
/// CapacityError.
std::size_t trace_word_span_dim(unsigned d, unsigned m, std::uint64_t seed = 1);

} // namespace symplaw
