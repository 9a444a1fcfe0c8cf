#pragma once

#include "symplaw/det_laws.hpp"
#include "symplaw/group_algebra.hpp"
#include "symplaw/invariants.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace symplaw {

using WordTuple = std::vector<Word>;

std::string to_string(const WordTuple &gammas);

/// Pseudocharacter Theta attached to a representation:
/// Theta_m(f)(g1, ..., gm) = f(rho(g1), ..., rho(gm)).
class Pseudocharacter
{
public:
	explicit Pseudocharacter(InvolutiveRepresentation rep);
	Pseudocharacter(const Pseudocharacter &other);

	const InvolutiveRepresentation &rep() const { return rep_; }
	GroupKind kind() const { return rep_.kind(); }

	/// Memoized. Throws ArityError, UnsupportedKindError (lambda factors
	/// for Sp), ArgumentError for non-invariant factors.
	Rational theta(const Invariant &f, const WordTuple &gammas) const;

	/// Overwrites one table entry. Test fixture for axiom failures.
	void override_entry(const Invariant &f, const WordTuple &gammas, const Rational &value);

	std::size_t cache_size() const;

private:
	using Key = std::pair<Invariant, WordTuple>;

	InvolutiveRepresentation rep_;
	mutable std::mutex mutex_;
	mutable std::map<Key, Rational> cache_;
};

Rational theta_eval(const Pseudocharacter &pc, const Invariant &f, const WordTuple &gammas);

/// f^zeta(X1..Xn) = f(X_zeta(1), ..., X_zeta(m)); zeta is 1-based.
Invariant substitute(const Invariant &f, const std::vector<unsigned> &zeta, unsigned n);
/// fhat(X1..X_{m+1}) = f(X1, ..., X_{m-1}, X_m X_{m+1}).
Invariant hat(const Invariant &f);

struct AxiomTrial
{
	Invariant f;
	std::vector<unsigned> zeta;
	unsigned n = 0;
	WordTuple gammas1;
	WordTuple gammas2;
};

/// Seeded trials: generator invariants with word length <= 4 and arity
/// <= 3, maps zeta into n <= 3 variables, random words.
std::vector<AxiomTrial> sample_axiom_trials(const Pseudocharacter &pc, unsigned trials, std::uint64_t seed);

struct AxiomFailure
{
	int axiom = 0;
	std::size_t trial = 0;
	std::string f;
	std::string gammas;
	Rational lhs, rhs;
};

struct AxiomReport
{
	std::size_t trials = 0;
	std::size_t axiom1_checks = 0;
	std::size_t axiom2_checks = 0;
	std::vector<AxiomFailure> failures;

	bool passed() const { return failures.empty(); }
};

bool check_axiom1(const Pseudocharacter &pc, const Invariant &f, const std::vector<unsigned> &zeta,
                  unsigned n, const WordTuple &gammas, Rational *lhs = nullptr, Rational *rhs = nullptr);
bool check_axiom2(const Pseudocharacter &pc, const Invariant &f, const WordTuple &gammas,
                  Rational *lhs = nullptr, Rational *rhs = nullptr);

AxiomReport verify_axioms(const Pseudocharacter &pc, unsigned trials, std::uint64_t seed);

/// lambda_Theta(gamma) = Theta_1(lambda)(gamma). Throws UnsupportedKindError for Sp.
Rational similitude_character(const Pseudocharacter &pc, const Word &gamma);

/// Determinant and Pfaffian laws recovered from Theta alone.
struct ComparisonMap
{
	std::function<Poly(const GroupAlgebraElement &)> D;
	/// Throws SymmetryError on non-symmetric input.
	std::function<Poly(const GroupAlgebraElement &)> P;
};

ComparisonMap comparison_to_det_law(const Pseudocharacter &pc);

} // namespace symplaw
