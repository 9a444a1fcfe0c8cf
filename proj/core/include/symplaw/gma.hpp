#pragma once

#include "symplaw/det_laws.hpp"
#include "symplaw/matrix.hpp"
#include "symplaw/poly.hpp"
#include "symplaw/random.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symplaw {

/// Combinatorial type (I0, I1, I2, sigma, dims) of a symplectic GMA.
/// Block indices are 1-based.
struct GmaType
{
	std::vector<unsigned> I0, I1, I2;
	std::vector<unsigned> sigma;
	std::vector<unsigned> dims;

	std::size_t blocks() const { return dims.size(); }
	std::size_t total() const;
	/// Offset of block i (1-based) in the 2d x 2d matrix.
	std::size_t offset(unsigned i) const;
	/// Throws TypeError with the first violated condition.
	void validate() const;
};

using BlockKey = std::pair<unsigned, unsigned>;

/// Standard symplectic GMA inside M_2d(B), B = Q[base_vars] / (nil
/// monomials), with block spans A_ij and sign maps tau_ij = eps_ij id.
struct GmaSpec
{
	GmaType type;
	std::vector<std::string> base_vars;
	MonomialIdeal ideal;
	std::map<BlockKey, std::vector<Poly>> blocks;
	std::map<BlockKey, int> tau_signs;

	/// Spanning set of A_ij (A_ii = Q 1 unless overridden).
	std::vector<Poly> span(unsigned i, unsigned j) const;
	/// eps_ij, looked up as (i, j) then (j, i); defaults to +1.
	int epsilon(unsigned i, unsigned j) const;
	Poly reduce(const Poly &p) const { return ideal.reduce(p); }
	PolyMatrix reduce(const PolyMatrix &m) const;
};

/// True when p (reduced) lies in the Q-span of `span` (reduced).
bool in_span(const Poly &p, const std::vector<Poly> &span, const MonomialIdeal &ideal);

/// Block matrix with J in (i, i) for i in I0, -Id at (i, sigma(i)) for
/// i in I1 and +Id for i in I2. Throws TypeError.
QMatrix build_J_delta(const GmaType &t);

/// Throws MembershipError when an entry of M leaves its block span.
void check_membership(const GmaSpec &spec, const PolyMatrix &m);

/// J_delta tau(M)^T J_delta^-1, entries reduced.
PolyMatrix delta_involution(const GmaSpec &spec, const PolyMatrix &m);

struct GmaValidation
{
	bool valid = true;
	std::vector<std::string> violations;
};

GmaValidation validate_standard_gma(const GmaSpec &spec);

struct GmaValues
{
	Poly trace;
	Poly det;
	/// Present only when M is fixed by the involution.
	std::optional<Poly> pf;
};

GmaValues gma_trace_det_pf(const GmaSpec &spec, const PolyMatrix &m);

/// P_E(M) for a symmetric element. Uses Pf(M J_delta) / Pf(J_delta)
/// when M J_delta is alternating, otherwise the unique solution of the
/// Pfaffian recursion on the characteristic coefficients of M. Throws
/// StructureError when M is not symmetric.
Poly gma_pfaffian(const GmaSpec &spec, const PolyMatrix &m);

/// P_E(t - M) as a polynomial in `var`.
Poly gma_pf_char_poly(const GmaSpec &spec, const PolyMatrix &m, const std::string &var);

/// chi_alpha of symmetric GMA elements, entries reduced.
PolyMatrix gma_chi_alpha(const GmaSpec &spec, const std::vector<PolyMatrix> &elems,
                         const std::vector<unsigned> &alpha);

struct SchWitness
{
	unsigned i = 0, j = 0;
	Poly x;
	PolyMatrix element;
	PolyMatrix image;
};

struct SchResult
{
	bool holds = true;
	std::optional<SchWitness> witness;
};

/// x* = -x for every spanning x of A_{i, sigma(i)}, i in I1 and I2,
/// placed at entry (0, 0) of block (i, sigma(i)).
SchResult check_sch_condition(const GmaSpec &spec);

/// Element with block (i, j) entries random Q-combinations of span(i, j).
PolyMatrix random_gma_element(const GmaSpec &spec, Rng &rng, long magnitude);
/// M + M*.
PolyMatrix random_symmetric_gma_element(const GmaSpec &spec, Rng &rng, long magnitude);

} // namespace symplaw
