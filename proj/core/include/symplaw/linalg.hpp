#pragma once

#include "symplaw/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace symplaw {

/// Coefficients [L0, ..., Ln] of det(t*Id - M) = sum (-1)^i Li t^(n-i),
/// computed with the Faddeev-LeVerrier recursion.
std::vector<Rational> char_lambdas(const QMatrix &m);

/// Throws SingularError.
QMatrix inverse(const QMatrix &m);

std::size_t rank(const QMatrix &m);

using SparseRow = std::map<std::size_t, Rational>;

/// Incremental reduced row echelon form over Q for sparse rows.
class RowEchelon
{
public:
	/// Returns true when the row was independent of the rows seen so far.
	bool insert(SparseRow row);
	/// Reduces `row` against the stored pivots; zero iff in the span.
	SparseRow reduce(SparseRow row) const;
	std::size_t rank() const { return pivots_.size(); }

private:
	std::map<std::size_t, SparseRow> pivots_;
};

} // namespace symplaw
