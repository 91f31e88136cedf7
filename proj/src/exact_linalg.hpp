#pragma once

#include <cstddef>
#include <vector>

#include "tmtrace/errors.hpp"
#include "tmtrace/rational.hpp"

namespace tmtrace::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Unique solution of the (possibly overdetermined) system A x = b, by
/// Gauss-Jordan elimination. Throws ConsistencyError when the system is
/// inconsistent or does not pin down every unknown.
inline std::vector<Rational> solve_unique(RationalMatrix a, std::vector<Rational> b, std::size_t unknowns) {
	const std::size_t rows = a.size();
	std::size_t rank = 0;
	std::vector<std::size_t> pivot_col;
	for (std::size_t col = 0; col < unknowns && rank < rows; ++col) {
		std::size_t piv = rank;
		while (piv < rows && a[piv][col] == 0)
			++piv;
		if (piv == rows)
			continue;
		std::swap(a[piv], a[rank]);
		std::swap(b[piv], b[rank]);
		const Rational inv = 1 / a[rank][col];
		for (std::size_t j = col; j < unknowns; ++j)
			a[rank][j] *= inv;
		b[rank] *= inv;
		for (std::size_t r = 0; r < rows; ++r) {
			if (r == rank || a[r][col] == 0)
				continue;
			const Rational f = a[r][col];
			for (std::size_t j = col; j < unknowns; ++j)
				if (a[rank][j] != 0)
					a[r][j] -= f * a[rank][j];
			b[r] -= f * b[rank];
		}
		pivot_col.push_back(col);
		++rank;
	}
	for (std::size_t r = rank; r < rows; ++r)
		if (b[r] != 0)
			throw ConsistencyError("linear system is inconsistent");
	if (rank != unknowns)
		throw ConsistencyError("linear system is underdetermined");
	std::vector<Rational> x(unknowns);
	for (std::size_t r = 0; r < rank; ++r)
		x[pivot_col[r]] = b[r];
	return x;
}

} // namespace tmtrace::detail
