#include "tmtrace/af_core.hpp"

#include <algorithm>
#include <sstream>

#include "tmtrace/errors.hpp"
#include "tmtrace/trace.hpp"

namespace tmtrace {

std::size_t AfLevel::index_of(const Word& mu) const {
	auto it = std::lower_bound(basis.begin(), basis.end(), mu);
	if (it == basis.end() || *it != mu)
		throw DomainError("not a basis word of level " + std::to_string(k) + ": " + mu.str());
	return static_cast<std::size_t>(it - basis.begin());
}

InclusionMatrix::InclusionMatrix(unsigned k, std::size_t rows, std::size_t cols)
    : k_(k), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

std::size_t InclusionMatrix::column_sum(std::size_t c) const {
	std::size_t s = 0;
	for (std::size_t r = 0; r < rows_; ++r)
		s += at(r, c);
	return s;
}

std::size_t InclusionMatrix::row_sum(std::size_t r) const {
	std::size_t s = 0;
	for (std::size_t c = 0; c < cols_; ++c)
		s += at(r, c);
	return s;
}

std::vector<Rational> InclusionMatrix::transpose_apply(const std::vector<Rational>& v) const {
	if (v.size() != rows_)
		throw DomainError("vector length does not match inclusion matrix rows");
	std::vector<Rational> out(cols_, Rational(0));
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			if (at(r, c))
				out[c] += v[r];
	return out;
}

AfLevel af_level(unsigned k, unsigned max_k) {
	if (k == 0)
		throw DomainError("AF levels start at k = 1");
	if (k > max_k)
		throw ResourceError("AF level " + std::to_string(k) + " exceeds limit " + std::to_string(max_k));
	auto fs = factors_of_length(2 * k);
	return {k, std::vector<Word>(fs.begin(), fs.end())};
}

InclusionMatrix inclusion_matrix(unsigned k, unsigned max_k) {
	if (k + 1 > max_k)
		throw ResourceError("inclusion matrix needs level " + std::to_string(k + 1));
	const AfLevel lo = af_level(k, max_k), hi = af_level(k + 1, max_k);
	InclusionMatrix m(k, hi.dimension(), lo.dimension());
	// Each mu' = b mu a has a unique central mu.
	for (std::size_t r = 0; r < hi.dimension(); ++r) {
		const Word& mu1 = hi.basis[r];
		m.set(r, lo.index_of(mu1.substr(1, 2 * k)), 1);
	}
	return m;
}

std::vector<Rational> trace_vector(unsigned k, unsigned max_k) {
	const AfLevel level = af_level(k, max_k);
	std::vector<Rational> out;
	out.reserve(level.dimension());
	for (const Word& mu : level.basis)
		out.push_back(trace_range(mu));
	return out;
}

std::string bratteli_dot(unsigned k_max) {
	std::ostringstream os;
	os << "digraph bratteli {\n  rankdir=TB;\n";
	std::vector<AfLevel> levels;
	for (unsigned k = 1; k <= k_max; ++k)
		levels.push_back(af_level(k));
	for (const AfLevel& L : levels) {
		os << "  { rank=same;";
		for (const Word& mu : L.basis)
			os << " \"" << L.k << ":" << mu.str() << "\";";
		os << " }\n";
	}
	for (unsigned k = 1; k < k_max; ++k) {
		InclusionMatrix m = inclusion_matrix(k);
		const AfLevel& lo = levels[k - 1];
		const AfLevel& hi = levels[k];
		for (std::size_t c = 0; c < m.cols(); ++c)
			for (std::size_t r = 0; r < m.rows(); ++r)
				for (std::uint8_t e = 0; e < m.at(r, c); ++e)
					os << "  \"" << k << ":" << lo.basis[c].str() << "\" -> \"" << (k + 1) << ":" << hi.basis[r].str()
					   << "\";\n";
	}
	os << "}\n";
	return os.str();
}

} // namespace tmtrace
