#include "tmtrace/rep_window.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <unordered_set>

#include "tmtrace/errors.hpp"

namespace tmtrace {

WindowOperator::WindowOperator(std::int64_t half_width)
    : half_width_(half_width) {
	if (half_width < 1)
		throw DomainError("window half-width must be positive");
	if (half_width > kMaxHalfWidth)
		throw ResourceError("window half-width " + std::to_string(half_width) + " exceeds limit");
	const auto dim = static_cast<std::size_t>(2 * half_width + 1);
	rows_.assign(dim, kNone);
	values_.assign(dim, 0);
}

WindowOperator WindowOperator::identity(std::int64_t half_width) {
	WindowOperator id(half_width);
	for (std::int64_t n = -half_width; n <= half_width; ++n)
		id.set(n, n, 1);
	return id;
}

std::size_t WindowOperator::slot(std::int64_t n) const {
	if (n < -half_width_ || n > half_width_)
		throw DomainError("index " + std::to_string(n) + " outside the window");
	return static_cast<std::size_t>(n + half_width_);
}

std::optional<WindowOperator::Entry> WindowOperator::column(std::int64_t n) const {
	const std::size_t s = slot(n);
	if (rows_[s] == kNone)
		return std::nullopt;
	return Entry{rows_[s], values_[s]};
}

std::int64_t WindowOperator::at(std::int64_t row, std::int64_t col) const {
	const std::size_t s = slot(col);
	return rows_[s] == row ? values_[s] : 0;
}

void WindowOperator::set(std::int64_t row, std::int64_t col, std::int64_t value) {
	slot(row);
	const std::size_t s = slot(col);
	if (value == 0) {
		rows_[s] = kNone;
		values_[s] = 0;
	} else {
		rows_[s] = row;
		values_[s] = value;
	}
}

WindowOperator WindowOperator::adjoint() const {
	WindowOperator out(half_width_);
	for (std::size_t s = 0; s < rows_.size(); ++s) {
		if (rows_[s] == kNone)
			continue;
		const std::size_t t = static_cast<std::size_t>(rows_[s] + half_width_);
		if (out.rows_[t] != kNone)
			throw ConsistencyError("adjoint has two entries in one column");
		out.rows_[t] = static_cast<std::int64_t>(s) - half_width_;
		out.values_[t] = values_[s];
	}
	return out;
}

WindowOperator operator*(const WindowOperator& a, const WindowOperator& b) {
	if (a.half_width_ != b.half_width_)
		throw DomainError("window sizes differ");
	WindowOperator out(a.half_width_);
	for (std::size_t s = 0; s < b.rows_.size(); ++s) {
		if (b.rows_[s] == WindowOperator::kNone)
			continue;
		const auto mid = static_cast<std::size_t>(b.rows_[s] + b.half_width_);
		if (a.rows_[mid] == WindowOperator::kNone)
			continue;
		out.rows_[s] = a.rows_[mid];
		out.values_[s] = a.values_[mid] * b.values_[s];
	}
	return out;
}

WindowOperator WindowOperator::combine(const WindowOperator& b, std::int64_t sign) const {
	if (half_width_ != b.half_width_)
		throw DomainError("window sizes differ");
	WindowOperator out = *this;
	for (std::size_t s = 0; s < rows_.size(); ++s) {
		if (b.rows_[s] == kNone)
			continue;
		if (out.rows_[s] == kNone) {
			out.rows_[s] = b.rows_[s];
			out.values_[s] = sign * b.values_[s];
		} else if (out.rows_[s] == b.rows_[s]) {
			out.values_[s] += sign * b.values_[s];
			if (out.values_[s] == 0)
				out.rows_[s] = kNone;
		} else {
			throw ConsistencyError("sum needs two entries in one column");
		}
	}
	return out;
}

WindowOperator operator+(const WindowOperator& a, const WindowOperator& b) { return a.combine(b, 1); }
WindowOperator operator-(const WindowOperator& a, const WindowOperator& b) { return a.combine(b, -1); }

std::int64_t max_residual(const WindowOperator& a, const WindowOperator& b, std::int64_t lo, std::int64_t hi) {
	if (a.half_width() != b.half_width())
		throw DomainError("window sizes differ");
	lo = std::max(lo, -a.half_width());
	hi = std::min(hi, a.half_width());
	auto in_band = [&](std::int64_t r) { return lo <= r && r <= hi; };
	std::int64_t worst = 0;
	for (std::int64_t n = lo; n <= hi; ++n) {
		auto ea = a.column(n), eb = b.column(n);
		if (ea && eb && ea->row == eb->row) {
			if (in_band(ea->row))
				worst = std::max(worst, std::abs(ea->value - eb->value));
			continue;
		}
		if (ea && in_band(ea->row))
			worst = std::max(worst, std::abs(ea->value));
		if (eb && in_band(eb->row))
			worst = std::max(worst, std::abs(eb->value));
	}
	return worst;
}

ShiftGenerators build_generators(std::int64_t W) {
	ShiftGenerators g{WindowOperator(W), WindowOperator(W)};
	for (std::int64_t n = -W + 1; n <= W; ++n) {
		WindowOperator& t = tm_letter(n - 1) ? g.t1 : g.t0;
		t.set(n - 1, n, 1);
	}
	return g;
}

namespace {

void check_word_fits(const Word& alpha, std::int64_t W) {
	if (static_cast<std::int64_t>(alpha.size()) > W / 4)
		throw DomainError("word longer than a quarter of the window");
}

} // namespace

WindowOperator word_operator(const Word& alpha, std::int64_t W) {
	check_word_fits(alpha, W);
	WindowOperator out = WindowOperator::identity(W);
	if (alpha.empty())
		return out;
	const ShiftGenerators g = build_generators(W);
	for (std::size_t j = alpha.size(); j-- > 0;)
		out = g[alpha[j]] * out;
	return out;
}

WindowOperator range_projection(const Word& alpha, std::int64_t W) {
	check_word_fits(alpha, W);
	WindowOperator out(W);
	const auto m = static_cast<std::int64_t>(alpha.size());
	const std::string s = tm_slice({-W - m, W + 1}).str();
	const std::string_view sv = s;
	for (std::int64_t n = -W; n <= W; ++n)
		if (sv.substr(static_cast<std::size_t>(n + W), alpha.size()) == alpha.view())
			out.set(n, n, 1);
	return out;
}

WindowOperator range_projection(const RangeFamily& A, std::int64_t W) {
	WindowOperator out(W);
	for (const Word& w : A.words())
		out = out + range_projection(w, W);
	return out;
}

std::int64_t AxiomResiduals::max() const {
	return std::max({lattice, covariance, isometry, cuntz_krieger});
}

namespace {

// Projections for range families, built from per-length window codes so
// that the pairwise lattice checks stay linear in the window size.
class ProjectionCache {
public:
	ProjectionCache(std::int64_t W, std::size_t max_len) : W_(W), codes_(max_len + 1) {
		const auto m = static_cast<std::int64_t>(max_len);
		slice_ = tm_slice({-W - m, W + 1}).str();
		for (std::size_t len = 1; len <= max_len; ++len) {
			auto& c = codes_[len];
			c.resize(static_cast<std::size_t>(2 * W + 1));
			for (std::int64_t n = -W; n <= W; ++n) {
				std::uint64_t code = 0;
				// omega_[n - len, n) sits at slice offset n + W + max_len - len
				const auto start = static_cast<std::size_t>(n + W + m - static_cast<std::int64_t>(len));
				for (std::size_t j = 0; j < len; ++j)
					code = (code << 1) | static_cast<std::uint64_t>(slice_[start + j] - '0');
				c[static_cast<std::size_t>(n + W)] = code;
			}
		}
	}

	WindowOperator projection(const RangeFamily& A) const {
		WindowOperator out(W_);
		if (A.empty())
			return out;
		const std::size_t len = A.word_length();
		std::vector<char> dense;
		std::unordered_set<std::uint64_t> sparse;
		const bool use_dense = len <= kDenseBits;
		if (use_dense)
			dense.assign(std::size_t{1} << len, 0);
		for (const Word& w : A.words()) {
			std::uint64_t code = 0;
			for (std::size_t j = 0; j < w.size(); ++j)
				code = (code << 1) | static_cast<std::uint64_t>(w[j]);
			if (use_dense)
				dense[code] = 1;
			else
				sparse.insert(code);
		}
		const auto& c = codes_.at(len);
		for (std::int64_t n = -W_; n <= W_; ++n) {
			const std::uint64_t code = c[static_cast<std::size_t>(n + W_)];
			if (use_dense ? dense[code] != 0 : sparse.contains(code))
				out.set(n, n, 1);
		}
		return out;
	}

private:
	static constexpr std::size_t kDenseBits = 16;
	std::int64_t W_;
	std::string slice_;
	std::vector<std::vector<std::uint64_t>> codes_;
};

} // namespace

AxiomResiduals axiom_residuals(std::int64_t W, std::size_t maxlen) {
	if (maxlen == 0 || static_cast<std::int64_t>(maxlen) > W / 8)
		throw DomainError("maxlen must be between 1 and W/8");
	if (maxlen > 60)
		throw ResourceError("maxlen exceeds limit 60");
	const std::int64_t lo = -W + static_cast<std::int64_t>(maxlen);
	const std::int64_t hi = W - static_cast<std::int64_t>(maxlen);

	const ShiftGenerators s = build_generators(W);
	// Unions lift to at most 2 * maxlen letters; relative ranges add one.
	const ProjectionCache cache(W, maxlen + 1);
	std::vector<RangeFamily> singles;
	for (std::size_t len = 1; len <= maxlen; ++len)
		for (const Word& w : factors_of_length(len))
			singles.emplace_back(std::set<Word>{w});
	std::vector<WindowOperator> p;
	p.reserve(singles.size());
	for (const RangeFamily& A : singles)
		p.push_back(cache.projection(A));

	auto check_from = [&](std::size_t i, AxiomResiduals& r) {
		for (std::size_t j = i; j < singles.size(); ++j) {
			const RangeFamily meet = intersect(singles[i], singles[j]);
			const RangeFamily join = unite(singles[i], singles[j]);
			const WindowOperator p_meet = cache.projection(meet);
			r.lattice = std::max(r.lattice, max_residual(p[i] * p[j], p_meet, lo, hi));
			r.lattice = std::max(r.lattice, max_residual(cache.projection(join), p[i] + p[j] - p_meet, lo, hi));
		}
		WindowOperator sum(W);
		for (int a : {0, 1}) {
			const RangeFamily rel = singles[i].relative_range(a);
			const WindowOperator p_rel = cache.projection(rel);
			r.covariance = std::max(r.covariance, max_residual(p[i] * s[a], s[a] * p_rel, lo, hi));
			if (!rel.empty())
				sum = sum + s[a] * p_rel * s[a].adjoint();
		}
		r.cuntz_krieger = std::max(r.cuntz_krieger, max_residual(p[i], sum, lo, hi));
	};

	const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
	std::vector<AxiomResiduals> partial(workers);
	std::vector<std::exception_ptr> failures(workers);
	{
		std::vector<std::jthread> pool;
		for (std::size_t t = 0; t < workers; ++t)
			pool.emplace_back([&, t] {
				try {
					for (std::size_t i = t; i < singles.size(); i += workers)
						check_from(i, partial[t]);
				} catch (...) {
					failures[t] = std::current_exception();
				}
			});
	}
	for (const auto& f : failures)
		if (f)
			std::rethrow_exception(f);
	AxiomResiduals r;
	for (const AxiomResiduals& q : partial) {
		r.lattice = std::max(r.lattice, q.lattice);
		r.covariance = std::max(r.covariance, q.covariance);
		r.cuntz_krieger = std::max(r.cuntz_krieger, q.cuntz_krieger);
	}
	const WindowOperator zero(W);
	for (int a : {0, 1}) {
		r.isometry = std::max(r.isometry, max_residual(s[a].adjoint() * s[a], range_projection(letter(a), W), lo, hi));
		r.isometry = std::max(r.isometry, max_residual(s[a].adjoint() * s[1 - a], zero, lo, hi));
	}
	return r;
}

Rational empirical_trace(const Word& alpha, std::int64_t W) {
	if (alpha.empty())
		return 1;
	const WindowOperator q = range_projection(alpha, W);
	const auto m = static_cast<std::int64_t>(alpha.size());
	std::int64_t hits = 0, total = 0;
	for (std::int64_t n = -W + m; n <= W - m; ++n, ++total)
		hits += q.at(n, n);
	return Rational(hits, total);
}

} // namespace tmtrace
