#include "tmtrace/extension.hpp"

#include <string>

#include "tmtrace/errors.hpp"

namespace tmtrace {

std::set<Word> extension_set(const Word& w, std::size_t m, std::size_t n, std::size_t max_total) {
	if (w.empty() || !is_factor(w))
		throw DomainError("not a factor: " + w.str());
	if (m + n + w.size() > max_total)
		throw ResourceError("extension length exceeds limit " + std::to_string(max_total));

	std::set<Word> frontier{w};
	for (std::size_t step = 0; step < m; ++step) {
		std::set<Word> next;
		for (const Word& u : frontier)
			for (int a : {0, 1})
				if (Word v = letter(a) + u; is_factor(v))
					next.insert(std::move(v));
		frontier = std::move(next);
	}
	for (std::size_t step = 0; step < n; ++step) {
		std::set<Word> next;
		for (const Word& u : frontier)
			for (int a : {0, 1})
				if (Word v = u + letter(a); is_factor(v))
					next.insert(std::move(v));
		frontier = std::move(next);
	}
	return frontier;
}

std::size_t classify_extension_count(const Word& w) {
	return extension_set(w, 1, 1).size();
}

} // namespace tmtrace
