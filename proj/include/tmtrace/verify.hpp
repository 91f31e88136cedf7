#pragma once

// Self-check suite run by `tmtrace verify`. Every check is exact except the
// frequency and window-trace comparisons, whose tolerance is fixed here.

#include <string>
#include <vector>

namespace tmtrace {

enum class VerifyProfile { Quick, Full };

struct CheckResult {
	std::string name;
	bool passed = false;
	std::string detail; ///< first counterexample, or a short summary
};

struct VerifyReport {
	std::vector<CheckResult> checks;
	bool all_passed() const;
};

VerifyReport run_verification(VerifyProfile profile);

} // namespace tmtrace
