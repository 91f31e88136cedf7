#pragma once

#include <stdexcept>
#include <string>

namespace tmtrace {

/// Input outside an operation's domain (non-factor word, empty operand, ...).
struct DomainError : std::domain_error {
	using std::domain_error::domain_error;
};

/// A block decomposition was requested at a level the word cannot support.
struct LevelError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// A configured size limit would be exceeded.
struct ResourceError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// An internal identity failed. Never expected for valid inputs.
struct ConsistencyError : std::logic_error {
	using std::logic_error::logic_error;
};

} // namespace tmtrace
