#pragma once

#include <stdexcept>

namespace phstab {

// A complex failed the closure or monotonicity checks.
struct validation_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Data-dependent failure of a construction (degenerate triangulation,
// unusable truncation level, ...). Summary evaluation maps this to the
// empty state, which all functionals send to 0.
struct degeneracy_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

} // namespace phstab
