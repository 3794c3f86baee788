#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace phstab {

// Counter-based splittable generator built on the splitmix64 finalizer.
// A stream is a pure function of (seed, a, b); draws within a stream are a
// pure function of the stream state and the draw index. Changing worker
// counts or evaluation order therefore never changes any drawn value.
class Rng {
public:
	explicit Rng(uint64_t seed) : state_(seed) {}

	// Derived stream for e.g. (seed, alpha_index, trial_index).
	static Rng stream(uint64_t seed, uint64_t a, uint64_t b) {
		uint64_t s = finalize(seed + 0x9e3779b97f4a7c15ULL);
		s = finalize(s ^ finalize(a + 0xbf58476d1ce4e5b9ULL));
		s = finalize(s ^ finalize(b + 0x94d049bb133111ebULL));
		return Rng(s);
	}

	uint64_t next_u64() {
		uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
		return finalize(z);
	}

	// uniform in [0, 1)
	double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

	// uniform in (0, 1]
	double uniform_open() {
		return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
	}

	// standard normal via Box-Muller; consumes exactly two words per draw
	double normal() {
		double u1 = uniform_open();
		double u2 = uniform01();
		return std::sqrt(-2.0 * std::log(u1)) *
		       std::cos(2.0 * std::numbers::pi * u2);
	}

private:
	static uint64_t finalize(uint64_t z) {
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
		return z ^ (z >> 31);
	}

	uint64_t state_;
};

} // namespace phstab
