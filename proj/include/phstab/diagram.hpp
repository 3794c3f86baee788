#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "phstab/simplex.hpp"

namespace phstab {

inline constexpr value_t kInfiniteDeath = std::numeric_limits<value_t>::infinity();

// One persistent class: born when `creator` enters the filtration, killed by
// `killer` (absent for essential classes whose death was not assigned a
// finite pairing). `cycle` is a representative cycle containing the creator.
struct PersistencePair {
	value_t birth = 0;
	value_t death = kInfiniteDeath;
	int degree = 0;
	Simplex creator;
	std::optional<Simplex> killer;
	std::optional<std::vector<Simplex>> cycle;
	bool essential = false;

	value_t persistence() const { return death - birth; }
};

struct PersistenceDiagram {
	int degree = 0;
	std::vector<PersistencePair> pairs;

	size_t size() const { return pairs.size(); }
	bool empty() const { return pairs.empty(); }
};

inline bool pair_order(const PersistencePair& a, const PersistencePair& b) {
	if (a.birth != b.birth) return a.birth < b.birth;
	if (a.death != b.death) return a.death < b.death;
	return a.creator < b.creator;
}

inline void canonicalize(PersistenceDiagram& d) {
	std::sort(d.pairs.begin(), d.pairs.end(), pair_order);
}

// Pairs with positive persistence, most persistent first; ties broken by
// (birth, creator). Zero-persistence pairs stay internal to the diagram.
inline std::vector<PersistencePair> offdiagonal(const PersistenceDiagram& d) {
	std::vector<PersistencePair> out;
	for (const auto& p : d.pairs)
		if (p.persistence() > 0) out.push_back(p);
	std::sort(out.begin(), out.end(),
	          [](const PersistencePair& a, const PersistencePair& b) {
		          if (a.persistence() != b.persistence())
			          return a.persistence() > b.persistence();
		          if (a.birth != b.birth) return a.birth < b.birth;
		          return a.creator < b.creator;
	          });
	return out;
}

} // namespace phstab
