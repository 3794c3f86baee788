#pragma once

#include <cstdint>
#include <iterator>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "phstab/complex.hpp"
#include "phstab/diagram.hpp"
#include "phstab/errors.hpp"

namespace phstab {

// Essential degree-0 classes can either be paired with the maximum
// filtration value of their connected component (extended convention,
// global min with global max) or truncated at a fixed level M.
struct EssentialMode {
	enum class Kind { extended, truncate };
	Kind kind = Kind::extended;
	value_t truncation = kInfiniteDeath;

	static EssentialMode extended() { return {Kind::extended, kInfiniteDeath}; }
	static EssentialMode truncate(value_t m) { return {Kind::truncate, m}; }
};

namespace detail {

using col_t = std::vector<uint32_t>;

inline void xor_column(col_t& a, const col_t& b, col_t& scratch) {
	scratch.clear();
	std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
	                              std::back_inserter(scratch));
	a.swap(scratch);
}

} // namespace detail

// Degree-0 persistence by union-find over the filtration order. Finite
// pairs match the matrix reduction exactly: when an edge merges two
// components, the one whose birth vertex is later in the order dies, and
// that vertex is the pair's creator. Each component's essential class is
// paired per `mode`.
inline PersistenceDiagram zero_dim(const FilteredComplex& K,
                                   const EssentialMode& mode) {
	K.ensure_valid();
	std::vector<size_t> order = K.sorted_filtration();

	PersistenceDiagram dgm;
	dgm.degree = 0;
	if (order.empty()) return dgm;

	// dense reindexing of vertex ids
	std::unordered_map<vertex_t, uint32_t> vid;
	std::vector<size_t> vertex_complex_index;
	for (size_t idx : order) {
		const Simplex& s = K.simplex_at(idx);
		if (s.dimension() == 0) {
			vid.emplace(s[0], static_cast<uint32_t>(vertex_complex_index.size()));
			vertex_complex_index.push_back(idx);
		}
	}
	const uint32_t nv = static_cast<uint32_t>(vertex_complex_index.size());
	std::vector<uint32_t> parent(nv);
	for (uint32_t i = 0; i < nv; ++i) parent[i] = i;
	// root -> dense index of the component's birth vertex; components
	// compare by the birth vertex's position in the filtration order.
	std::vector<uint32_t> birth_vertex(nv);
	std::vector<uint32_t> birth_pos(nv, 0);

	auto find = [&](uint32_t x) {
		while (parent[x] != x) {
			parent[x] = parent[parent[x]];
			x = parent[x];
		}
		return x;
	};

	uint32_t next_vertex_pos = 0;
	for (size_t idx : order) {
		const Simplex& s = K.simplex_at(idx);
		if (s.dimension() == 0) {
			uint32_t v = vid[s[0]];
			birth_vertex[v] = v;
			birth_pos[v] = next_vertex_pos++;
		} else if (s.dimension() == 1) {
			uint32_t a = find(vid[s[0]]);
			uint32_t b = find(vid[s[1]]);
			if (a == b) continue;
			// elder rule: the component born later in the order dies
			uint32_t dying = birth_pos[a] > birth_pos[b] ? a : b;
			uint32_t surviving = dying == a ? b : a;
			uint32_t v = birth_vertex[dying];
			PersistencePair p;
			p.birth = K.value_at(vertex_complex_index[v]);
			p.death = K.value_at(idx);
			p.degree = 0;
			p.creator = K.simplex_at(vertex_complex_index[v]);
			p.killer = K.simplex_at(idx);
			dgm.pairs.push_back(std::move(p));
			parent[dying] = surviving;
		}
	}

	// component maxima: every simplex contributes to its component, which
	// is well defined because faces connect all its vertices
	std::vector<value_t> comp_max(nv, -std::numeric_limits<value_t>::infinity());
	value_t global_max = -std::numeric_limits<value_t>::infinity();
	for (size_t i = 0; i < K.size(); ++i) {
		uint32_t r = find(vid[K.simplex_at(i)[0]]);
		comp_max[r] = std::max(comp_max[r], K.value_at(i));
		global_max = std::max(global_max, K.value_at(i));
	}
	if (mode.kind == EssentialMode::Kind::truncate &&
	    mode.truncation < global_max)
		throw degeneracy_error("truncation level below the maximum filtration value");

	for (uint32_t i = 0; i < nv; ++i) {
		if (find(i) != i) continue;
		uint32_t v = birth_vertex[i];
		PersistencePair p;
		p.birth = K.value_at(vertex_complex_index[v]);
		p.death = mode.kind == EssentialMode::Kind::extended ? comp_max[i]
		                                                     : mode.truncation;
		p.degree = 0;
		p.creator = K.simplex_at(vertex_complex_index[v]);
		p.essential = true;
		dgm.pairs.push_back(std::move(p));
	}
	canonicalize(dgm);
	return dgm;
}

namespace detail {

struct SortedComplexView {
	std::vector<size_t> order;          // positions -> complex indices
	std::vector<uint32_t> pos_of_index; // complex indices -> positions
};

inline SortedComplexView make_view(const FilteredComplex& K, int max_sim_dim) {
	SortedComplexView v;
	for (size_t idx : K.sorted_filtration())
		if (K.simplex_at(idx).dimension() <= max_sim_dim) v.order.push_back(idx);
	v.pos_of_index.assign(K.size(), std::numeric_limits<uint32_t>::max());
	for (uint32_t p = 0; p < v.order.size(); ++p)
		v.pos_of_index[v.order[p]] = p;
	return v;
}

} // namespace detail

// Persistence diagrams of degrees 0..max_degree with creator and killer
// simplices; `want_cycles` additionally records a representative cycle per
// pair (reduced killer column) and per essential class (basis column).
// Without cycles the pairing is computed from the anti-transposed matrix
// (columns indexed by cofacets in reverse filtration order), which yields
// the identical pairing and is much faster on clique-like filtrations.
// Essential classes are reported with death = +inf in every degree; use
// zero_dim() for the extended / truncated degree-0 convention.
inline std::vector<PersistenceDiagram> reduce(const FilteredComplex& K,
                                              int max_degree,
                                              bool want_cycles = false) {
	if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
	K.ensure_valid();
	auto view = detail::make_view(K, max_degree + 1);
	const size_t m = view.order.size();

	std::vector<PersistenceDiagram> diagrams(max_degree + 1);
	for (int d = 0; d <= max_degree; ++d) diagrams[d].degree = d;

	auto emit_pair = [&](uint32_t birth_pos, uint32_t death_pos,
	                     std::vector<uint32_t> cycle_positions,
	                     bool with_cycle) {
		size_t bi = view.order[birth_pos];
		size_t di = view.order[death_pos];
		int deg = K.simplex_at(bi).dimension();
		if (deg > max_degree) return;
		PersistencePair p;
		p.birth = K.value_at(bi);
		p.death = K.value_at(di);
		p.degree = deg;
		p.creator = K.simplex_at(bi);
		p.killer = K.simplex_at(di);
		if (with_cycle) {
			std::vector<Simplex> cyc;
			cyc.reserve(cycle_positions.size());
			for (uint32_t cp : cycle_positions)
				cyc.push_back(K.simplex_at(view.order[cp]));
			p.cycle = std::move(cyc);
		}
		diagrams[deg].pairs.push_back(std::move(p));
	};
	auto emit_essential = [&](uint32_t birth_pos,
	                          std::vector<uint32_t> cycle_positions,
	                          bool with_cycle) {
		size_t bi = view.order[birth_pos];
		int deg = K.simplex_at(bi).dimension();
		if (deg > max_degree) return;
		PersistencePair p;
		p.birth = K.value_at(bi);
		p.death = kInfiniteDeath;
		p.degree = deg;
		p.creator = K.simplex_at(bi);
		p.essential = true;
		if (with_cycle) {
			std::vector<Simplex> cyc;
			cyc.reserve(cycle_positions.size());
			for (uint32_t cp : cycle_positions)
				cyc.push_back(K.simplex_at(view.order[cp]));
			p.cycle = std::move(cyc);
		}
		diagrams[deg].pairs.push_back(std::move(p));
	};

	constexpr uint32_t none = std::numeric_limits<uint32_t>::max();
	detail::col_t scratch;

	if (want_cycles) {
		// boundary columns in filtration order
		std::vector<detail::col_t> boundary(m);
		std::vector<vertex_t> buf;
		for (uint32_t j = 0; j < m; ++j) {
			const Simplex& s = K.simplex_at(view.order[j]);
			const auto& verts = s.vertices();
			if (verts.size() < 2) continue;
			detail::col_t col;
			col.reserve(verts.size());
			buf.resize(verts.size() - 1);
			for (size_t skip = 0; skip < verts.size(); ++skip) {
				size_t k = 0;
				for (size_t t = 0; t < verts.size(); ++t)
					if (t != skip) buf[k++] = verts[t];
				auto idx = K.index_of(buf);
				col.push_back(view.pos_of_index[*idx]);
			}
			std::sort(col.begin(), col.end());
			boundary[j] = std::move(col);
		}

		std::vector<uint32_t> pivot_owner(m, none);
		std::vector<detail::col_t> reduced(m);
		std::vector<detail::col_t> basis(m);
		for (uint32_t j = 0; j < m; ++j) {
			detail::col_t col = boundary[j];
			basis[j] = {j};
			while (!col.empty()) {
				uint32_t owner = pivot_owner[col.back()];
				if (owner == none) break;
				detail::xor_column(col, reduced[owner], scratch);
				detail::xor_column(basis[j], basis[owner], scratch);
			}
			if (!col.empty()) {
				pivot_owner[col.back()] = j;
				emit_pair(col.back(), j, col, true);
				reduced[j] = std::move(col);
			}
		}
		for (uint32_t j = 0; j < m; ++j)
			if (reduced[j].empty() && pivot_owner[j] == none)
				emit_essential(j, basis[j], true);
	} else {
		// anti-transpose: columns are simplices in reverse order, rows are
		// cofacets in reverse order; the resulting pairing coincides with
		// the boundary-matrix pairing
		std::vector<detail::col_t> cofacets(m);
		std::vector<vertex_t> buf;
		for (uint32_t j = 0; j < m; ++j) {
			const Simplex& s = K.simplex_at(view.order[j]);
			const auto& verts = s.vertices();
			if (verts.size() < 2) continue;
			buf.resize(verts.size() - 1);
			for (size_t skip = 0; skip < verts.size(); ++skip) {
				size_t k = 0;
				for (size_t t = 0; t < verts.size(); ++t)
					if (t != skip) buf[k++] = verts[t];
				auto idx = K.index_of(buf);
				cofacets[view.pos_of_index[*idx]].push_back(
				    static_cast<uint32_t>(m - 1) - j);
			}
		}
		std::vector<uint32_t> pivot_owner(m, none);
		std::vector<detail::col_t> reduced(m);
		std::vector<bool> in_pair(m, false);
		for (uint32_t jj = 0; jj < m; ++jj) {
			uint32_t orig = static_cast<uint32_t>(m - 1) - jj; // forward position
			detail::col_t col = std::move(cofacets[orig]);
			std::sort(col.begin(), col.end());
			while (!col.empty()) {
				uint32_t owner = pivot_owner[col.back()];
				if (owner == none) break;
				detail::xor_column(col, reduced[owner], scratch);
			}
			if (!col.empty()) {
				uint32_t piv = col.back();
				pivot_owner[piv] = jj;
				// column jj is the creator, pivot row is the killer
				uint32_t creator_pos = orig;
				uint32_t killer_pos = static_cast<uint32_t>(m - 1) - piv;
				in_pair[creator_pos] = true;
				in_pair[killer_pos] = true;
				emit_pair(creator_pos, killer_pos, {}, false);
				reduced[jj] = std::move(col);
			}
		}
		for (uint32_t p = 0; p < m; ++p)
			if (!in_pair[p]) emit_essential(p, {}, false);
	}

	for (auto& d : diagrams) canonicalize(d);
	return diagrams;
}

} // namespace phstab
