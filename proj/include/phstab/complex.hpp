#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "phstab/errors.hpp"
#include "phstab/simplex.hpp"

namespace phstab {

struct ClosureViolation {
	Simplex simplex; // stored simplex
	Simplex face;    // missing face of it
};

struct MonotonicityViolation {
	Simplex face;    // stored face tau
	Simplex simplex; // stored cofacet sigma with f(tau) > f(sigma)
	value_t face_value;
	value_t simplex_value;
};

struct ValidationReport {
	std::vector<ClosureViolation> missing_faces;
	std::vector<MonotonicityViolation> monotonicity;
	bool ok() const { return missing_faces.empty() && monotonicity.empty(); }
};

// Finite filtered abstract simplicial complex. Simplices are stored once;
// re-adding an existing simplex replaces its filtration value. Intended use
// is build, validate, then share immutably.
class FilteredComplex {
public:
	FilteredComplex() = default;

	void reserve(size_t n) {
		simplices_.reserve(n);
		values_.reserve(n);
		index_.reserve(n);
	}

	size_t add_simplex(Simplex s, value_t value) {
		if (!std::isfinite(value))
			throw std::invalid_argument("filtration value must be finite");
		valid_cache_.reset();
		auto it = index_.find(s);
		if (it != index_.end()) {
			values_[it->second] = value;
			return it->second;
		}
		size_t id = simplices_.size();
		simplices_.push_back(std::move(s));
		values_.push_back(value);
		index_.emplace(simplices_.back(), id);
		return id;
	}

	size_t add_simplex(std::vector<vertex_t> verts, value_t value) {
		return add_simplex(Simplex(std::move(verts)), value);
	}

	size_t size() const { return simplices_.size(); }
	bool empty() const { return simplices_.empty(); }
	const Simplex& simplex_at(size_t i) const { return simplices_[i]; }
	value_t value_at(size_t i) const { return values_[i]; }
	const std::vector<Simplex>& simplices() const { return simplices_; }
	const std::vector<value_t>& values() const { return values_; }

	std::optional<size_t> index_of(std::span<const vertex_t> verts) const {
		auto it = index_.find(verts);
		if (it == index_.end()) return std::nullopt;
		return it->second;
	}
	bool contains(std::span<const vertex_t> verts) const {
		return index_.find(verts) != index_.end();
	}
	std::optional<value_t> value_of(std::span<const vertex_t> verts) const {
		auto it = index_.find(verts);
		if (it == index_.end()) return std::nullopt;
		return values_[it->second];
	}

	size_t vertex_count() const {
		size_t n = 0;
		for (const auto& s : simplices_)
			if (s.dimension() == 0) ++n;
		return n;
	}

	int max_dimension() const {
		int d = -1;
		for (const auto& s : simplices_) d = std::max(d, s.dimension());
		return d;
	}

	// Full diagnostic pass: reports every missing face (over all non-empty
	// proper subsets of every stored simplex) and every value inversion.
	ValidationReport validate() const {
		ValidationReport rep;
		for (size_t i = 0; i < simplices_.size(); ++i) {
			const Simplex& s = simplices_[i];
			for (const Simplex& f : s.proper_faces()) {
				auto it = index_.find(f);
				if (it == index_.end())
					rep.missing_faces.push_back({s, f});
				else if (values_[it->second] > values_[i])
					rep.monotonicity.push_back(
					    {f, s, values_[it->second], values_[i]});
			}
		}
		valid_cache_ = rep.ok();
		return rep;
	}

	// Same verdict as validate().ok() but checks only codimension-1 faces
	// (equivalent by induction over dimension) and stops at the first
	// problem. Result is cached until the complex is mutated.
	bool is_valid() const {
		if (valid_cache_) return *valid_cache_;
		bool ok = true;
		std::vector<vertex_t> buf;
		for (size_t i = 0; i < simplices_.size() && ok; ++i) {
			const Simplex& s = simplices_[i];
			const auto& verts = s.vertices();
			if (verts.size() < 2) continue;
			buf.resize(verts.size() - 1);
			for (size_t skip = 0; skip < verts.size() && ok; ++skip) {
				size_t k = 0;
				for (size_t j = 0; j < verts.size(); ++j)
					if (j != skip) buf[k++] = verts[j];
				auto it = index_.find(std::span<const vertex_t>(buf));
				if (it == index_.end() || values_[it->second] > values_[i])
					ok = false;
			}
		}
		valid_cache_ = ok;
		return ok;
	}

	void ensure_valid() const {
		if (!is_valid())
			throw validation_error("filtered complex fails closure or monotonicity");
	}

	// Indices of all simplices ordered by (value, dimension, vertex list).
	// Every prefix of this order spans a subcomplex.
	std::vector<size_t> sorted_filtration() const {
		ensure_valid();
		std::vector<size_t> order(simplices_.size());
		std::iota(order.begin(), order.end(), size_t{0});
		std::sort(order.begin(), order.end(), [this](size_t a, size_t b) {
			if (values_[a] != values_[b]) return values_[a] < values_[b];
			const Simplex& sa = simplices_[a];
			const Simplex& sb = simplices_[b];
			if (sa.dimension() != sb.dimension())
				return sa.dimension() < sb.dimension();
			return sa < sb;
		});
		return order;
	}

private:
	std::vector<Simplex> simplices_;
	std::vector<value_t> values_;
	std::unordered_map<Simplex, size_t, SimplexHash, SimplexEq> index_;
	mutable std::optional<bool> valid_cache_;
};

} // namespace phstab
