#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phstab {

using vertex_t = int32_t;
using value_t = double;

// Abstract simplex: a non-empty, strictly increasing list of vertex ids.
class Simplex {
public:
	Simplex() = default;

	explicit Simplex(std::vector<vertex_t> verts) : verts_(std::move(verts)) {
		if (verts_.empty())
			throw std::invalid_argument("simplex must have at least one vertex");
		std::sort(verts_.begin(), verts_.end());
		if (verts_.front() < 0)
			throw std::invalid_argument("vertex ids must be non-negative");
		if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
			throw std::invalid_argument("simplex has a repeated vertex");
	}

	Simplex(std::initializer_list<vertex_t> verts)
	    : Simplex(std::vector<vertex_t>(verts)) {}

	static Simplex vertex(vertex_t v) { return Simplex({v}); }
	static Simplex edge(vertex_t a, vertex_t b) { return Simplex({a, b}); }

	int dimension() const { return static_cast<int>(verts_.size()) - 1; }
	const std::vector<vertex_t>& vertices() const { return verts_; }
	size_t vertex_count() const { return verts_.size(); }
	vertex_t operator[](size_t i) const { return verts_[i]; }

	// codimension-1 faces (empty for a vertex)
	std::vector<Simplex> facets() const {
		std::vector<Simplex> out;
		if (verts_.size() < 2) return out;
		out.reserve(verts_.size());
		for (size_t skip = 0; skip < verts_.size(); ++skip) {
			std::vector<vertex_t> f;
			f.reserve(verts_.size() - 1);
			for (size_t i = 0; i < verts_.size(); ++i)
				if (i != skip) f.push_back(verts_[i]);
			out.push_back(Simplex(std::move(f)));
		}
		return out;
	}

	// every non-empty proper subset
	std::vector<Simplex> proper_faces() const {
		std::vector<Simplex> out;
		const size_t n = verts_.size();
		if (n < 2) return out;
		for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
			std::vector<vertex_t> f;
			for (size_t i = 0; i < n; ++i)
				if (mask & (1u << i)) f.push_back(verts_[i]);
			out.push_back(Simplex(std::move(f)));
		}
		return out;
	}

	bool operator==(const Simplex& o) const { return verts_ == o.verts_; }
	bool operator!=(const Simplex& o) const { return verts_ != o.verts_; }
	bool operator<(const Simplex& o) const {
		return std::lexicographical_compare(verts_.begin(), verts_.end(),
		                                    o.verts_.begin(), o.verts_.end());
	}

	std::string to_string() const {
		std::string s = "{";
		for (size_t i = 0; i < verts_.size(); ++i) {
			if (i) s += ",";
			s += std::to_string(verts_[i]);
		}
		s += "}";
		return s;
	}

private:
	std::vector<vertex_t> verts_;
};

inline uint64_t hash_vertex_span(std::span<const vertex_t> v) {
	uint64_t h = 0xcbf29ce484222325ULL;
	for (vertex_t x : v) {
		h ^= static_cast<uint64_t>(static_cast<uint32_t>(x));
		h *= 0x100000001b3ULL;
	}
	return h;
}

struct SimplexHash {
	using is_transparent = void;
	size_t operator()(const Simplex& s) const {
		return static_cast<size_t>(hash_vertex_span(s.vertices()));
	}
	size_t operator()(std::span<const vertex_t> v) const {
		return static_cast<size_t>(hash_vertex_span(v));
	}
};

struct SimplexEq {
	using is_transparent = void;
	static std::span<const vertex_t> as_span(const Simplex& s) {
		return s.vertices();
	}
	static std::span<const vertex_t> as_span(std::span<const vertex_t> v) {
		return v;
	}
	template <class A, class B>
	bool operator()(const A& a, const B& b) const {
		auto x = as_span(a), y = as_span(b);
		return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
	}
};

} // namespace phstab
