#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "phstab/errors.hpp"

namespace phstab {
namespace detail {

inline double orient2d(const std::array<double, 2>& a,
                       const std::array<double, 2>& b,
                       const std::array<double, 2>& c) {
	return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// > 0 iff d lies strictly inside the circumcircle of ccw triangle (a,b,c)
inline double incircle(const std::array<double, 2>& a,
                       const std::array<double, 2>& b,
                       const std::array<double, 2>& c,
                       const std::array<double, 2>& d) {
	double adx = a[0] - d[0], ady = a[1] - d[1];
	double bdx = b[0] - d[0], bdy = b[1] - d[1];
	double cdx = c[0] - d[0], cdy = c[1] - d[1];
	double ad = adx * adx + ady * ady;
	double bd = bdx * bdx + bdy * bdy;
	double cd = cdx * cdx + cdy * cdy;
	return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
	       ad * (bdx * cdy - bdy * cdx);
}

inline uint64_t morton2(uint32_t x, uint32_t y) {
	auto spread = [](uint64_t v) {
		v &= 0xffffffffULL;
		v = (v | (v << 16)) & 0x0000ffff0000ffffULL;
		v = (v | (v << 8)) & 0x00ff00ff00ff00ffULL;
		v = (v | (v << 4)) & 0x0f0f0f0f0f0f0f0fULL;
		v = (v | (v << 2)) & 0x3333333333333333ULL;
		v = (v | (v << 1)) & 0x5555555555555555ULL;
		return v;
	};
	return spread(x) | (spread(y) << 1);
}

// Incremental Bowyer-Watson with a walking point locator. Ties in the
// incircle predicate are resolved strictly (on-circle counts as outside),
// so cocircular configurations keep a diagonal determined by insertion
// order; callers that need a certified output must verify it afterwards.
class Delaunay {
public:
	// returns ccw triangles as index triples into pts
	static std::vector<std::array<int, 3>> triangulate(
	    const std::vector<std::array<double, 2>>& input) {
		if (input.size() < 3)
			throw degeneracy_error("need at least 3 points to triangulate");
		Delaunay d(input);
		return d.run();
	}

private:
	struct Tri {
		int v[3];   // ccw vertices
		int adj[3]; // adj[i] faces the edge opposite v[i]
		bool alive = true;
	};

	explicit Delaunay(const std::vector<std::array<double, 2>>& input)
	    : pts_(input), n_(input.size()) {}

	std::vector<std::array<double, 2>> pts_;
	size_t n_;
	std::vector<Tri> tris_;
	std::vector<uint32_t> mark_; // cavity epoch per triangle
	uint32_t epoch_ = 0;
	int last_ = 0;

	std::vector<std::array<int, 3>> run() {
		double lo[2] = {pts_[0][0], pts_[0][1]};
		double hi[2] = {pts_[0][0], pts_[0][1]};
		for (const auto& p : pts_) {
			lo[0] = std::min(lo[0], p[0]);
			lo[1] = std::min(lo[1], p[1]);
			hi[0] = std::max(hi[0], p[0]);
			hi[1] = std::max(hi[1], p[1]);
		}
		double cx = 0.5 * (lo[0] + hi[0]);
		double cy = 0.5 * (lo[1] + hi[1]);
		double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1.0});
		double r = 64.0 * span;
		// super-triangle vertices get ids n, n+1, n+2
		pts_.push_back({cx - 2.0 * r, cy - r});
		pts_.push_back({cx + 2.0 * r, cy - r});
		pts_.push_back({cx, cy + 2.0 * r});
		Tri root;
		root.v[0] = static_cast<int>(n_);
		root.v[1] = static_cast<int>(n_) + 1;
		root.v[2] = static_cast<int>(n_) + 2;
		root.adj[0] = root.adj[1] = root.adj[2] = -1;
		tris_.push_back(root);
		mark_.push_back(0);

		std::vector<int> ins(n_);
		std::iota(ins.begin(), ins.end(), 0);
		std::vector<uint64_t> code(n_);
		double sx = 65535.0 / std::max(hi[0] - lo[0], 1e-300);
		double sy = 65535.0 / std::max(hi[1] - lo[1], 1e-300);
		for (size_t i = 0; i < n_; ++i) {
			auto qx = static_cast<uint32_t>((pts_[i][0] - lo[0]) * sx);
			auto qy = static_cast<uint32_t>((pts_[i][1] - lo[1]) * sy);
			code[i] = morton2(qx, qy);
		}
		std::sort(ins.begin(), ins.end(),
		          [&](int a, int b) { return code[a] < code[b]; });

		for (int p : ins) insert(p);

		std::vector<std::array<int, 3>> out;
		for (const Tri& t : tris_) {
			if (!t.alive) continue;
			if (t.v[0] >= static_cast<int>(n_) || t.v[1] >= static_cast<int>(n_) ||
			    t.v[2] >= static_cast<int>(n_))
				continue;
			out.push_back({t.v[0], t.v[1], t.v[2]});
		}
		if (out.empty())
			throw degeneracy_error("degenerate input: no triangle survives");
		return out;
	}

	int locate(int p) const {
		int t = last_;
		size_t steps = 0;
		const size_t cap = 4 * tris_.size() + 64;
		while (steps++ < cap) {
			const Tri& tr = tris_[t];
			int next = -1;
			for (int i = 0; i < 3; ++i) {
				const auto& a = pts_[tr.v[(i + 1) % 3]];
				const auto& b = pts_[tr.v[(i + 2) % 3]];
				if (orient2d(a, b, pts_[p]) < 0) {
					next = tr.adj[i];
					break;
				}
			}
			if (next == -1) return t;
			t = next;
		}
		// walking failed (degenerate geometry); fall back to a scan
		for (size_t i = 0; i < tris_.size(); ++i) {
			const Tri& tr = tris_[i];
			if (!tr.alive) continue;
			bool inside = true;
			for (int k = 0; k < 3 && inside; ++k) {
				const auto& a = pts_[tr.v[(k + 1) % 3]];
				const auto& b = pts_[tr.v[(k + 2) % 3]];
				if (orient2d(a, b, pts_[p]) < 0) inside = false;
			}
			if (inside) return static_cast<int>(i);
		}
		throw degeneracy_error("point location failed");
	}

	void insert(int p) {
		int t0 = locate(p);
		for (int k = 0; k < 3; ++k) {
			const auto& q = pts_[tris_[t0].v[k]];
			if (q[0] == pts_[p][0] && q[1] == pts_[p][1])
				throw degeneracy_error("duplicate point in triangulation input");
		}

		// grow the cavity of triangles whose circumcircle contains p
		++epoch_;
		std::vector<int> bad;
		std::vector<int> stack{t0};
		mark_[t0] = epoch_;
		while (!stack.empty()) {
			int t = stack.back();
			stack.pop_back();
			bad.push_back(t);
			for (int i = 0; i < 3; ++i) {
				int nb = tris_[t].adj[i];
				if (nb == -1 || mark_[nb] == epoch_ || !tris_[nb].alive) continue;
				const Tri& tn = tris_[nb];
				if (incircle(pts_[tn.v[0]], pts_[tn.v[1]], pts_[tn.v[2]],
				             pts_[p]) > 0) {
					mark_[nb] = epoch_;
					stack.push_back(nb);
				}
			}
		}

		struct Rim {
			int a, b;  // ccw boundary edge
			int outer; // surviving neighbor across it (-1 at the hull)
		};
		std::vector<Rim> rim;
		for (int t : bad) {
			for (int i = 0; i < 3; ++i) {
				int nb = tris_[t].adj[i];
				if (nb != -1 && mark_[nb] == epoch_) continue;
				rim.push_back({tris_[t].v[(i + 1) % 3], tris_[t].v[(i + 2) % 3], nb});
			}
		}
		for (int t : bad) tris_[t].alive = false;

		// fan the rim around p; edges (a,b) stay ccw so (a,b,p) is ccw
		std::vector<int> tri_of_start(rim.size());
		std::vector<int> created;
		created.reserve(rim.size());
		for (const Rim& e : rim) {
			Tri nt;
			nt.v[0] = e.a;
			nt.v[1] = e.b;
			nt.v[2] = p;
			nt.adj[0] = nt.adj[1] = -1;
			nt.adj[2] = e.outer;
			int ti = alloc(nt);
			created.push_back(ti);
			if (e.outer != -1) {
				Tri& out = tris_[e.outer];
				for (int k = 0; k < 3; ++k)
					if (out.adj[k] != -1 && mark_[out.adj[k]] == epoch_ &&
					    !tris_[out.adj[k]].alive)
						out.adj[k] = ti;
			}
		}
		// stitch the fan: edge (b,p) of (a,b,p) meets edge (p,b) of (b,c,p)
		std::vector<std::pair<int, int>> start; // (vertex a, triangle)
		start.reserve(created.size());
		for (int ti : created) start.push_back({tris_[ti].v[0], ti});
		std::sort(start.begin(), start.end());
		auto find_start = [&](int v) {
			auto it = std::lower_bound(start.begin(), start.end(),
			                           std::make_pair(v, -1));
			return it->second;
		};
		for (int ti : created) {
			int nxt = find_start(tris_[ti].v[1]);
			tris_[ti].adj[0] = nxt;  // across edge (b,p)
			tris_[nxt].adj[1] = ti;  // across edge (p,b)
		}
		last_ = created.front();
	}

	int alloc(const Tri& t) {
		tris_.push_back(t);
		mark_.push_back(0);
		return static_cast<int>(tris_.size()) - 1;
	}
};

} // namespace detail
} // namespace phstab
