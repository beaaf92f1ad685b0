#pragma once

// Newton polyhedra conv(points) + cone(rays) in H-representation.

#include <cstddef>
#include <string>
#include <vector>

#include "toricb/exactnum.hpp"

namespace toricb {

/// The inequality normal . x >= offset, with a primitive integer normal.
struct Facet {
    IntVec normal;
    Integer offset;

    friend bool operator==(const Facet&, const Facet&) = default;
};

class NewtonPolyhedron {
public:
    std::size_t ambient_dim() const { return dim_; }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const std::vector<IntVec>& recession_rays() const { return rays_; }
    const std::vector<Facet>& facets() const { return facets_; }

private:
    friend NewtonPolyhedron newton_polyhedron(std::vector<IntVec> points, std::vector<IntVec> rays);
    std::size_t dim_ = 0;
    std::vector<IntVec> vertices_;
    std::vector<IntVec> rays_;
    std::vector<Facet> facets_;
};

/// Facets of conv(points) + cone(rays), from the homogenization cone over
/// {(1,p)} and {(0,r)} in dimension n+1. The subset scan is exponential in n,
/// intended for n <= 4 and a handful of generators. The result must be
/// full-dimensional; throws std::invalid_argument otherwise or on empty input.
NewtonPolyhedron newton_polyhedron(std::vector<IntVec> points, std::vector<IntVec> rays);

/// Standard basis e_1..e_n, the rays of the nonnegative orthant.
std::vector<IntVec> orthant_rays(std::size_t n);

enum class MembershipMode { closed, relint };

std::string to_string(MembershipMode mode);
MembershipMode parse_membership_mode(const std::string& text);

/// q in alpha*P (closed) or in its interior (relint). alpha > 0.
bool membership(const NewtonPolyhedron& p, const RatVec& q, const Rational& alpha, MembershipMode mode);

/// The dilation factor at which q reaches the boundary of alpha*P:
/// min over facets with c_k > 0 of (l_k . q) / c_k.
struct PointThreshold {
    enum class Kind { finite, infinite, undefined };
    Kind kind = Kind::undefined;
    Rational value;

    bool finite() const { return kind == Kind::finite; }
};

PointThreshold point_threshold(const NewtonPolyhedron& p, const RatVec& q);

}  // namespace toricb
