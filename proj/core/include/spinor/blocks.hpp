#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "spinor/gamma.hpp"

namespace spinor {

/// Local isomorphism class of a generalized Eichler order in the split case:
/// a totally positive vertex type.
class GeoType {
public:
    explicit GeoType(GammaClass type);
    static GeoType from_brackets(int n, std::vector<std::int64_t> b);

    int rank() const noexcept { return type_.rank(); }
    const GammaClass& type() const noexcept { return type_; }

    friend bool operator==(const GeoType& a, const GeoType& b) = default;

private:
    GammaClass type_;
};

/// Vertices of the block of a local GEO: the grid 0 <= c_i <= b_i.
class GridBlock {
public:
    explicit GridBlock(GeoType t);

    int rank() const noexcept { return bounds_.rank(); }
    const GammaClass& bounds() const noexcept { return bounds_; }
    std::uint64_t vertex_count() const;
    bool contains(const GammaClass& v) const;
    /// All vertices, lexicographically sorted by bracket vector.
    std::vector<GammaClass> vertices() const;

private:
    GammaClass bounds_;
};

GridBlock geo_block(const GeoType& t);

/// True when at most one bound is nonzero, so the block is a path.
bool is_line_type(const GeoType& t);

/// A commutative separable algebra L = prod L_i inside M_n(k), described by
/// the ramification index and inertia degree of each factor.
class CommAlgebra {
public:
    struct Component {
        int ramification; // e >= 1
        int inertia;      // f >= 1
        friend bool operator==(const Component&, const Component&) = default;
    };

    explicit CommAlgebra(std::vector<Component> components);

    int rank() const noexcept { return n_; }
    const std::vector<Component>& components() const noexcept { return components_; }

    friend bool operator==(const CommAlgebra&, const CommAlgebra&) = default;

private:
    std::vector<Component> components_;
    int n_;
};

/// Block of the maximal order of a commutative algebra: per component a
/// simplex on the valuation patterns of the ideals (1), (pi_i), ...,
/// (pi_i^{e_i-1}), plus one free integer shift per component, all read in
/// Z^n / <(1,...,1)>.
class CommBlock {
public:
    explicit CommBlock(CommAlgebra algebra);

    int rank() const noexcept { return algebra_.rank(); }
    const CommAlgebra& algebra() const noexcept { return algebra_; }

    /// Valuation pattern of the ideal (pi^j) of component `comp` on the
    /// regular-representation basis: f*j ones followed by zeros.
    std::vector<std::int64_t> simplex_pattern(std::size_t comp, int j) const;

    std::size_t free_shift_count() const { return algebra_.components().size() - 1; }

    bool contains(const GammaClass& v) const;
    /// Vertices reachable with per-component shifts within [-bound, bound],
    /// deduplicated and sorted.
    std::vector<GammaClass> vertices(std::int64_t shift_bound) const;

private:
    CommAlgebra algebra_;
};

CommBlock comm_block(const CommAlgebra& algebra);

using Block = std::variant<GridBlock, CommBlock>;

int block_rank(const Block& host);
std::vector<GammaClass> block_vertices(const Block& host, std::int64_t shift_bound);

/// An ordered pair of host vertices realizing the guest's type distance.
struct Placement {
    GammaClass c;
    GammaClass d;
    friend bool operator==(const Placement&, const Placement&) = default;
};

/// All ordered pairs (c, d) of host vertices with type distance equal to the
/// canonical lift of the guest type, sorted lexicographically.  shift_bound
/// limits the free shifts of commutative hosts and defaults to the guest's
/// total length.
std::vector<Placement> placements(const Block& host, const GeoType& guest,
                                  std::optional<std::int64_t> shift_bound = std::nullopt);

bool embeds(const Block& host, const GeoType& guest,
            std::optional<std::int64_t> shift_bound = std::nullopt);

/// Set of residues mod n; empty means no embedding exists.
struct CosetSet {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> residues; // sorted, within [0, modulus)
    bool group = false;                 // closed under subtraction

    static CosetSet from_residues(std::int64_t modulus, std::vector<std::int64_t> residues);
};

/// Residues (sum of the canonical lift of c) mod n over all placements.
CosetSet relative_spinor_image(const Block& host, const GeoType& guest,
                               std::optional<std::int64_t> shift_bound = std::nullopt);

/// Index d of the local spinor image H = O^* k^{*d}: n/2 when the type is
/// symmetric with total distance n/2 mod n (n even), and n otherwise.
std::int64_t local_spinor_image(const GeoType& t);

} // namespace spinor
