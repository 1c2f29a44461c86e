#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinor/abelian.hpp"
#include "spinor/blocks.hpp"
#include "spinor/gamma.hpp"

namespace spinor {

/// Supplied class-field data for one place: the Artin image of a Frobenius,
/// the local capacity f_p (matrix rank of the completion), and, when the
/// order is not maximal there, the local GEO type.
struct PlaceData {
    enum class Kind { finite, real };

    std::string id;
    Kind kind = Kind::finite;
    AbelianGroup::Element frobenius;
    std::int64_t capacity = 1;                 // f_p, divides the degree
    std::optional<GammaClass> geo_type;        // rank == capacity, totally positive
};

/// Class-group presentation of a genus of generalized Eichler orders:
/// a finite abelian group with per-place Frobenius data.  Unlisted places
/// are unramified and locally maximal.
struct GenusInput {
    std::int64_t degree = 2;                   // n
    AbelianGroup group = AbelianGroup::trivial();
    std::vector<PlaceData> places;
    std::vector<bool> arch_unramified;         // archimedean ramification flags

    void validate() const;
    const PlaceData& place(const std::string& id) const;
};

/// Either n > 2 or some archimedean place is unramified.
bool eichler_condition(std::int64_t degree, const std::vector<bool>& arch_unramified);
bool eichler_condition(const GenusInput& input);

/// Galois group of the spinor class field of maximal orders: the quotient of
/// the supplied group by nth powers, by Frob^capacity at listed finite
/// places, and by Frob at real places of full capacity.
Quotient sigma0(const GenusInput& input);

/// Galois group of the spinor class field of the genus itself: sigma0 cut
/// further by Frob^gcd(total distance, capacity) at every place whose local
/// type is symmetric.
Quotient sigma(const GenusInput& input);

std::uint64_t index_sigma0_over_sigma(const GenusInput& input);
std::uint64_t spinor_genera_count(const GenusInput& input);

/// Distance map: the image of prod Frob_p^{v_p} in sigma(input).
AbelianGroup::Element distance(const GenusInput& input,
                               const std::map<std::string, std::int64_t>& valuations);

/// Whether two maximal-order positions cut out orders of the same spinor
/// genus; defined only for locally symmetric inputs.
bool same_spinor_genus(const GenusInput& input,
                       const std::map<std::string, std::int64_t>& position1,
                       const std::map<std::string, std::int64_t>& position2);

struct LabeledVertex {
    std::vector<std::vector<std::int64_t>> coordinates; // bracket vector per labeled place
    AbelianGroup::Element label;                        // element of sigma0(input).group()
    bool extreme = false;
};

struct LabeledComplex {
    std::vector<std::string> place_ids;
    std::vector<std::vector<std::int64_t>> shape; // grid bounds per labeled place
    std::vector<LabeledVertex> vertices;          // lexicographic order
    Quotient projection;                          // sigma0 of the input
};

/// Labels the product of the local blocks: label(v) = base + sum over places
/// of w_p(c) * Frob_p in sigma0, where w_p(c) is the sum of the canonical
/// lift of the block coordinate.  With no explicit list, every place holding
/// a geo_type is labeled.
LabeledComplex label_complex(const GenusInput& input,
                             const AbelianGroup::Element& base_label,
                             const std::optional<std::vector<std::string>>& place_ids = std::nullopt);

/// Lower and upper representation fields of a distance set Phi, as quotients
/// of sigma0's group; they agree exactly when the representation field is
/// defined.
struct RepresentationFields {
    Quotient lower; // by the subgroup generated by Phi
    Quotient upper; // by the stabilizer { g : g + Phi == Phi }
    bool defined = false;
};

RepresentationFields representation_sets(const Quotient& sigma0_quotient,
                                         const std::vector<AbelianGroup::Element>& phi);

/// Image of per-place residue sets under the Frobenius map, in sigma0.
std::vector<AbelianGroup::Element> global_relative_image(
    const GenusInput& input, const std::map<std::string, CosetSet>& per_place_cosets);

} // namespace spinor
