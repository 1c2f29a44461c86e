#include "spinor/classfield.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spinor {

void GenusInput::validate() const {
    if (degree < 2) throw ParseError("degree must be at least 2");
    std::set<std::string> ids;
    for (const auto& pl : places) {
        if (!ids.insert(pl.id).second) {
            throw ParseError("duplicate place id '" + pl.id + "'");
        }
        if (pl.capacity < 1 || degree % pl.capacity != 0) {
            throw ParseError("capacity of place '" + pl.id + "' must divide the degree");
        }
        if (pl.frobenius.size() != group.tuple_size()) {
            throw ElementOutOfRange("frobenius tuple of place '" + pl.id +
                                    "' does not match the group");
        }
        if (pl.geo_type) {
            if (pl.geo_type->rank() != pl.capacity) {
                throw InvalidGeoType("geo type of place '" + pl.id +
                                     "' must have rank equal to the capacity");
            }
            if (!pl.geo_type->is_totally_positive()) {
                throw InvalidGeoType("geo type of place '" + pl.id +
                                     "' must be totally positive");
            }
            if (pl.kind != PlaceData::Kind::finite) {
                throw InvalidGeoType("geo types belong to finite places");
            }
        }
    }
}

const PlaceData& GenusInput::place(const std::string& id) const {
    for (const auto& pl : places) {
        if (pl.id == id) return pl;
    }
    throw UnknownPlace("unknown place '" + id + "'");
}

bool eichler_condition(std::int64_t degree, const std::vector<bool>& arch_unramified) {
    if (degree > 2) return true;
    return std::any_of(arch_unramified.begin(), arch_unramified.end(),
                       [](bool unramified) { return unramified; });
}

bool eichler_condition(const GenusInput& input) {
    return eichler_condition(input.degree, input.arch_unramified);
}

namespace {

std::vector<AbelianGroup::Element> sigma0_killers(const GenusInput& input) {
    std::vector<AbelianGroup::Element> killers;
    const std::size_t k = input.group.tuple_size();
    // nth powers of the generators
    for (std::size_t i = 0; i < k; ++i) {
        AbelianGroup::Element e(k, 0);
        e[i] = 1;
        killers.push_back(input.group.scale(input.degree, e));
    }
    for (const auto& pl : input.places) {
        if (pl.kind == PlaceData::Kind::finite) {
            killers.push_back(input.group.scale(pl.capacity, pl.frobenius));
        } else if (pl.capacity == input.degree) {
            // splits at every real place of full capacity
            killers.push_back(input.group.reduce(pl.frobenius));
        }
    }
    return killers;
}

} // namespace

Quotient sigma0(const GenusInput& input) {
    input.validate();
    return Quotient(input.group, sigma0_killers(input));
}

Quotient sigma(const GenusInput& input) {
    input.validate();
    auto killers = sigma0_killers(input);
    for (const auto& pl : input.places) {
        if (!pl.geo_type || !pl.geo_type->is_symmetric()) continue;
        const std::int64_t rho = pl.geo_type->total_distance();
        const std::int64_t g = std::gcd(rho, pl.capacity); // gcd(0, f) == f
        killers.push_back(input.group.scale(g, pl.frobenius));
    }
    return Quotient(input.group, std::move(killers));
}

std::uint64_t index_sigma0_over_sigma(const GenusInput& input) {
    return sigma0(input).group().order() / sigma(input).group().order();
}

std::uint64_t spinor_genera_count(const GenusInput& input) {
    return sigma(input).group().order();
}

namespace {

AbelianGroup::Element frobenius_combination(const GenusInput& input,
                                            const std::map<std::string, std::int64_t>& valuations) {
    AbelianGroup::Element acc = input.group.identity();
    for (const auto& [id, v] : valuations) {
        const PlaceData& pl = input.place(id);
        acc = input.group.add(acc, input.group.scale(v, pl.frobenius));
    }
    return acc;
}

} // namespace

AbelianGroup::Element distance(const GenusInput& input,
                               const std::map<std::string, std::int64_t>& valuations) {
    input.validate();
    return sigma(input).project(frobenius_combination(input, valuations));
}

bool same_spinor_genus(const GenusInput& input,
                       const std::map<std::string, std::int64_t>& position1,
                       const std::map<std::string, std::int64_t>& position2) {
    input.validate();
    for (const auto& pl : input.places) {
        if (pl.geo_type && !pl.geo_type->is_symmetric()) {
            throw NotLocallySymmetric("place '" + pl.id + "' carries a non-symmetric type");
        }
    }
    std::map<std::string, std::int64_t> diff;
    for (const auto& [id, v] : position2) diff[id] += v;
    for (const auto& [id, v] : position1) diff[id] -= v;
    const Quotient q = sigma(input);
    const auto image = q.project(frobenius_combination(input, diff));
    return q.group().is_identity(image);
}

LabeledComplex label_complex(const GenusInput& input,
                             const AbelianGroup::Element& base_label,
                             const std::optional<std::vector<std::string>>& place_ids) {
    input.validate();
    LabeledComplex complex{{}, {}, {}, sigma0(input)};

    std::vector<const PlaceData*> labeled;
    if (place_ids) {
        for (const auto& id : *place_ids) {
            const PlaceData& pl = input.place(id);
            if (!pl.geo_type) {
                throw MissingGeoType("place '" + id + "' has no geo type to label");
            }
            labeled.push_back(&pl);
        }
    } else {
        for (const auto& pl : input.places) {
            if (pl.geo_type) labeled.push_back(&pl);
        }
    }

    const AbelianGroup::Element base = complex.projection.group().reduce(base_label);
    for (const auto* pl : labeled) {
        complex.place_ids.push_back(pl->id);
        complex.shape.push_back(pl->geo_type->brackets());
    }

    // odometer over the product of the local grids, last factor fastest
    std::vector<std::vector<std::int64_t>> coords;
    coords.reserve(labeled.size());
    for (const auto* pl : labeled) {
        coords.emplace_back(pl->geo_type->brackets().size(), 0);
    }
    for (;;) {
        AbelianGroup::Element exponent_sum = input.group.identity();
        bool extreme = true;
        for (std::size_t f = 0; f < labeled.size(); ++f) {
            const auto& bounds = labeled[f]->geo_type->brackets();
            const GammaClass vertex(labeled[f]->geo_type->rank(), coords[f]);
            const auto lift = vertex.lift();
            const std::int64_t w = std::accumulate(lift.begin(), lift.end(), std::int64_t{0});
            exponent_sum = input.group.add(exponent_sum,
                                           input.group.scale(w, labeled[f]->frobenius));
            const bool at_zero = std::all_of(coords[f].begin(), coords[f].end(),
                                             [](std::int64_t v) { return v == 0; });
            extreme = extreme && (at_zero || coords[f] == bounds);
        }
        LabeledVertex v;
        v.coordinates = coords;
        v.label = complex.projection.group().add(base, complex.projection.project(exponent_sum));
        v.extreme = extreme;
        complex.vertices.push_back(std::move(v));

        // advance
        std::ptrdiff_t f = static_cast<std::ptrdiff_t>(coords.size()) - 1;
        bool done = coords.empty();
        while (f >= 0) {
            auto& c = coords[static_cast<std::size_t>(f)];
            const auto& bounds = labeled[static_cast<std::size_t>(f)]->geo_type->brackets();
            std::ptrdiff_t i = static_cast<std::ptrdiff_t>(c.size()) - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == bounds[static_cast<std::size_t>(i)]) {
                c[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i >= 0) {
                ++c[static_cast<std::size_t>(i)];
                break;
            }
            --f;
            if (f < 0) done = true;
        }
        if (done) break;
    }
    return complex;
}

RepresentationFields representation_sets(const Quotient& sigma0_quotient,
                                         const std::vector<AbelianGroup::Element>& phi) {
    if (phi.empty()) throw EmptySet("representation sets need a nonempty distance set");
    const AbelianGroup& g = sigma0_quotient.group();

    std::set<AbelianGroup::Element> phi_set;
    for (const auto& e : phi) phi_set.insert(g.reduce(e));

    std::vector<AbelianGroup::Element> phi_gens(phi_set.begin(), phi_set.end());
    Quotient lower = quotient_by(g, phi_gens);

    std::vector<AbelianGroup::Element> stabilizer;
    for (const auto& candidate : g.elements()) {
        bool stable = true;
        for (const auto& e : phi_set) {
            if (phi_set.find(g.add(candidate, e)) == phi_set.end()) {
                stable = false;
                break;
            }
        }
        if (stable) stabilizer.push_back(candidate);
    }
    Quotient upper = quotient_by(g, stabilizer);

    const bool defined = lower.group().order() == upper.group().order();
    return RepresentationFields{std::move(lower), std::move(upper), defined};
}

std::vector<AbelianGroup::Element> global_relative_image(
    const GenusInput& input, const std::map<std::string, CosetSet>& per_place_cosets) {
    input.validate();
    const Quotient q = sigma0(input);

    std::vector<const PlaceData*> places;
    std::vector<const CosetSet*> cosets;
    for (const auto& [id, coset] : per_place_cosets) {
        const PlaceData& pl = input.place(id);
        if (coset.modulus != pl.capacity) {
            throw ModulusMismatch("coset modulus at '" + id + "' differs from the capacity");
        }
        if (coset.residues.empty()) {
            throw EmptySet("empty residue set at '" + id + "'");
        }
        places.push_back(&pl);
        cosets.push_back(&coset);
    }

    std::set<AbelianGroup::Element> image;
    std::vector<std::size_t> pick(places.size(), 0);
    for (;;) {
        AbelianGroup::Element acc = input.group.identity();
        for (std::size_t i = 0; i < places.size(); ++i) {
            acc = input.group.add(acc,
                                  input.group.scale(cosets[i]->residues[pick[i]],
                                                    places[i]->frobenius));
        }
        image.insert(q.project(acc));
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(pick.size()) - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 == cosets[static_cast<std::size_t>(i)]->residues.size()) {
            pick[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
    }
    return {image.begin(), image.end()};
}

} // namespace spinor
