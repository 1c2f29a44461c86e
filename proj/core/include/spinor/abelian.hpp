#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinor/errors.hpp"
#include "spinor/int_snf.hpp"

namespace spinor {

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k,
/// elements held as integer tuples mod d_i.
class AbelianGroup {
public:
    using Element = std::vector<std::int64_t>;

    explicit AbelianGroup(std::vector<std::int64_t> invariant_factors);
    static AbelianGroup trivial() { return AbelianGroup({}); }

    std::size_t tuple_size() const noexcept { return factors_.size(); }
    const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
    std::uint64_t order() const;

    Element identity() const { return Element(factors_.size(), 0); }
    bool is_identity(const Element& x) const;
    Element reduce(Element x) const;
    Element add(const Element& x, const Element& y) const;
    Element negate(const Element& x) const;
    Element subtract(const Element& x, const Element& y) const;
    Element scale(std::int64_t k, const Element& x) const;
    std::uint64_t element_order(const Element& x) const;

    /// All elements in lexicographic tuple order; throws when the order
    /// exceeds the limit.
    std::vector<Element> elements(std::uint64_t limit = 1u << 20) const;

    /// Order of the subgroup generated by the given elements (closure walk).
    std::uint64_t subgroup_order(std::span<const Element> generators,
                                 std::uint64_t limit = 1u << 20) const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    void check_tuple(const Element& x) const;
    std::vector<std::int64_t> factors_;
};

/// Surjection from a parent group onto its quotient by a set of elements,
/// with the projection realized through an integer Smith normal form.
class Quotient {
public:
    Quotient(AbelianGroup parent, std::vector<AbelianGroup::Element> kernel_generators);

    const AbelianGroup& parent() const noexcept { return parent_; }
    const std::vector<AbelianGroup::Element>& kernel_generators() const noexcept {
        return kernel_generators_;
    }
    /// The quotient in canonical invariant-factor form (factors 1 dropped).
    const AbelianGroup& group() const noexcept { return group_; }

    AbelianGroup::Element project(const AbelianGroup::Element& x) const;

private:
    AbelianGroup parent_;
    std::vector<AbelianGroup::Element> kernel_generators_;
    AbelianGroup group_;
    IntMatrix transform_;                  // left SNF transform of the relation matrix
    std::vector<std::int64_t> full_factors_;
    std::vector<std::size_t> kept_;
};

Quotient quotient_by(const AbelianGroup& g, std::span<const AbelianGroup::Element> generators);

} // namespace spinor
