#pragma once

#include <string>
#include <vector>

#include "spinor/blocks.hpp"
#include "spinor/classfield.hpp"

namespace spinor {

/// Letter shown for a group element: elements are enumerated in
/// lexicographic tuple order and lettered A, B, C, ...  (boxed indices
/// past 'Z').
std::string element_letter(const AbelianGroup& group, const AbelianGroup::Element& element);

/// Inverse of element_letter; throws ParseError for an unknown letter.
AbelianGroup::Element element_for_letter(const AbelianGroup& group, const std::string& letter);

/// Draws a block in the plane (ranks 2 and 3 only; throws RankTooLarge
/// otherwise).  Grid blocks render as boxed grids with diagonals, the style
/// used for apartment pictures; commutative blocks render as a membership
/// window of half-width `window` with ellipsis markers for the free
/// directions.
std::string render_block_ascii(const Block& block, std::int64_t window = 3);

/// One picture per placement: the host with the placement span marked '*'
/// and the image of the base vertex marked 'A'.
std::string render_placements_ascii(const Block& host, const std::vector<Placement>& placements,
                                    std::int64_t window = 3);

/// Letter grid of a labeled complex; one slice per value of the third axis
/// when the flattened coordinates have three dimensions.
std::string render_labeled_ascii(const LabeledComplex& complex);

std::string render_block_svg(const Block& block, std::int64_t window = 3);
std::string render_labeled_svg(const LabeledComplex& complex);

} // namespace spinor
