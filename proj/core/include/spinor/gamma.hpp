#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinor/errors.hpp"

namespace spinor {

/// Permutation of {1,...,n}, stored zero-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// Cycle notation on 1-based points, e.g. "(1 2)(3 4 5)" or "(12)(345)"
    /// (digits without separators are read one point per digit).
    static Permutation from_cycles(std::string_view text, int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_[static_cast<std::size_t>(i)]; }
    Permutation inverse() const;
    /// (a * b)(i) == a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) = default;

    std::string cycle_string() const;

private:
    std::vector<int> images_;
};

/// A vertex type of the standard apartment: an element of Z^n / <(1,...,1)>,
/// held as the bracket coordinates [b_1,...,b_{n-1}] of consecutive
/// differences of any lift.
class GammaClass {
public:
    GammaClass(int n, std::vector<std::int64_t> brackets);
    static GammaClass from_lift(std::span<const std::int64_t> a);

    int rank() const noexcept { return n_; }
    const std::vector<std::int64_t>& brackets() const noexcept { return b_; }

    /// Canonical lift anchored at a_1 = 0.
    std::vector<std::int64_t> lift() const;

    std::int64_t total_length() const;
    GammaClass star() const;
    GammaClass operator-() const;
    bool is_symmetric() const;
    bool is_totally_positive() const;
    /// Sum of the canonical lift, reduced to [0, n).
    std::int64_t total_distance() const;

    friend bool operator==(const GammaClass& a, const GammaClass& b) = default;
    friend std::strong_ordering operator<=>(const GammaClass& a, const GammaClass& b) = default;

private:
    int n_;
    std::vector<std::int64_t> b_;
};

std::ostream& operator<<(std::ostream& os, const GammaClass& x);

/// Position-permuting action on lifts: (sigma . a)_i = a_{sigma^{-1}(i)}.
GammaClass act(const Permutation& sigma, const GammaClass& x);

/// Full S_n-orbit, deduplicated and sorted. Throws RankTooLarge beyond the bound.
std::vector<GammaClass> orbit(const GammaClass& x, int max_rank = 8);

/// The unique totally positive class in the orbit, with one permutation
/// sending x to it.
std::pair<GammaClass, Permutation> normalize_totally_positive(const GammaClass& x);

struct TypeDistance {
    std::vector<std::int64_t> exponents; // sorted nondecreasing, minimum 0
    std::int64_t total;                  // residue mod n
};

TypeDistance type_distance(const GammaClass& from, const GammaClass& to);

} // namespace spinor
