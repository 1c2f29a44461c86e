#include "spinor/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace spinor {

AbelianGroup::AbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 1) {
            throw ElementOutOfRange("invariant factors must be positive");
        }
        if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
            throw ElementOutOfRange("invariant factors must form a divisibility chain");
        }
    }
}

std::uint64_t AbelianGroup::order() const {
    std::uint64_t n = 1;
    for (std::int64_t d : factors_) {
        const auto ud = static_cast<std::uint64_t>(d);
        if (n > UINT64_MAX / ud) throw ElementOutOfRange("group order overflows");
        n *= ud;
    }
    return n;
}

void AbelianGroup::check_tuple(const Element& x) const {
    if (x.size() != factors_.size()) {
        throw ElementOutOfRange("element tuple length does not match the group rank");
    }
}

bool AbelianGroup::is_identity(const Element& x) const {
    const Element r = reduce(x);
    return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; });
}

AbelianGroup::Element AbelianGroup::reduce(Element x) const {
    check_tuple(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] %= factors_[i];
        if (x[i] < 0) x[i] += factors_[i];
    }
    return x;
}

AbelianGroup::Element AbelianGroup::add(const Element& x, const Element& y) const {
    check_tuple(x);
    check_tuple(y);
    Element z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = (x[i] % factors_[i] + y[i] % factors_[i]) % factors_[i];
        if (z[i] < 0) z[i] += factors_[i];
    }
    return z;
}

AbelianGroup::Element AbelianGroup::negate(const Element& x) const {
    Element z = reduce(x);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = z[i] == 0 ? 0 : factors_[i] - z[i];
    return z;
}

AbelianGroup::Element AbelianGroup::subtract(const Element& x, const Element& y) const {
    return add(x, negate(y));
}

AbelianGroup::Element AbelianGroup::scale(std::int64_t k, const Element& x) const {
    check_tuple(x);
    Element z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::int64_t m = factors_[i];
        std::int64_t v = ((k % m) * (x[i] % m)) % m;
        if (v < 0) v += m;
        z[i] = v;
    }
    return z;
}

std::uint64_t AbelianGroup::element_order(const Element& x) const {
    const Element r = reduce(x);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::int64_t m = factors_[i];
        const std::int64_t g = std::gcd(r[i], m);
        ord = std::lcm(ord, static_cast<std::uint64_t>(m / g));
    }
    return ord;
}

std::vector<AbelianGroup::Element> AbelianGroup::elements(std::uint64_t limit) const {
    if (order() > limit) throw ElementOutOfRange("group too large to enumerate");
    std::vector<Element> out;
    out.reserve(order());
    Element x = identity();
    for (;;) {
        out.push_back(x);
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(x.size()) - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] + 1 == factors_[static_cast<std::size_t>(i)]) {
            x[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
    }
    return out;
}

std::uint64_t AbelianGroup::subgroup_order(std::span<const Element> generators,
                                           std::uint64_t limit) const {
    std::set<Element> closure;
    closure.insert(identity());
    std::vector<Element> frontier{identity()};
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                Element y = add(x, reduce(g));
                if (closure.insert(y).second) next.push_back(std::move(y));
            }
        }
        if (closure.size() > limit) throw ElementOutOfRange("subgroup closure too large");
        frontier = std::move(next);
    }
    return closure.size();
}

Quotient::Quotient(AbelianGroup parent, std::vector<AbelianGroup::Element> kernel_generators)
    : parent_(std::move(parent)),
      kernel_generators_(std::move(kernel_generators)),
      group_(AbelianGroup::trivial()),
      transform_(IntMatrix::identity(std::max<std::size_t>(parent_.tuple_size(), 1))) {
    const std::size_t k = parent_.tuple_size();
    for (auto& g : kernel_generators_) g = parent_.reduce(std::move(g));

    if (k == 0) {
        return; // quotient of the trivial group
    }

    // columns: diag(d_i) followed by the kernel generators
    IntMatrix relations(k, k + kernel_generators_.size());
    for (std::size_t i = 0; i < k; ++i) relations.at(i, i) = parent_.factors()[i];
    for (std::size_t j = 0; j < kernel_generators_.size(); ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            relations.at(i, k + j) = kernel_generators_[j][i];
        }
    }

    IntSnf snf = snf_integers(relations);
    transform_ = std::move(snf.left);
    full_factors_.resize(k);
    std::vector<std::int64_t> kept_factors;
    for (std::size_t i = 0; i < k; ++i) {
        full_factors_[i] = static_cast<std::int64_t>(snf.diagonal[i]);
        if (full_factors_[i] > 1) {
            kept_.push_back(i);
            kept_factors.push_back(full_factors_[i]);
        }
    }
    group_ = AbelianGroup(std::move(kept_factors));
}

AbelianGroup::Element Quotient::project(const AbelianGroup::Element& x) const {
    const AbelianGroup::Element r = parent_.reduce(x);
    const std::size_t k = parent_.tuple_size();
    AbelianGroup::Element out;
    out.reserve(kept_.size());
    for (std::size_t idx : kept_) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < k; ++j) acc += transform_.at(idx, j) * r[j];
        BigInt m = full_factors_[idx];
        BigInt v = acc % m;
        if (v < 0) v += m;
        out.push_back(static_cast<std::int64_t>(v));
    }
    return out;
}

Quotient quotient_by(const AbelianGroup& g, std::span<const AbelianGroup::Element> generators) {
    return Quotient(g, std::vector<AbelianGroup::Element>(generators.begin(), generators.end()));
}

} // namespace spinor
