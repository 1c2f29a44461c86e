#include "spinor/gamma.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace spinor {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
            throw SizeMismatch("permutation images are not a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::string_view text, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) != 0)) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        bool saw_separator = false;
        std::vector<int> digits; // for the separator-free form "(12)"
        while (pos < text.size() && text[pos] != ')') {
            char ch = text[pos];
            if (std::isspace(static_cast<unsigned char>(ch)) != 0 || ch == ',') {
                saw_separator = true;
                ++pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
                throw ParseError("unexpected character in cycle notation");
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
            int value = 0;
            try {
                value = std::stoi(std::string(text.substr(start, pos - start)));
            } catch (const std::exception&) {
                throw ParseError("cycle point out of range");
            }
            cycle.push_back(value);
            digits.push_back(static_cast<int>(pos - start));
        }
        if (pos >= text.size()) throw ParseError("unterminated cycle");
        ++pos; // ')'

        if (!saw_separator && cycle.size() == 1 && digits[0] > 1 && cycle[0] > n) {
            // "(12)" means the transposition (1 2), one point per digit
            std::ostringstream token;
            token << cycle[0];
            cycle.clear();
            for (char d : token.str()) cycle.push_back(d - '0');
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i] - 1;
            int to = cycle[(i + 1) % cycle.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n) {
                throw ParseError("cycle point out of range 1.." + std::to_string(n));
            }
            img[static_cast<std::size_t>(from)] = to;
        }
        skip_ws();
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw SizeMismatch("composing permutations of different degree");
    std::vector<int> img(a.images_.size());
    for (int i = 0; i < a.size(); ++i) img[static_cast<std::size_t>(i)] = a.apply(b.apply(i));
    return Permutation(std::move(img));
}

std::string Permutation::cycle_string() const {
    std::vector<bool> seen(images_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (int s = 0; s < size(); ++s) {
        if (seen[static_cast<std::size_t>(s)] || apply(s) == s) continue;
        any = true;
        os << '(';
        int i = s;
        bool first = true;
        while (!seen[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = true;
            os << (first ? "" : " ") << (i + 1);
            first = false;
            i = apply(i);
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

GammaClass::GammaClass(int n, std::vector<std::int64_t> brackets)
    : n_(n), b_(std::move(brackets)) {
    if (n_ < 2) throw LengthMismatch("rank must be at least 2");
    if (b_.size() + 1 != static_cast<std::size_t>(n_)) {
        throw LengthMismatch("bracket vector must have length rank-1");
    }
}

GammaClass GammaClass::from_lift(std::span<const std::int64_t> a) {
    if (a.size() < 2) throw LengthMismatch("a lift needs at least two coordinates");
    std::vector<std::int64_t> b(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) b[i] = a[i + 1] - a[i];
    return GammaClass(static_cast<int>(a.size()), std::move(b));
}

std::vector<std::int64_t> GammaClass::lift() const {
    std::vector<std::int64_t> a(static_cast<std::size_t>(n_));
    a[0] = 0;
    for (std::size_t i = 0; i < b_.size(); ++i) a[i + 1] = a[i] + b_[i];
    return a;
}

std::int64_t GammaClass::total_length() const {
    std::int64_t s = 0;
    for (std::int64_t v : b_) s += v < 0 ? -v : v;
    return s;
}

GammaClass GammaClass::star() const {
    std::vector<std::int64_t> r(b_.rbegin(), b_.rend());
    for (auto& v : r) v = -v;
    return GammaClass(n_, std::move(r));
}

GammaClass GammaClass::operator-() const {
    std::vector<std::int64_t> r = b_;
    for (auto& v : r) v = -v;
    return GammaClass(n_, std::move(r));
}

bool GammaClass::is_symmetric() const {
    // [b]^* == -[b], i.e. the bracket vector is palindromic
    return std::equal(b_.begin(), b_.end(), b_.rbegin());
}

bool GammaClass::is_totally_positive() const {
    return std::all_of(b_.begin(), b_.end(), [](std::int64_t v) { return v >= 0; });
}

std::int64_t GammaClass::total_distance() const {
    const auto a = lift();
    std::int64_t s = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t r = s % n_;
    return r < 0 ? r + n_ : r;
}

std::ostream& operator<<(std::ostream& os, const GammaClass& x) {
    os << '[';
    const auto& b = x.brackets();
    for (std::size_t i = 0; i < b.size(); ++i) os << b[i] << (i + 1 < b.size() ? "," : "");
    return os << ']';
}

GammaClass act(const Permutation& sigma, const GammaClass& x) {
    if (sigma.size() != x.rank()) {
        throw SizeMismatch("permutation degree does not match rank");
    }
    const auto a = x.lift();
    const Permutation inv = sigma.inverse();
    std::vector<std::int64_t> moved(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        moved[i] = a[static_cast<std::size_t>(inv.apply(static_cast<int>(i)))];
    }
    return GammaClass::from_lift(moved);
}

std::vector<GammaClass> orbit(const GammaClass& x, int max_rank) {
    if (x.rank() > max_rank) {
        throw RankTooLarge("orbit enumeration capped at rank " + std::to_string(max_rank));
    }
    const auto a = x.lift();
    std::vector<std::size_t> idx(a.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::set<GammaClass> classes;
    std::vector<std::int64_t> moved(a.size());
    do {
        for (std::size_t i = 0; i < a.size(); ++i) moved[i] = a[idx[i]];
        classes.insert(GammaClass::from_lift(moved));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return {classes.begin(), classes.end()};
}

std::pair<GammaClass, Permutation> normalize_totally_positive(const GammaClass& x) {
    const auto a = x.lift();
    std::vector<int> order(a.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(j)]; });
    // sorted lift: a'_i = a_{order[i]}, so sigma^{-1} = order
    Permutation sigma = Permutation(std::move(order)).inverse();
    std::vector<std::int64_t> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    return {GammaClass::from_lift(sorted), std::move(sigma)};
}

TypeDistance type_distance(const GammaClass& from, const GammaClass& to) {
    if (from.rank() != to.rank()) {
        throw SizeMismatch("type distance requires equal ranks");
    }
    const auto c = from.lift();
    const auto d = to.lift();
    std::vector<std::int64_t> diff(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) diff[i] = d[i] - c[i];
    std::sort(diff.begin(), diff.end());
    const std::int64_t min = diff.front();
    for (auto& v : diff) v -= min;
    std::int64_t total = std::accumulate(diff.begin(), diff.end(), std::int64_t{0}) % from.rank();
    if (total < 0) total += from.rank();
    return TypeDistance{std::move(diff), total};
}

} // namespace spinor
