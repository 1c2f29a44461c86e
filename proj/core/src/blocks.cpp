#include "spinor/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace spinor {

GeoType::GeoType(GammaClass type) : type_(std::move(type)) {
    if (!type_.is_totally_positive()) {
        throw InvalidGeoType("GEO type must be totally positive");
    }
}

GeoType GeoType::from_brackets(int n, std::vector<std::int64_t> b) {
    return GeoType(GammaClass(n, std::move(b)));
}

GridBlock::GridBlock(GeoType t) : bounds_(t.type()) {}

std::uint64_t GridBlock::vertex_count() const {
    std::uint64_t count = 1;
    for (std::int64_t b : bounds_.brackets()) count *= static_cast<std::uint64_t>(b + 1);
    return count;
}

bool GridBlock::contains(const GammaClass& v) const {
    if (v.rank() != rank()) return false;
    const auto& b = bounds_.brackets();
    const auto& c = v.brackets();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (c[i] < 0 || c[i] > b[i]) return false;
    }
    return true;
}

std::vector<GammaClass> GridBlock::vertices() const {
    const auto& b = bounds_.brackets();
    std::vector<GammaClass> out;
    out.reserve(static_cast<std::size_t>(vertex_count()));
    std::vector<std::int64_t> c(b.size(), 0);
    for (;;) {
        out.emplace_back(rank(), c);
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(c.size()) - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)]) {
            c[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
    }
    return out;
}

GridBlock geo_block(const GeoType& t) { return GridBlock(t); }

bool is_line_type(const GeoType& t) {
    int nonzero = 0;
    for (std::int64_t b : t.type().brackets()) {
        if (b != 0) ++nonzero;
    }
    return nonzero <= 1;
}

CommAlgebra::CommAlgebra(std::vector<Component> components)
    : components_(std::move(components)), n_(0) {
    if (components_.empty()) throw LengthMismatch("commutative algebra needs components");
    for (const auto& c : components_) {
        if (c.ramification < 1 || c.inertia < 1) {
            throw LengthMismatch("ramification and inertia degrees must be positive");
        }
        n_ += c.ramification * c.inertia;
    }
    if (n_ < 2) throw LengthMismatch("commutative algebra must have dimension at least 2");
}

CommBlock::CommBlock(CommAlgebra algebra) : algebra_(std::move(algebra)) {}

std::vector<std::int64_t> CommBlock::simplex_pattern(std::size_t comp, int j) const {
    const auto& c = algebra_.components().at(comp);
    if (j < 0 || j >= c.ramification) {
        throw LengthMismatch("simplex vertex index out of range");
    }
    std::vector<std::int64_t> pattern(static_cast<std::size_t>(c.ramification * c.inertia), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(c.inertia * j); ++i) pattern[i] = 1;
    return pattern;
}

bool CommBlock::contains(const GammaClass& v) const {
    if (v.rank() != rank()) return false;
    const auto a = v.lift();
    std::size_t offset = 0;
    for (const auto& comp : algebra_.components()) {
        const std::size_t size = static_cast<std::size_t>(comp.ramification * comp.inertia);
        // the slice must be t+1 on a prefix of length f*j (j in [0, e)), t after
        const std::int64_t tail = a[offset + size - 1];
        std::size_t break_at = 0; // length of the raised prefix
        bool ok = true;
        for (std::size_t i = 0; i < size; ++i) {
            const std::int64_t x = a[offset + i];
            if (x == tail + 1 && break_at == i) {
                break_at = i + 1;
            } else if (x != tail) {
                ok = false;
                break;
            }
        }
        if (!ok) return false;
        if (break_at % static_cast<std::size_t>(comp.inertia) != 0) return false;
        offset += size;
    }
    return true;
}

std::vector<GammaClass> CommBlock::vertices(std::int64_t shift_bound) const {
    if (shift_bound < 0) throw LengthMismatch("shift bound must be nonnegative");
    const auto& comps = algebra_.components();
    const std::size_t r = comps.size();

    std::vector<int> simplex_index(r, 0);
    std::vector<std::int64_t> shift(r, -shift_bound);
    std::set<GammaClass> classes;

    std::vector<std::int64_t> a(static_cast<std::size_t>(rank()));
    for (;;) {
        std::size_t offset = 0;
        for (std::size_t i = 0; i < r; ++i) {
            const auto pattern = simplex_pattern(i, simplex_index[i]);
            for (std::size_t k = 0; k < pattern.size(); ++k) a[offset + k] = pattern[k] + shift[i];
            offset += pattern.size();
        }
        classes.insert(GammaClass::from_lift(a));

        // advance (simplex indices, then shifts) like an odometer
        std::size_t pos = 0;
        for (; pos < r; ++pos) {
            if (simplex_index[pos] + 1 < comps[pos].ramification) {
                ++simplex_index[pos];
                break;
            }
            simplex_index[pos] = 0;
        }
        if (pos < r) continue;
        for (pos = 0; pos < r; ++pos) {
            if (shift[pos] < shift_bound) {
                ++shift[pos];
                break;
            }
            shift[pos] = -shift_bound;
        }
        if (pos == r) break;
    }
    return {classes.begin(), classes.end()};
}

CommBlock comm_block(const CommAlgebra& algebra) { return CommBlock(algebra); }

int block_rank(const Block& host) {
    return std::visit([](const auto& b) { return b.rank(); }, host);
}

std::vector<GammaClass> block_vertices(const Block& host, std::int64_t shift_bound) {
    if (const auto* grid = std::get_if<GridBlock>(&host)) return grid->vertices();
    return std::get<CommBlock>(host).vertices(shift_bound);
}

std::vector<Placement> placements(const Block& host, const GeoType& guest,
                                  std::optional<std::int64_t> shift_bound) {
    if (block_rank(host) != guest.rank()) {
        throw SizeMismatch("host and guest must share the local rank");
    }
    const std::int64_t bound = shift_bound.value_or(guest.type().total_length());
    if (shift_bound && *shift_bound < guest.type().total_length()) {
        throw SizeMismatch("shift bound below the guest's total length");
    }
    const auto verts = block_vertices(host, bound);
    const auto target = guest.type().lift();

    std::vector<Placement> out;
    for (const auto& c : verts) {
        for (const auto& d : verts) {
            if (type_distance(c, d).exponents == target) {
                out.push_back(Placement{c, d});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Placement& x, const Placement& y) {
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    });
    return out;
}

bool embeds(const Block& host, const GeoType& guest, std::optional<std::int64_t> shift_bound) {
    return !placements(host, guest, shift_bound).empty();
}

CosetSet CosetSet::from_residues(std::int64_t modulus, std::vector<std::int64_t> residues) {
    if (modulus <= 0) throw ModulusMismatch("coset modulus must be positive");
    for (auto& r : residues) {
        r %= modulus;
        if (r < 0) r += modulus;
    }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());

    CosetSet set;
    set.modulus = modulus;
    set.residues = std::move(residues);
    set.group = !set.residues.empty();
    for (std::int64_t a : set.residues) {
        if (!set.group) break;
        for (std::int64_t b : set.residues) {
            std::int64_t diff = (a - b) % modulus;
            if (diff < 0) diff += modulus;
            if (!std::binary_search(set.residues.begin(), set.residues.end(), diff)) {
                set.group = false;
                break;
            }
        }
    }
    return set;
}

CosetSet relative_spinor_image(const Block& host, const GeoType& guest,
                               std::optional<std::int64_t> shift_bound) {
    const auto found = placements(host, guest, shift_bound);
    const std::int64_t n = guest.rank();
    std::vector<std::int64_t> residues;
    residues.reserve(found.size());
    for (const auto& pl : found) {
        const auto a = pl.c.lift();
        residues.push_back(std::accumulate(a.begin(), a.end(), std::int64_t{0}));
    }
    return CosetSet::from_residues(n, std::move(residues));
}

std::int64_t local_spinor_image(const GeoType& t) {
    const std::int64_t n = t.rank();
    if (n % 2 == 0 && t.type().is_symmetric() && t.type().total_distance() == n / 2) {
        return n / 2;
    }
    return n;
}

} // namespace spinor
