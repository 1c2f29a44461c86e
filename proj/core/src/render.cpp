#include "spinor/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spinor {

std::string element_letter(const AbelianGroup& group, const AbelianGroup::Element& element) {
    const auto reduced = group.reduce(element);
    std::uint64_t index = 0;
    std::uint64_t stride = 1;
    const auto& factors = group.factors();
    for (std::size_t i = factors.size(); i-- > 0;) {
        index += static_cast<std::uint64_t>(reduced[i]) * stride;
        stride *= static_cast<std::uint64_t>(factors[i]);
    }
    if (index < 26) return std::string(1, static_cast<char>('A' + index));
    return "[" + std::to_string(index) + "]";
}

AbelianGroup::Element element_for_letter(const AbelianGroup& group, const std::string& letter) {
    std::uint64_t index = 0;
    if (letter.size() == 1 && letter[0] >= 'A' && letter[0] <= 'Z') {
        index = static_cast<std::uint64_t>(letter[0] - 'A');
    } else if (letter.size() > 2 && letter.front() == '[' && letter.back() == ']') {
        index = std::stoull(letter.substr(1, letter.size() - 2));
    } else {
        throw ParseError("unknown label letter '" + letter + "'");
    }
    if (index >= group.order()) {
        throw ParseError("label letter '" + letter + "' exceeds the group order");
    }
    AbelianGroup::Element e(group.tuple_size(), 0);
    const auto& factors = group.factors();
    for (std::size_t i = factors.size(); i-- > 0;) {
        e[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(factors[i]));
        index /= static_cast<std::uint64_t>(factors[i]);
    }
    return e;
}

namespace {

// boxed grid with diagonals, origin at the lower left, printed top row first
std::string grid_picture(std::int64_t width, std::int64_t height,
                         const std::map<std::pair<std::int64_t, std::int64_t>, char>& marks) {
    std::ostringstream os;
    for (std::int64_t y = height; y >= 0; --y) {
        for (std::int64_t x = 0; x <= width; ++x) {
            const auto it = marks.find({x, y});
            os << (it != marks.end() ? it->second : 'o');
            if (x < width) os << "---";
        }
        os << '\n';
        if (y > 0) {
            for (std::int64_t x = 0; x <= width; ++x) {
                os << '|';
                if (x < width) os << " \\ ";
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string strip_picture(const CommBlock& block, std::int64_t window,
                          const std::map<std::pair<std::int64_t, std::int64_t>, char>& marks) {
    std::ostringstream os;
    const int n = block.rank();
    if (n == 2) {
        for (std::int64_t x = -window; x <= window; ++x) {
            const auto it = marks.find({x, 0});
            const bool member = block.contains(GammaClass(2, {x}));
            os << (it != marks.end() ? it->second : (member ? 'o' : '.'));
            os << (x < window ? " " : "");
        }
        os << '\n';
        return os.str();
    }
    os << "  : (free direction)\n";
    for (std::int64_t y = window; y >= -window; --y) {
        for (std::int64_t x = -window; x <= window; ++x) {
            const auto it = marks.find({x, y});
            const bool member = block.contains(GammaClass(3, {x, y}));
            os << (it != marks.end() ? it->second : (member ? 'o' : '.'));
            os << (x < window ? " " : "");
        }
        os << '\n';
    }
    os << "  :\n";
    return os.str();
}

void check_drawable_rank(int rank) {
    if (rank != 2 && rank != 3) {
        throw RankTooLarge("plane pictures cover ranks 2 and 3 only");
    }
}

} // namespace

std::string render_block_ascii(const Block& block, std::int64_t window) {
    check_drawable_rank(block_rank(block));
    if (const auto* grid = std::get_if<GridBlock>(&block)) {
        const auto& b = grid->bounds().brackets();
        const std::int64_t width = b[0];
        const std::int64_t height = b.size() > 1 ? b[1] : 0;
        return grid_picture(width, height, {});
    }
    return strip_picture(std::get<CommBlock>(block), window, {});
}

std::string render_placements_ascii(const Block& host, const std::vector<Placement>& placements,
                                    std::int64_t window) {
    check_drawable_rank(block_rank(host));
    std::ostringstream os;
    int index = 1;
    for (const auto& pl : placements) {
        const auto& c = pl.c.brackets();
        const auto& d = pl.d.brackets();
        std::map<std::pair<std::int64_t, std::int64_t>, char> marks;
        const std::int64_t x0 = std::min(c[0], d[0]);
        const std::int64_t x1 = std::max(c[0], d[0]);
        const std::int64_t y0 = c.size() > 1 ? std::min(c[1], d[1]) : 0;
        const std::int64_t y1 = c.size() > 1 ? std::max(c[1], d[1]) : 0;
        for (std::int64_t x = x0; x <= x1; ++x) {
            for (std::int64_t y = y0; y <= y1; ++y) marks[{x, y}] = '*';
        }
        marks[{c[0], c.size() > 1 ? c[1] : 0}] = 'A';
        os << "placement " << index++ << ": c=" << pl.c << " d=" << pl.d << '\n';
        if (const auto* grid = std::get_if<GridBlock>(&host)) {
            const auto& b = grid->bounds().brackets();
            os << grid_picture(b[0], b.size() > 1 ? b[1] : 0, marks);
        } else {
            os << strip_picture(std::get<CommBlock>(host), window, marks);
        }
        os << '\n';
    }
    if (placements.empty()) os << "no placements\n";
    return os.str();
}

namespace {

std::vector<std::int64_t> flatten(const LabeledVertex& v) {
    std::vector<std::int64_t> flat;
    for (const auto& c : v.coordinates) flat.insert(flat.end(), c.begin(), c.end());
    return flat;
}

} // namespace

std::string render_labeled_ascii(const LabeledComplex& complex) {
    const AbelianGroup& group = complex.projection.group();
    std::vector<std::int64_t> dims;
    for (const auto& b : complex.shape) dims.insert(dims.end(), b.begin(), b.end());
    if (dims.size() > 3) {
        throw RankTooLarge("letter pictures cover up to three flattened dimensions");
    }

    std::map<std::vector<std::int64_t>, std::string> letters;
    for (const auto& v : complex.vertices) letters[flatten(v)] = element_letter(group, v.label);

    std::ostringstream os;
    if (dims.empty()) {
        os << letters[{}] << '\n';
        return os.str();
    }
    const std::int64_t width = dims[0];
    const std::int64_t height = dims.size() > 1 ? dims[1] : 0;
    const std::int64_t depth = dims.size() > 2 ? dims[2] : 0;
    for (std::int64_t z = 0; z <= depth; ++z) {
        if (dims.size() > 2) os << "layer " << z << ":\n";
        for (std::int64_t y = height; y >= 0; --y) {
            for (std::int64_t x = 0; x <= width; ++x) {
                std::vector<std::int64_t> key{x};
                if (dims.size() > 1) key.push_back(y);
                if (dims.size() > 2) key.push_back(z);
                os << letters.at(key);
                if (x < width) os << "---";
            }
            os << '\n';
            if (y > 0) {
                for (std::int64_t x = 0; x <= width; ++x) {
                    os << '|';
                    if (x < width) os << " \\ ";
                }
                os << '\n';
            }
        }
        if (z < depth) os << '\n';
    }
    return os.str();
}

namespace {

struct SvgCanvas {
    std::ostringstream body;
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;

    void grow(double x, double y) {
        min_x = std::min(min_x, x - 20);
        min_y = std::min(min_y, y - 20);
        max_x = std::max(max_x, x + 20);
        max_y = std::max(max_y, y + 20);
    }
    void line(double x1, double y1, double x2, double y2) {
        grow(x1, y1);
        grow(x2, y2);
        body << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
             << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    void dot(double x, double y) {
        grow(x, y);
        body << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"black\"/>\n";
    }
    void text(double x, double y, const std::string& s) {
        grow(x, y);
        body << "<text x=\"" << x + 5 << "\" y=\"" << y - 5 << "\" font-size=\"12\">" << s
             << "</text>\n";
    }
    std::string finish() const {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x << " " << min_y
           << " " << (max_x - min_x) << " " << (max_y - min_y) << "\">\n"
           << body.str() << "</svg>\n";
        return os.str();
    }
};

constexpr double kStep = 40.0;

// planar position of a vertex, optionally offset isometrically by the z layer
std::pair<double, double> project(std::int64_t x, std::int64_t y, std::int64_t z) {
    return {static_cast<double>(x) * kStep + static_cast<double>(z) * kStep * 0.45,
            -static_cast<double>(y) * kStep - static_cast<double>(z) * kStep * 0.45};
}

} // namespace

std::string render_block_svg(const Block& block, std::int64_t window) {
    check_drawable_rank(block_rank(block));
    SvgCanvas canvas;
    auto draw_cell = [&](std::int64_t x, std::int64_t y, bool right, bool up) {
        const auto [px, py] = project(x, y, 0);
        canvas.dot(px, py);
        if (right) {
            const auto [qx, qy] = project(x + 1, y, 0);
            canvas.line(px, py, qx, qy);
        }
        if (up) {
            const auto [qx, qy] = project(x, y + 1, 0);
            canvas.line(px, py, qx, qy);
        }
        if (right && up) {
            const auto [qx, qy] = project(x + 1, y, 0);
            const auto [rx, ry] = project(x, y + 1, 0);
            canvas.line(rx, ry, qx, qy); // diagonal of the apartment square
        }
    };
    auto member = [&](std::int64_t x, std::int64_t y) {
        if (const auto* grid = std::get_if<GridBlock>(&block)) {
            const auto& b = grid->bounds().brackets();
            const std::int64_t h = b.size() > 1 ? b[1] : 0;
            return x >= 0 && x <= b[0] && y >= 0 && y <= h;
        }
        const auto& comm = std::get<CommBlock>(block);
        if (comm.rank() == 2) return y == 0 && comm.contains(GammaClass(2, {x}));
        return comm.contains(GammaClass(3, {x, y}));
    };
    for (std::int64_t x = -window - 1; x <= window + 1; ++x) {
        for (std::int64_t y = -window - 1; y <= window + 1; ++y) {
            if (!member(x, y)) continue;
            draw_cell(x, y, member(x + 1, y), member(x, y + 1));
        }
    }
    return canvas.finish();
}

std::string render_labeled_svg(const LabeledComplex& complex) {
    const AbelianGroup& group = complex.projection.group();
    std::vector<std::int64_t> dims;
    for (const auto& b : complex.shape) dims.insert(dims.end(), b.begin(), b.end());
    if (dims.size() > 3) {
        throw RankTooLarge("label pictures cover up to three flattened dimensions");
    }
    SvgCanvas canvas;
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> grid_pos;
    for (const auto& v : complex.vertices) {
        auto flat = flatten(v);
        flat.resize(3, 0);
        grid_pos[flat] = flat;
        const auto [px, py] = project(flat[0], flat[1], flat[2]);
        canvas.dot(px, py);
        canvas.text(px, py, element_letter(group, v.label));
    }
    for (const auto& [flat, unused] : grid_pos) {
        (void)unused;
        for (std::size_t axis = 0; axis < 3; ++axis) {
            auto next = flat;
            ++next[axis];
            if (grid_pos.find(next) == grid_pos.end()) continue;
            const auto [px, py] = project(flat[0], flat[1], flat[2]);
            const auto [qx, qy] = project(next[0], next[1], next[2]);
            canvas.line(px, py, qx, qy);
        }
    }
    return canvas.finish();
}

} // namespace spinor
