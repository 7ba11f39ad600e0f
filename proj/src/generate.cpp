#include "mpm/generate.hpp"

#include "mpm/errors.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace mpm::generate {

namespace {

Grade random_grade(Rng& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> u(lo, hi);
    if (n == 1) return Grade(Rational(u(rng)));
    int x = u(rng);
    return Grade(Rational(x), Rational(u(rng)));
}

Grade shifted(const Grade& g, const Grade& d) {
    Grade r = g;
    for (std::size_t c = 0; c < g.size(); ++c) r[c] += d[c];
    return r;
}

}  // namespace

cellular::FilteredComplex random_complex(Rng& rng, const ComplexShape& shape) {
    if (shape.vertices == 0) throw DataError("a complex needs vertices");
    PrimeField f(shape.q);
    std::vector<cellular::Cell> cells;
    for (std::size_t v = 0; v < shape.vertices; ++v)
        cells.push_back({"v" + std::to_string(v), 0, random_grade(rng, shape.n_params, 0, shape.spread), {}});

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < shape.vertices; ++a)
        for (std::size_t b = a + 1; b < shape.vertices; ++b) pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min(pairs.size(), shape.edges));
    std::sort(pairs.begin(), pairs.end());
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge;
    const int bump = std::max(shape.spread / 2, 0);
    for (auto [a, b] : pairs) {
        Grade g = shifted(join(cells[a].grade, cells[b].grade), random_grade(rng, shape.n_params, 0, bump));
        edge[{a, b}] = cells.size();
        cells.push_back({"e" + std::to_string(edge.size() - 1), 1, g, {{b, 1}, {a, f.neg(1)}}});
    }

    std::vector<std::array<std::size_t, 3>> tris;
    for (auto [ab, i] : edge)
        for (std::size_t c = ab.second + 1; c < shape.vertices; ++c)
            if (edge.count({ab.first, c}) && edge.count({ab.second, c})) tris.push_back({ab.first, ab.second, c});
    std::shuffle(tris.begin(), tris.end(), rng);
    tris.resize(std::min(tris.size(), shape.triangles));
    std::sort(tris.begin(), tris.end());
    std::size_t t = 0;
    for (auto [a, b, c] : tris) {
        std::size_t bc = edge[{b, c}], ac = edge[{a, c}], ab = edge[{a, b}];
        Grade g = join(join(cells[bc].grade, cells[ac].grade), cells[ab].grade);
        g = shifted(g, random_grade(rng, shape.n_params, 0, bump));
        cells.push_back({"t" + std::to_string(t++), 2, g, {{bc, 1}, {ac, f.neg(1)}, {ab, 1}}});
    }
    return cellular::FilteredComplex(f, shape.n_params, std::move(cells));
}

cellular::FilteredComplex perturb(Rng& rng, const cellular::FilteredComplex& X, int shift) {
    std::vector<Grade> g;
    for (const auto& c : X.cells()) {
        Grade h = shifted(c.grade, random_grade(rng, X.n_params(), -shift, shift));
        for (auto [face, coeff] : c.boundary) h = join(h, g[face]);
        g.push_back(std::move(h));
    }
    return cellular::regrade(X, std::move(g));
}

Presentation random_presentation(Rng& rng, std::size_t n_params, std::size_t rows, std::size_t cols, std::uint32_t q,
                                 int spread, double density) {
    std::vector<Grade> rl, cl;
    for (std::size_t i = 0; i < rows; ++i) rl.push_back(random_grade(rng, n_params, 0, spread));
    for (std::size_t j = 0; j < cols; ++j) cl.push_back(random_grade(rng, n_params, 0, spread));
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<std::uint32_t> coeff(1, q - 1);
    std::vector<SparseColumn> columns(cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            if (rl[i] <= cl[j] && keep(rng)) columns[j].push_back({static_cast<std::uint32_t>(i), coeff(rng)});
    return Presentation(PrimeField(q), n_params, rl, cl, columns);
}

}  // namespace mpm::generate
