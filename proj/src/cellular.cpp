#include "mpm/cellular.hpp"

#include "mpm/errors.hpp"
#include "mpm/io.hpp"
#include "mpm/linalg.hpp"
#include "mpm/presdist.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace mpm::cellular {

namespace {

std::string cell_ref(const Cell& c) { return "cell '" + c.id + "'"; }

}  // namespace

FilteredComplex::FilteredComplex(PrimeField field, std::size_t n_params, std::vector<Cell> cells)
    : field_(field), n_params_(n_params), cells_(std::move(cells)) {
    if (n_params_ < 1 || n_params_ > 2) throw DataError("complexes have 1 or 2 parameters");
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        Cell& c = cells_[k];
        if (!seen.emplace(c.id, k).second) throw DataError("duplicate " + cell_ref(c));
        if (c.grade.size() != n_params_) throw DataError(cell_ref(c) + " has a grade of the wrong length");
        if (c.dim == 0 && !c.boundary.empty()) throw DataError(cell_ref(c) + ": vertices have no faces");
        std::sort(c.boundary.begin(), c.boundary.end());
        for (std::size_t t = 0; t < c.boundary.size(); ++t) {
            auto [face, coeff] = c.boundary[t];
            if (face >= cells_.size()) throw DataError(cell_ref(c) + " names a missing face");
            if (t && c.boundary[t - 1].first == face) throw DataError(cell_ref(c) + " lists a face twice");
            if (!field_.contains(coeff) || coeff == 0) throw DataError(cell_ref(c) + " has an invalid coefficient");
            const Cell& fc = cells_[face];
            if (fc.dim + 1 != c.dim)
                throw DataError(cell_ref(c) + " has face " + cell_ref(fc) + " of the wrong dimension");
            if (!(fc.grade <= c.grade))
                throw DataError("grades not monotone: face " + cell_ref(fc) + " at " + fc.grade.str() + " of " +
                                cell_ref(c) + " at " + c.grade.str());
        }
    }
    for (const Cell& c : cells_) {
        if (c.dim < 2) continue;
        std::map<std::size_t, Coeff> dd;
        for (auto [face, a] : c.boundary)
            for (auto [ff, b] : cells_[face].boundary) dd[ff] = field_.add(dd[ff], field_.mul(a, b));
        for (auto [ff, v] : dd)
            if (v) throw DataError("boundary of the boundary of " + cell_ref(c) + " is nonzero");
    }
}

std::vector<Grade> FilteredComplex::grades() const {
    std::vector<Grade> g;
    for (const Cell& c : cells_) g.push_back(c.grade);
    return g;
}

std::size_t FilteredComplex::max_dim() const {
    std::size_t d = 0;
    for (const Cell& c : cells_) d = std::max(d, c.dim);
    return d;
}

std::vector<std::size_t> FilteredComplex::cells_of_dim(std::size_t j) const {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < cells_.size(); ++k)
        if (cells_[k].dim == j) r.push_back(k);
    return r;
}

FilteredComplex regrade(const FilteredComplex& X, std::vector<Grade> grades) {
    if (grades.size() != X.cells().size()) throw DataError("one grade per cell expected");
    std::vector<Cell> cells = X.cells();
    for (std::size_t k = 0; k < cells.size(); ++k) cells[k].grade = std::move(grades[k]);
    return FilteredComplex(X.field(), X.n_params(), std::move(cells));
}

NormValue filtration_distance(const FilteredComplex& X, const FilteredComplex& Y, const PExponent& p) {
    const auto &a = X.cells(), &b = Y.cells();
    bool same = a.size() == b.size() && X.field() == Y.field();
    for (std::size_t k = 0; same && k < a.size(); ++k)
        same = a[k].id == b[k].id && a[k].dim == b[k].dim && a[k].boundary == b[k].boundary;
    if (!same) throw DataError("filtrations of different complexes");
    return presdist::grades_distance(X.grades(), Y.grades(), p);
}

FilteredComplex parse_complex(std::string_view text) {
    auto lines = tokenize(text);
    std::size_t at = 0;
    auto header = [&](const char* key) -> const TextLine* {
        if (at < lines.size() && !lines[at].tokens.empty() && lines[at].tokens[0] == key) return &lines[at++];
        return nullptr;
    };
    if (lines.empty() || lines[0].tokens != std::vector<std::string>{"cwf", "1"})
        throw ParseError("expected 'cwf 1'", lines.empty() ? 1 : lines[0].number);
    ++at;
    unsigned long q = 2, n = 2;
    bool simplicial = false;
    auto number = [](const TextLine& l) {
        if (l.tokens.size() != 2) throw ParseError("expected '" + l.tokens[0] + " <value>'", l.number);
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(l.tokens[1], &used);
            if (used != l.tokens[1].size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad value '" + l.tokens[1] + "'", l.number);
        }
    };
    for (bool more = true; more;) {
        more = false;
        if (auto l = header("field")) {
            q = number(*l);
            if (!is_prime(q) || q > 0xFFFFFFFFul) throw ParseError("field size must be prime", l->number);
            more = true;
        } else if (auto l = header("params")) {
            n = number(*l);
            if (n < 1 || n > 2) throw ParseError("params must be 1 or 2", l->number);
            more = true;
        } else if (auto l = header("kind")) {
            if (l->tokens.size() != 2 || (l->tokens[1] != "simplicial" && l->tokens[1] != "cw"))
                throw ParseError("kind is 'cw' or 'simplicial'", l->number);
            simplicial = l->tokens[1] == "simplicial";
            more = true;
        }
    }
    PrimeField field(static_cast<Coeff>(q));
    std::vector<Cell> cells;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::vector<std::size_t>> vertex_sets;  // simplicial: sorted vertex indices per cell
    std::map<std::vector<std::size_t>, std::size_t> by_vertices;
    for (; at < lines.size(); ++at) {
        const TextLine& l = lines[at];
        const auto& t = l.tokens;
        auto colon = std::find(t.begin(), t.end(), ":");
        if (colon == t.end()) throw ParseError("missing ':' in cell line", l.number);
        std::size_t head = colon - t.begin();
        if (head != 2 + n) throw ParseError("expected '<id> <dim> <grade…> :'", l.number);
        Cell c;
        c.id = t[0];
        if (index.count(c.id)) throw ParseError("duplicate cell '" + c.id + "'", l.number);
        try {
            std::size_t used = 0;
            c.dim = std::stoul(t[1], &used);
            if (used != t[1].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad dimension '" + t[1] + "'", l.number);
        }
        std::vector<Rational> g;
        for (std::size_t i = 0; i < n; ++i) g.push_back(parse_number(t[2 + i], l.number));
        c.grade = n == 1 ? Grade(g[0]) : Grade(g[0], g[1]);
        std::vector<std::string> rest(colon + 1, t.end());
        auto lookup = [&](const std::string& id) {
            auto it = index.find(id);
            if (it == index.end()) throw ParseError("unknown cell '" + id + "' (faces must come first)", l.number);
            return it->second;
        };
        if (simplicial) {
            std::vector<std::size_t> vs;
            if (c.dim == 0) {
                if (!rest.empty()) throw ParseError("a vertex lists no other vertices", l.number);
                vs.push_back(cells.size());
            } else {
                if (rest.size() != c.dim + 1) throw ParseError("a simplex lists dim+1 vertices", l.number);
                for (const auto& id : rest) {
                    std::size_t v = lookup(id);
                    if (cells[v].dim != 0) throw ParseError("'" + id + "' is not a vertex", l.number);
                    vs.push_back(v);
                }
                std::sort(vs.begin(), vs.end());
                if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
                    throw ParseError("repeated vertex", l.number);
                Coeff sign = 1;
                for (std::size_t drop = 0; drop < vs.size(); ++drop) {
                    std::vector<std::size_t> face = vs;
                    face.erase(face.begin() + drop);
                    auto it = by_vertices.find(face);
                    if (it == by_vertices.end()) throw ParseError("a face of '" + c.id + "' is missing", l.number);
                    c.boundary.emplace_back(it->second, sign);
                    sign = field.neg(sign);
                }
            }
            if (!by_vertices.emplace(vs, cells.size()).second)
                throw ParseError("simplex '" + c.id + "' repeats another", l.number);
        } else {
            if (rest.size() % 2) throw ParseError("faces come as '<face-id> <coeff>' pairs", l.number);
            for (std::size_t i = 0; i < rest.size(); i += 2) {
                std::size_t face = lookup(rest[i]);
                Rational v = parse_number(rest[i + 1], l.number);
                if (v.get_den() != 1) throw ParseError("coefficients are integers", l.number);
                mpz_class r = v.get_num() % q;
                if (r < 0) r += q;
                Coeff coeff = static_cast<Coeff>(r.get_ui());
                if (coeff) c.boundary.emplace_back(face, coeff);
            }
        }
        index.emplace(c.id, cells.size());
        cells.push_back(std::move(c));
    }
    return FilteredComplex(field, n, std::move(cells));
}

std::string serialize_complex(const FilteredComplex& X) {
    std::string s = "cwf 1\nfield " + std::to_string(X.field().q()) + "\nparams " + std::to_string(X.n_params()) + "\n";
    for (const Cell& c : X.cells()) {
        s += c.id + " " + std::to_string(c.dim);
        for (std::size_t i = 0; i < c.grade.size(); ++i) s += " " + format_rational(c.grade[i]);
        s += " :";
        for (auto [face, coeff] : c.boundary) s += " " + X.cells()[face].id + " " + std::to_string(coeff);
        s += "\n";
    }
    return s;
}

FreeMorphism boundary_morphism(const FilteredComplex& X, std::size_t j) {
    auto dom = X.cells_of_dim(j);
    std::vector<std::size_t> cod = j ? X.cells_of_dim(j - 1) : std::vector<std::size_t>{};
    std::unordered_map<std::size_t, std::uint32_t> row_of;
    for (std::size_t i = 0; i < cod.size(); ++i) row_of[cod[i]] = static_cast<std::uint32_t>(i);
    std::vector<Grade> rows, cols;
    for (auto k : cod) rows.push_back(X.cells()[k].grade);
    std::vector<SparseColumn> columns;
    for (auto k : dom) {
        cols.push_back(X.cells()[k].grade);
        SparseColumn col;
        for (auto [face, coeff] : X.cells()[k].boundary) col.push_back({row_of.at(face), coeff});
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        columns.push_back(std::move(col));
    }
    return Presentation(X.field(), X.n_params(), std::move(rows), std::move(cols), std::move(columns));
}

namespace {

// Sweeps levels of coordinate `axis`; at each level the domain columns with that coordinate at most the
// level are reduced in the order (other coordinate, axis coordinate, index). A column first dependent at a
// level yields a kernel element led by that column.
KernelBasis sweep_kernel(const FreeMorphism& gamma, std::size_t axis) {
    const auto& g = gamma.col_labels();
    const std::size_t n = gamma.cols(), m = gamma.rows();
    const std::size_t other = gamma.n_params() == 2 ? 1 - axis : axis;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (g[a][other] != g[b][other]) return g[a][other] < g[b][other];
        return g[a][axis] < g[b][axis];
    });
    std::vector<Rational> levels;
    for (const auto& x : g) levels.push_back(x[axis]);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (gamma.n_params() == 1 && !levels.empty()) levels.erase(levels.begin(), levels.end() - 1);

    std::vector<DenseVec> dense;
    for (const auto& c : gamma.columns()) dense.push_back(to_dense(c, m));
    KernelBasis K;
    std::vector<bool> found(n, false);
    const PrimeField& f = gamma.field();
    for (const Rational& level : levels) {
        Echelon e(f, m, n);
        for (std::size_t j : order) {
            if (g[j][axis] > level) continue;
            if (found[j]) continue;  // already dependent on earlier columns; stays so
            DenseVec tag(n, 0);
            tag[j] = 1;
            auto r = e.reduce(dense[j]);
            if (std::any_of(r.residual.begin(), r.residual.end(), [](Coeff c) { return c != 0; })) {
                e.insert(dense[j], std::move(tag));
                continue;
            }
            found[j] = true;
            DenseVec v(n, 0);
            for (std::size_t i = 0; i < n; ++i) v[i] = f.neg(r.tag[i]);
            v[j] = 1;
            Grade gr = g[j];
            for (std::size_t i = 0; i < n; ++i)
                if (v[i]) gr = join(gr, g[i]);
            K.columns.push_back(to_sparse(v));
            K.grades.push_back(std::move(gr));
            K.leading.push_back(j);
        }
    }
    return K;
}

}  // namespace

KernelBasis kernel_basis(const FreeMorphism& gamma) { return sweep_kernel(gamma, 0); }

KernelBasis kernel_basis_lex(const FreeMorphism& gamma) {
    if (gamma.n_params() != 2) throw DataError("lex kernel bases need 2 parameters");
    return sweep_kernel(gamma, 1);
}

GradeInjections grade_injections(const FreeMorphism& gamma, const KernelBasis& C) {
    if (gamma.n_params() != 2) throw DataError("grade injections need 2 parameters");
    GradeInjections r;
    r.jy = C.leading;
    // A basis of a free module has a well-defined multiset of grades, so the lex basis can be matched to C.
    KernelBasis L = kernel_basis_lex(gamma);
    if (L.grades.size() != C.grades.size()) throw ComputationError("kernel bases of different sizes");
    auto by_grade = [](const std::vector<Grade>& gs) {
        std::vector<std::size_t> o(gs.size());
        std::iota(o.begin(), o.end(), 0);
        std::stable_sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) { return lex_less(gs[a], gs[b]); });
        return o;
    };
    auto oc = by_grade(C.grades), ol = by_grade(L.grades);
    r.jx.assign(C.grades.size(), 0);
    for (std::size_t k = 0; k < oc.size(); ++k) {
        if (C.grades[oc[k]] != L.grades[ol[k]]) throw ComputationError("kernel bases with different grades");
        r.jx[oc[k]] = L.leading[ol[k]];
    }
    return r;
}

Presentation homology_presentation(const FilteredComplex& X, std::size_t j) {
    FreeMorphism dj = boundary_morphism(X, j);
    FreeMorphism up = boundary_morphism(X, j + 1);
    KernelBasis K;
    if (j == 0) {
        for (std::size_t i = 0; i < dj.cols(); ++i) {
            K.columns.push_back({{static_cast<std::uint32_t>(i), 1}});
            K.grades.push_back(dj.col_labels()[i]);
            K.leading.push_back(i);
        }
    } else {
        K = kernel_basis(dj);
    }
    const PrimeField& f = X.field();
    const std::size_t n = dj.cols();
    std::vector<std::size_t> led_by(n, SIZE_MAX);
    for (std::size_t k = 0; k < K.leading.size(); ++k) led_by[K.leading[k]] = k;
    // Position of each domain index in the order used for leading terms.
    const auto& g = dj.col_labels();
    std::vector<std::size_t> order(n), pos(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (X.n_params() == 1) return g[a][0] < g[b][0];
        return colex_less(g[a], g[b]);
    });
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<DenseVec> kd;
    for (const auto& c : K.columns) kd.push_back(to_dense(c, n));

    std::vector<SparseColumn> columns;
    for (std::size_t c = 0; c < up.cols(); ++c) {
        DenseVec w = to_dense(up.column(c), n);
        DenseVec coords(K.columns.size(), 0);
        for (;;) {
            std::size_t lead = SIZE_MAX;
            for (std::size_t i = 0; i < n; ++i)
                if (w[i] && (lead == SIZE_MAX || pos[i] > pos[lead])) lead = i;
            if (lead == SIZE_MAX) break;
            std::size_t k = led_by[lead];
            if (k == SIZE_MAX) throw ComputationError("boundary image outside the computed kernel");
            Coeff a = f.div(w[lead], kd[k][lead]);
            coords[k] = f.add(coords[k], a);
            for (std::size_t i = 0; i < n; ++i)
                if (kd[k][i]) w[i] = f.sub(w[i], f.mul(a, kd[k][i]));
        }
        columns.push_back(to_sparse(coords));
    }
    return Presentation(f, X.n_params(), K.grades, up.col_labels(), std::move(columns));
}

Lift lift_presentations(const Presentation& M, const Presentation& N) {
    if (!M.same_matrix(N)) throw DataError("lifting needs presentations with the same matrix");
    auto lm = M.labels(), ln = N.labels();
    if (lm.empty()) throw DataError("nothing to lift");
    Grade base = lm[0];
    for (const auto& x : lm) base = meet(base, x);
    for (const auto& x : ln) base = meet(base, x);
    auto build = [&](const Presentation& P) {
        std::vector<Cell> cells;
        cells.push_back({"v", 0, base, {}});
        for (std::size_t i = 0; i < P.rows(); ++i) cells.push_back({"e" + std::to_string(i), 1, P.row_labels()[i], {}});
        for (std::size_t c = 0; c < P.cols(); ++c) {
            Cell cell{"d" + std::to_string(c), 2, P.col_labels()[c], {}};
            for (const Entry& e : P.column(c)) cell.boundary.emplace_back(1 + e.row, e.value);
            cells.push_back(std::move(cell));
        }
        return FilteredComplex(P.field(), P.n_params(), std::move(cells));
    };
    return {build(M), build(N)};
}

}  // namespace mpm::cellular
