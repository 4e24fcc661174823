#include "qht/gelfand_cetlin.hpp"

#include "qht/error.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <regex>

namespace qht {

std::vector<int> FlagSpec::blocks() const {
    std::vector<int> k;
    int prev = 0;
    for (int s : steps) {
        k.push_back(s - prev);
        prev = s;
    }
    k.push_back(n - prev);
    return k;
}

std::string FlagSpec::to_string() const {
    std::string out = "F(";
    for (int s : steps) out += std::to_string(s) + ",";
    return out + std::to_string(n) + ")";
}

void validate(const FlagSpec& f) {
    if (f.n <= 0) fail(ErrorCode::BadFlagSpec, "n must be positive");
    if (f.steps.empty()) fail(ErrorCode::BadFlagSpec, "a flag needs at least one step");
    int prev = 0;
    for (int s : f.steps) {
        if (s <= prev || s >= f.n) fail(ErrorCode::BadFlagSpec, "steps must satisfy 0 < n_1 < ... < n_r < n in " + f.to_string());
        prev = s;
    }
}

FlagSpec parse_flag(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    std::smatch m;
    FlagSpec f;
    if (std::regex_match(t, m, std::regex(R"(gr\(?(\d+),?(\d+)\)?)"))) {
        f = {std::stoi(m[2]), {std::stoi(m[1])}};
    } else if (std::regex_match(t, m, std::regex(R"(cp(\d+))"))) {
        f = {std::stoi(m[1]) + 1, {1}};
    } else if (std::regex_match(t, m, std::regex(R"(fl(\d+))"))) {
        f.n = std::stoi(m[1]);
        for (int i = 1; i < f.n; ++i) f.steps.push_back(i);
    } else if (std::regex_match(t, m, std::regex(R"((\d+):(\d+(?:,\d+)*))"))) {
        f.n = std::stoi(m[1]);
        std::string rest = m[2];
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            f.steps.push_back(std::stoi(rest.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        fail(ErrorCode::BadFlagSpec, "cannot parse flag '" + text + "'");
    }
    validate(f);
    return f;
}

int flag_dim(const FlagSpec& f) {
    validate(f);
    int d = 0;
    auto k = f.blocks();
    for (std::size_t i = 0; i < f.steps.size(); ++i) d += k[i] * (f.n - f.steps[i]);
    return d;
}

std::vector<Rational> monotone_lambda(const FlagSpec& f, std::optional<Rational> m) {
    validate(f);
    const Rational shift = m.value_or(Rational(f.steps.back()));
    std::vector<int> bounds = {0};
    bounds.insert(bounds.end(), f.steps.begin(), f.steps.end());
    bounds.push_back(f.n);
    std::vector<Rational> lambda;
    for (std::size_t b = 1; b < bounds.size(); ++b) {
        Rational value = Rational(f.n - bounds[b - 1] - bounds[b]) + shift;
        for (int j = bounds[b - 1]; j < bounds[b]; ++j) lambda.push_back(value);
    }
    return lambda;
}

std::string PatternEntry::name() const {
    return "lambda_" + std::to_string(col) + "^(" + std::to_string(row) + ")";
}

const PatternEntry& GCPattern::at(int row, int col) const {
    for (const auto& e : entries) {
        if (e.row == row && e.col == col) return e;
    }
    fail(ErrorCode::DimensionMismatch, "no pattern entry at row " + std::to_string(row) + ", column " + std::to_string(col));
}

GCPattern gc_pattern(const FlagSpec& f, const std::vector<Rational>& lambda) {
    validate(f);
    const int n = f.n;
    if (static_cast<int>(lambda.size()) != n) fail(ErrorCode::BadLambdaShape, "lambda must have n entries");
    std::vector<int> bounds = {0};
    bounds.insert(bounds.end(), f.steps.begin(), f.steps.end());
    bounds.push_back(n);
    for (std::size_t b = 1; b < bounds.size(); ++b) {
        for (int j = bounds[b - 1] + 1; j < bounds[b]; ++j) {
            if (lambda[j] != lambda[j - 1]) fail(ErrorCode::BadLambdaShape, "lambda must be constant on each block");
        }
        if (b + 1 < bounds.size() && !(lambda[bounds[b] - 1] > lambda[bounds[b]])) {
            fail(ErrorCode::BadLambdaShape, "lambda must drop strictly between blocks");
        }
    }

    // lo[k][i], hi[k][i] for row k (1-based i); row n is lambda itself.
    std::vector<std::vector<Rational>> lo(n + 1), hi(n + 1);
    lo[n].assign(lambda.begin(), lambda.end());
    hi[n] = lo[n];
    for (int k = n - 1; k >= 1; --k) {
        for (int i = 0; i < k; ++i) {
            lo[k].push_back(lo[k + 1][i + 1]);
            hi[k].push_back(hi[k + 1][i]);
        }
    }

    GCPattern p;
    p.flag = f;
    p.lambda = lambda;
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < k; ++i) {
            PatternEntry e{k, i + 1, lo[k][i], hi[k][i], std::nullopt};
            if (e.lower != e.upper) {
                e.coordinate = p.index_set.size();
                p.index_set.push_back(p.entries.size());
            }
            p.entries.push_back(std::move(e));
        }
    }
    return p;
}

GCPolytope gc_polytope(const GCPattern& p) {
    GCPolytope d;
    for (std::size_t idx : p.index_set) d.coords.push_back(p.entries[idx].name());
    const int n = p.flag.n;
    auto value_at = [&](int row, int col) -> const PatternEntry* { return row == n ? nullptr : &p.at(row, col); };
    // big >= small, where an entry in row n is lambda.
    auto add = [&](int big_row, int big_col, int small_row, int small_col) {
        Inequality q{std::vector<Rational>(d.dim(), Rational(0)), Rational(0)};
        bool has_variable = false;
        auto place = [&](int row, int col, int sign) {
            const PatternEntry* e = value_at(row, col);
            if (!e) {
                q.rhs -= Rational(sign) * p.lambda[col - 1];
            } else if (e->is_constant()) {
                q.rhs -= Rational(sign) * e->lower;
            } else {
                q.coeffs[*e->coordinate] += Rational(sign);
                has_variable = true;
            }
        };
        place(big_row, big_col, 1);
        place(small_row, small_col, -1);
        if (has_variable && std::find(d.inequalities.begin(), d.inequalities.end(), q) == d.inequalities.end()) {
            d.inequalities.push_back(std::move(q));
        }
    };
    for (int k = 1; k < n; ++k) {
        for (int i = 1; i <= k; ++i) {
            add(k + 1, i, k, i);
            add(k, i, k + 1, i + 1);
        }
    }
    return d;
}

GCPolytope polytope_product(const GCPolytope& a, const GCPolytope& b) {
    GCPolytope d;
    d.coords = a.coords;
    d.coords.insert(d.coords.end(), b.coords.begin(), b.coords.end());
    for (const auto& q : a.inequalities) {
        Inequality r = q;
        r.coeffs.resize(d.dim(), Rational(0));
        d.inequalities.push_back(std::move(r));
    }
    for (const auto& q : b.inequalities) {
        Inequality r{std::vector<Rational>(a.dim(), Rational(0)), q.rhs};
        r.coeffs.insert(r.coeffs.end(), q.coeffs.begin(), q.coeffs.end());
        d.inequalities.push_back(std::move(r));
    }
    return d;
}

std::string_view to_string(PointClass c) noexcept {
    switch (c) {
        case PointClass::Interior: return "Interior";
        case PointClass::Boundary: return "Boundary";
        case PointClass::Outside: return "Outside";
    }
    return "?";
}

namespace {

Rational slack(const Inequality& q, const std::vector<Rational>& x) {
    Rational s = -q.rhs;
    for (std::size_t i = 0; i < x.size(); ++i) s += q.coeffs[i] * x[i];
    return s;
}

// Row reduction in place; returns the rank.
std::size_t row_reduce(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t r = rank;
        while (r < rows.size() && rows[r][c] == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[r], rows[rank]);
        const Rational inv = 1 / rows[rank][c];
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == rank || rows[o][c] == 0) continue;
            const Rational f = rows[o][c];
            for (std::size_t j = 0; j < rows[o].size(); ++j) rows[o][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<Vertex> solve_tight(const std::vector<const Inequality*>& system, std::size_t d) {
    std::vector<std::vector<Rational>> rows;
    for (const auto* q : system) {
        auto row = q->coeffs;
        row.push_back(q->rhs);
        rows.push_back(std::move(row));
    }
    if (row_reduce(rows, d) < d) return std::nullopt;
    Vertex x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = rows[i][d];
    return x;
}

bool feasible(const GCPolytope& p, const Vertex& x) {
    return std::all_of(p.inequalities.begin(), p.inequalities.end(), [&](const Inequality& q) { return slack(q, x) >= 0; });
}

void sort_unique(std::vector<Vertex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Classification classify_point(const GCPolytope& d, const std::vector<Rational>& u) {
    if (u.size() != d.dim()) {
        fail(ErrorCode::DimensionMismatch, "point has " + std::to_string(u.size()) + " coordinates, polytope has " +
                                               std::to_string(d.dim()));
    }
    Classification c;
    std::vector<std::size_t> tight, violated;
    for (std::size_t i = 0; i < d.inequalities.size(); ++i) {
        Rational s = slack(d.inequalities[i], u);
        if (s < 0) violated.push_back(i);
        else if (s == 0) tight.push_back(i);
    }
    if (!violated.empty()) c = {PointClass::Outside, violated};
    else if (!tight.empty()) c = {PointClass::Boundary, tight};
    else c = {PointClass::Interior, {}};
    return c;
}

std::vector<Vertex> vertices_by_subsets(const GCPolytope& p) {
    const std::size_t d = p.dim();
    const std::size_t m = p.inequalities.size();
    std::vector<Vertex> out;
    if (d > m) return out;
    std::vector<bool> chosen(m, false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<long>(d), true);
    do {
        std::vector<const Inequality*> system;
        for (std::size_t i = 0; i < m; ++i) {
            if (chosen[i]) system.push_back(&p.inequalities[i]);
        }
        if (auto x = solve_tight(system, d); x && feasible(p, *x)) out.push_back(std::move(*x));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    sort_unique(out);
    return out;
}

std::vector<Vertex> vertices_by_clipping(const GCPolytope& p) {
    const std::size_t d = p.dim();
    Rational bound = 1;
    for (const auto& q : p.inequalities) bound = std::max(bound, Rational(abs(q.rhs) + 1));

    std::vector<Inequality> active;
    for (std::size_t i = 0; i < d; ++i) {
        Inequality lo{std::vector<Rational>(d, Rational(0)), -bound};
        lo.coeffs[i] = 1;
        Inequality hi{std::vector<Rational>(d, Rational(0)), -bound};
        hi.coeffs[i] = -1;
        active.push_back(std::move(lo));
        active.push_back(std::move(hi));
    }
    std::vector<Vertex> verts(1, Vertex());
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Vertex> next;
        for (const auto& v : verts) {
            for (const Rational& c : {Rational(-bound), bound}) {
                Vertex w = v;
                w.push_back(c);
                next.push_back(std::move(w));
            }
        }
        verts = std::move(next);
    }

    auto tight_set = [&](const Vertex& v) {
        std::vector<std::size_t> t;
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (slack(active[i], v) == 0) t.push_back(i);
        }
        return t;
    };

    for (const auto& q : p.inequalities) {
        std::vector<Vertex> inside, outside, next;
        for (auto& v : verts) (slack(q, v) >= 0 ? inside : outside).push_back(v);
        if (outside.empty()) {
            active.push_back(q);
            continue;
        }
        std::vector<std::vector<std::size_t>> tin, tout;
        for (const auto& v : inside) tin.push_back(tight_set(v));
        for (const auto& v : outside) tout.push_back(tight_set(v));
        next = inside;
        for (std::size_t a = 0; a < inside.size(); ++a) {
            if (slack(q, inside[a]) == 0) continue;
            for (std::size_t b = 0; b < outside.size(); ++b) {
                std::vector<std::size_t> common;
                std::set_intersection(tin[a].begin(), tin[a].end(), tout[b].begin(), tout[b].end(),
                                      std::back_inserter(common));
                if (common.size() + 1 < d) continue;
                std::vector<std::vector<Rational>> rows;
                for (std::size_t i : common) rows.push_back(active[i].coeffs);
                if (row_reduce(rows, d) + 1 != d) continue;
                const Vertex& v = inside[a];
                const Vertex& w = outside[b];
                const Rational sv = slack(q, v), sw = slack(q, w);
                const Rational t = sv / (sv - sw);
                Vertex x(d);
                for (std::size_t i = 0; i < d; ++i) x[i] = v[i] + t * (w[i] - v[i]);
                next.push_back(std::move(x));
            }
        }
        active.push_back(q);
        sort_unique(next);
        verts = std::move(next);
    }
    for (const auto& v : verts) {
        for (const auto& x : v) {
            if (abs(x) >= bound) fail(ErrorCode::SchemaError, "polytope is unbounded");
        }
    }
    sort_unique(verts);
    return verts;
}

std::vector<Vertex> vertices(const GCPolytope& d) {
    auto brute = std::async(std::launch::async, [&] { return vertices_by_subsets(d); });
    auto clipped = std::async(std::launch::async, [&] { return vertices_by_clipping(d); });
    auto a = brute.get();
    auto b = clipped.get();
    if (a != b) {
        fail(ErrorCode::MethodDisagreement, "vertex enumeration methods disagree: " + std::to_string(a.size()) + " vs " +
                                                std::to_string(b.size()) + " vertices");
    }
    return a;
}

}  // namespace qht
