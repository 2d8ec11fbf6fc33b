#include "locpos/newton.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace locpos {

namespace {

using Matrix = std::vector<std::vector<Rat>>;

// Row-reduces m in place; returns pivot column per reduced row.
std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat inv = Rat(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<Rat> to_rat(const ExponentVector& alpha) {
    std::vector<Rat> out;
    out.reserve(alpha.size());
    for (unsigned e : alpha) out.emplace_back(static_cast<long>(e));
    return out;
}

Rat dot(const std::vector<Rat>& a, const ExponentVector& b) {
    Rat s(0);
    for (std::size_t i = 0; i < b.size(); ++i) s += a[i] * static_cast<long>(b[i]);
    return s;
}

// Witness-normal LP: normal . alpha = M on members, normal . beta >= M + 1
// elsewhere. strictly_positive additionally requires every normal entry >= 1.
// Variables: nu_1..nu_n, then M.
std::optional<std::pair<std::vector<Rat>, Rat>> witness_normal(
    const std::vector<ExponentVector>& points, const std::vector<bool>& member,
    bool strictly_positive) {
    const unsigned n = static_cast<unsigned>(points.front().size());
    LPProblem lp;
    lp.num_vars = n + 1;
    lp.objective.assign(n + 1, Rat(0));
    lp.lower_bounds.assign(n + 1, std::nullopt);
    if (strictly_positive)
        for (unsigned i = 0; i < n; ++i) lp.lower_bounds[i] = Rat(1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        LPConstraint c;
        c.row = to_rat(points[i]);
        c.row.push_back(Rat(-1));  // ... - M
        if (member[i]) {
            c.rel = Relation::Eq;
            c.rhs = 0;
        } else {
            c.rel = Relation::GreaterEq;
            c.rhs = 1;
        }
        lp.constraints.push_back(std::move(c));
    }
    LPResult res = solve_lp(lp);
    if (res.status != LPStatus::Optimal) return std::nullopt;
    std::vector<Rat> nu(res.solution.begin(), res.solution.begin() + n);
    return std::make_pair(std::move(nu), res.solution[n]);
}

Face make_face(const std::vector<ExponentVector>& points,
               const std::vector<std::size_t>& member_indices,
               std::vector<Rat> normal, Rat offset) {
    Face f;
    f.normal = std::move(normal);
    f.offset = std::move(offset);
    f.member_indices = member_indices;
    for (std::size_t i : member_indices) f.members.push_back(points[i]);
    return f;
}

// Facet member sets via exact enumeration in the affine hull. Points are
// assumed distinct. Suitable for desk-scale supports (tens of points).
std::vector<std::vector<std::size_t>> facet_member_sets(
    const std::vector<ExponentVector>& points) {
    const std::size_t m = points.size();
    const std::size_t n = points.front().size();

    // Basis of the affine hull from the translated points.
    Matrix diffs;
    for (std::size_t i = 1; i < m; ++i) {
        std::vector<Rat> d(n);
        for (std::size_t j = 0; j < n; ++j)
            d[j] = Rat(static_cast<long>(points[i][j])) -
                   Rat(static_cast<long>(points[0][j]));
        diffs.push_back(std::move(d));
    }
    Matrix reduced = diffs;
    std::vector<std::size_t> pivots = row_reduce(reduced);
    const std::size_t dim = pivots.size();
    if (dim == 0) return {};  // single point, no proper faces

    // Hull coordinates: coordinates of each translated point in the reduced
    // row-echelon basis read off at the pivot columns.
    Matrix coords(m, std::vector<Rat>(dim, Rat(0)));
    for (std::size_t i = 1; i < m; ++i) {
        // diffs[i-1] = sum_k c_k * reduced[k]; with unit pivot columns the
        // coefficients are the entries at the pivot columns after reduction.
        std::vector<Rat> v = diffs[i - 1];
        for (std::size_t k = 0; k < dim; ++k) {
            Rat c = v[pivots[k]];
            coords[i][k] = c;
            if (c != 0)
                for (std::size_t j = 0; j < n; ++j) v[j] -= c * reduced[k][j];
        }
    }

    std::set<std::vector<std::size_t>> member_sets;
    // Iterate over all size-dim subsets of the points.
    std::vector<std::size_t> idx(dim);
    for (std::size_t k = 0; k < dim; ++k) idx[k] = k;
    for (;;) {
        // Hyperplane through coords[idx[0..dim-1]]: normal w spans the
        // nullspace of the (dim-1) x dim difference matrix.
        Matrix rows;
        for (std::size_t k = 1; k < dim; ++k) {
            std::vector<Rat> d(dim);
            for (std::size_t j = 0; j < dim; ++j)
                d[j] = coords[idx[k]][j] - coords[idx[0]][j];
            rows.push_back(std::move(d));
        }
        Matrix red = rows;
        std::vector<std::size_t> piv = row_reduce(red);
        if (piv.size() == dim - 1) {
            // One free column: set it to 1, back-substitute.
            std::vector<bool> is_pivot(dim, false);
            for (std::size_t p : piv) is_pivot[p] = true;
            std::size_t free_col = 0;
            while (is_pivot[free_col]) ++free_col;
            std::vector<Rat> w(dim, Rat(0));
            w[free_col] = 1;
            for (std::size_t k = 0; k < piv.size(); ++k)
                w[piv[k]] = -red[k][free_col];

            Rat offset(0);
            for (std::size_t j = 0; j < dim; ++j)
                offset += w[j] * coords[idx[0]][j];
            bool any_above = false, any_below = false;
            for (std::size_t i = 0; i < m; ++i) {
                Rat v(0);
                for (std::size_t j = 0; j < dim; ++j) v += w[j] * coords[i][j];
                if (v > offset) any_above = true;
                if (v < offset) any_below = true;
            }
            if (!(any_above && any_below)) {
                std::vector<std::size_t> members;
                for (std::size_t i = 0; i < m; ++i) {
                    Rat v(0);
                    for (std::size_t j = 0; j < dim; ++j) v += w[j] * coords[i][j];
                    if (v == offset) members.push_back(i);
                }
                member_sets.insert(std::move(members));
            }
        }
        // next size-dim combination
        bool advanced = false;
        for (std::size_t k = dim; k-- > 0;) {
            if (idx[k] + 1 <= m - dim + k) {
                ++idx[k];
                for (std::size_t j = k + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return {member_sets.begin(), member_sets.end()};
}

}  // namespace

NewtonPolytope polytope(const std::vector<ExponentVector>& input_points) {
    if (input_points.empty()) throw std::invalid_argument("empty point set");

    // Dedupe while preserving first-appearance order.
    std::vector<ExponentVector> points;
    for (const auto& p : input_points)
        if (std::find(points.begin(), points.end(), p) == points.end())
            points.push_back(p);

    NewtonPolytope np;
    np.points = points;
    const std::size_t m = points.size();
    const std::size_t n = points.front().size();

    // Vertex test: point i is a vertex iff it cannot be written as a convex
    // combination of the other points.
    for (std::size_t i = 0; i < m; ++i) {
        LPProblem lp;
        lp.num_vars = static_cast<unsigned>(m - 1);
        lp.objective.assign(m - 1, Rat(0));
        LPConstraint sum;
        sum.row.assign(m - 1, Rat(1));
        sum.rel = Relation::Eq;
        sum.rhs = 1;
        lp.constraints.push_back(sum);
        for (std::size_t j = 0; j < n; ++j) {
            LPConstraint c;
            c.rel = Relation::Eq;
            c.rhs = static_cast<long>(points[i][j]);
            for (std::size_t k = 0; k < m; ++k)
                if (k != i) c.row.emplace_back(static_cast<long>(points[k][j]));
            lp.constraints.push_back(std::move(c));
        }
        if (solve_lp(lp).status == LPStatus::Infeasible) np.vertex_indices.push_back(i);
    }

    for (const auto& members : facet_member_sets(points)) {
        std::vector<bool> is_member(m, false);
        for (std::size_t i : members) is_member[i] = true;
        auto witness = witness_normal(points, is_member, false);
        if (!witness)
            throw std::logic_error("facet candidate failed witness verification");
        np.facets.push_back(make_face(points, members, witness->first, witness->second));
    }
    return np;
}

std::vector<Face> enumerate_faces(const NewtonPolytope& np) {
    const std::size_t m = np.points.size();

    std::set<std::vector<std::size_t>> sets;
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    sets.insert(all);  // the whole polytope is a face
    for (const auto& f : np.facets) sets.insert(f.member_indices);

    // Close under pairwise intersection; every proper face of a polytope is
    // an intersection of facets.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::size_t>> current(sets.begin(), sets.end());
        for (std::size_t a = 0; a < current.size(); ++a)
            for (std::size_t b = a + 1; b < current.size(); ++b) {
                std::vector<std::size_t> inter;
                std::set_intersection(current[a].begin(), current[a].end(),
                                      current[b].begin(), current[b].end(),
                                      std::back_inserter(inter));
                if (!inter.empty() && sets.insert(inter).second) grew = true;
            }
    }

    std::vector<std::vector<std::size_t>> ordered(sets.begin(), sets.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    std::vector<Face> faces;
    for (const auto& members : ordered) {
        std::vector<bool> is_member(m, false);
        for (std::size_t i : members) is_member[i] = true;
        auto witness = witness_normal(np.points, is_member, false);
        if (!witness)
            throw std::logic_error("face candidate failed witness verification");
        faces.push_back(make_face(np.points, members, witness->first, witness->second));
    }
    return faces;
}

SparsePolynomial face_polynomial(const SparsePolynomial& p, const Face& F) {
    SparsePolynomial out(p.arity(), p.variable_names());
    for (const auto& alpha : F.members) {
        Rat c = p.coefficient(alpha);
        if (c == 0)
            throw std::invalid_argument("face member not in the polynomial's support");
        if (dot(F.normal, alpha) != F.offset)
            throw std::invalid_argument("face normal not tight on a member");
        out.add_term(alpha, c);
    }
    for (const auto& [alpha, c] : p.terms())
        if (dot(F.normal, alpha) < F.offset)
            throw std::invalid_argument("face normal not valid for the polynomial");
    return out;
}

std::pair<SparsePolynomial, SparsePolynomial> principal_part(const SparsePolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("principal part of the zero polynomial");
    const unsigned n = p.arity();
    SparsePolynomial f_N(n, p.variable_names()), tail(n, p.variable_names());
    std::vector<ExponentVector> support = p.support();
    for (const auto& [alpha, c] : p.terms()) {
        // alpha lies on the diagram iff some strictly positive nu minimizes
        // nu . beta over the support at alpha. Scale so every nu_i >= 1.
        LPProblem lp;
        lp.num_vars = n;
        lp.objective.assign(n, Rat(0));
        lp.lower_bounds.assign(n, Rat(1));
        for (const auto& beta : support) {
            LPConstraint con;
            con.rel = Relation::GreaterEq;
            con.rhs = 0;
            for (unsigned i = 0; i < n; ++i)
                con.row.emplace_back(static_cast<long>(beta[i]) -
                                     static_cast<long>(alpha[i]));
            lp.constraints.push_back(std::move(con));
        }
        if (solve_lp(lp).status == LPStatus::Optimal)
            f_N.add_term(alpha, c);
        else
            tail.add_term(alpha, c);
    }
    return {f_N, tail};
}

std::vector<Face> diagram_faces(const SparsePolynomial& p) {
    auto [f_N, tail] = principal_part(p);
    NewtonPolytope np = polytope(f_N.support());
    std::vector<Face> out;
    for (const auto& face : enumerate_faces(np)) {
        std::vector<bool> is_member(np.points.size(), false);
        for (std::size_t i : face.member_indices) is_member[i] = true;
        auto witness = witness_normal(np.points, is_member, true);
        if (!witness) continue;  // no strictly positive normal: not compact
        out.push_back(make_face(np.points, face.member_indices, witness->first,
                                witness->second));
    }
    return out;
}

SparsePolynomial vertex_characteristic(const SparsePolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("vertex characteristic of the zero polynomial");
    NewtonPolytope np = polytope(p.support());
    SparsePolynomial out(p.arity(), p.variable_names());
    for (const auto& v : np.vertices()) out.add_term(v, Rat(1));
    return out;
}

std::optional<ConvexCombination> convex_combination(const NewtonPolytope& np,
                                                    const std::vector<Rat>& beta) {
    std::vector<ExponentVector> verts = np.vertices();
    const std::size_t d = verts.size();
    const std::size_t n = np.points.front().size();
    if (beta.size() != n)
        throw std::invalid_argument("dimension mismatch in convex combination");

    // Minimize the maximum weight t subject to beta = sum lambda_i v_i,
    // sum lambda = 1, 0 <= lambda_i <= t. Infeasible iff beta is outside
    // the hull. Variables: lambda_1..lambda_d, t.
    LPProblem lp;
    lp.num_vars = static_cast<unsigned>(d + 1);
    lp.objective.assign(d + 1, Rat(0));
    lp.objective[d] = 1;
    LPConstraint sum;
    sum.row.assign(d, Rat(1));
    sum.row.push_back(Rat(0));
    sum.rel = Relation::Eq;
    sum.rhs = 1;
    lp.constraints.push_back(sum);
    for (std::size_t j = 0; j < n; ++j) {
        LPConstraint c;
        c.rel = Relation::Eq;
        c.rhs = beta[j];
        for (std::size_t i = 0; i < d; ++i)
            c.row.emplace_back(static_cast<long>(verts[i][j]));
        c.row.push_back(Rat(0));
        lp.constraints.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < d; ++i) {
        LPConstraint c;
        c.row.assign(d + 1, Rat(0));
        c.row[i] = 1;
        c.row[d] = -1;
        c.rel = Relation::LessEq;
        c.rhs = 0;
        lp.constraints.push_back(std::move(c));
    }
    LPResult res = solve_lp(lp);
    if (res.status != LPStatus::Optimal) return std::nullopt;

    ConvexCombination cc;
    cc.target = beta;
    cc.weights.assign(res.solution.begin(), res.solution.begin() + d);
    Rat max_weight(0);
    for (const auto& w : cc.weights) max_weight = std::max(max_weight, w);
    cc.k_beta = Rat(1) / max_weight;
    return cc;
}

AnchorDecomposition anchor(const NewtonPolytope& np_of_fN, const ExponentVector& beta) {
    std::vector<ExponentVector> verts = np_of_fN.vertices();
    const std::size_t d = verts.size();
    const std::size_t n = beta.size();

    // Maximize |delta|_1 = |beta|_1 - sum_i lambda_i |v_i|_1 subject to
    // sum lambda_i v_i <= beta componentwise, lambda in the simplex.
    LPProblem lp;
    lp.num_vars = static_cast<unsigned>(d);
    lp.maximize = false;
    lp.objective.resize(d);
    for (std::size_t i = 0; i < d; ++i)
        lp.objective[i] = static_cast<long>(total_degree(verts[i]));
    LPConstraint sum;
    sum.row.assign(d, Rat(1));
    sum.rel = Relation::Eq;
    sum.rhs = 1;
    lp.constraints.push_back(sum);
    for (std::size_t j = 0; j < n; ++j) {
        LPConstraint c;
        c.rel = Relation::LessEq;
        c.rhs = static_cast<long>(beta[j]);
        for (std::size_t i = 0; i < d; ++i)
            c.row.emplace_back(static_cast<long>(verts[i][j]));
        lp.constraints.push_back(std::move(c));
    }
    LPResult res = solve_lp(lp);
    if (res.status != LPStatus::Optimal)
        throw std::runtime_error("internal inconsistency: no anchor for tail exponent");

    AnchorDecomposition a;
    a.beta = beta;
    a.beta_hat.assign(n, Rat(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.beta_hat[j] += res.solution[i] * static_cast<long>(verts[i][j]);
    a.delta.resize(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
        a.delta[j] = Rat(static_cast<long>(beta[j])) - a.beta_hat[j];
        if (a.delta[j] != 0) nonzero = true;
    }
    if (!nonzero)
        throw std::runtime_error("internal inconsistency: anchor produced delta = 0");
    auto cc = convex_combination(np_of_fN, a.beta_hat);
    if (!cc)
        throw std::runtime_error("internal inconsistency: anchor outside the hull");
    a.k_beta_hat = cc->k_beta;
    return a;
}

}  // namespace locpos
