#include "locpos/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace locpos {

namespace {

std::vector<SignVector> expand_patterns(const std::vector<unsigned>& free_vars,
                                        unsigned n) {
    std::vector<SignVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_vars.size()); ++mask) {
        SignVector s(n, 1);
        for (std::size_t i = 0; i < free_vars.size(); ++i)
            if (mask & (std::size_t{1} << i)) s[free_vars[i]] = -1;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<OrthantClass> orthant_classes(const SparsePolynomial& f_N) {
    if (f_N.is_zero()) throw std::invalid_argument("orthant classes of zero polynomial");
    const unsigned n = f_N.arity();

    // Variables whose exponents are all even across the support never change
    // sign substitution; fix them to +1.
    std::vector<bool> all_even(n, true);
    bool every_term_even_degree = true;
    for (const auto& [alpha, c] : f_N.terms()) {
        for (unsigned i = 0; i < n; ++i)
            if (alpha[i] % 2 == 1) all_even[i] = false;
        if (total_degree(alpha) % 2 == 1) every_term_even_degree = false;
    }
    std::vector<unsigned> free_vars, fixed_vars;
    for (unsigned i = 0; i < n; ++i)
        (all_even[i] ? fixed_vars : free_vars).push_back(i);

    // Representatives over the free variables; sigma ~ -sigma collapses when
    // every term has even total degree (f_N(-x) = f_N(x)).
    std::vector<SignVector> reps = expand_patterns(free_vars, n);
    bool global_flip = every_term_even_degree && !free_vars.empty();
    if (global_flip) {
        std::vector<SignVector> kept;
        for (const auto& s : reps)
            if (s[free_vars.front()] == 1) kept.push_back(s);
        reps = std::move(kept);
    }

    std::vector<SignVector> fixed_patterns = expand_patterns(fixed_vars, n);
    std::vector<OrthantClass> classes;
    for (const auto& rep : reps) {
        OrthantClass cls;
        cls.representative = rep;
        SignVector flipped = rep;
        for (unsigned i : free_vars) flipped[i] = -flipped[i];
        for (const auto& fixed : fixed_patterns) {
            SignVector a = rep, b = flipped;
            for (unsigned i : fixed_vars) {
                a[i] = fixed[i];
                b[i] = fixed[i];
            }
            cls.equivalents.push_back(a);
            if (global_flip) cls.equivalents.push_back(b);
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return a.representative > b.representative;  // all-plus first
    });
    return classes;
}

ParityCheck vertex_parity_check(const SparsePolynomial& f_N) {
    if (f_N.is_zero()) throw std::invalid_argument("parity check of zero polynomial");
    NewtonPolytope np = polytope(f_N.support());
    for (const auto& v : np.vertices()) {
        for (unsigned e : v)
            if (e % 2 == 1)
                return {false, v, "vertex has an odd exponent"};
        if (f_N.coefficient(v) <= 0)
            return {false, v, "vertex coefficient is not positive"};
    }
    return {true, std::nullopt, ""};
}

HandelmanOutcome handelman_search(const SparsePolynomial& h, unsigned m_max,
                                  std::size_t budget_terms, std::size_t budget_bits) {
    if (h.is_zero()) throw std::invalid_argument("Handelman search on zero polynomial");
    auto [plus, minus] = h.split_signs();
    SparsePolynomial multiplier = plus - minus;  // all coefficients positive
    std::vector<ExponentVector> verts = polytope(h.support()).vertices();

    SparsePolynomial product = h;
    for (unsigned m = 0; m <= m_max; ++m) {
        if (m > 0) product = product * multiplier;
        if (product.term_count() > budget_terms)
            return {HandelmanStatus::BudgetExceeded, std::nullopt};
        bool over_bits = false;
        bool all_nonneg = true;
        for (const auto& [alpha, c] : product.terms()) {
            if (rat_bit_size(c) > budget_bits) over_bits = true;
            if (c < 0) all_nonneg = false;
        }
        if (over_bits) return {HandelmanStatus::BudgetExceeded, std::nullopt};
        if (!all_nonneg) continue;

        // Vertex coefficients of the product sit at (m+1)v and are positive
        // whenever all coefficients are nonnegative.
        Rat k1;
        bool first = true;
        for (const auto& v : verts) {
            ExponentVector scaled(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i] * (m + 1);
            Rat c = product.coefficient(scaled);
            if (first || c < k1) k1 = c;
            first = false;
        }
        if (k1 <= 0)
            throw std::logic_error("vanishing vertex coefficient in Handelman product");
        return {HandelmanStatus::Found, HandelmanResult{m, product, k1}};
    }
    return {HandelmanStatus::NotFound, std::nullopt};
}

TauBound tau_bound(const SparsePolynomial& h, const HandelmanResult& hr) {
    NewtonPolytope np = polytope(h.support());
    auto [plus, minus] = h.split_signs();
    SparsePolynomial abs_poly = plus - minus;

    Rat k(0);
    for (const auto& [alpha, c] : abs_poly.terms()) {
        std::vector<Rat> beta;
        for (unsigned e : alpha) beta.emplace_back(static_cast<long>(e));
        auto cc = convex_combination(np, beta);
        if (!cc)
            throw std::logic_error("support exponent outside its own Newton polytope");
        k += c / cc->k_beta;
    }
    TauBound tb;
    tb.k = k;
    tb.d = static_cast<unsigned>(np.vertex_indices.size());
    tb.m = hr.m;
    tb.tau = hr.k1 / rat_pow(k * static_cast<long>(tb.d), hr.m);
    return tb;
}

double radius_bound(const Certificate& cert) {
    if (cert.T == 0) return 1.0;
    if (cert.orthants.empty())
        throw std::logic_error("radius requested before certification completed");
    Rat tau_min = cert.orthants.front().tau.tau;
    for (const auto& oc : cert.orthants) tau_min = std::min(tau_min, oc.tau.tau);

    double eps = 1.0;
    std::vector<std::pair<Rat, Rat>> checks;  // (base, l1): need eps^l1 <= base
    for (const auto& ta : cert.tail_anchors) {
        Rat l1(0);
        for (const auto& dj : ta.anchor.delta) l1 += dj;
        Rat base = tau_min * ta.anchor.k_beta_hat /
                   (Rat(static_cast<long>(cert.T)) * abs(ta.coefficient));
        double value = std::pow(base.get_d(), 1.0 / l1.get_d());
        if (value < eps) eps = value;
        checks.emplace_back(base, l1);
    }
    // Round toward zero until eps^{l1} <= base holds exactly for every
    // anchor, so the reported box stays inside the guaranteed one.
    auto sound = [&checks](double e) {
        Rat re(e);
        for (const auto& [base, l1] : checks) {
            unsigned long p = mpz_get_ui(l1.get_num_mpz_t());
            unsigned long q = mpz_get_ui(l1.get_den_mpz_t());
            if (rat_pow(re, p) > rat_pow(base, q)) return false;
        }
        return true;
    };
    eps = std::min(eps, 1.0);
    while (eps > 0.0 && !sound(eps)) eps = std::nextafter(eps, 0.0);
    return eps;
}

namespace {

// Deterministic falsification sample: all-ones, single-coordinate dyadic
// perturbations 2^{+/-k} for k <= 4, and 64 seeded pseudo-random points.
std::vector<std::vector<Rat>> sample_points(unsigned n, std::uint64_t seed) {
    std::vector<std::vector<Rat>> pts;
    pts.emplace_back(n, Rat(1));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 1; k <= 4; ++k) {
            std::vector<Rat> up(n, Rat(1)), down(n, Rat(1));
            up[i] = Rat(1L << k);
            down[i] = make_rat(1, 1L << k);
            pts.push_back(std::move(up));
            pts.push_back(std::move(down));
        }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, 16);
    for (int s = 0; s < 64; ++s) {
        std::vector<Rat> p(n);
        for (unsigned i = 0; i < n; ++i) p[i] = make_rat(dist(rng), dist(rng));
        pts.push_back(std::move(p));
    }
    return pts;
}

Verdict unknown_hypothesis(SparsePolynomial face, std::optional<std::vector<Rat>> point,
                           std::optional<Rat> value, SignVector orthant,
                           std::string description) {
    Verdict v;
    v.kind = Verdict::Kind::Unknown;
    v.reason = "hypothesis-fails";
    v.failure = HypothesisFailure{std::move(face), std::move(point), std::move(value),
                                  std::move(orthant), std::move(description)};
    return v;
}

}  // namespace

Verdict certify_local_nonnegative(const SparsePolynomial& f,
                                  const CertifyOptions& options) {
    Verdict v;
    const unsigned n = f.arity();

    // Zero polynomial: nonnegative everywhere.
    if (f.is_zero()) {
        v.kind = Verdict::Kind::Certified;
        Certificate cert{f, {}, 0, {}, 1.0};
        v.certificate = std::move(cert);
        return v;
    }

    Rat c = f.constant_term();
    if (c < 0) {
        v.kind = Verdict::Kind::Refuted;
        Witness w;
        w.point = PointWitness{std::vector<Rat>(n, Rat(0)), c};
        v.witness = std::move(w);
        return v;
    }
    if (c > 0) {
        // f(O) > 0: locally positive by continuity; crude sound radius.
        Rat total(0);
        for (const auto& [alpha, coeff] : f.terms()) total += abs(coeff);
        Rat bound = c / total;
        double eps = std::min(bound.get_d(), 1.0);
        while (eps > 0.0 && Rat(eps) > bound) eps = std::nextafter(eps, 0.0);
        v.kind = Verdict::Kind::Certified;
        Certificate cert{f, {}, 0, {}, eps};
        v.certificate = std::move(cert);
        return v;
    }

    auto [f_N, f_tail] = principal_part(f);

    ParityCheck parity = vertex_parity_check(f_N);
    if (!parity.pass) {
        SparsePolynomial vertex_face(n, f.variable_names());
        vertex_face.add_term(*parity.vertex, f_N.coefficient(*parity.vertex));
        return unknown_hypothesis(std::move(vertex_face), std::nullopt, std::nullopt,
                                  SignVector(n, 1),
                                  "vertex parity check failed: " + parity.reason);
    }

    NewtonPolytope np = polytope(f_N.support());
    std::vector<Face> faces = enumerate_faces(np);
    std::vector<OrthantClass> classes = orthant_classes(f_N);
    std::vector<std::vector<Rat>> samples = sample_points(n, options.seed);

    Certificate cert;
    cert.principal = f_N;
    bool budget_hit = false;

    for (const auto& cls : classes) {
        SparsePolynomial h = f_N.apply_signs(cls.representative);

        // Quick falsification: every face polynomial (the whole polytope
        // included) must stay positive at the sampled positive points.
        for (const auto& face : faces) {
            SparsePolynomial hf = face_polynomial(h, face);
            for (const auto& x : samples) {
                Rat value = hf.evaluate(x);
                if (value <= 0)
                    return unknown_hypothesis(hf, x, value, cls.representative,
                                              "face polynomial is not strictly "
                                              "positive at a sampled point");
            }
        }

        HandelmanOutcome outcome =
            handelman_search(h, options.m_max, options.budget_terms, options.budget_bits);
        if (outcome.status != HandelmanStatus::Found) {
            budget_hit = true;
            break;
        }
        OrthantCertificate oc;
        oc.orthant = cls;
        oc.handelman = *outcome.result;
        oc.tau = tau_bound(h, oc.handelman);
        cert.orthants.push_back(std::move(oc));
    }
    if (budget_hit) {
        v.kind = Verdict::Kind::Unknown;
        v.reason = "budget-exhausted";
        return v;
    }

    cert.T = static_cast<unsigned>(f_tail.term_count());
    for (const auto& [beta, a_beta] : f_tail.terms())
        cert.tail_anchors.push_back(TailAnchor{anchor(np, beta), a_beta});
    cert.radius = radius_bound(cert);

    v.kind = Verdict::Kind::Certified;
    v.certificate = std::move(cert);
    return v;
}

HessianReport hessian_check(const SparsePolynomial& f) {
    const unsigned n = f.arity();
    HessianReport report;
    report.matrix.assign(n, std::vector<Rat>(n, Rat(0)));

    bool applicable = f.constant_term() == 0;
    for (unsigned i = 0; i < n && applicable; ++i) {
        ExponentVector e(n, 0);
        e[i] = 1;
        if (f.coefficient(e) != 0) applicable = false;
    }
    report.applicable = applicable;

    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            ExponentVector e(n, 0);
            e[i] += 1;
            e[j] += 1;
            // d^2/dxi dxj at O: 2*coeff for xi^2, coeff for xi*xj.
            report.matrix[i][j] = (i == j) ? Rat(2) * f.coefficient(e)
                                           : f.coefficient(e);
        }

    if (!applicable) return report;

    // Sylvester: positive definite iff all leading principal minors > 0.
    report.positive_definite = true;
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> minor(k, std::vector<Rat>(k));
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) minor[i][j] = report.matrix[i][j];
        // Determinant by fraction-preserving Gaussian elimination.
        Rat det(1);
        for (unsigned col = 0; col < k; ++col) {
            unsigned sel = col;
            while (sel < k && minor[sel][col] == 0) ++sel;
            if (sel == k) {
                det = 0;
                break;
            }
            if (sel != col) {
                std::swap(minor[sel], minor[col]);
                det = -det;
            }
            det *= minor[col][col];
            for (unsigned row = col + 1; row < k; ++row) {
                if (minor[row][col] == 0) continue;
                Rat factor = minor[row][col] / minor[col][col];
                for (unsigned j2 = col; j2 < k; ++j2)
                    minor[row][j2] -= factor * minor[col][j2];
            }
        }
        if (det <= 0) {
            report.positive_definite = false;
            break;
        }
    }
    return report;
}

CorollaryFlags corollary_flags(const SparsePolynomial& f, const Verdict& verdict) {
    CorollaryFlags flags;
    if (f.is_zero() || verdict.kind != Verdict::Kind::Certified) return flags;
    auto [f_N, tail] = principal_part(f);
    flags.homogeneous_pd = f_N.is_homogeneous();

    SparsePolynomial fv = vertex_characteristic(f_N);
    flags.isolated_singularity = true;
    for (unsigned i = 0; i < f.arity(); ++i) {
        bool found = false;
        for (const auto& [alpha, c] : fv.terms()) {
            bool pure = alpha[i] > 0 && alpha[i] % 2 == 0;
            for (unsigned j = 0; j < f.arity() && pure; ++j)
                if (j != i && alpha[j] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) {
            flags.isolated_singularity = false;
            break;
        }
    }
    return flags;
}

}  // namespace locpos
