#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locpos/newton.hpp"
#include "locpos/poly.hpp"
#include "locpos/refute.hpp"

namespace locpos {

struct CertifyOptions {
    unsigned m_max = 10;
    std::size_t budget_terms = 200000;
    std::size_t budget_bits = 4096;
    std::uint64_t seed = 20240901;
};

// Outcome of the multiplier iteration on one orthant polynomial h:
// product = h (h+ - h-)^m with all coefficients nonnegative.
struct HandelmanResult {
    unsigned m = 0;
    SparsePolynomial product;
    Rat k1;  // min product coefficient over the scaled vertices (m+1)v
};

enum class HandelmanStatus { Found, NotFound, BudgetExceeded };

struct HandelmanOutcome {
    HandelmanStatus status = HandelmanStatus::NotFound;
    std::optional<HandelmanResult> result;
};

// tau = k1 / (k d)^m guarantees h >= tau * h^V on the open positive orthant.
struct TauBound {
    Rat tau;
    Rat k;       // sum over terms a_beta of (h+ - h-) of |a_beta| / k_beta
    unsigned d;  // vertex count of N(h)
    unsigned m;
};

// Orthant sign patterns collapsed by parity symmetry. equivalents includes
// the representative; the union over all classes is {+1,-1}^n.
struct OrthantClass {
    SignVector representative;
    std::vector<SignVector> equivalents;
};

struct OrthantCertificate {
    OrthantClass orthant;
    HandelmanResult handelman;
    TauBound tau;
};

struct TailAnchor {
    AnchorDecomposition anchor;
    Rat coefficient;  // a_beta of the tail term
};

struct Certificate {
    SparsePolynomial principal;
    std::vector<TailAnchor> tail_anchors;
    unsigned T = 0;  // |Sup(f_tail)|
    std::vector<OrthantCertificate> orthants;
    double radius = 0.0;  // infinity-norm box half-width, rounded toward zero
};

// Diagnostic payload for an "unknown: hypothesis-fails" verdict.
struct HypothesisFailure {
    SparsePolynomial face;          // offending face polynomial (sign-substituted)
    std::optional<std::vector<Rat>> point;
    std::optional<Rat> value;
    SignVector orthant;
    std::string description;
};

struct Verdict {
    enum class Kind { Certified, Refuted, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Certificate> certificate;
    std::optional<Witness> witness;
    std::string reason;  // "hypothesis-fails" | "budget-exhausted" | ""
    std::optional<HypothesisFailure> failure;
    bool theorem1_path = false;
};

struct HessianReport {
    bool applicable = false;
    std::vector<std::vector<Rat>> matrix;
    bool positive_definite = false;
};

struct ParityCheck {
    bool pass = false;
    std::optional<ExponentVector> vertex;
    std::string reason;
};

struct CorollaryFlags {
    bool homogeneous_pd = false;
    bool isolated_singularity = false;
};

// Sign patterns to certify, after fixing all-even variables to +1 and
// collapsing sigma ~ -sigma when every term of f_N has even total degree.
std::vector<OrthantClass> orthant_classes(const SparsePolynomial& f_N);

// Every vertex of N(f_N) must have all-even coordinates and a positive
// coefficient; a vertex is itself a face of the diagram.
ParityCheck vertex_parity_check(const SparsePolynomial& f_N);

HandelmanOutcome handelman_search(const SparsePolynomial& h, unsigned m_max,
                                  std::size_t budget_terms, std::size_t budget_bits);

TauBound tau_bound(const SparsePolynomial& h, const HandelmanResult& hr);

// Certified box half-width from the assembled certificate pieces; 1 when
// there is no tail. Double precision, rounded toward zero.
double radius_bound(const Certificate& cert);

Verdict certify_local_nonnegative(const SparsePolynomial& f,
                                  const CertifyOptions& options = {});

HessianReport hessian_check(const SparsePolynomial& f);

CorollaryFlags corollary_flags(const SparsePolynomial& f, const Verdict& verdict);

}  // namespace locpos
