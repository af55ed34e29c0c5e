#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <set>

#include "sesquipair/gm.hpp"
#include "sesquipair/miller.hpp"

namespace sesq {

// Curve + endomorphism + field generator + seeded auxiliary-point source.
// Enumeration-backed caches are internally synchronized; the pairing
// operations themselves are pure.
class PairingContext {
public:
    PairingContext(const Curve &E, const CMEndo &endo, u64 seed = 1);

    PairingContext(const PairingContext &) = delete;
    PairingContext &operator=(const PairingContext &) = delete;

    const Curve &curve() const { return E_; }
    const CMEndo &endo() const { return endo_; }
    const QuadOrder &order() const { return endo_.order(); }
    const Fe &generator() const { return h_; }
    u64 modulus() const { return E_.q(); }
    u64 seed() const { return seed_; }
    int retry_bound() const { return retry_bound_; }

    QuadInt qi(i64 x, i64 y) const { return QuadInt(x, y, order()); }
    QuadInt tau() const { return qi(0, 1); }

    const std::vector<Point> &group() const { return points_; }
    const std::vector<Point> &kernel(const QuadInt &beta) const;
    const std::vector<Point> &cosets(const QuadInt &beta) const;
    bool in_image(const QuadInt &beta, const Point &P) const;

    std::mt19937_64 rng(u64 tag) const { return std::mt19937_64(seed_ ^ (0x9e3779b97f4a7c15ull * (tag + 1))); }
    Point sample_point(std::mt19937_64 &gen) const { return points_[gen() % points_.size()]; }

private:
    Curve E_;
    CMEndo endo_;
    Fe h_;
    u64 seed_;
    int retry_bound_ = 64;
    std::vector<Point> points_;

    mutable std::mutex mu_;
    mutable std::map<std::pair<i64, i64>, std::vector<Point>> kernels_;
    mutable std::map<std::pair<i64, i64>, std::vector<Point>> cosets_;
    mutable std::map<std::pair<i64, i64>, std::set<Point, PointCmp>> images_;
};

struct TateValue {
    Fe value;   // coset representative in F_q^*/(F_q^*)^n
    Fe reduced; // value^{(q-1)/n} in mu_n
};

// t_n(P,Q) = f_P(D_Q) with div(f_P) = n(P) - n(O), D_Q = (Q+S) - (S).
TateValue tate_classical(const Point &P, const Point &Q, i64 n,
                         const PairingContext &ctx,
                         const std::optional<Point> &aux = std::nullopt);

// e_n(P,Q) in mu_n, via f_{n,P}(Q-T) f_{n,Q}(T) / (f_{n,P}(-T) f_{n,Q}(P+T)).
Fe weil_classical(const Point &P, const Point &Q, i64 n, const PairingContext &ctx);

// T_alpha(D_P, D_Q) = f_P(D_Q), div(f_P) = conj(alpha).D_P; value modulo
// conj(alpha)-powers.
PairingValue t_alpha(const RDivisor &DP, const RDivisor &DQ, const QuadInt &alpha,
                     const PairingContext &ctx);

// W_alpha(D_P, D_Q) = f_P(D_Q) * conj(f_Q(D_P))^{-1}; exact value in
// G_m^{(x)R}[conj(alpha)].
PairingValue w_alpha(const RDivisor &DP, const RDivisor &DQ, const QuadInt &alpha,
                     const PairingContext &ctx);

// T-hat_alpha(P,Q) on points, P in E[conj(alpha)]; value modulo
// alpha-powers.  Miller construction with auxiliary point S.
PairingValue t_hat(const Point &P, const Point &Q, const QuadInt &alpha,
                   const PairingContext &ctx,
                   const std::optional<Point> &aux = std::nullopt);

// W-hat_alpha(P,Q) = W_{conj(alpha)}(eta(P), eta(Q)); exact alpha-torsion.
PairingValue w_hat(const Point &P, const Point &Q, const QuadInt &alpha,
                   const PairingContext &ctx);

// T-hat_n from classical Tate values:
// (t_n(P,Q)^{2N(tau)} t_n([-tau]P,Q)^{Tr(tau)}) (t_n([tau-conj tau]P,Q))^{tau}.
PairingValue t_hat_via_tn(const Point &P, const Point &Q, i64 n,
                          const PairingContext &ctx);

// T-hat_{N(alpha)}(P,Q) = T-hat_alpha(P,Q)^{conj(alpha)} mod alpha-powers,
// with the left side computed independently through t_hat_via_tn.
bool norm_relation_check(const Point &P, const Point &Q, const QuadInt &alpha,
                         const PairingContext &ctx);

struct ScanReport {
    QuadInt alpha;
    std::vector<Point> rows; // kernel of [conj(alpha)]
    std::vector<Point> cols; // coset representatives mod [alpha]E
    std::vector<std::vector<QuadInt>> table; // reduced residues in R/alpha R
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

// Full reduced-pairing table with left/right non-degeneracy and
// surjectivity checks for annihilator-exact inputs.
ScanReport nondegeneracy_scan(const QuadInt &alpha, const PairingContext &ctx);

struct LawResult {
    std::string name;
    int passes = 0;
    int failures = 0;
    std::string first_failure;
};

struct SuiteReport {
    std::vector<LawResult> laws;
    bool all_passed() const {
        for (const auto &l : laws)
            if (l.failures)
                return false;
        return true;
    }
};

// Randomized checks of the pairing laws (sesquilinearity, bilinearity,
// skew-Hermitianity, coherence, compatibility, norm relation, generalized
// reciprocity, product formulas, auxiliary-point independence).
SuiteReport property_suite(const QuadInt &alpha, int trials, const PairingContext &ctx);

} // namespace sesq
