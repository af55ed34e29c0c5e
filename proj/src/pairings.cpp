#include "sesquipair/pairings.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sesq {

PairingContext::PairingContext(const Curve &E, const CMEndo &endo, u64 seed)
    : E_(E), endo_(endo), h_(multiplicative_generator(PrimeField(E.q()))),
      seed_(seed), points_(enumerate_group(E)) {}

const std::vector<Point> &PairingContext::kernel(const QuadInt &beta) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(beta.x, beta.y);
    auto it = kernels_.find(key);
    if (it != kernels_.end())
        return it->second;
    std::vector<Point> ker;
    for (const Point &P : points_)
        if (apply_r(beta, P, endo_).is_infinity())
            ker.push_back(P);
    return kernels_.emplace(key, std::move(ker)).first->second;
}

const std::vector<Point> &PairingContext::cosets(const QuadInt &beta) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cosets_.find(std::make_pair(beta.x, beta.y));
        if (it != cosets_.end())
            return it->second;
    }
    std::vector<Point> reps = coset_reps_mod(beta, E_, endo_);
    std::lock_guard<std::mutex> lock(mu_);
    return cosets_.emplace(std::make_pair(beta.x, beta.y), std::move(reps)).first->second;
}

bool PairingContext::in_image(const QuadInt &beta, const Point &P) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(beta.x, beta.y);
    auto it = images_.find(key);
    if (it == images_.end()) {
        std::set<Point, PointCmp> img;
        for (const Point &Q : points_)
            img.insert(apply_r(beta, Q, endo_));
        it = images_.emplace(key, std::move(img)).first;
    }
    return it->second.count(P) > 0;
}

namespace {

// torsion level the reduced form lives at: |alpha| for integer alpha,
// N(alpha) otherwise
i64 reduction_level(const QuadInt &alpha) {
    if (alpha.y == 0)
        return alpha.x < 0 ? -alpha.x : alpha.x;
    return alpha.norm();
}

void attach_reduced(PairingValue &v, const PairingContext &ctx) {
    if (v.alpha.is_zero())
        return;
    const i64 n = reduction_level(v.alpha);
    if (n <= 0 || (ctx.modulus() - 1) % static_cast<u64>(n) != 0)
        return;
    v.reduced = reduced_form(v.raw, static_cast<u64>(n), v.alpha, ctx.generator());
}

// f = f0 * f1^{(x)tau} with div(f0) = a(u0)+b(u1)-(a+b)(z),
// div(f1) = c(u0)+d(u1)-(c+d)(z); evaluated at D = D0 + tau*D1 via
// f(D0 + tau*D1) = f(D0) * f(D1)^{conj(tau)}.
struct RFunctionPlan {
    Point u0, u1, z;
    ActionMatrix m;

    GmElement at(const IntDivisor &D0, const IntDivisor &D1, const PairingContext &ctx) const {
        GmElement v0(eval_anchored(u0, u1, m.a, m.b, z, D0),
                     eval_anchored(u0, u1, m.c, m.d, z, D0));
        GmElement v1(eval_anchored(u0, u1, m.a, m.b, z, D1),
                     eval_anchored(u0, u1, m.c, m.d, z, D1));
        return v0 * gm_pow(v1, ctx.tau().conj());
    }
};

IntDivisor translated_pair(const Point &P, const Point &S) {
    return IntDivisor{{P + S, 1}, {S, -1}};
}

std::string describe(const QuadInt &q) { return q.str(); }

} // namespace

TateValue tate_classical(const Point &P, const Point &Q, i64 n,
                         const PairingContext &ctx, const std::optional<Point> &aux) {
    if (n < 1)
        throw Error("tate pairing needs n >= 1");
    if ((ctx.modulus() - 1) % static_cast<u64>(n) != 0)
        throw HypothesisViolated("n does not divide q-1");
    if (!scalar_mul(P, n).is_infinity())
        throw NotInKernel("P is not n-torsion");
    auto gen = ctx.rng(0x7a7e + static_cast<u64>(n));
    for (int attempt = 0; attempt < ctx.retry_bound(); ++attempt) {
        const Point S = aux ? *aux : ctx.sample_point(gen);
        try {
            const Fe v = miller_h(P, n, translated_pair(Q, S));
            return TateValue{v, v.pow(static_cast<i64>((ctx.modulus() - 1) / static_cast<u64>(n)))};
        } catch (const ZeroEvaluation &) {
            if (aux)
                throw;
        } catch (const SupportCollision &) {
            if (aux)
                throw;
        }
    }
    throw RetriesExhausted("no auxiliary point gave disjoint supports");
}

Fe weil_classical(const Point &P, const Point &Q, i64 n, const PairingContext &ctx) {
    if (n < 1)
        throw Error("weil pairing needs n >= 1");
    if (!scalar_mul(P, n).is_infinity() || !scalar_mul(Q, n).is_infinity())
        throw NotInKernel("inputs are not n-torsion");
    auto gen = ctx.rng(0x3e11 + static_cast<u64>(n));
    for (int attempt = 0; attempt < ctx.retry_bound(); ++attempt) {
        const Point T = ctx.sample_point(gen);
        if (T.is_infinity() || T == -P || T == Q || T == Q - P)
            continue;
        try {
            const Fe num = miller_h(P, n, IntDivisor{{Q - T, 1}, {-T, -1}});
            const Fe den = miller_h(Q, n, IntDivisor{{P + T, 1}, {T, -1}});
            return num / den;
        } catch (const ZeroEvaluation &) {
        } catch (const SupportCollision &) {
        }
    }
    throw RetriesExhausted("no auxiliary point gave disjoint supports");
}

PairingValue t_alpha(const RDivisor &DP, const RDivisor &DQ, const QuadInt &alpha,
                     const PairingContext &ctx) {
    if (alpha.is_zero())
        throw Error("alpha must be nonzero");
    const QuadInt ca = alpha.conj();
    if (!canonical_form(ca * DP, ctx.curve(), ctx.order()).is_zero())
        throw NotInKernel("D_P is not conj(alpha)-torsion in Pic");
    const CanonicalPair p = canonical_form(DP, ctx.curve(), ctx.order());
    const CanonicalPair q = canonical_form(DQ, ctx.curve(), ctx.order());
    const RFunctionPlan f{p.p0, p.p1, ctx.curve().infinity(), action_matrix(ca)};
    auto gen = ctx.rng(0x7a1f);
    for (int attempt = 0; attempt < ctx.retry_bound(); ++attempt) {
        const Point S = ctx.sample_point(gen);
        try {
            PairingValue out{f.at(translated_pair(q.p0, S), translated_pair(q.p1, S), ctx), ca, std::nullopt};
            attach_reduced(out, ctx);
            return out;
        } catch (const ZeroEvaluation &) {
        } catch (const SupportCollision &) {
        }
    }
    throw RetriesExhausted("no auxiliary point gave disjoint supports");
}

PairingValue w_alpha(const RDivisor &DP, const RDivisor &DQ, const QuadInt &alpha,
                     const PairingContext &ctx) {
    if (alpha.is_zero())
        throw Error("alpha must be nonzero");
    const QuadInt ca = alpha.conj();
    if (!canonical_form(ca * DP, ctx.curve(), ctx.order()).is_zero())
        throw NotInKernel("D_P is not conj(alpha)-torsion in Pic");
    if (!canonical_form(alpha * DQ, ctx.curve(), ctx.order()).is_zero())
        throw NotInKernel("D_Q is not alpha-torsion in Pic");
    const CanonicalPair p = canonical_form(DP, ctx.curve(), ctx.order());
    const CanonicalPair q = canonical_form(DQ, ctx.curve(), ctx.order());
    auto gen = ctx.rng(0x3a1f);
    for (int attempt = 0; attempt < ctx.retry_bound(); ++attempt) {
        const Point S1 = ctx.sample_point(gen);
        const Point S2 = ctx.sample_point(gen);
        try {
            const RFunctionPlan fP{p.p0 + S1, p.p1 + S1, S1, action_matrix(ca)};
            const RFunctionPlan fQ{q.p0 + S2, q.p1 + S2, S2, action_matrix(alpha)};
            const GmElement fP_DQ = fP.at(translated_pair(q.p0, S2), translated_pair(q.p1, S2), ctx);
            const GmElement fQ_DP = fQ.at(translated_pair(p.p0, S1), translated_pair(p.p1, S1), ctx);
            const GmElement raw = fP_DQ * gm_conj(fQ_DP, ctx.order()).inv();
            if (gm_pow(raw, ca) != GmElement::one(ctx.modulus()))
                throw Error("weil value is not conj(alpha)-torsion");
            return PairingValue{raw, ctx.qi(0, 0), std::nullopt};
        } catch (const ZeroEvaluation &) {
        } catch (const SupportCollision &) {
        }
    }
    throw RetriesExhausted("no auxiliary point gave disjoint supports");
}

PairingValue t_hat(const Point &P, const Point &Q, const QuadInt &alpha,
                   const PairingContext &ctx, const std::optional<Point> &aux) {
    if (alpha.is_zero())
        throw Error("alpha must be nonzero");
    if (alpha.ord != ctx.order())
        throw OrderMismatch("alpha from a different order");
    if (!apply_r(alpha.conj(), P, ctx.endo()).is_infinity())
        throw NotInKernel("P is not conj(alpha)-torsion");
    const QuadInt mtau = -ctx.tau();
    const RFunctionPlan f{apply_r(mtau, P, ctx.endo()), P, ctx.curve().infinity(),
                          action_matrix(alpha)};
    auto gen = ctx.rng(0x7417);
    for (int attempt = 0; attempt < ctx.retry_bound(); ++attempt) {
        const Point S = aux ? *aux : ctx.sample_point(gen);
        try {
            const Point QS = Q + S;
            const IntDivisor DQ1{{apply_r(mtau, QS, ctx.endo()), 1}, {apply_r(mtau, S, ctx.endo()), -1}};
            const IntDivisor DQ2{{QS, 1}, {S, -1}};
            PairingValue out{f.at(DQ1, DQ2, ctx), alpha, std::nullopt};
            attach_reduced(out, ctx);
            return out;
        } catch (const ZeroEvaluation &) {
            if (aux)
                throw;
        } catch (const SupportCollision &) {
            if (aux)
                throw;
        }
    }
    throw RetriesExhausted("no auxiliary point gave disjoint supports");
}

PairingValue w_hat(const Point &P, const Point &Q, const QuadInt &alpha,
                   const PairingContext &ctx) {
    if (!apply_r(alpha.conj(), P, ctx.endo()).is_infinity())
        throw NotInKernel("P is not conj(alpha)-torsion");
    if (!apply_r(alpha, Q, ctx.endo()).is_infinity())
        throw NotInKernel("Q is not alpha-torsion");
    PairingValue out = w_alpha(eta(P, ctx.endo()), eta(Q, ctx.endo()), alpha.conj(), ctx);
    if (gm_pow(out.raw, alpha) != GmElement::one(ctx.modulus()))
        throw Error("w_hat value is not alpha-torsion");
    return out;
}

PairingValue t_hat_via_tn(const Point &P, const Point &Q, i64 n, const PairingContext &ctx) {
    if (!scalar_mul(P, n).is_infinity())
        throw NotInKernel("P is not n-torsion");
    const QuadOrder &ord = ctx.order();
    const Fe t1 = tate_classical(P, Q, n, ctx).value;
    const Fe t2 = tate_classical(apply_r(-ctx.tau(), P, ctx.endo()), Q, n, ctx).value;
    // [tau - conj(tau)] = [2 tau - Tr(tau)]
    const Fe t3 = tate_classical(apply_r(ctx.qi(-ord.t, 2), P, ctx.endo()), Q, n, ctx).value;
    const GmElement raw(t1.pow(2 * ord.n) * t2.pow(ord.t), t3);
    PairingValue out{raw, ctx.qi(n, 0), std::nullopt};
    attach_reduced(out, ctx);
    return out;
}

bool norm_relation_check(const Point &P, const Point &Q, const QuadInt &alpha,
                         const PairingContext &ctx) {
    const PairingValue lhs = t_hat_via_tn(P, Q, alpha.norm(), ctx);
    const PairingValue rhs = t_hat(P, Q, alpha, ctx);
    return equal_mod_alpha_powers(lhs.raw, gm_pow(rhs.raw, alpha.conj()), alpha, ctx.generator());
}

ScanReport nondegeneracy_scan(const QuadInt &alpha, const PairingContext &ctx) {
    ScanReport rep;
    rep.alpha = alpha;
    const i64 N = alpha.norm();
    const u64 q = ctx.modulus();
    std::vector<std::string> broken;
    if (N <= 0 || std::gcd(static_cast<u64>(N), q) != 1)
        broken.push_back("N(alpha) shares a factor with the field characteristic");
    const i64 disc = alpha.ord.discriminant();
    if (N > 0 && std::gcd(N, disc < 0 ? -disc : disc) != 1)
        broken.push_back("N(alpha) shares a factor with the discriminant of R");
    if (N > 0 && (q - 1) % static_cast<u64>(N) != 0)
        broken.push_back("mu_{N(alpha)} is not contained in F_q");
    if (!broken.empty()) {
        std::string msg;
        for (const auto &b : broken)
            msg += (msg.empty() ? "" : "; ") + b;
        throw HypothesisViolated(msg);
    }

    rep.rows = ctx.kernel(alpha.conj());
    rep.cols = ctx.cosets(alpha);
    const ResidueRing ring(alpha);
    const i64 level = reduction_level(alpha);

    rep.table.resize(rep.rows.size());
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        rep.table[i].reserve(rep.cols.size());
        for (size_t j = 0; j < rep.cols.size(); ++j) {
            PairingValue v = t_hat(rep.rows[i], rep.cols[j], alpha, ctx);
            if (!v.reduced)
                v.reduced = reduced_form(v.raw, static_cast<u64>(level), alpha, ctx.generator());
            rep.table[i].push_back(*v.reduced);
        }
    }

    const QuadInt zero = ctx.qi(0, 0);
    // (i) left non-degeneracy
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        if (rep.rows[i].is_infinity())
            continue;
        bool hit = false;
        for (const QuadInt &v : rep.table[i])
            if (!(v == zero))
                hit = true;
        if (!hit)
            rep.violations.push_back("row " + rep.rows[i].str() + " pairs trivially with everything");
    }
    // (ii) right non-degeneracy
    for (size_t j = 0; j < rep.cols.size(); ++j) {
        if (ctx.in_image(alpha, rep.cols[j]))
            continue;
        bool hit = false;
        for (size_t i = 0; i < rep.rows.size(); ++i)
            if (!(rep.table[i][j] == zero))
                hit = true;
        if (!hit)
            rep.violations.push_back("column " + rep.cols[j].str() + " pairs trivially with everything");
    }
    // (iii) surjectivity for annihilator-exact inputs
    const auto reps = ring.representatives();
    const ResidueRing conj_ring(alpha.conj());
    const auto conj_reps = conj_ring.representatives();
    auto residue_set = [&](const std::vector<QuadInt> &vals) {
        std::set<std::pair<i64, i64>> s;
        for (const QuadInt &v : vals)
            s.insert({v.x, v.y});
        return s;
    };
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        std::set<std::pair<u64, u64>> orbit;
        for (const QuadInt &r : conj_reps) {
            const Point T = apply_r(QuadInt(r.x, r.y, ctx.order()), rep.rows[i], ctx.endo());
            orbit.insert({T.is_infinity() ? q : T.x.v, T.is_infinity() ? q : T.y.v});
        }
        if (static_cast<i64>(orbit.size()) != N)
            continue; // annihilator strictly larger than conj(alpha)R
        if (residue_set(rep.table[i]).size() != static_cast<size_t>(N))
            rep.violations.push_back("annihilator-exact row " + rep.rows[i].str() +
                                     " is not surjective onto R/alpha R");
    }
    for (size_t j = 0; j < rep.cols.size(); ++j) {
        // orbit size of the column's class in E/[alpha]E
        std::vector<Point> orbit;
        for (const QuadInt &r : reps)
            orbit.push_back(apply_r(QuadInt(r.x, r.y, ctx.order()), rep.cols[j], ctx.endo()));
        size_t classes = 0;
        std::vector<char> seen(orbit.size(), 0);
        for (size_t u = 0; u < orbit.size(); ++u) {
            if (seen[u])
                continue;
            ++classes;
            for (size_t v = u; v < orbit.size(); ++v)
                if (!seen[v] && ctx.in_image(alpha, orbit[u] - orbit[v]))
                    seen[v] = 1;
        }
        if (static_cast<i64>(classes) != N)
            continue;
        std::vector<QuadInt> colvals;
        for (size_t i = 0; i < rep.rows.size(); ++i)
            colvals.push_back(rep.table[i][j]);
        if (residue_set(colvals).size() != static_cast<size_t>(N))
            rep.violations.push_back("annihilator-exact column " + rep.cols[j].str() +
                                     " is not surjective onto R/alpha R");
    }
    return rep;
}

namespace {

struct Sampler {
    const PairingContext &ctx;
    std::mt19937_64 gen;

    Point point() { return ctx.group()[gen() % ctx.group().size()]; }
    Point from(const std::vector<Point> &pool) {
        if (pool.empty())
            throw Error("empty sampling pool");
        return pool[gen() % pool.size()];
    }
    QuadInt coeff(i64 lo = -4, i64 hi = 4) {
        const u64 span = static_cast<u64>(hi - lo + 1);
        return ctx.qi(lo + static_cast<i64>(gen() % span), lo + static_cast<i64>(gen() % span));
    }
    i64 pick(const std::vector<i64> &v) { return v[gen() % v.size()]; }
};

// random principal integer plan a(U0) + b(U1) - (a+b)(Z) with [a]U0+[b]U1=O
bool random_plan(Sampler &s, const PairingContext &ctx, Point &u0, Point &u1,
                 i64 &a, i64 &b, const Point &z) {
    for (int tries = 0; tries < 32; ++tries) {
        a = static_cast<i64>(s.gen() % 7) - 3;
        b = static_cast<i64>(s.gen() % 7) - 3;
        if (a == 0 && b == 0)
            continue;
        u1 = s.point();
        const Point target = -scalar_mul(u1, b);
        std::vector<Point> cands;
        for (const Point &P : ctx.group())
            if (scalar_mul(P, a) == target)
                cands.push_back(P);
        if (cands.empty())
            continue;
        u0 = cands[s.gen() % cands.size()];
        return true;
    }
    return false;
}

} // namespace

SuiteReport property_suite(const QuadInt &alpha, int trials, const PairingContext &ctx) {
    SuiteReport report;
    const QuadInt ca = alpha.conj();
    const QuadInt tau = ctx.tau();
    const Fe h = ctx.generator();
    const u64 q = ctx.modulus();
    const GmElement one = GmElement::one(q);
    const std::vector<Point> &kerL = ctx.kernel(ca);   // left slot of T-hat/W-hat
    const std::vector<Point> &kerR = ctx.kernel(alpha); // right slot of W-hat

    // torsion levels with rational full torsion and n | q-1, for the
    // integer-n product-formula laws
    std::vector<i64> levels;
    for (i64 n = 2; n <= 25; ++n) {
        if ((q - 1) % static_cast<u64>(n) != 0)
            continue;
        const auto &ker = ctx.kernel(ctx.qi(n, 0));
        if (ker.size() == static_cast<size_t>(n) * static_cast<size_t>(n))
            levels.push_back(n);
    }

    // small beta pool for coherence/compatibility draws
    std::vector<QuadInt> betas;
    for (i64 x = -2; x <= 2; ++x) {
        for (i64 y = -2; y <= 2; ++y) {
            const QuadInt beta = ctx.qi(x, y);
            if (beta.is_zero() || beta.norm() > 8)
                continue;
            if (ctx.kernel((alpha * beta).conj()).size() > 1)
                betas.push_back(beta);
        }
    }

    auto run = [&](const std::string &name, u64 tag,
                   const std::function<std::optional<std::string>(Sampler &)> &law) {
        LawResult r;
        r.name = name;
        for (int t = 0; t < trials; ++t) {
            Sampler s{ctx, ctx.rng(tag * 1000003ull + static_cast<u64>(t))};
            try {
                auto fail = law(s);
                if (fail) {
                    ++r.failures;
                    if (r.first_failure.empty())
                        r.first_failure = *fail;
                } else {
                    ++r.passes;
                }
            } catch (const Error &e) {
                ++r.failures;
                if (r.first_failure.empty())
                    r.first_failure = std::string("error: ") + e.what();
            }
        }
        report.laws.push_back(std::move(r));
    };

    run("tate-sesquilinearity", 1, [&](Sampler &s) -> std::optional<std::string> {
        const Point P = s.from(kerL);
        const Point Q = s.point();
        const QuadInt g = s.coeff(), d = s.coeff();
        const PairingValue base = t_hat(P, Q, alpha, ctx);
        const PairingValue lhs = t_hat(apply_r(g, P, ctx.endo()), apply_r(d, Q, ctx.endo()), alpha, ctx);
        if (equal_mod_alpha_powers(lhs.raw, gm_pow(base.raw, g.conj() * d), alpha, h))
            return std::nullopt;
        return "gamma=" + describe(g) + " delta=" + describe(d) + " P=" + P.str() + " Q=" + Q.str();
    });

    run("tate-bilinearity", 2, [&](Sampler &s) -> std::optional<std::string> {
        const Point P1 = s.from(kerL), P2 = s.from(kerL);
        const Point Q1 = s.point(), Q2 = s.point();
        const GmElement left = t_hat(P1 + P2, Q1, alpha, ctx).raw;
        const GmElement right = t_hat(P1, Q1, alpha, ctx).raw * t_hat(P2, Q1, alpha, ctx).raw;
        if (!equal_mod_alpha_powers(left, right, alpha, h))
            return "left slot at P1=" + P1.str() + " P2=" + P2.str();
        const GmElement l2 = t_hat(P1, Q1 + Q2, alpha, ctx).raw;
        const GmElement r2 = t_hat(P1, Q1, alpha, ctx).raw * t_hat(P1, Q2, alpha, ctx).raw;
        if (!equal_mod_alpha_powers(l2, r2, alpha, h))
            return "right slot at Q1=" + Q1.str() + " Q2=" + Q2.str();
        return std::nullopt;
    });

    run("weil-sesquilinearity", 3, [&](Sampler &s) -> std::optional<std::string> {
        const Point P = s.from(kerL);
        const Point Q = s.from(kerR);
        const QuadInt g = s.coeff(), d = s.coeff();
        const PairingValue base = w_hat(P, Q, alpha, ctx);
        const PairingValue lhs = w_hat(apply_r(g, P, ctx.endo()), apply_r(d, Q, ctx.endo()), alpha, ctx);
        if (lhs.raw == gm_pow(base.raw, d * g.conj()))
            return std::nullopt;
        return "gamma=" + describe(g) + " delta=" + describe(d);
    });

    run("weil-skew-hermitian", 4, [&](Sampler &s) -> std::optional<std::string> {
        const Point P = s.from(kerL);
        const Point Q = s.from(kerR);
        const GmElement lhs = w_hat(P, Q, alpha, ctx).raw;
        const GmElement rhs = gm_conj(w_hat(Q, P, ca, ctx).raw, ctx.order()).inv();
        if (lhs == rhs)
            return std::nullopt;
        return "P=" + P.str() + " Q=" + Q.str();
    });

    run("tate-coherence", 5, [&](Sampler &s) -> std::optional<std::string> {
        if (betas.empty())
            return std::nullopt;
        const QuadInt beta = betas[s.gen() % betas.size()];
        const QuadInt ab = alpha * beta;
        const Point P = s.from(ctx.kernel(ab.conj()));
        const Point Q = s.point();
        const GmElement lhs = t_hat(P, Q, ab, ctx).raw;
        const GmElement rhs = t_hat(apply_r(beta.conj(), P, ctx.endo()), Q, alpha, ctx).raw;
        if (!equal_mod_alpha_powers(lhs, rhs, alpha, h))
            return "form 1, beta=" + describe(beta) + " P=" + P.str();
        const Point P2 = s.from(ctx.kernel(beta.conj()));
        const GmElement lhs2 = t_hat(P2, Q, alpha * beta, ctx).raw;
        const GmElement rhs2 = t_hat(P2, apply_r(alpha, Q, ctx.endo()), beta, ctx).raw;
        if (!equal_mod_alpha_powers(lhs2, rhs2, beta, h))
            return "form 2, beta=" + describe(beta) + " P=" + P2.str();
        return std::nullopt;
    });

    run("weil-coherence", 6, [&](Sampler &s) -> std::optional<std::string> {
        if (betas.empty())
            return std::nullopt;
        const QuadInt beta = betas[s.gen() % betas.size()];
        const QuadInt ab = alpha * beta;
        const Point P = s.from(ctx.kernel(ab.conj()));
        const Point Q = s.from(ctx.kernel(ab));
        const GmElement lhs = w_hat(P, Q, ab, ctx).raw;
        const GmElement rhs = w_hat(apply_r(beta.conj(), P, ctx.endo()), Q, alpha, ctx).raw;
        if (lhs != rhs)
            return "form 1, beta=" + describe(beta);
        const GmElement rhs2 = w_hat(P, apply_r(alpha, Q, ctx.endo()), beta, ctx).raw;
        if (lhs != rhs2)
            return "form 2, beta=" + describe(beta);
        return std::nullopt;
    });

    run("compatibility-deg-phi", 7, [&](Sampler &s) -> std::optional<std::string> {
        const QuadInt beta = s.coeff(-3, 3);
        if (beta.is_zero())
            return std::nullopt;
        const Point P = s.from(kerL);
        const Point Q = s.point();
        const GmElement lhs = t_hat(apply_r(beta, P, ctx.endo()), apply_r(beta, Q, ctx.endo()), alpha, ctx).raw;
        const GmElement rhs = gm_pow(t_hat(P, Q, alpha, ctx).raw, ctx.qi(beta.norm(), 0));
        if (!equal_mod_alpha_powers(lhs, rhs, alpha, h))
            return "tate side, beta=" + describe(beta);
        const Point Pw = s.from(kerL), Qw = s.from(kerR);
        const GmElement lw = w_hat(apply_r(beta, Pw, ctx.endo()), apply_r(beta, Qw, ctx.endo()), alpha, ctx).raw;
        const GmElement rw = gm_pow(w_hat(Pw, Qw, alpha, ctx).raw, ctx.qi(beta.norm(), 0));
        if (lw != rw)
            return "weil side, beta=" + describe(beta);
        return std::nullopt;
    });

    run("norm-relation", 8, [&](Sampler &s) -> std::optional<std::string> {
        const Point P = s.from(kerL);
        const Point Q = s.point();
        if (norm_relation_check(P, Q, alpha, ctx))
            return std::nullopt;
        return "P=" + P.str() + " Q=" + Q.str();
    });

    run("weil-reciprocity", 9, [&](Sampler &s) -> std::optional<std::string> {
        for (int tries = 0; tries < 16; ++tries) {
            const Point Zf = s.point(), Zg = s.point();
            if (Zf.is_infinity() || Zg.is_infinity())
                continue;
            Point f00, f01, f10, f11, g00, g01, g10, g11;
            i64 fa, fb, fc, fd, ga, gb, gc, gd;
            if (!random_plan(s, ctx, f00, f01, fa, fb, Zf) || !random_plan(s, ctx, f10, f11, fc, fd, Zf) ||
                !random_plan(s, ctx, g00, g01, ga, gb, Zg) || !random_plan(s, ctx, g10, g11, gc, gd, Zg))
                continue;
            auto plan_divisor = [](const Point &u0, const Point &u1, i64 a, i64 b, const Point &z) {
                return normalize_divisor(IntDivisor{{u0 + z, a}, {u1 + z, b}, {z, -(a + b)}});
            };
            // f-pieces anchored at Zf: divisors of f0, f1
            const IntDivisor df0 = plan_divisor(f00, f01, fa, fb, Zf);
            const IntDivisor df1 = plan_divisor(f10, f11, fc, fd, Zf);
            const IntDivisor dg0 = plan_divisor(g00, g01, ga, gb, Zg);
            const IntDivisor dg1 = plan_divisor(g10, g11, gc, gd, Zg);
            try {
                auto eval_rfun = [&](const Point &u0a, const Point &u1a, i64 a0, i64 b0,
                                     const Point &u0b, const Point &u1b, i64 a1, i64 b1,
                                     const Point &z, const IntDivisor &D0, const IntDivisor &D1) {
                    GmElement v0(eval_anchored(u0a + z, u1a + z, a0, b0, z, D0),
                                 eval_anchored(u0b + z, u1b + z, a1, b1, z, D0));
                    GmElement v1(eval_anchored(u0a + z, u1a + z, a0, b0, z, D1),
                                 eval_anchored(u0b + z, u1b + z, a1, b1, z, D1));
                    return v0 * gm_pow(v1, tau.conj());
                };
                const GmElement f_divg = eval_rfun(f00, f01, fa, fb, f10, f11, fc, fd, Zf, dg0, dg1);
                const GmElement g_divf = eval_rfun(g00, g01, ga, gb, g10, g11, gc, gd, Zg, df0, df1);
                if (f_divg == gm_conj(g_divf, ctx.order()))
                    return std::nullopt;
                return std::string("f(div g) != conj(g(div f))");
            } catch (const ZeroEvaluation &) {
                continue;
            } catch (const SupportCollision &) {
                continue;
            } catch (const NonPrincipalDivisor &) {
                continue;
            }
        }
        return std::nullopt; // could not build disjoint functions this trial
    });

    run("tn-product-formula", 10, [&](Sampler &s) -> std::optional<std::string> {
        if (levels.empty())
            return std::nullopt;
        const i64 n = s.pick(levels);
        const auto &torsion = ctx.kernel(ctx.qi(n, 0));
        const Point P0 = s.from(torsion), P1 = s.from(torsion);
        const Point Q0 = s.point(), Q1 = s.point();
        const Point O = ctx.curve().infinity();
        RDivisor DP, DQ;
        DP.add_term(P0, ctx.qi(1, 0)).add_term(O, ctx.qi(-1, 0));
        DP.add_term(P1, tau).add_term(O, -tau);
        DQ.add_term(Q0, ctx.qi(1, 0)).add_term(O, ctx.qi(-1, 0));
        DQ.add_term(Q1, tau).add_term(O, -tau);
        const GmElement lhs = t_alpha(DP, DQ, ctx.qi(n, 0), ctx).raw;
        auto lift = [&](const Fe &t, const QuadInt &e) { return gm_pow(GmElement(t, Fe(1, q)), e); };
        const Point Ps[2] = {P0, P1};
        const Point Qs[2] = {Q0, Q1};
        const QuadInt taus[2] = {ctx.qi(1, 0), tau};
        GmElement rhs = one;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                rhs = rhs * lift(tate_classical(Ps[i], Qs[j], n, ctx).value, taus[j].conj() * taus[i]);
        if (equal_mod_alpha_powers(lhs, rhs, ctx.qi(n, 0), h))
            return std::nullopt;
        return "n=" + std::to_string(n);
    });

    run("en-product-formula", 11, [&](Sampler &s) -> std::optional<std::string> {
        if (levels.empty())
            return std::nullopt;
        const i64 n = s.pick(levels);
        const auto &torsion = ctx.kernel(ctx.qi(n, 0));
        const Point P0 = s.from(torsion), P1 = s.from(torsion);
        const Point Q0 = s.from(torsion), Q1 = s.from(torsion);
        const Point O = ctx.curve().infinity();
        RDivisor DP, DQ;
        DP.add_term(P0, ctx.qi(1, 0)).add_term(O, ctx.qi(-1, 0));
        DP.add_term(P1, tau).add_term(O, -tau);
        DQ.add_term(Q0, ctx.qi(1, 0)).add_term(O, ctx.qi(-1, 0));
        DQ.add_term(Q1, tau).add_term(O, -tau);
        const GmElement lhs = w_alpha(DP, DQ, ctx.qi(n, 0), ctx).raw;
        auto lift = [&](const Fe &t, const QuadInt &e) { return gm_pow(GmElement(t, Fe(1, q)), e); };
        const Point Ps[2] = {P0, P1};
        const Point Qs[2] = {Q0, Q1};
        const QuadInt taus[2] = {ctx.qi(1, 0), tau};
        GmElement rhs = one;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                rhs = rhs * lift(weil_classical(Ps[i], Qs[j], n, ctx), taus[j].conj() * taus[i]);
        if (lhs == rhs)
            return std::nullopt;
        return "n=" + std::to_string(n);
    });

    run("aux-independence", 12, [&](Sampler &s) -> std::optional<std::string> {
        const Point P = s.from(kerL);
        const Point Q = s.point();
        const Point S1 = s.point(), S2 = s.point();
        std::optional<GmElement> v1, v2;
        try {
            v1 = t_hat(P, Q, alpha, ctx, S1).raw;
        } catch (const Error &) {
        }
        try {
            v2 = t_hat(P, Q, alpha, ctx, S2).raw;
        } catch (const Error &) {
        }
        if (!v1 || !v2)
            return std::nullopt; // collision; vacuous draw
        if (equal_mod_alpha_powers(*v1, *v2, alpha, h))
            return std::nullopt;
        return "S1=" + S1.str() + " S2=" + S2.str();
    });

    run("divisor-sesquilinearity", 13, [&](Sampler &s) -> std::optional<std::string> {
        // eta twists torsion: P in E[alpha] gives eta(P) in Pic[conj(alpha)]
        const Point P = s.from(kerR);
        const Point Q0 = s.point(), Q1 = s.point();
        const Point O = ctx.curve().infinity();
        const RDivisor DP = eta(P, ctx.endo());
        RDivisor DQ;
        DQ.add_term(Q0, ctx.qi(1, 0)).add_term(O, ctx.qi(-1, 0));
        DQ.add_term(Q1, tau).add_term(O, -tau);
        const QuadInt g = s.coeff(), d = s.coeff();
        const QuadInt mod = ca; // T_alpha is valued modulo conj(alpha)-powers
        const GmElement base = t_alpha(DP, DQ, alpha, ctx).raw;
        const GmElement lhs = t_alpha(g * DP, d * DQ, alpha, ctx).raw;
        if (equal_mod_alpha_powers(lhs, gm_pow(base, d.conj() * g), mod, h))
            return std::nullopt;
        return "gamma=" + describe(g) + " delta=" + describe(d);
    });

    run("preimage-oracle", 14, [&](Sampler &s) -> std::optional<std::string> {
        const Point P = s.from(kerR);
        const Point S0 = s.point(), S1 = s.point();
        const Point O = ctx.curve().infinity();
        const RDivisor DP = eta(P, ctx.endo());
        RDivisor DS;
        DS.add_term(S0, ctx.qi(1, 0)).add_term(O, ctx.qi(-1, 0));
        DS.add_term(S1, tau).add_term(O, -tau);
        const GmElement lhs = t_alpha(DP, ca * DS, alpha, ctx).raw;
        const GmElement rhs = t_alpha(DP, DS, ctx.qi(alpha.norm(), 0), ctx).raw;
        if (equal_mod_alpha_powers(lhs, rhs, ca, h))
            return std::nullopt;
        return "P=" + P.str();
    });

    return report;
}

} // namespace sesq
