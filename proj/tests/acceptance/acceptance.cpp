// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "modlie/modlie.hpp"

using namespace modlie;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> failures;
    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

int failed = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(secs < limit_seconds, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_seconds) + " s");
    std::printf("%s %d: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
}

SymProduct alpha_table(const FieldCtx& f, FieldElem a) {
    const FieldElem a2 = f.mul(a, a), a_a1 = f.mul(a, f.add(a, f.one())), a_am1 = f.mul(a, f.sub(a, f.one()));
    SymProduct p(f, 6);
    auto put = [&](std::size_t i, std::size_t j, FieldElem c1, std::size_t k1, FieldElem c2, std::size_t k2) {
        Vec v = zero_vec(f, 6);
        v[k1 - 1] = f.add(v[k1 - 1], c1);
        v[k2 - 1] = f.add(v[k2 - 1], c2);
        p.set(i - 1, j - 1, v);
    };
    put(1, 2, a, 3, a_a1, 5);
    put(1, 3, a_a1, 2, a2, 4);
    put(1, 4, a_a1, 3, a2, 5);
    put(1, 5, a2, 2, a, 4);
    put(2, 3, a2, 1, a_a1, 6);
    put(2, 5, a, 1, a2, 6);
    put(2, 6, a2, 3, a, 5);
    put(3, 4, a, 1, a2, 6);
    put(3, 6, a, 2, a_am1, 4);
    put(4, 5, a_a1, 1, a, 6);
    put(4, 6, a, 3, a_a1, 5);
    put(5, 6, a_a1, 2, a2, 4);
    return p;
}

std::vector<std::pair<LieAlgebra, SymProduct>> discovered;

void record(const LieAlgebra& g, const CpaResult& r) {
    for (const auto& p : r.products) discovered.emplace_back(g, p);
}

bool is_only_trivial(const CpaResult& r) { return r.complete && r.products.size() == 1 && r.products[0].is_zero(); }

}  // namespace

int main() {
    const FieldCtx f2 = FieldCtx::prime(2), f3 = FieldCtx::prime(3), f5 = FieldCtx::prime(5);

    criterion(1, "psl(3,F_3): dim 7, Der 14, Inn 7, Out 7, Out simple and non-solvable", 2.0, [&](Outcome& o) {
        const LieAlgebra s = sl(3, f3);
        const LieAlgebra g = quotient(s, center(s)).algebra;
        o.check(g.dim() == 7, "dim " + std::to_string(g.dim()));
        const DerAlgebra d = derivations(g);
        o.check(d.der_dim() == 14, "dim Der " + std::to_string(d.der_dim()));
        o.check(d.inn_dim() == 7, "dim Inn " + std::to_string(d.inn_dim()));
        o.check(d.out_dim() == 7, "dim Out " + std::to_string(d.out_dim()));
        o.check(product_space(d.out, whole(d.out), whole(d.out)).is_full(), "Out^(1) != Out");
        o.check(!out_solvability(d).length.has_value(), "Out solvable");
        const SimplicityReport r = is_simple(d.out);
        o.check(r.verdict == Simplicity::Simple, "Out not simple");
        o.check(r.method == "exhaustive", "simplicity method " + r.method);
    });

    criterion(2, "split-section search on Der(psl(3,F_3)) finds none, complete", 300.0, [&](Outcome& o) {
        const LieAlgebra s = sl(3, f3);
        for (const LieAlgebra& g : {quotient(s, center(s)).algebra, builtin("psl3f3-table")}) {
            const SplitSearchResult r = split_section_search(derivations(g), kDefaultSolverBudget);
            o.check(r.status == SplitStatus::None, std::string("status ") + to_string(r.status));
            o.check(r.nodes <= 10'000'000ull, "nodes " + std::to_string(r.nodes));
        }
    });

    criterion(3, "cpa_all(psl(3,F_3)) = {trivial}, complete", 60.0, [&](Outcome& o) {
        const LieAlgebra g = psl(3, f3);
        const CpaResult r = cpa_all(g);
        o.check(is_only_trivial(r), std::to_string(r.products.size()) + " products, complete=" + std::to_string(r.complete));
        record(g, r);
    });

    criterion(4, "g6: {trivial, adjoint} over F_2, alpha-table products over F_4", 120.0, [&](Outcome& o) {
        const LieAlgebra g = builtin("g6");
        const CpaResult r = cpa_all(g);
        o.check(r.complete, "F_2 search incomplete");
        o.check(r.products.size() == 2, std::to_string(r.products.size()) + " products over F_2");
        std::vector<std::string> tags;
        for (const auto& p : r.products) tags.push_back(to_string(classify(g, p).tag));
        o.check(tags == std::vector<std::string>{"trivial", "adjoint"}, "F_2 classification differs");
        record(g, r);

        const LieAlgebra h = extend_scalars(g, 2);
        const FieldCtx& f4 = h.ctx();
        const FieldElem t = f4.gen();
        o.check(f4.add(f4.add(f4.mul(t, t), t), f4.one()).is_zero(), "t is not a root of X^2+X+1");
        const CpaResult r4 = cpa_all(h);
        o.check(r4.complete, "F_4 search incomplete");
        o.check(r4.products.size() == 4, std::to_string(r4.products.size()) + " products over F_4");
        for (FieldElem a : {f4.zero(), f4.one(), t, f4.add(t, f4.one())}) {
            const SymProduct e = alpha_table(f4, a);
            o.check(std::count(r4.products.begin(), r4.products.end(), e) == 1, "alpha = " + f4.format(a) + " not found");
        }
        record(h, r4);
    });

    criterion(5, "centroid: w3 central simple, g6 simple but not central simple", 1.0, [&](Outcome& o) {
        const LieAlgebra w3 = builtin("w3"), g6 = builtin("g6");
        o.check(centroid(w3).dim() == 1, "w3 centroid dim " + std::to_string(centroid(w3).dim()));
        o.check(is_central_simple(w3), "w3 not central simple");
        o.check(centroid(g6).dim() == 2, "g6 centroid dim " + std::to_string(centroid(g6).dim()));
        o.check(is_simple(g6).verdict == Simplicity::Simple, "g6 not simple");
        o.check(!is_central_simple(g6), "g6 central simple");
    });

    criterion(6, "Out(sl(2,F_5)) = 0; psl(5,F_5): Der 24, Out 1, abelian", 60.0, [&](Outcome& o) {
        o.check(derivations(sl(2, f5)).out_dim() == 0, "Out(sl2) != 0");
        const LieAlgebra g = psl(5, f5);
        o.check(g.dim() == 23, "dim " + std::to_string(g.dim()));
        const DerAlgebra d = derivations(g);
        o.check(d.der_dim() == 24, "dim Der " + std::to_string(d.der_dim()));
        o.check(d.out_dim() == 1, "dim Out " + std::to_string(d.out_dim()));
        o.check(product_space(d.out, whole(d.out), whole(d.out)).is_zero(), "Out not abelian");
    });

    criterion(7, "Out(W(1;1)) length <= 1; Out(H(2;1)^(2)) length 3, Heisenberg profile", 300.0, [&](Outcome& o) {
        const auto w = out_solvability(derivations(jacobson_witt(1, f5)));
        o.check(w.length.has_value() && *w.length <= 1, "W derived length");
        const DerAlgebra d = derivations(hamiltonian_p2(f5));
        o.check(d.base.dim() == 23, "H dim " + std::to_string(d.base.dim()));
        o.check(out_solvability(d).length == std::optional<std::size_t>(3), "H derived length not 3");
        const HeisenbergProfile p = out_heisenberg_profile(d);
        o.check(p.derived_dim == 3 && p.nilpotency_class == std::optional<std::size_t>(2) &&
                    p.center_dim == std::optional<std::size_t>(1),
                "Out^(1) profile differs");
    });

    criterion(8, "central simple, p > 3: every CPA-structure is trivial", 600.0, [&](Outcome& o) {
        for (const LieAlgebra& g : {sl(2, f5), jacobson_witt(1, f5), hamiltonian_p2(f5)}) {
            o.check(is_central_simple(g), g.name() + " not central simple");
            const CpaResult r = cpa_all(g, 10 * kDefaultSolverBudget);
            o.check(is_only_trivial(r), g.name() + ": " + std::to_string(r.products.size()) + " products, complete=" +
                                            std::to_string(r.complete));
            record(g, r);
        }
    });

    criterion(9, "taut chain: sl(2,F_5) OutZero, W(1;1) OutSolvablePerfect, psl(3,F_3) NoSplitSection", 300.0, [&](Outcome& o) {
        const std::vector<std::pair<LieAlgebra, TautReason>> cases{{sl(2, f5), TautReason::OutZero},
                                                                   {jacobson_witt(1, f5), TautReason::OutSolvablePerfect},
                                                                   {psl(3, f3), TautReason::NoSplitSection}};
        for (const auto& [g, reason] : cases) {
            const TautVerdict v = is_taut(g);
            o.check(v.tag == TautTag::Taut, g.name() + ": " + to_string(v.tag));
            o.check(v.reason == reason, g.name() + ": reason " + to_string(v.reason) + ", expected " + to_string(reason) +
                                            " (dim Out = " + std::to_string(v.out_dim) + ")");
        }
    });

    criterion(10, "property suites", 600.0, [&](Outcome& o) {
        // (a), (b), (c) on every structure discovered above
        for (const auto& [g, p] : discovered) {
            const auto c = classify(g, p);
            if (!c.phi) {
                o.check(false, g.name() + ": non-inner structure");
                continue;
            }
            const EigenDecomposition e = eigen_decompose(g, *c.phi);
            const FieldCtx& F = e.field;
            Subspace sum = Subspace::zero(F, g.dim());
            std::size_t dims = 0;
            for (const auto& [a, s] : e.spaces) {
                sum = sum + s;
                dims += s.dim();
            }
            o.check(sum.is_full() && dims == g.dim(), g.name() + ": eigenspaces not a direct sum");
            for (const auto& [a, sa] : e.spaces)
                for (const auto& [b, sb] : e.spaces) {
                    const Subspace prod = product_space(e.algebra, sa, sb);
                    o.check(e.space(F.neg(F.mul(a, a))).contains(prod) && e.space(F.mul(a, b)).contains(prod) &&
                                e.space(F.neg(F.mul(b, b))).contains(prod),
                            g.name() + ": bracket containment fails");
                }
            o.check(nh_properties(e).all(), g.name() + ": n/h properties fail");
            const CommutatorReport cf = commutator_formula_check(g, *c.phi, 4);
            o.check(cf.ok && cf.depths.size() == 4, g.name() + ": commutator formula fails");
        }
        for (unsigned n = 1; n <= 4; ++n) o.check(commutator_exponent(n) == (1u << n) - 1, "f(n) != 2^n - 1");

        // (d) solver against exhaustive evaluation
        std::mt19937 rng(2024);
        for (int t = 0; t < 200; ++t) {
            const FieldCtx& f = t % 2 ? f3 : f2;
            const std::size_t n = 1 + rng() % 12;
            PolySystem s{f, n, {}, {}};
            const int neqs = 1 + rng() % 6;
            for (int e = 0; e < neqs; ++e) {
                std::vector<Term> terms;
                const int nt = 1 + rng() % 4;
                for (int k = 0; k < nt; ++k) {
                    Monomial m;
                    const int deg = rng() % 3;
                    for (int d = 0; d < deg; ++d) m.push_back(static_cast<char16_t>(rng() % n));
                    std::sort(m.begin(), m.end());
                    terms.push_back({m, f.element(1 + rng() % (f.q() - 1))});
                }
                s.add(MultiPoly(f, n, terms));
            }
            std::vector<Vec> brute;
            Vec pt(n, f.zero());
            unsigned long long total = 1;
            for (std::size_t i = 0; i < n; ++i) total *= f.q();
            for (unsigned long long idx = 0; idx < total; ++idx) {
                unsigned long long r = idx;
                for (std::size_t i = n; i-- > 0; r /= f.q()) pt[i] = f.element(r % f.q());
                if (s.satisfied_by(pt)) brute.push_back(pt);
            }
            const SolutionSet got = solve_all(s);
            o.check(got.complete && got.points == brute, "solver disagrees on system " + std::to_string(t));
        }

        // (e) validation and (f) .lie round trip on all constructors
        std::vector<LieAlgebra> all;
        for (unsigned p : {2u, 3u, 5u})
            for (std::size_t n = 2; n <= 4; ++n) {
                all.push_back(gl(n, FieldCtx::prime(p)));
                all.push_back(sl(n, FieldCtx::prime(p)));
                all.push_back(psl(n, FieldCtx::prime(p)));
            }
        for (unsigned p : {2u, 3u, 5u, 7u}) all.push_back(jacobson_witt(1, FieldCtx::prime(p)));
        all.push_back(jacobson_witt(2, f2));
        for (unsigned p : {3u, 5u, 7u}) all.push_back(hamiltonian_p2(FieldCtx::prime(p)));
        for (const auto& name : builtin_names()) all.push_back(builtin(name));
        for (const auto& g : all) {
            o.check(validate(g).ok, g.name() + " fails validation");
            const LieAlgebra back = parse_lie(print_lie(g));
            bool same = back.dim() == g.dim();
            for (std::size_t i = 0; same && i < g.dim(); ++i)
                for (std::size_t j = 0; same && j < g.dim(); ++j) same = back.bracket_basis(i, j) == g.bracket_basis(i, j);
            o.check(same, g.name() + " does not round-trip");
        }
    });

    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
