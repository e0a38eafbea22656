// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include "lk/suites.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lk;

namespace {

const FieldDescriptor kQr = FieldDescriptor::ratfunc();

// Collects failures for one criterion; the first few are printed.
struct Tally {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    void absorb(const CheckList& cl, const std::string& prefix) {
        for (const Check& c : cl) expect(c.pass, prefix + c.name);
    }
    void absorb(const SuiteReport& rep) {
        for (const CaseResult& r : rep.results)
            absorb(r.checks, "n=" + std::to_string(r.n) + " " + r.case_label + ": ");
    }
};

SuiteReport suite(const std::string& name, int lo, int hi) {
    SuiteConfig cfg;
    cfg.suite = name;
    cfg.n_min = lo;
    cfg.n_max = hi;
    return run_suite(cfg);
}

std::size_t tri(int n) { return static_cast<std::size_t>((n - 1) * (n - 2) / 2); }

FieldElement scaled(int sign, const FieldElement& x) { return FieldElement::from_rational(kQr, sign) * x; }

void relations(Tally& t) {
    const SuiteReport rep = suite("relations", 3, 7);
    t.absorb(rep);
    // Six values of l for each of five n.
    t.expect(rep.results.size() == 30, "30 (n, l) cases");
}

void genericity(Tally& t) {
    for (int n = 3; n <= 7; ++n) {
        const GenericityReport g = genericity_probe(n, 5, 1);
        t.expect(g.trials.size() == 5, "n=" + std::to_string(n) + " five trials");
        for (const GenericityTrial& tr : g.trials) {
            t.expect(!in_reducibility_locus(n, tr.r, tr.l), "n=" + std::to_string(n) + " trial off the locus");
            t.expect(tr.k_n == 0, "n=" + std::to_string(n) + " k(n) = 0 at r=" + tr.r.get_str() + " l=" + tr.l.get_str());
        }
    }
}

void one_dimensional(Tally& t) {
    for (int n = 4; n <= 7; ++n) {
        const ParamSpec p = make_params(n, kQr, LCase::l_eq_inv_r2n3);
        const KnResult kn = compute_Kn(RepSet::build(p));
        t.expect(kn.k_n == 1, "n=" + std::to_string(n) + " k(n) = 1");
        t.expect(kn.kn == span_of({onedim_vector(p)}), "n=" + std::to_string(n) + " K(n) = span(sum r^{s+t} w_st)");
    }
    for (LCase lc : {LCase::l_eq_inv_r2n3, LCase::l_eq_neg_r3}) {
        const ParamSpec p = make_params(3, kQr, lc);
        const RepSet rep = RepSet::build(p);
        const SubspaceBasis line = span_of(n3_onedim_vectors(p));
        t.expect(line.dim() == 1 && invariance_check(line, rep.generators()),
                 "n=3 " + std::string(to_string(lc)) + " line invariant");
    }
    const ParamSpec p12 = make_params(3, FieldDescriptor::cyclotomic(12), LCase::l_eq_neg_r3);
    const RepSet rep12 = RepSet::build(p12);
    const auto lines = n3_onedim_vectors(p12);
    t.expect(lines.size() == 2, "Phi_12: two candidate lines");
    if (lines.size() == 2) {
        const SubspaceBasis a = span_of({lines[0]}), b = span_of({lines[1]});
        t.expect(invariance_check(a, rep12.generators()) && invariance_check(b, rep12.generators()),
                 "Phi_12: both lines invariant");
        t.expect(intersect(a, b).dim() == 0, "Phi_12: lines distinct");
        t.expect(compute_Kn(rep12).kn == sum(a, b), "Phi_12: K(3) is the sum of the two lines");
    }
}

void v_spans(Tally& t) {
    for (int n : {3, 5, 6, 7})
        for (LCase lc : {LCase::l_eq_inv_rn3, LCase::l_eq_neg_inv_rn3}) {
            const int eps = lc == LCase::l_eq_inv_rn3 ? 1 : -1;
            const ParamSpec p = make_params(n, kQr, lc);
            const KnResult kn = compute_Kn(RepSet::build(p));
            const std::string tag = "n=" + std::to_string(n) + " eps=" + std::to_string(eps);
            t.expect(kn.k_n == static_cast<std::size_t>(n - 1), tag + " k(n) = n-1");
            t.expect(kn.kn == span_of(v_vectors(p, eps)), tag + " K(n) = span(v)");
        }
    const FieldElement r = FieldElement::generator(kQr);
    for (int sign : {1, -1}) {
        const ParamSpec p = make_params(4, r, scaled(sign, r.inverse()));
        const KnResult kn = compute_Kn(RepSet::build(p));
        t.expect(kn.k_n == 3, "n=4 l=" + std::to_string(sign) + "/r k(4) = 3");
        t.expect(kn.kn == span_of(v_vectors(p, sign)), "n=4 l=" + std::to_string(sign) + "/r K(4) = span(v)");
    }
    const ParamSpec pu = make_params(4, kQr, LCase::l_eq_neg_r3);
    const KnResult ku = compute_Kn(RepSet::build(pu));
    t.expect(ku.k_n == 3, "n=4 l=-r^3 k(4) = 3");
    t.expect(ku.kn == span_of(u_vectors_n4(pu)), "n=4 l=-r^3 K(4) = span(u1, u2, u3)");
}

void l_eq_r(Tally& t) {
    const std::vector<std::size_t> table{2, 5, 9, 14, 20};
    std::optional<KnResult> prev;
    for (int n = 4; n <= 8; ++n) {
        const ParamSpec p = make_params(n, kQr, LCase::l_eq_r);
        const KnResult kn = compute_Kn(RepSet::build(p));
        const std::string tag = "n=" + std::to_string(n);
        t.expect(kn.k_n == table[static_cast<std::size_t>(n - 4)], tag + " k(n) table value");
        t.expect(kn.k_n == static_cast<std::size_t>(n * (n - 3) / 2), tag + " k(n) = n(n-3)/2");
        if (prev) {
            const SubspaceBasis embedded = embed_to(prev->kn, n - 1, n);
            t.expect(kn.kn.contains(embedded), tag + " K(n-1) in K(n)");
            t.expect(sum(embedded, span_of(w_vectors(n, p))) == kn.kn, tag + " K(n) = K(n-1) + span(w)");
        }
        prev = kn;
    }
    t.absorb(check_proof_trace(TraceCase::l_eq_r_n8), "trace l=r: ");
    t.absorb(check_proof_trace(TraceCase::l_eq_neg_r3_n8), "trace l=-r^3: ");
}

void l_eq_neg_r3(Tally& t) {
    const std::vector<std::size_t> table{3, 6, 10, 15, 21};
    for (int n = 4; n <= 8; ++n) {
        const ParamSpec p = make_params(n, kQr, LCase::l_eq_neg_r3);
        const RepSet rep = RepSet::build(p);
        const KnResult kn = compute_Kn(rep);
        const std::string tag = "n=" + std::to_string(n);
        t.expect(kn.k_n == table[static_cast<std::size_t>(n - 4)], tag + " k(n) table value");
        t.expect(kn.k_n == tri(n), tag + " k(n) = (n-1)(n-2)/2");
        for (int level = 3; level <= n; ++level)
            for (const VectorExpr& v : V_vectors(level, p))
                t.expect(kn.kn.contains(embed_to(v, n).to_vector()), tag + " V_k^(" + std::to_string(level) + ") in K(n)");
        if (n >= 5 && n <= 7) t.absorb(lemma4_check(rep), tag + " ");
    }
    for (int n = 4; n <= 6; ++n) {
        const ParamSpec p = make_params(n, FieldDescriptor::cyclotomic(4 * n), LCase::l_eq_neg_r3);
        const RepSet rep = RepSet::build(p);
        const KnResult kn = compute_Kn(rep);
        const SubspaceBasis line = span_of({onedim_vector(p)});
        const SubspaceBasis s = inductive_V_span(p);
        const std::string tag = "Phi_" + std::to_string(4 * n) + " n=" + std::to_string(n);
        t.expect(kn.k_n == 1 + tri(n), tag + " k(n) = 1 + (n-1)(n-2)/2");
        t.expect(s.dim() == tri(n), tag + " dim S");
        t.expect(invariance_check(s, rep.generators()), tag + " S invariant");
        t.expect(invariance_check(line, rep.generators()), tag + " line invariant");
        t.expect(intersect(line, s).dim() == 0 && sum(line, s) == kn.kn, tag + " K(n) = line + S, direct");
    }
}

void main_theorem(Tally& t) {
    const std::vector<TCase> ts{TCase::t_eq_inv_qn, TCase::t_eq_inv_sqrt_qn, TCase::t_eq_neg_inv_sqrt_qn,
                                TCase::t_eq_inv_q, TCase::t_eq_neg_one};
    for (int n = 4; n <= 7; ++n)
        for (TCase tc : ts) {
            const ClassificationReport r = verify_main_theorem(n, tc, false);
            const std::string tag = "n=" + std::to_string(n) + " " + std::string(to_string(tc)) + ": ";
            t.absorb(r.checks, tag);
            const auto expected = classify_expected(n, tc, false);
            t.expect(r.subspaces.size() == 1 && r.subspaces[0].identified == expected[0].summands[0].to_string(),
                     tag + "identified as expected");
        }
    for (int n = 4; n <= 6; ++n) {
        const ClassificationReport r = verify_main_theorem(n, TCase::t_eq_neg_one, true);
        const std::string tag = "q^n=-1 n=" + std::to_string(n) + ": ";
        t.absorb(r.checks, tag);
        t.expect(r.subspaces.size() == 3, tag + "three subspaces");
        const std::string one = Partition({n}).to_string(), hook = Partition({n - 2, 1, 1}).to_string();
        for (const ClassifiedSubspace& s : r.subspaces) {
            if (s.label == "line") t.expect(s.dim == 1 && s.identified == one, tag + "line is " + one);
            if (s.label == "S") t.expect(s.dim == tri(n) && s.identified == hook, tag + "S is " + hook);
            if (s.label == "K(n)") {
                t.expect(s.dim == 1 + tri(n), tag + "K(n) dim");
                t.expect(s.signature == predicted_signature(Partition({n})) + predicted_signature(Partition({n - 2, 1, 1})),
                         tag + "K(n) signature is the sum");
            }
        }
    }
}

void c35(Tally& t) {
    const FieldElement r = FieldElement::generator(kQr);
    auto basis = [](int s, int u) {
        Vector v = zero_vector(kQr, lk_dimension(5));
        v[root_position(5, {s, u})] = FieldElement::one(kQr);
        return v;
    };
    for (int sign : {1, -1}) {
        const FieldElement l = scaled(sign, r.inverse());
        const RepSet rep = RepSet::build(make_params(5, r, l));
        const Matrix c = c_matrix(rep, 3, 5, CConvention::right_action);
        const std::size_t at = root_position(5, {3, 5});
        auto only_w35 = [&](const Vector& v, const FieldElement& want, const std::string& what) {
            bool ok = !want.is_zero() && v[at] == want;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (k != at && !v[k].is_zero()) ok = false;
            t.expect(ok, "l=" + std::to_string(sign) + "/r " + what);
        };
        only_w35(c * basis(2, 3), r.inverse(), "C35 w23");
        only_w35(c * basis(2, 4), (r.inverse() - r) * (l.inverse() - r.inverse()), "C35 w24");
        only_w35(c * basis(3, 4), l.inverse(), "C35 w34");
        only_w35(c * basis(1, 3), r.pow(-2), "C35 w13");
        const ParamSpec p4 = make_params(4, r, l);
        const Vector v2 = embed_to(v_vectors(p4, sign)[1], 5).to_vector();
        const FieldElement want = sign == 1 ? -(r.pow(2) + r.pow(-2)) : (r + r.inverse()).pow(2);
        only_w35(c * v2, want, "C35 v2");
    }
}

void combinatorics(Tally& t) {
    for (int n = 1; n <= 9; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const std::string tag = lam.to_string();
            t.expect(enumerate_syt(lam).count == hook_length_dim(lam), tag + " SYT count = hook dimension");
            if (n >= 2) {
                std::size_t branched = 0;
                for (const Partition& mu : branch_restrict(lam)) branched += hook_length_dim(mu);
                t.expect(branched == hook_length_dim(lam), tag + " branching preserves dimension");
            }
        }
    const std::vector<std::pair<std::vector<int>, std::size_t>> quoted{
        {{2, 2}, 2}, {{3, 3}, 5}, {{2, 2, 2}, 5}, {{4, 3}, 14}, {{2, 2, 2, 1}, 14}, {{4, 4}, 14}, {{2, 2, 2, 2}, 14}};
    for (const auto& [parts, dim] : quoted) {
        const Partition lam(parts);
        t.expect(hook_length_dim(lam) == dim, lam.to_string() + " has dimension " + std::to_string(dim));
        t.expect(enumerate_syt(lam).count == dim, lam.to_string() + " tableaux count " + std::to_string(dim));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
        {"relation suite, n = 3..7, six values of l", relations},
        {"generic rational parameters give k(n) = 0, n = 3..7", genericity},
        {"one-dimensional invariant subspaces", one_dimensional},
        {"K(n) spanned by v-vectors at l = +-1/r^(n-3), u-vectors at n = 4", v_spans},
        {"l = r: k(n) = n(n-3)/2, inclusion, w-vectors, proof traces", l_eq_r},
        {"l = -r^3: k(n) = (n-1)(n-2)/2, V-vectors, generator identities, q^n = -1", l_eq_neg_r3},
        {"classification of K(n) by Specht modules", main_theorem},
        {"C35 spot values at n = 5, l = +-1/r", c35},
        {"combinatorics oracle", combinatorics},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Tally t;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[k].second(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && t.failures.empty() && t.checks > 0;
        if (!ok) ++failed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (ok ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " ("
             << (t.checks - t.failures.size()) << "/" << t.checks << " checks, " << secs << " s)";
        std::cout << line.str() << "\n";
        if (!error.empty()) std::cout << "    error: " << error << "\n";
        for (std::size_t f = 0; f < t.failures.size() && f < 5; ++f) std::cout << "    failed: " << t.failures[f] << "\n";
        std::cout.flush();
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << "\n";
    return failed == 0 ? 0 : 1;
}
