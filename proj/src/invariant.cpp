#include "lk/invariant.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace lk {

VectorExpr VectorExpr::from_vector(int n, const FieldDescriptor& field, const Vector& v) {
    if (v.size() != lk_dimension(n)) throw std::invalid_argument("VectorExpr::from_vector: dimension mismatch");
    VectorExpr out(n, field);
    const auto roots = positive_roots(n);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out.terms_.emplace(roots[k], v[k]);
    return out;
}

FieldElement VectorExpr::coefficient(int s, int t) const {
    auto it = terms_.find({s, t});
    return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

VectorExpr& VectorExpr::add(int s, int t, const FieldElement& c) {
    if (s < 1 || s >= t || t > n_)
        throw std::out_of_range("VectorExpr: w_{" + std::to_string(s) + "," + std::to_string(t) +
                                "} invalid for n=" + std::to_string(n_));
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace({s, t}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

VectorExpr& VectorExpr::add(const VectorExpr& o, const FieldElement& c) {
    if (o.n_ != n_) throw std::invalid_argument("VectorExpr::add: ambient levels differ");
    for (const auto& [b, x] : o.terms_) add(b.s, b.t, c * x);
    return *this;
}

Vector VectorExpr::to_vector() const {
    Vector v = zero_vector(field_, lk_dimension(n_));
    for (const auto& [b, x] : terms_) v[root_position(n_, b)] = x;
    return v;
}

VectorExpr embed_subrep(const VectorExpr& v) { return embed_to(v, v.n() + 1); }

VectorExpr embed_to(const VectorExpr& v, int n) {
    if (n < v.n()) throw std::invalid_argument("embed_to: target level below source level");
    VectorExpr out(n, v.field());
    for (const auto& [b, x] : v.terms()) out.add(b.s, b.t, x);
    return out;
}

SubspaceBasis embed_to(const SubspaceBasis& w, int from_n, int to_n) {
    std::vector<VectorExpr> vs;
    for (std::size_t k = 0; k < w.dim(); ++k)
        vs.push_back(embed_to(VectorExpr::from_vector(from_n, w.field(), w.vector(k)), to_n));
    if (vs.empty()) return SubspaceBasis(w.field(), lk_dimension(to_n));
    return span_of(vs);
}

SubspaceBasis level_subspace(const FieldDescriptor& field, int n, int level) {
    std::vector<std::size_t> idx;
    for (const RootIndex& b : positive_roots(n))
        if (b.t <= level) idx.push_back(root_position(n, b));
    return SubspaceBasis::coordinate(field, lk_dimension(n), idx);
}

std::vector<Vector> to_vectors(const std::vector<VectorExpr>& v) {
    std::vector<Vector> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(e.to_vector());
    return out;
}

SubspaceBasis span_of(const std::vector<VectorExpr>& v) {
    if (v.empty()) throw std::invalid_argument("span_of: empty list has no ambient level");
    for (const auto& e : v)
        if (e.n() != v.front().n()) throw std::invalid_argument("span_of: mixed ambient levels");
    return SubspaceBasis::span(v.front().field(), lk_dimension(v.front().n()), to_vectors(v));
}

KnResult compute_Kn(const RepSet& rep) {
    const std::size_t dim = rep.dimension();
    // Each C_ij has small rank; stack the row spaces before the final kernel.
    Matrix stacked(rep.field(), 0, dim);
    for (const auto& [ij, c] : rep.all_c()) stacked = Matrix::stack(stacked, SubspaceBasis::row_space(c).basis());
    SubspaceBasis kn = kernel(stacked);
    if (!invariance_check(kn, rep.generators()))
        throw std::logic_error("compute_Kn: intersection of kernels is not invariant under the generators");
    const std::size_t k = kn.dim();
    return KnResult{rep.params(), std::move(kn), k};
}

namespace {

FieldElement q(const FieldDescriptor& f, long num, long den = 1) { return FieldElement::from_rational(f, Rational(num, den)); }

}  // namespace

VectorExpr onedim_vector(const ParamSpec& p) {
    VectorExpr v(p.n, p.field);
    for (const RootIndex& b : positive_roots(p.n)) v.add(b.s, b.t, p.r.pow(b.s + b.t));
    return v;
}

std::vector<VectorExpr> n3_onedim_vectors(const ParamSpec& p) {
    if (p.n != 3) throw std::invalid_argument("n3_onedim_vectors: requires n = 3");
    const FieldElement& r = p.r;
    const FieldElement one = FieldElement::one(p.field);
    std::vector<VectorExpr> out;
    if (p.l == r.pow(-3)) {
        VectorExpr v(3, p.field);
        v.add(1, 2, one).add(1, 3, r).add(2, 3, r.pow(2));
        out.push_back(v);
    }
    if (p.l == -r.pow(3)) {
        VectorExpr v(3, p.field);
        v.add(1, 2, one).add(1, 3, -r.inverse()).add(2, 3, r.pow(-2));
        out.push_back(v);
    }
    return out;
}

std::vector<VectorExpr> v_vectors(const ParamSpec& p, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("v_vectors: epsilon must be +-1");
    const int n = p.n;
    const FieldElement& r = p.r;
    const FieldElement r_inv = r.inverse();
    const FieldElement eps = q(p.field, epsilon);
    std::vector<VectorExpr> out;
    for (int i = 1; i <= n - 1; ++i) {
        VectorExpr v(n, p.field);
        v.add(i, i + 1, r_inv - p.l.inverse());
        for (int s = i + 2; s <= n; ++s) {
            const FieldElement c = r.pow(s - i - 2);
            v.add(i, s, c).add(i + 1, s, -c * r_inv);
        }
        for (int t = 1; t <= i - 1; ++t) {
            const FieldElement c = eps * r.pow(n - i - 2 + t);
            v.add(t, i, c).add(t, i + 1, -c * r_inv);
        }
        out.push_back(v);
    }
    return out;
}

std::vector<VectorExpr> u_vectors_n4(const ParamSpec& p) {
    if (p.n != 4) throw std::invalid_argument("u_vectors_n4: requires n = 4");
    const FieldElement& r = p.r;
    const FieldElement one = FieldElement::one(p.field);
    const FieldElement ri = r.inverse();
    VectorExpr u1(4, p.field), u2(4, p.field), u3(4, p.field);
    u1.add(2, 3, r).add(1, 3, one).add(3, 4, ri + r.pow(-3)).add(2, 4, -one).add(1, 4, -ri);
    u2.add(1, 2, -r).add(1, 3, -r.pow(2)).add(3, 4, -ri).add(2, 4, -r.pow(-2)).add(1, 4, r + ri);
    u3.add(1, 2, r + r.pow(3)).add(2, 3, ri).add(1, 3, -one).add(2, 4, one).add(1, 4, -r);
    return {u1, u2, u3};
}

std::vector<VectorExpr> w_vectors(int level, const ParamSpec& p) {
    if (level < 4) throw std::invalid_argument("w_vectors: level must be >= 4");
    const FieldElement& r = p.r;
    const FieldElement one = FieldElement::one(p.field);
    const FieldElement ri = r.inverse();
    std::vector<VectorExpr> out;
    if (level == 4) {
        VectorExpr w1(4, p.field), w2(4, p.field);
        w1.add(1, 4, one).add(2, 4, -ri).add(2, 3, one).add(1, 3, -r);
        w2.add(2, 4, one).add(3, 4, -ri).add(1, 3, one).add(1, 2, -r);
        return {w1, w2};
    }
    const int n = level;
    const FieldElement c = r.pow(n - 4);
    VectorExpr w1(n, p.field);
    w1.add(1, n, one).add(2, n, -ri).add(2, 3, c).add(1, 3, -c * r);
    out.push_back(w1);
    for (int k = 2; k <= n - 2; ++k) {
        VectorExpr wk(n, p.field);
        wk.add(k, n, one).add(k + 1, n, -ri).add(1, k + 1, c).add(1, k, -c * r);
        out.push_back(wk);
    }
    return out;
}

std::vector<VectorExpr> V_vectors(int level, const ParamSpec& p) {
    if (level < 3) throw std::invalid_argument("V_vectors: level must be >= 3");
    const FieldElement& r = p.r;
    const FieldElement one = FieldElement::one(p.field);
    std::vector<VectorExpr> out;
    for (int k = 1; k <= level - 2; ++k) {
        VectorExpr v(level, p.field);
        v.add(k + 1, level, one).add(k, level, -r).add(k, k + 1, r.pow(level - k));
        out.push_back(v);
    }
    return out;
}

SubspaceBasis inductive_V_span(const ParamSpec& p) {
    std::vector<VectorExpr> all;
    for (int j = 3; j <= p.n; ++j)
        for (const auto& v : V_vectors(j, p)) all.push_back(embed_to(v, p.n));
    return span_of(all);
}

SubspaceBasis inductive_w_span(const ParamSpec& p) {
    std::vector<VectorExpr> all;
    for (int j = 4; j <= p.n; ++j)
        for (const auto& v : w_vectors(j, p)) all.push_back(embed_to(v, p.n));
    return span_of(all);
}

CheckList lemma4_check(const RepSet& rep) {
    const ParamSpec& p = rep.params();
    const int n = p.n;
    if (n < 5) throw std::invalid_argument("lemma4_check: requires n >= 5");
    const FieldElement& r = p.r;
    const FieldElement ri = r.inverse();

    // V[j][k-1] = V_k^(j) embedded in V^(n), for 3 <= j <= n.
    std::map<int, std::vector<Vector>> V;
    for (int j = 3; j <= n; ++j)
        for (const auto& v : V_vectors(j, p)) V[j].push_back(embed_to(v, n).to_vector());
    auto Vk = [&](int k, int j) -> const Vector& { return V.at(j).at(static_cast<std::size_t>(k - 1)); };
    auto lin = [&](std::initializer_list<std::pair<FieldElement, const Vector*>> terms) {
        Vector out = zero_vector(p.field, rep.dimension());
        for (const auto& [c, v] : terms)
            for (std::size_t x = 0; x < out.size(); ++x)
                if (!(*v)[x].is_zero()) out[x] += c * (*v)[x];
        return out;
    };
    const FieldElement one = FieldElement::one(p.field);
    auto tag = [n](const std::string& s, int k) {
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + s;
    };

    CheckList out;
    const KnResult kn = compute_Kn(rep);
    for (int k = 1; k <= n - 2; ++k) {
        const Vector& v = Vk(k, n);
        out.push_back({tag("V_k in K(n)", k), kn.kn.contains(v), ""});
        if (k >= 2) {
            Vector rhs = lin({{one, &Vk(k - 1, n)}, {r, &v}, {-r.pow(n - k - 1), &Vk(k - 1, k + 1)}});
            out.push_back({tag("g_{k-1} V_k", k), rep.nu(k - 1) * v == rhs, ""});
        }
        out.push_back({tag("g_k V_k = -1/r V_k", k), rep.nu(k) * v == lin({{-ri, &v}}), ""});
        if (k < n - 2) {
            Vector rhs = lin({{one, &Vk(k + 1, n)}, {r, &v}, {-r.pow(n - k - 1), &Vk(k, k + 2)}});
            out.push_back({tag("g_{k+1} V_k", k), rep.nu(k + 1) * v == rhs, ""});
            Vector rhs2 = lin({{one, &Vk(k, n - 1)}, {-p.m, &v}});
            out.push_back({tag("g_{n-1} V_k", k), rep.nu(n - 1) * v == rhs2, ""});
        } else {
            out.push_back({tag("g_{n-1} V_{n-2} = -1/r V_{n-2}", k), rep.nu(n - 1) * v == lin({{-ri, &v}}), ""});
        }
        for (int i = 1; i <= n - 1; ++i) {
            if (i == k - 1 || i == k || i == k + 1 || i == n - 1) continue;
            out.push_back({tag("g_" + std::to_string(i) + " V_k = r V_k", k), rep.nu(i) * v == lin({{r, &v}}), ""});
        }
    }
    for (int j = 3; j <= n - 2; ++j)
        for (int k = 1; k <= j - 2; ++k)
            out.push_back({"n=" + std::to_string(n) + ": g_{n-1} V_" + std::to_string(k) + "^(" + std::to_string(j) +
                               ") = r V",
                           rep.nu(n - 1) * Vk(k, j) == lin({{r, &Vk(k, j)}}), ""});
    for (int k = 1; k <= n - 3; ++k)
        out.push_back({"n=" + std::to_string(n) + ": g_{n-1} V_" + std::to_string(k) + "^(n-1) = V_" +
                           std::to_string(k) + "^(n)",
                       rep.nu(n - 1) * Vk(k, n - 1) == Vk(k, n), ""});
    return out;
}

bool GenericityReport::pass() const {
    for (const auto& t : trials)
        if (t.k_n != 0) return false;
    return !trials.empty();
}

bool in_reducibility_locus(int n, const Rational& r, const Rational& l) {
    auto pw = [](const Rational& x, int k) {
        Rational base = k < 0 ? Rational(1 / x) : x, acc = 1;
        for (int i = 0; i < (k < 0 ? -k : k); ++i) acc *= base;
        return acc;
    };
    std::vector<Rational> locus = {r, -pw(r, 3), pw(r, 3 - 2 * n), pw(r, 3 - n), -pw(r, 3 - n)};
    if (n == 3) {
        locus.push_back(pw(r, -3));
        locus.push_back(Rational(1));
        locus.push_back(Rational(-1));
    }
    for (const auto& x : locus)
        if (x == l) return true;
    return false;
}

std::size_t generic_kn(int n, const Rational& r, const Rational& l) {
    ParamSpec p = make_params(n, FieldElement(r), FieldElement(l));
    return compute_Kn(RepSet::build(p)).k_n;
}

GenericityReport genericity_probe(int n, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("genericity_probe: trials must be >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    GenericityReport report{n, seed, {}};
    for (int t = 0; t < trials; ++t) {
        int redraws = 0;
        while (true) {
            long rn = draw(-9, 9), rd = draw(1, 9), ln = draw(-30, 30), ld = draw(1, 9);
            if (rn == 0 || ln == 0) {
                ++redraws;
                continue;
            }
            Rational r(rn, rd), l(ln, ld);
            r.canonicalize();
            l.canonicalize();
            if (abs(r) == 1 || in_reducibility_locus(n, r, l)) {
                ++redraws;
                continue;
            }
            report.trials.push_back({r, l, generic_kn(n, r, l), redraws});
            break;
        }
    }
    return report;
}

ProofTrace proof_trace_vectors(TraceCase c, const ParamSpec& p) {
    if (p.n != 8) throw std::invalid_argument("proof_trace_vectors: traces live in V^(8)");
    const FieldElement& r = p.r;
    const FieldElement one = FieldElement::one(p.field);
    VectorExpr base(8, p.field), image(8, p.field);
    switch (c) {
        case TraceCase::l_eq_r_n8:
            base.add(1, 2, r.pow(2)).add(1, 3, -r).add(3, 4, one).add(2, 4, -r);
            image.add(1, 2, r.pow(6)).add(1, 3, -r.pow(5)).add(3, 8, one).add(2, 8, -r);
            break;
        case TraceCase::l_eq_neg_r3_n8:
            base.add(2, 3, -r).add(3, 4, -r.inverse()).add(2, 4, one);
            image.add(2, 3, -r.pow(5)).add(3, 8, -r.inverse()).add(2, 8, one);
            break;
    }
    return ProofTrace{base, image, {4, 5, 6, 7}, false};
}

CheckList check_proof_trace(TraceCase c) {
    const LCase lc = c == TraceCase::l_eq_r_n8 ? LCase::l_eq_r : LCase::l_eq_neg_r3;
    const std::string name = c == TraceCase::l_eq_r_n8 ? "trace l=r n=8" : "trace l=-r^3 n=8";
    const ParamSpec p8 = make_params(8, FieldDescriptor::ratfunc(), lc);
    const RepSet rep8 = RepSet::build(p8);
    const KnResult k8 = compute_Kn(rep8);
    const KnResult k7 = compute_Kn(RepSet::build(make_params(7, FieldDescriptor::ratfunc(), lc)));
    const SubspaceBasis k7_in_8 = embed_to(k7.kn, 7, 8);

    const ProofTrace tr = proof_trace_vectors(c, p8);
    Vector v = tr.base.to_vector();
    for (int i : tr.applied) v = rep8.nu(i) * v;
    const Vector image = tr.image.to_vector();

    CheckList out;
    out.push_back({name + ": base in K(8)", k8.kn.contains(tr.base.to_vector()), ""});
    out.push_back({name + ": nu_7 nu_6 nu_5 nu_4 base = stated image", v == image, ""});
    out.push_back({name + ": image in K(8)", k8.kn.contains(image), ""});
    out.push_back({name + ": image not in K(7)", k7_in_8.contains(image) == tr.image_in_previous_level, ""});
    return out;
}

}  // namespace lk
