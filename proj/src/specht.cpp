#include "lk/specht.hpp"

#include <algorithm>
#include <stdexcept>

namespace lk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int c = 0; !parts_.empty() && c < parts_.front(); ++c) {
        int len = 0;
        for (int p : parts_)
            if (p > c) ++len;
        out.push_back(len);
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
    return out + ")";
}

namespace {

void partitions_rec(int left, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (left == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(left - p, p, cur, out);
        cur.pop_back();
    }
}

Partition remove_box(const Partition& lam, int row) {
    std::vector<int> parts = lam.parts();
    if (--parts[static_cast<std::size_t>(row)] == 0) parts.pop_back();
    return Partition(std::move(parts));
}

SytCount syt_rec(const Partition& lam, std::map<Partition, SytCount>& memo) {
    if (lam.n() <= 1) return {1, 0, 0};
    if (lam.n() == 2) return lam.length() == 1 ? SytCount{1, 1, 0} : SytCount{1, 0, 1};
    if (auto it = memo.find(lam); it != memo.end()) return it->second;
    // The largest entry sits in some removable corner.
    SytCount total;
    for (const Corner& b : removable_corners(lam)) {
        const SytCount s = syt_rec(remove_box(lam, b.row), memo);
        total.count += s.count;
        total.g1_row += s.g1_row;
        total.g1_col += s.g1_col;
    }
    memo.emplace(lam, total);
    return total;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::size_t hook_length_dim(const Partition& lam) {
    const Partition conj = lam.conjugate();
    mpz_class num = 1, den = 1;
    for (int k = 2; k <= lam.n(); ++k) num *= k;
    for (std::size_t i = 0; i < lam.length(); ++i) {
        for (int j = 0; j < lam.parts()[i]; ++j) {
            const int arm = lam.parts()[i] - j - 1;
            const int leg = conj.parts()[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            den *= arm + leg + 1;
        }
    }
    mpz_class q = num / den;
    return static_cast<std::size_t>(q.get_ui());
}

SytCount enumerate_syt(const Partition& lam) {
    std::map<Partition, SytCount> memo;
    return syt_rec(lam, memo);
}

std::vector<Corner> removable_corners(const Partition& lam) {
    std::vector<Corner> out;
    const auto& p = lam.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
        const int row = static_cast<int>(i);
        const int col = p[i] - 1;
        out.push_back({row, col, col - row});
    }
    return out;
}

std::vector<Partition> branch_restrict(const Partition& lam) {
    if (lam.n() < 2) throw std::invalid_argument("branch_restrict: requires n >= 2");
    std::vector<Partition> out;
    for (const Corner& b : removable_corners(lam)) out.push_back(remove_box(lam, b.row));
    return out;
}

namespace {

void fill_restriction_dims(ModuleSignature& s) {
    s.restriction_dims.clear();
    for (const auto& [c, d] : s.restriction_by_content) s.restriction_dims.push_back(d);
    std::sort(s.restriction_dims.begin(), s.restriction_dims.end());
}

}  // namespace

ModuleSignature operator+(const ModuleSignature& a, const ModuleSignature& b) {
    ModuleSignature s{a.dim + b.dim, a.g1_mult_r + b.g1_mult_r, a.g1_mult_neg + b.g1_mult_neg, {}, a.restriction_by_content};
    for (const auto& [c, d] : b.restriction_by_content) s.restriction_by_content[c] += d;
    fill_restriction_dims(s);
    return s;
}

ModuleSignature subspace_signature(const SubspaceBasis& w, const RepSet& rep) {
    const ParamSpec& p = rep.params();
    const int n = rep.n();
    const std::size_t d = w.dim();
    ModuleSignature sig;
    sig.dim = d;
    if (d == 0) return sig;

    const Matrix id = Matrix::identity(p.field, d);
    std::vector<Matrix> g;
    for (int i = 1; i < n; ++i) {
        g.push_back(w.restrict(rep.nu(i)));
        const Matrix& gi = g.back();
        if (!(gi * gi + p.m * gi - id).is_zero())
            throw std::domain_error("subspace_signature: Hecke quadratic fails for g_" + std::to_string(i) + " on W");
    }
    sig.g1_mult_r = d - rank(g[0] - p.r * id);
    sig.g1_mult_neg = d - rank(g[0] + p.r.inverse() * id);

    Matrix jm = id;
    for (int i = n - 1; i >= 1; --i) jm = jm * g[static_cast<std::size_t>(i - 1)];
    for (int i = 1; i <= n - 1; ++i) jm = jm * g[static_cast<std::size_t>(i - 1)];

    std::vector<FieldElement> seen;
    std::size_t total = 0;
    for (int c = -(n - 1); c <= n - 1; ++c) {
        const FieldElement ev = p.r.pow(2 * c);
        if (std::find(seen.begin(), seen.end(), ev) != seen.end())
            throw std::domain_error("subspace_signature: restriction eigenvalues r^{2c} are not distinct");
        seen.push_back(ev);
        const std::size_t k = d - rank(jm - ev * id);
        if (k > 0) sig.restriction_by_content[c] = k;
        total += k;
    }
    if (total != d) throw std::domain_error("subspace_signature: restriction eigenspaces do not exhaust W");
    fill_restriction_dims(sig);
    return sig;
}

ModuleSignature predicted_signature(const Partition& lam) {
    ModuleSignature sig;
    const SytCount s = enumerate_syt(lam);
    sig.dim = hook_length_dim(lam);
    sig.g1_mult_r = s.g1_row;
    sig.g1_mult_neg = s.g1_col;
    if (lam.n() >= 2)
        for (const Corner& b : removable_corners(lam))
            sig.restriction_by_content[b.content] = hook_length_dim(remove_box(lam, b.row));
    fill_restriction_dims(sig);
    return sig;
}

Identification identify_module(const ModuleSignature& sig, int n) {
    Identification out;
    for (const Partition& lam : partitions_of(n))
        if (predicted_signature(lam) == sig) out.candidates.push_back(lam);
    if (out.candidates.size() == 1) out.partition = out.candidates.front();
    return out;
}

namespace {

Partition shape(int n, std::vector<int> parts, const char* what) {
    for (int x : parts)
        if (x <= 0) throw std::invalid_argument(std::string("classify_expected: ") + what + " does not exist for n=" +
                                                std::to_string(n));
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw std::invalid_argument(std::string("classify_expected: ") + what + " does not exist for n=" +
                                    std::to_string(n));
    return Partition(std::move(parts));
}

std::string join(const std::vector<Partition>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "+" : "") + ps[i].to_string();
    return out;
}

}  // namespace

std::vector<ExpectedSubspace> classify_expected(int n, TCase t, bool qn_minus_one) {
    if (n < 3) throw std::invalid_argument("classify_expected: n must be >= 3");
    if (qn_minus_one) {
        if (t != TCase::t_eq_neg_one)
            throw std::invalid_argument("classify_expected: q^n = -1 is only classified for t = -1");
        const Partition triv = shape(n, {n}, "(n)");
        const Partition hook = shape(n, {n - 2, 1, 1}, "(n-2,1,1)");
        return {{"line", {triv}}, {"S", {hook}}, {"K(n)", {triv, hook}}};
    }
    switch (t) {
        case TCase::t_eq_inv_qn: return {{"K(n)", {shape(n, {n}, "(n)")}}};
        case TCase::t_eq_inv_sqrt_qn:
        case TCase::t_eq_neg_inv_sqrt_qn: return {{"K(n)", {shape(n, {n - 1, 1}, "(n-1,1)")}}};
        case TCase::t_eq_inv_q: return {{"K(n)", {shape(n, {n - 2, 2}, "(n-2,2)")}}};
        case TCase::t_eq_neg_one: return {{"K(n)", {shape(n, {n - 2, 1, 1}, "(n-2,1,1)")}}};
    }
    throw std::invalid_argument("classify_expected: unknown t case");
}

ClassificationReport verify_main_theorem(int n, TCase t, bool qn_minus_one) {
    if (n < 3 || n > 8) throw std::invalid_argument("verify_main_theorem: n must lie in 3..8");
    const auto expected = classify_expected(n, t, qn_minus_one);

    ClassificationReport report;
    report.n = n;
    report.t_case = t;
    report.qn_minus_one = qn_minus_one;
    report.l_case = params_from_tq(t, n);
    report.field = qn_minus_one ? FieldDescriptor::cyclotomic(4 * n) : FieldDescriptor::ratfunc();

    const ParamSpec p = make_params(n, report.field, report.l_case);
    const RepSet rep = RepSet::build(p);
    const KnResult kn = compute_Kn(rep);
    report.k_n = kn.k_n;

    std::map<std::string, SubspaceBasis> spaces;
    spaces.emplace("K(n)", kn.kn);
    if (qn_minus_one) {
        spaces.emplace("line", span_of({onedim_vector(p)}));
        spaces.emplace("S", inductive_V_span(p));
        const SubspaceBasis& line = spaces.at("line");
        const SubspaceBasis& s = spaces.at("S");
        report.checks.push_back({"line and S meet in zero", intersect(line, s).dim() == 0, ""});
        report.checks.push_back({"K(n) = line + S", sum(line, s) == kn.kn, ""});
    }

    for (const ExpectedSubspace& e : expected) {
        const SubspaceBasis& w = spaces.at(e.label);
        ClassifiedSubspace cs;
        cs.label = e.label;
        cs.dim = w.dim();
        std::string detail;
        try {
            cs.signature = subspace_signature(w, rep);
            if (e.summands.size() == 1) {
                const Identification id = identify_module(cs.signature, n);
                if (id.partition) {
                    cs.identified = id.partition->to_string();
                    cs.matches = *id.partition == e.summands.front();
                } else {
                    cs.identified = "ambiguous";
                    detail = std::to_string(id.candidates.size()) + " matching partitions";
                }
            } else {
                ModuleSignature want;
                for (const Partition& lam : e.summands) want = want + predicted_signature(lam);
                cs.matches = cs.signature == want;
                cs.identified = cs.matches ? join(e.summands) : "unidentified";
            }
        } catch (const std::domain_error& ex) {
            cs.identified = "unidentified";
            detail = ex.what();
        }
        report.checks.push_back({e.label + " dim " + std::to_string(cs.dim) + " is " + join(e.summands), cs.matches,
                                 detail.empty() ? "identified " + cs.identified : detail});
        report.subspaces.push_back(std::move(cs));
    }
    return report;
}

}  // namespace lk
