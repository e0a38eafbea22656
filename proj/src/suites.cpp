#include "lk/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace lk {

namespace {

using Json = nlohmann::ordered_json;

struct LChoice {
    LCase lcase;
    std::optional<LaurentMonomial> mono;  // set for explicit values
    std::string label;
};

const std::vector<LCase>& named_lcases() {
    static const std::vector<LCase> v{LCase::l_eq_r, LCase::l_eq_neg_r3, LCase::l_eq_inv_r2n3, LCase::l_eq_inv_rn3,
                                      LCase::l_eq_neg_inv_rn3};
    return v;
}

const std::vector<TCase>& all_tcases() {
    static const std::vector<TCase> v{TCase::t_eq_inv_qn, TCase::t_eq_inv_sqrt_qn, TCase::t_eq_neg_inv_sqrt_qn,
                                      TCase::t_eq_inv_q, TCase::t_eq_neg_one};
    return v;
}

LChoice tag_choice(LCase c) { return {c, std::nullopt, std::string(to_string(c))}; }

std::vector<LChoice> resolve_l(const SuiteConfig& cfg, std::vector<LChoice> defaults) {
    if (cfg.l && cfg.l_case) throw ConfigError("--l and --l-case are mutually exclusive");
    if (cfg.l_case) {
        auto c = parse_lcase(*cfg.l_case);
        if (!c) throw ConfigError("unknown --l-case tag '" + *cfg.l_case + "'");
        if (*c == LCase::explicit_value) throw ConfigError("--l-case explicit needs a value; use --l <expr>");
        return {tag_choice(*c)};
    }
    if (cfg.l) {
        if (auto c = parse_lcase(*cfg.l); c && *c != LCase::explicit_value) return {tag_choice(*c)};
        auto mono = parse_laurent(*cfg.l);
        if (!mono) throw ConfigError("cannot parse --l '" + *cfg.l + "' as a case tag or a monomial c*r^k");
        return {{LCase::explicit_value, mono, "l=" + to_string(*mono)}};
    }
    return defaults;
}

void forbid(bool present, const std::string& flag, const std::string& suite) {
    if (present) throw ConfigError(flag + " is not accepted by suite " + suite);
}

ParamSpec case_params(int n, const FieldChoice& fc, const LChoice& lc) {
    if (fc.r_value) {
        const FieldElement r(*fc.r_value);
        const LaurentMonomial mono = lc.mono ? *lc.mono : l_monomial(lc.lcase, n);
        return make_params(n, r, laurent_value(mono, r), lc.lcase);
    }
    if (lc.mono) return make_params(n, fc.field, *lc.mono);
    return make_params(n, fc.field, lc.lcase);
}

std::string field_label(const FieldChoice& fc) {
    if (fc.r_value) return "rational:" + fc.r_value->get_str();
    return fc.field.to_string();
}

CaseResult base_result(const ParamSpec& p, const FieldChoice& fc, const std::string& label) {
    CaseResult out;
    out.n = p.n;
    out.field = field_label(fc);
    out.case_label = label;
    out.r = p.r.to_string();
    out.l = p.l.to_string();
    return out;
}

SubspaceRecord record(const std::string& label, std::size_t dim, const std::string& partition,
                      const ModuleSignature& sig) {
    return {label, dim, partition, sig};
}

std::size_t tri(int n) { return static_cast<std::size_t>((n - 1) * (n - 2) / 2); }

bool is_qn_field(const FieldChoice& fc, int n) {
    return !fc.r_value && fc.field.kind() == FieldKind::cyclotomic && fc.field.modulus_index() == 4 * n;
}

// Expected dimension and spanning set of K(n) where one is known.
void kernel_expectations(const RepSet& rep, const KnResult& kn, const FieldChoice& fc, CaseResult& out) {
    const ParamSpec& p = rep.params();
    const int n = p.n;
    const bool generic_field = !fc.r_value && fc.field.kind() == FieldKind::ratfunc;
    auto add = [&out](std::string name, bool pass) { out.checks.push_back({std::move(name), pass, ""}); };
    auto dim_is = [&](std::size_t want) {
        add("k(n) = " + std::to_string(want), kn.k_n == want);
    };

    if (fc.r_value) {
        const Rational l = std::get<Rational>(p.l.storage());
        if (!in_reducibility_locus(n, *fc.r_value, l)) dim_is(0);
        return;
    }
    if (is_qn_field(fc, n) && p.lcase == LCase::l_eq_neg_r3) {
        dim_is(1 + tri(n));
        const SubspaceBasis line = span_of({onedim_vector(p)});
        const SubspaceBasis s = inductive_V_span(p);
        add("dim S = (n-1)(n-2)/2", s.dim() == tri(n));
        add("S invariant", invariance_check(s, rep.generators()));
        add("line invariant", invariance_check(line, rep.generators()));
        add("line and S meet in zero", intersect(line, s).dim() == 0);
        add("K(n) = line + S", sum(line, s) == kn.kn);
        return;
    }
    if (!generic_field) return;

    switch (p.lcase) {
        case LCase::l_eq_r:
            dim_is(static_cast<std::size_t>(n * (n - 3) / 2));
            if (n >= 4) add("K(n) = span of inductive w-vectors", inductive_w_span(p) == kn.kn);
            if (n >= 5) {
                const KnResult prev = compute_Kn(RepSet::build(make_params(n - 1, p.field, LCase::l_eq_r)));
                add("K(n-1) embedded in K(n)", kn.kn.contains(embed_to(prev.kn, n - 1, n)));
            }
            break;
        case LCase::l_eq_neg_r3:
            dim_is(tri(n));
            add("K(n) = span of V_k^(j), 3 <= j <= n", inductive_V_span(p) == kn.kn);
            if (n == 4) add("K(4) = span(u1, u2, u3)", span_of(u_vectors_n4(p)) == kn.kn);
            if (n == 3) add("K(3) = span of the l = -r^3 line", span_of(n3_onedim_vectors(p)) == kn.kn);
            break;
        case LCase::l_eq_inv_r2n3:
            dim_is(1);
            if (n == 3)
                add("K(3) = span of the l = 1/r^3 line", span_of(n3_onedim_vectors(p)) == kn.kn);
            else
                add("K(n) = span(sum r^{s+t} w_st)", span_of({onedim_vector(p)}) == kn.kn);
            break;
        case LCase::l_eq_inv_rn3:
        case LCase::l_eq_neg_inv_rn3: {
            const int eps = p.lcase == LCase::l_eq_inv_rn3 ? 1 : -1;
            dim_is(static_cast<std::size_t>(n - 1));
            add("K(n) = span(v_1..v_{n-1}), eps = " + std::to_string(eps), span_of(v_vectors(p, eps)) == kn.kn);
            break;
        }
        case LCase::explicit_value: break;
    }
}

std::optional<TCase> tcase_for(LCase c) {
    for (TCase t : all_tcases())
        if (params_from_tq(t, 0) == c) return t;
    return std::nullopt;
}

void classify_subspace(const std::string& label, const SubspaceBasis& w, const RepSet& rep,
                       const std::optional<Partition>& expected, CaseResult& out) {
    try {
        const ModuleSignature sig = subspace_signature(w, rep);
        const Identification id = identify_module(sig, rep.n());
        const std::string name = id.partition ? id.partition->to_string() : "ambiguous";
        out.subspaces.push_back(record(label, w.dim(), name, sig));
        out.checks.push_back({label + " identified uniquely", id.partition.has_value(),
                              std::to_string(id.candidates.size()) + " candidate(s)"});
        if (expected)
            out.checks.push_back({label + " is " + expected->to_string(), id.partition && *id.partition == *expected,
                                  "identified " + name});
    } catch (const std::domain_error& e) {
        out.subspaces.push_back(record(label, w.dim(), "unidentified", {}));
        out.checks.push_back({label + " carries a Hecke module structure", false, e.what()});
    }
}

CheckList combinatorics_checks(int n) {
    CheckList out;
    for (const Partition& lam : partitions_of(n)) {
        const std::string s = lam.to_string();
        const SytCount c = enumerate_syt(lam);
        const SytCount cc = enumerate_syt(lam.conjugate());
        const std::size_t d = hook_length_dim(lam);
        std::size_t branched = 0;
        for (const Partition& mu : branch_restrict(lam)) branched += hook_length_dim(mu);
        out.push_back({s + " SYT count = hook dimension", c.count == d, std::to_string(c.count)});
        out.push_back({s + " g1 split sums to count", c.g1_row + c.g1_col == c.count, ""});
        out.push_back({s + " conjugate swaps g1 split",
                       cc.count == c.count && cc.g1_row == c.g1_col && cc.g1_col == c.g1_row, ""});
        out.push_back({s + " branching preserves dimension", branched == d, ""});
    }
    return out;
}

SuiteReport run_relations(const SuiteConfig& cfg, const FieldChoice& fc) {
    forbid(cfg.t_case.has_value(), "--t-case", cfg.suite);
    std::vector<LChoice> defaults;
    for (LCase c : named_lcases()) defaults.push_back(tag_choice(c));
    defaults.push_back({LCase::explicit_value, LaurentMonomial{1, 5}, "l=r^5"});
    const auto ls = resolve_l(cfg, defaults);
    SuiteReport rep{cfg, {}};
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for (const LChoice& lc : ls) {
            const ParamSpec p = case_params(n, fc, lc);
            CaseResult cr = base_result(p, fc, lc.label);
            cr.checks = relation_suite(RepSet::build(p));
            rep.results.push_back(std::move(cr));
        }
    return rep;
}

SuiteReport run_kernels(const SuiteConfig& cfg, const FieldChoice& fc) {
    forbid(cfg.t_case.has_value(), "--t-case", cfg.suite);
    std::vector<LChoice> defaults;
    for (LCase c : named_lcases()) defaults.push_back(tag_choice(c));
    const auto ls = resolve_l(cfg, defaults);
    SuiteReport rep{cfg, {}};
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for (const LChoice& lc : ls) {
            const ParamSpec p = case_params(n, fc, lc);
            const RepSet rs = RepSet::build(p);
            const KnResult kn = compute_Kn(rs);
            CaseResult cr = base_result(p, fc, lc.label);
            cr.k_n = kn.k_n;
            cr.checks.push_back({"K(n) invariant under all g_i", invariance_check(kn.kn, rs.generators()), ""});
            kernel_expectations(rs, kn, fc, cr);
            rep.results.push_back(std::move(cr));
        }
    return rep;
}

SuiteReport run_classify(const SuiteConfig& cfg, const FieldChoice& fc) {
    forbid(cfg.t_case.has_value(), "--t-case", cfg.suite);
    std::vector<LChoice> defaults;
    for (LCase c : named_lcases()) defaults.push_back(tag_choice(c));
    const auto ls = resolve_l(cfg, defaults);
    SuiteReport rep{cfg, {}};
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        CaseResult comb;
        comb.n = n;
        comb.field = "none";
        comb.case_label = "combinatorics";
        comb.checks = combinatorics_checks(n);
        rep.results.push_back(std::move(comb));

        for (const LChoice& lc : ls) {
            const ParamSpec p = case_params(n, fc, lc);
            const RepSet rs = RepSet::build(p);
            const KnResult kn = compute_Kn(rs);
            CaseResult cr = base_result(p, fc, lc.label);
            cr.k_n = kn.k_n;
            const bool generic_field = !fc.r_value && fc.field.kind() == FieldKind::ratfunc;
            if (is_qn_field(fc, n) && p.lcase == LCase::l_eq_neg_r3) {
                const auto expected = classify_expected(n, TCase::t_eq_neg_one, true);
                classify_subspace("line", span_of({onedim_vector(p)}), rs, expected[0].summands.front(), cr);
                classify_subspace("S", inductive_V_span(p), rs, expected[1].summands.front(), cr);
            } else if (kn.k_n > 0) {
                std::optional<Partition> expected;
                if (auto t = tcase_for(p.lcase); t && generic_field)
                    expected = classify_expected(n, *t, false).front().summands.front();
                classify_subspace("K(n)", kn.kn, rs, expected, cr);
            }
            rep.results.push_back(std::move(cr));
        }
    }
    return rep;
}

SuiteReport run_main_theorem(const SuiteConfig& cfg) {
    forbid(cfg.l.has_value(), "--l", cfg.suite);
    forbid(cfg.l_case.has_value(), "--l-case", cfg.suite);
    std::optional<TCase> only;
    if (cfg.t_case) {
        only = parse_tcase(*cfg.t_case);
        if (!only) throw ConfigError("unknown --t-case tag '" + *cfg.t_case + "'");
    }
    std::optional<FieldChoice> fc;
    if (cfg.field) {
        fc = parse_field(*cfg.field);
        if (fc->r_value) throw ConfigError("main-theorem works over ratfunc or cyclotomic:<4n>");
    }
    const bool cyclotomic_only = fc && fc->field.kind() == FieldKind::cyclotomic;
    if (cyclotomic_only && only && *only != TCase::t_eq_neg_one)
        throw ConfigError("q^n = -1 is only classified for t = -1 (t_eq_neg_one)");

    SuiteReport rep{cfg, {}};
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        if (cyclotomic_only && fc->field.modulus_index() != 4 * n)
            throw ConfigError("q^n = -1 at n=" + std::to_string(n) + " needs --field cyclotomic:" +
                              std::to_string(4 * n));
        if (n == 3 && only == TCase::t_eq_inv_q) throw ConfigError("t = 1/q has no (n-2,2) module at n = 3");
        std::vector<std::pair<TCase, bool>> cases;
        if (!cyclotomic_only)
            for (TCase t : all_tcases())
                if ((!only || t == *only) && !(n == 3 && t == TCase::t_eq_inv_q)) cases.emplace_back(t, false);
        if (cyclotomic_only || (!fc && !only)) cases.emplace_back(TCase::t_eq_neg_one, true);

        for (auto [t, qn] : cases) {
            const ClassificationReport cr = verify_main_theorem(n, t, qn);
            CaseResult out;
            out.n = n;
            out.field = cr.field.to_string();
            out.case_label = std::string(to_string(t)) + (qn ? " q^n=-1" : "");
            out.r = FieldElement::generator(cr.field).to_string();
            out.l = to_string(l_monomial(cr.l_case, n));
            out.k_n = cr.k_n;
            for (const auto& s : cr.subspaces) out.subspaces.push_back(record(s.label, s.dim, s.identified, s.signature));
            std::string expected;
            for (const auto& e : classify_expected(n, t, qn)) {
                expected += (expected.empty() ? "" : "; ") + e.label + ":";
                for (std::size_t i = 0; i < e.summands.size(); ++i)
                    expected += (i ? "+" : "") + e.summands[i].to_string();
            }
            out.extra.emplace_back("expected", expected);
            out.checks = cr.checks;
            rep.results.push_back(std::move(out));
        }
    }
    return rep;
}

SuiteReport run_genericity(const SuiteConfig& cfg) {
    forbid(cfg.l.has_value(), "--l", cfg.suite);
    forbid(cfg.l_case.has_value(), "--l-case", cfg.suite);
    forbid(cfg.t_case.has_value(), "--t-case", cfg.suite);
    forbid(cfg.field.has_value(), "--field", cfg.suite);
    if (cfg.trials < 1) throw ConfigError("--trials must be >= 1");
    SuiteReport rep{cfg, {}};
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const GenericityReport g = genericity_probe(n, cfg.trials, cfg.seed);
        CaseResult out;
        out.n = n;
        out.field = "rational";
        out.case_label = "random r, l off the reducibility locus";
        out.extra.emplace_back("seed", std::to_string(cfg.seed));
        for (std::size_t k = 0; k < g.trials.size(); ++k) {
            const auto& t = g.trials[k];
            out.checks.push_back({"trial " + std::to_string(k + 1) + " r=" + t.r.get_str() + " l=" + t.l.get_str() +
                                      " k(n)=0",
                                  t.k_n == 0,
                                  "k(n)=" + std::to_string(t.k_n) + " redraws=" + std::to_string(t.redraws)});
        }
        rep.results.push_back(std::move(out));
    }
    return rep;
}

SuiteReport run_lemma4(const SuiteConfig& cfg) {
    forbid(cfg.l.has_value(), "--l", cfg.suite);
    forbid(cfg.l_case.has_value(), "--l-case", cfg.suite);
    forbid(cfg.t_case.has_value(), "--t-case", cfg.suite);
    forbid(cfg.field.has_value(), "--field", cfg.suite);
    if (cfg.n_min <= cfg.n_max && cfg.n_min < 5) throw ConfigError("lemma4 needs n >= 5");
    SuiteReport rep{cfg, {}};
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const ParamSpec p = make_params(n, FieldDescriptor::ratfunc(), LCase::l_eq_neg_r3);
        CaseResult out = base_result(p, FieldChoice{}, std::string(to_string(LCase::l_eq_neg_r3)));
        out.checks = lemma4_check(RepSet::build(p));
        rep.results.push_back(std::move(out));
    }
    return rep;
}

SuiteReport run_proof_traces(const SuiteConfig& cfg) {
    forbid(cfg.l.has_value(), "--l", cfg.suite);
    forbid(cfg.l_case.has_value(), "--l-case", cfg.suite);
    forbid(cfg.t_case.has_value(), "--t-case", cfg.suite);
    forbid(cfg.field.has_value(), "--field", cfg.suite);
    SuiteReport rep{cfg, {}};
    if (cfg.n_min > cfg.n_max) return rep;
    if (cfg.n_min != 8 || cfg.n_max != 8) throw ConfigError("proof-traces runs at n = 8 only");
    for (TraceCase c : {TraceCase::l_eq_r_n8, TraceCase::l_eq_neg_r3_n8}) {
        const LCase lc = c == TraceCase::l_eq_r_n8 ? LCase::l_eq_r : LCase::l_eq_neg_r3;
        const ParamSpec p = make_params(8, FieldDescriptor::ratfunc(), lc);
        CaseResult out = base_result(p, FieldChoice{}, std::string(to_string(lc)));
        out.checks = check_proof_trace(c);
        rep.results.push_back(std::move(out));
    }
    return rep;
}

std::string case_prefix(const CaseResult& c) {
    return "n=" + std::to_string(c.n) + " " + c.field + " " + c.case_label + ": ";
}

Json signature_json(const SubspaceRecord& s) {
    Json by_content = Json::object();
    for (const auto& [c, d] : s.signature.restriction_by_content) by_content[std::to_string(c)] = d;
    return Json{{"label", s.label},
                {"dim", s.dim},
                {"partition", s.partition},
                {"g1_mults", Json::array({s.signature.g1_mult_r, s.signature.g1_mult_neg})},
                {"restriction_dims", s.signature.restriction_dims},
                {"restriction_by_content", by_content}};
}

Json opt(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> v{"relations", "kernels",  "classify",    "main-theorem",
                                            "genericity", "lemma4", "proof-traces"};
    return v;
}

FieldChoice parse_field(const std::string& text) {
    if (text == "ratfunc") return {};
    auto read = [&text](std::string_view s, long& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{} || p != s.data() + s.size()) throw ConfigError("cannot parse --field '" + text + "'");
    };
    const std::string_view sv(text);
    if (sv.starts_with("cyclotomic:")) {
        long m = 0;
        read(sv.substr(11), m);
        if (m < 3) throw ConfigError("--field cyclotomic:<m> needs m >= 3");
        return {FieldDescriptor::cyclotomic(static_cast<int>(m)), std::nullopt};
    }
    if (sv.starts_with("rational:")) {
        const std::string_view v = sv.substr(9);
        const auto slash = v.find('/');
        long p = 0, q = 1;
        read(v.substr(0, slash), p);
        if (slash != std::string_view::npos) read(v.substr(slash + 1), q);
        if (q == 0) throw ConfigError("--field rational:<p>/<q> needs q != 0");
        Rational r(p, q);
        r.canonicalize();
        return {FieldDescriptor::rational(), r};
    }
    throw ConfigError("unknown --field '" + text + "' (ratfunc | cyclotomic:<m> | rational:<p>/<q>)");
}

bool SuiteReport::pass() const {
    for (const auto& r : results)
        if (!all_pass(r.checks)) return false;
    return true;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
        throw ConfigError("unknown suite '" + cfg.suite + "'");
    if (cfg.n_min <= cfg.n_max && (cfg.n_min < 3 || cfg.n_max > cfg.max_n))
        throw ConfigError("n must lie in 3.." + std::to_string(cfg.max_n) +
                          " (desk-scale guard; raise with --max-n or LK_MAX_N)");

    const FieldChoice fc = cfg.field ? parse_field(*cfg.field) : FieldChoice{};
    if (cfg.suite == "relations") return run_relations(cfg, fc);
    if (cfg.suite == "kernels") return run_kernels(cfg, fc);
    if (cfg.suite == "classify") return run_classify(cfg, fc);
    if (cfg.suite == "main-theorem") return run_main_theorem(cfg);
    if (cfg.suite == "genericity") return run_genericity(cfg);
    if (cfg.suite == "lemma4") return run_lemma4(cfg);
    return run_proof_traces(cfg);
}

std::string emit_report(const SuiteReport& report, ReportFormat format) {
    const SuiteConfig& cfg = report.config;
    if (format == ReportFormat::text) {
        std::ostringstream os;
        std::size_t total = 0, passed = 0;
        os << "suite " << cfg.suite << "\n";
        for (const auto& r : report.results) {
            os << "n=" << r.n << " field=" << r.field << " case=" << r.case_label;
            if (!r.l.empty()) os << " l=" << r.l;
            if (r.k_n) os << " k_n=" << *r.k_n;
            os << "\n";
            for (const auto& s : r.subspaces) os << "  subspace " << s.label << " dim " << s.dim << " " << s.partition << "\n";
            for (const auto& c : r.checks) {
                ++total;
                if (c.pass) ++passed;
                os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
                if (!c.pass && !c.detail.empty()) os << " (" << c.detail << ")";
                os << "\n";
            }
        }
        os << (report.pass() ? "PASS" : "FAIL") << " " << passed << "/" << total << " checks\n";
        return os.str();
    }

    Json results = Json::array();
    Json flat = Json::array();
    for (const auto& r : report.results) {
        Json jr{{"n", r.n}, {"field", r.field}, {"case", r.case_label}, {"r", r.r}, {"l", r.l}};
        jr["k_n"] = r.k_n ? Json(*r.k_n) : Json(nullptr);
        Json subs = Json::array();
        for (const auto& s : r.subspaces) subs.push_back(signature_json(s));
        jr["subspaces"] = subs;
        Json extra = Json::object();
        for (const auto& [k, v] : r.extra) extra[k] = v;
        jr["extra"] = extra;
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            flat.push_back(Json{{"name", case_prefix(r) + c.name}, {"pass", c.pass}});
        }
        jr["checks"] = checks;
        jr["pass"] = all_pass(r.checks);
        results.push_back(std::move(jr));
    }
    Json doc{{"suite", cfg.suite},
             {"config",
              Json{{"n_min", cfg.n_min},
                   {"n_max", cfg.n_max},
                   {"l", opt(cfg.l)},
                   {"l_case", opt(cfg.l_case)},
                   {"t_case", opt(cfg.t_case)},
                   {"field", opt(cfg.field)},
                   {"seed", cfg.seed},
                   {"trials", cfg.trials}}},
             {"pass", report.pass()},
             {"results", results},
             {"checks", flat}};
    return doc.dump(2) + "\n";
}

}  // namespace lk
