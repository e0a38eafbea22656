#include "lk/specht.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace lk;

namespace {

const FieldDescriptor kQr = FieldDescriptor::ratfunc();

Partition P(std::vector<int> p) { return Partition(std::move(p)); }

// Count tableaux by trying every filling of the diagram.
SytCount brute_force_syt(const Partition& lam) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
    std::vector<int> fill(cells.size());
    std::iota(fill.begin(), fill.end(), 1);
    SytCount out;
    do {
        std::map<std::pair<int, int>, int> at;
        for (std::size_t k = 0; k < cells.size(); ++k) at[cells[k]] = fill[k];
        bool ok = true;
        for (const auto& [cell, v] : at) {
            auto right = at.find({cell.first, cell.second + 1});
            auto below = at.find({cell.first + 1, cell.second});
            if ((right != at.end() && right->second < v) || (below != at.end() && below->second < v)) ok = false;
        }
        if (!ok) continue;
        ++out.count;
        if (cells.size() >= 2) {
            if (at.count({0, 1}) && at.at({0, 1}) == 2) ++out.g1_row;
            if (at.count({1, 0}) && at.at({1, 0}) == 2) ++out.g1_col;
        }
    } while (std::next_permutation(fill.begin(), fill.end()));
    return out;
}

std::vector<std::string> names(const std::vector<Partition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

}  // namespace

TEST_CASE("partitions") {
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n <= 9; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
    CHECK(partitions_of(4).front() == P({4}));
    CHECK(partitions_of(4).back() == P({1, 1, 1, 1}));
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    CHECK(P({4, 2, 1}).to_string() == "(4,2,1)");
}

TEST_CASE("hook length dimensions") {
    for (int n = 1; n <= 8; ++n) CHECK(hook_length_dim(P({n})) == 1);
    CHECK(hook_length_dim(P({2, 2})) == 2);
    CHECK(hook_length_dim(P({3, 3})) == 5);
    CHECK(hook_length_dim(P({2, 2, 2})) == 5);
    CHECK(hook_length_dim(P({4, 3})) == 14);
    CHECK(hook_length_dim(P({2, 2, 2, 1})) == 14);
    CHECK(hook_length_dim(P({4, 4})) == 14);
    CHECK(hook_length_dim(P({2, 2, 2, 2})) == 14);
}

TEST_CASE("standard Young tableaux") {
    auto same = [](SytCount a, std::size_t c, std::size_t r, std::size_t k) {
        return a.count == c && a.g1_row == r && a.g1_col == k;
    };
    CHECK(same(enumerate_syt(P({2})), 1, 1, 0));
    CHECK(same(enumerate_syt(P({1, 1})), 1, 0, 1));
    CHECK(same(enumerate_syt(P({3, 2})), 5, 3, 2));
    for (int n = 2; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            CAPTURE(lam.to_string());
            const SytCount got = enumerate_syt(lam), want = brute_force_syt(lam);
            CHECK(got.count == want.count);
            CHECK(got.g1_row == want.g1_row);
            CHECK(got.g1_col == want.g1_col);
        }
}

TEST_CASE("tableau counts, conjugation and branching up to n = 9") {
    for (int n = 2; n <= 9; ++n)
        for (const Partition& lam : partitions_of(n)) {
            CAPTURE(lam.to_string());
            const SytCount s = enumerate_syt(lam);
            CHECK(s.count == hook_length_dim(lam));
            CHECK(s.count == s.g1_row + s.g1_col);
            const SytCount c = enumerate_syt(lam.conjugate());
            CHECK(c.g1_row == s.g1_col);
            CHECK(c.g1_col == s.g1_row);
            std::size_t branched = 0;
            for (const Partition& mu : branch_restrict(lam)) branched += hook_length_dim(mu);
            CHECK(branched == hook_length_dim(lam));
        }
}

TEST_CASE("branching examples") {
    CHECK(names(branch_restrict(P({2, 2, 1, 1}))) == std::vector<std::string>{"(2,1,1,1)", "(2,2,1)"});
    CHECK(names(branch_restrict(P({2, 2, 2, 1}))) == std::vector<std::string>{"(2,2,1,1)", "(2,2,2)"});
    CHECK(names(branch_restrict(P({6}))) == std::vector<std::string>{"(5)"});
    std::vector<std::string> twice;
    for (const auto& mu : branch_restrict(P({4, 3})))
        for (const auto& nu : branch_restrict(mu)) twice.push_back(nu.to_string());
    std::sort(twice.begin(), twice.end());
    CHECK(twice == std::vector<std::string>{"(3,2)", "(3,2)", "(4,1)"});
    CHECK_THROWS_AS(branch_restrict(P({1})), std::invalid_argument);
}

TEST_CASE("large modules outside the small list") {
    // Outside the listed shapes and their conjugates every module is bigger
    // than (n-1)(n-2)/2, except (4,3), (2,2,2,1) at n = 7 and (4,4), (2,2,2,2) at n = 8.
    for (int n = 7; n <= 9; ++n) {
        std::vector<Partition> small{P({n}), P({n - 1, 1}), P({n - 2, 2}), P({n - 2, 1, 1})};
        const std::size_t count = small.size();
        for (std::size_t k = 0; k < count; ++k) small.push_back(small[k].conjugate());
        std::vector<std::string> exceptions;
        for (const Partition& lam : partitions_of(n)) {
            if (std::find(small.begin(), small.end(), lam) != small.end()) continue;
            if (hook_length_dim(lam) <= static_cast<std::size_t>((n - 1) * (n - 2) / 2))
                exceptions.push_back(lam.to_string());
        }
        CAPTURE(n);
        if (n == 7) CHECK(exceptions == std::vector<std::string>{"(4,3)", "(2,2,2,1)"});
        if (n == 8) CHECK(exceptions == std::vector<std::string>{"(4,4)", "(2,2,2,2)"});
        if (n == 9) CHECK(exceptions.empty());
    }
}

TEST_CASE("every partition of n is identified uniquely by its own signature") {
    for (int n = 2; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            CAPTURE(lam.to_string());
            const Identification id = identify_module(predicted_signature(lam), n);
            REQUIRE(id.partition.has_value());
            CHECK(*id.partition == lam);
        }
}

TEST_CASE("signatures of computed subspaces") {
    {
        const ParamSpec p = make_params(5, kQr, LCase::l_eq_inv_r2n3);
        const RepSet rep = RepSet::build(p);
        const ModuleSignature s = subspace_signature(span_of({onedim_vector(p)}), rep);
        CHECK(s.dim == 1);
        CHECK(s.g1_mult_r == 1);
        CHECK(s.g1_mult_neg == 0);
        CHECK(s.restriction_dims == std::vector<std::size_t>{1});
        CHECK(identify_module(s, 5).partition == P({5}));
    }
    {
        const RepSet rep = RepSet::build(make_params(5, kQr, LCase::l_eq_r));
        const ModuleSignature s = subspace_signature(compute_Kn(rep).kn, rep);
        CHECK(s.dim == 5);
        CHECK(s.g1_mult_r == 3);
        CHECK(s.g1_mult_neg == 2);
        const Identification id = identify_module(s, 5);
        CHECK(id.partition == P({3, 2}));
        CHECK_FALSE(identify_module(s, 5).partition == P({2, 2, 1}));
    }
    {
        const RepSet rep = RepSet::build(make_params(4, kQr, LCase::l_eq_neg_r3));
        const ModuleSignature s = subspace_signature(compute_Kn(rep).kn, rep);
        const SytCount want = enumerate_syt(P({2, 1, 1}));
        CHECK(s.g1_mult_r == want.g1_row);
        CHECK(s.g1_mult_neg == want.g1_col);
    }
    {
        const RepSet rep = RepSet::build(make_params(5, kQr, LCase::l_eq_neg_r3));
        const ModuleSignature s = subspace_signature(compute_Kn(rep).kn, rep);
        CHECK(s.dim == 6);
        CHECK(s.restriction_dims == std::vector<std::size_t>{3, 3});
        CHECK(identify_module(s, 5).partition == P({3, 1, 1}));
    }
    {
        // The whole space is invariant but the generators do not satisfy the quadratic on it.
        const RepSet rep = RepSet::build(make_params(4, kQr, LCase::l_eq_r));
        CHECK_THROWS_AS(subspace_signature(SubspaceBasis::full(kQr, 6), rep), std::domain_error);
    }
}

TEST_CASE("ambiguous signatures are reported, not guessed") {
    ModuleSignature s;
    s.dim = 1;
    CHECK(identify_module(s, 5).ambiguous());
    CHECK(identify_module(s, 5).candidates.empty());
}

TEST_CASE("expected classification") {
    const auto e = classify_expected(6, TCase::t_eq_inv_q, false);
    REQUIRE(e.size() == 1);
    CHECK(e[0].summands == std::vector<Partition>{P({4, 2})});
    CHECK(classify_expected(5, TCase::t_eq_inv_qn, false)[0].summands.front() == P({5}));
    CHECK(classify_expected(5, TCase::t_eq_neg_inv_sqrt_qn, false)[0].summands.front() == P({4, 1}));
    const auto three = classify_expected(5, TCase::t_eq_neg_one, true);
    REQUIRE(three.size() == 3);
    CHECK(three[2].summands == std::vector<Partition>{P({5}), P({3, 1, 1})});
    CHECK_THROWS_AS(classify_expected(5, TCase::t_eq_inv_q, true), std::invalid_argument);
    CHECK_THROWS_AS(classify_expected(3, TCase::t_eq_inv_q, false), std::invalid_argument);
}

TEST_CASE("classification of K(n) for sample cases") {
    {
        const ClassificationReport r = verify_main_theorem(5, TCase::t_eq_inv_q, false);
        CHECK(r.k_n == 5);
        CHECK(r.subspaces.at(0).identified == "(3,2)");
        CHECK(r.pass());
    }
    {
        const ClassificationReport r = verify_main_theorem(5, TCase::t_eq_neg_one, false);
        CHECK(r.k_n == 6);
        CHECK(r.subspaces.at(0).identified == "(3,1,1)");
        CHECK(r.pass());
    }
    {
        const ClassificationReport r = verify_main_theorem(4, TCase::t_eq_neg_one, true);
        CHECK(r.field == FieldDescriptor::cyclotomic(16));
        REQUIRE(r.subspaces.size() == 3);
        std::vector<std::size_t> dims;
        for (const auto& s : r.subspaces) dims.push_back(s.dim);
        std::sort(dims.begin(), dims.end());
        CHECK(dims == std::vector<std::size_t>{1, 3, 4});
        CHECK(r.pass());
    }
    CHECK_THROWS_AS(verify_main_theorem(9, TCase::t_eq_neg_one, false), std::invalid_argument);
}
