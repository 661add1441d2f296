// One line per acceptance criterion.  Exit status is nonzero if a criterion
// fails, unless it is listed in known_red below together with the reason.
#include "cli.hpp"
#include "slocc/errors.hpp"
#include "slocc/harness.hpp"
#include "slocc/io.hpp"

#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace slocc;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

const std::map<int, std::string> known_red{
    {1, "the stated target (1, 0, 1/(1+2 z3), 3/(1+2 z3)^3) is not the identity at z3 = 0; the J-A map "
        "a1' = a1/(1+a1 z3) on a1 = 2 gives 2/(1+2 z3), confirmed by explicit matrix re-canonicalization"},
};

std::string suite_line(const SuiteReport& r)
{
    return std::to_string(r.passed) + " passed, " + std::to_string(r.failed) + " failed, " +
           std::to_string(r.redraws) + " degenerate draws redrawn";
}

Result ac1()
{
    auto cf = CanonicalForm::single_block(1, {0, 2, 3});
    bool literal = true, closed = true;
    std::string first_diff;
    for (const Scalar& z : {Scalar(1), Scalar(0), Scalar::frac(1, 3), Scalar(-2), Scalar::frac(7, 5)}) {
        Scalar d = 1 + 2 * z;
        CanonicalForm got = apply_T_JA(cf, z);
        if (!(got == CanonicalForm::single_block(1, {0, d.inv(), 3 * pow(d, -3)}))) {
            literal = false;
            if (first_diff.empty())
                first_diff = "z3=" + z.str() + " gives a1'=" + got.runs[0][0][0][1].str() + ", a2'=" +
                             got.runs[0][0][0][2].str();
        }
        closed = closed && got == CanonicalForm::single_block(1, {0, 2 * d.inv(), 3 * pow(d, -3)});
    }
    if (literal)
        return {true, "exact"};
    return {false, first_diff + "; output matches (1, 0, 2/(1+2 z3), 3/(1+2 z3)^3): " + (closed ? "yes" : "no")};
}

Result ac5()
{
    size_t eq = 0, ineq = 0, total = 100, redraws = 0;
    std::string fail;
    std::string fa = "/tmp/slocc_acc_a.json", fb = "/tmp/slocc_acc_b.json", fc = "/tmp/slocc_acc_c.json";
    auto equiv = [](const std::string& a, const std::string& b) {
        std::ostringstream out, err;
        int code = cli::run({"slocc", "equiv", a, b, "--json"}, out, err);
        return std::make_pair(code, Json::parse(out.str()));
    };
    for (size_t k = 0; k < total; ++k) {
        std::mt19937_64 rng(derive_seed(2024, k));
        CanonicalForm cf, img;
        SymmetryParams sp;
        for (;;) {
            GenConfig cfg;
            cfg.seed = rng();
            cfg.decoupled = true;
            size_t n = 1 + rng() % 6;
            std::vector<Scalar> pool{random_rational(rng, 4), random_rational(rng, 4)};
            for (size_t left = n; left > 0;) {
                size_t s = 1 + rng() % std::min<size_t>(4, left);
                cfg.block_profile.push_back({pool[rng() % 2], s});
                left -= s;
            }
            cfg.N = n;
            cfg.coefficient_bound = 5;
            cf = gen_canonical(cfg);
            sp = gen_params(rng, 3);
            try {
                img = apply_all(cf, sp);
                break;
            } catch (const DegenerateParameter&) {
                ++redraws;
            }
        }
        std::ofstream(fa) << write_canon(cf);
        std::ofstream(fb) << write_canon(img);
        auto [code, rep] = equiv(fa, fb);
        bool ok = code == 0 && rep["verdict"] == "Equivalent";
        if (ok) {
            auto& w = rep["witness"];
            SymmetryParams ws{Scalar::parse(w["z1"]), Scalar::parse(w["z2"]), Scalar::parse(w["z3"]),
                              Scalar::parse(w["d2"]), Scalar::parse(w["d3"])};
            ok = apply_params(cf, ws) == img;
        }
        eq += ok;
        if (!ok && fail.empty())
            fail = "image of " + profile_str(cf) + " not certified";

        // a different block-size multiset
        if (cf.dim() > 1) {
            CanonicalForm other;
            do {
                GenConfig cfg;
                cfg.seed = rng();
                cfg.decoupled = true;
                cfg.N = cf.dim();
                for (size_t left = cfg.N; left > 0;) {
                    size_t s = 1 + rng() % std::min<size_t>(4, left);
                    cfg.block_profile.push_back({std::nullopt, s});
                    left -= s;
                }
                other = gen_canonical(cfg);
            } while (other.size_multiset() == cf.size_multiset());
            std::ofstream(fc) << write_canon(other);
            auto [c2, r2] = equiv(fa, fc);
            bool ok2 = c2 == 1 && r2["verdict"] == "Inequivalent";
            ineq += ok2;
            if (!ok2 && fail.empty())
                fail = "different block sizes not separated for " + profile_str(cf);
        } else {
            ++ineq;
        }
    }
    Result r;
    r.pass = eq == total && ineq == total;
    r.detail = std::to_string(eq) + "/" + std::to_string(total) + " images Equivalent with re-verified witness, " +
               std::to_string(ineq) + "/" + std::to_string(total) + " size-mismatched pairs Inequivalent, " +
               std::to_string(redraws) + " degenerate draws redrawn; forms decoupled (block sizes are not invariant for coupled runs), eigenvalue repeats included" +
               (fail.empty() ? "" : "; first failure: " + fail);
    return r;
}

Result ac8()
{
    SuiteReport r = suite_split({0, 1, 0});
    std::string d;
    for (auto& t : r.trials)
        d += (d.empty() ? "" : "; ") + t.profile + " -> " + t.detail;
    return {r.ok(), d};
}

Result suite_result(const SuiteReport& r)
{
    return {r.ok(), suite_line(r)};
}

} // namespace

int main(int argc, char** argv)
{
    bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    struct Criterion {
        int id;
        std::string name;
        double limit_s;
        std::function<Result()> run;
    };
    std::vector<Criterion> criteria{
        {1, "golden J-A map on (1,0,2,3)", 0.001, ac1},
        {2, "E-J and E-A closed forms, 50 tuples", 1.0, [] { return suite_result(suite_closed_forms({1, 1, 50})); }},
        {3, "Moebius law for 2xNxN, 100 cases", 5.0, [] { return suite_result(suite_mobius({2, 1, 100})); }},
        {4, "symmetry engine vs matrix oracle, 300 trials", 60.0, [] { return suite_result(suite_oracle({3, 1, 300})); }},
        {5, "orbit decision soundness via equiv, 100 forms", 60.0, ac5},
        {6, "commutant dimension and Kronecker solve", 10.0, [] { return suite_result(suite_commutant({4, 1, 0})); }},
        {7, "nilpoly round trips, 200 polynomials", 5.0, [] { return suite_result(suite_nilpoly({5, 1, 200})); }},
        {8, "non-full-rank beta predicate examples", 1.0, ac8},
    };
    bool ok = true;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = s < c.limit_s;
        bool pass = r.pass && in_time;
        std::ostringstream line;
        line << "AC" << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << s << " s, limit "
             << c.limit_s << " s]  " << r.detail;
        if (!in_time)
            line << "  (time limit exceeded)";
        std::cout << line.str() << "\n";
        if (!pass) {
            auto it = known_red.find(c.id);
            if (it != known_red.end() && !strict)
                std::cout << "    known red: " << it->second << "\n";
            else
                ok = false;
        }
    }
    return ok ? 0 : 1;
}
