#include "cli.hpp"

#include "slocc/errors.hpp"
#include "slocc/harness.hpp"
#include "slocc/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace slocc::cli {

namespace {

std::vector<Scalar> parse_hints(const std::string& s)
{
    std::vector<Scalar> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(Scalar::parse(item));
    return out;
}

void write_out(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ParseError(path + ": cannot write file");
    f << text;
}

std::string tuple_str(const std::vector<Scalar>& t)
{
    std::string s = "(";
    for (size_t k = 0; k < t.size(); ++k)
        s += (k ? ", " : "") + t[k].str();
    return s + ")";
}

Json tuple_json(const std::vector<Scalar>& t)
{
    Json a = Json::array();
    for (auto& x : t)
        a.push_back(scalar_json(x));
    return a;
}

Json spec_json(const JordanSpec& spec)
{
    Json a = Json::array();
    for (auto& b : spec.blocks) {
        Json e;
        e["lambda"] = scalar_json(b.lambda);
        e["size"] = b.size;
        a.push_back(e);
    }
    return a;
}

std::string spec_str(const JordanSpec& spec)
{
    std::string s;
    for (auto& b : spec.blocks)
        s += (s.empty() ? "" : ", ") + b.lambda.str() + ":" + std::to_string(b.size);
    return s;
}

Json params_json(const SymmetryParams& sp)
{
    Json w;
    w["z1"] = scalar_json(sp.z1);
    w["z2"] = scalar_json(sp.z2);
    w["z3"] = scalar_json(sp.z3);
    w["d2"] = scalar_json(sp.d2);
    w["d3"] = scalar_json(sp.d3);
    return w;
}

std::string params_str(const SymmetryParams& sp)
{
    return "z1=" + sp.z1.str() + " z2=" + sp.z2.str() + " z3=" + sp.z3.str() + " d2=" + sp.d2.str() + " d3=" + sp.d3.str();
}

// the class data of one input file
struct Analysis {
    Json report;
    std::vector<std::string> lines;
    size_t n = 0;
    size_t max_rank = 0;
    bool full_rank = false;
    bool commuting = true;
    std::optional<CanonicalForm> cf;
};

Analysis analyze_state(const TensorState& psi, const CanonOptions& opts)
{
    Analysis a;
    a.n = psi.N;
    MaxRank mr = max_rank_combination(psi, opts.seed);
    a.max_rank = mr.r;
    a.full_rank = mr.r == psi.N;
    Json cert;
    cert["rank"] = mr.r;
    cert["N"] = psi.N;
    cert["certified"] = mr.certified;
    cert["t"] = tuple_json(mr.t);
    cert["samples"] = mr.samples;
    a.report["max_rank"] = cert;
    a.lines.push_back("max rank: " + std::to_string(mr.r) + " of " + std::to_string(psi.N) + " at t = " +
                      tuple_str(mr.t) + " (" + std::to_string(mr.samples) + " samples" +
                      (mr.certified ? ", certified" : "") + ")");
    if (!a.full_rank) {
        Reduction red = reduce_to_lambda(psi, opts.seed);
        PartitionedForm pf = nonfull_rank_split(red.state);
        bool cond = beta_canonical_check(pf, opts.seed);
        Json sp;
        sp["n"] = pf.n;
        sp["m"] = pf.m;
        sp["i"] = pf.i;
        sp["beta_condition"] = cond;
        a.lines.push_back("not full rank: split into gamma part n = " + std::to_string(pf.n) + " and beta part m = " +
                          std::to_string(pf.m) + ", i = " + std::to_string(pf.i));
        a.lines.push_back(std::string("beta condition r_max(Lambda' + sum alpha_j beta_j) = m - i: ") +
                          (cond ? "true" : "false"));
        if (pf.n > 0) {
            std::vector<Matrix> g{Matrix::identity(pf.n)};
            for (auto& m : pf.gamma_part)
                g.push_back(m);
            CanonReport rep = canonicalize_full_rank(TensorState(g), opts);
            sp["gamma_commuting"] = rep.commuting;
            if (rep.commuting) {
                sp["gamma_canon"] = canon_json(rep.cf);
                a.lines.push_back("gamma part jordan spec: " + spec_str(rep.cf.spec));
            } else {
                a.lines.push_back("gamma part does not commute");
            }
        }
        a.report["split"] = sp;
        return a;
    }
    CanonReport rep = canonicalize_full_rank(psi, opts);
    a.commuting = rep.commuting;
    a.report["kept_slots"] = rep.kept_slots;
    a.report["proportional"] = rep.proportional;
    a.report["commuting"] = rep.commuting;
    std::string kept;
    for (size_t s : rep.kept_slots)
        kept += (kept.empty() ? "" : " ") + std::to_string(s + 1);
    a.lines.push_back("slots kept: " + kept + (rep.proportional ? " (all proportional to the first, shifted to zero)" : ""));
    if (!rep.commuting) {
        a.lines.push_back("commuting: no; the reduced pair does not commute");
        return a;
    }
    a.lines.push_back("commuting: yes");
    a.lines.push_back("jordan spec: " + spec_str(rep.cf.spec));
    a.report["jordan_spec"] = spec_json(rep.cf.spec);
    a.cf = rep.cf;
    return a;
}

Analysis analyze_file(const std::string& path, const CanonOptions& opts)
{
    std::string text = read_file(path);
    if (detect_kind(text, path) == FileKind::Canon) {
        // realized and canonicalized again, so canon files and state files go the same way
        CanonicalForm cf = read_canon(text, path);
        return analyze_state(realize(cf), opts);
    }
    return analyze_state(read_state(text, path), opts);
}

CanonicalForm load_form(const std::string& path, const CanonOptions& opts)
{
    std::string text = read_file(path);
    if (detect_kind(text, path) == FileKind::Canon)
        return read_canon(text, path);
    Analysis a = analyze_state(read_state(text, path), opts);
    if (!a.full_rank)
        throw InvalidArgument(path + ": state is not of full rank");
    if (!a.commuting)
        throw NotCommuting(path + ": reduced pair does not commute");
    return *a.cf;
}

int cmd_canonicalize(const std::string& input, const std::string& output, bool json, const std::string& hints,
                     uint64_t seed, std::ostream& out, std::ostream& err)
{
    CanonOptions opts{seed, parse_hints(hints)};
    Analysis a = analyze_file(input, opts);
    Json rep;
    rep["command"] = "canonicalize";
    rep["input"] = input;
    for (auto& [k, v] : a.report.items())
        rep[k] = v;
    int code = ok;
    if (a.full_rank && !a.commuting)
        code = not_commuting;
    std::string canon;
    if (a.cf) {
        canon = write_canon(*a.cf);
        rep["canon"] = canon_json(*a.cf);
        if (!output.empty())
            write_out(output, canon);
    }
    if (json) {
        rep["exit_code"] = code;
        out << rep.dump(2) << "\n";
        return code;
    }
    // the canon file goes to stdout unless -o is given, the report then goes to stderr
    std::ostream& rs = (a.cf && output.empty()) ? err : out;
    for (auto& l : a.lines)
        rs << l << "\n";
    if (a.cf && output.empty())
        out << canon;
    return code;
}

int cmd_equiv(const std::string& pa, const std::string& pb, bool json, uint64_t seed, std::ostream& out)
{
    CanonOptions opts{seed, {}};
    Json rep;
    rep["command"] = "equiv";
    OrbitDecision d;
    auto text_a = read_file(pa), text_b = read_file(pb);
    auto full = [&](const std::string& path, const std::string& text) {
        if (detect_kind(text, path) == FileKind::Canon)
            return std::make_pair(std::optional<CanonicalForm>(read_canon(text, path)), Analysis{});
        Analysis an = analyze_state(read_state(text, path), opts);
        if (an.full_rank && !an.commuting)
            throw NotCommuting(path + ": reduced pair does not commute");
        return std::make_pair(an.cf, an);
    };
    auto [cfa, an_a] = full(pa, text_a);
    auto [cfb, an_b] = full(pb, text_b);
    if (cfa && cfb) {
        d = orbit_equivalent(*cfa, *cfb, seed);
    } else {
        size_t na = cfa ? cfa->dim() : an_a.n, nb = cfb ? cfb->dim() : an_b.n;
        size_t ra = cfa ? na : an_a.max_rank, rb = cfb ? nb : an_b.max_rank;
        if (na != nb || ra != rb) {
            d.verdict = Verdict::Inequivalent;
            d.note = "maximal ranks differ";
        } else {
            d.note = "states of less than full rank are not compared beyond their maximal rank";
        }
    }
    int code = d.verdict == Verdict::Equivalent ? ok : d.verdict == Verdict::Inequivalent ? failed : undecided;
    if (json) {
        rep["verdict"] = to_string(d.verdict);
        if (d.verdict == Verdict::Equivalent) {
            rep["witness"] = params_json(d.witness);
            rep["permutation"] = d.permutation;
        }
        if (!d.note.empty())
            rep["note"] = d.note;
        rep["exit_code"] = code;
        out << rep.dump(2) << "\n";
        return code;
    }
    out << to_string(d.verdict) << "\n";
    if (d.verdict == Verdict::Equivalent) {
        out << "witness: " << params_str(d.witness) << "\n";
        std::string p;
        for (size_t k : d.permutation)
            p += (p.empty() ? "" : " ") + std::to_string(k);
        out << "block permutation: " << p << "\n";
    }
    if (!d.note.empty())
        out << "note: " << d.note << "\n";
    if (d.verdict == Verdict::Inequivalent)
        out << "(inequivalent under the group generated by the elementary parameter maps, rescaling and block "
               "permutations)\n";
    return code;
}

int cmd_symmetry_map(const std::string& input, const std::string& output, bool json, const SymmetryParams& sp,
                     uint64_t seed, std::ostream& out, std::ostream& err)
{
    CanonicalForm cf = load_form(input, {seed, {}});
    CanonicalForm img;
    try {
        img = apply_all(cf, sp);
    } catch (const DegenerateParameter& e) {
        err << "degenerate parameter: " << e.what() << "\n";
        return undecided;
    } catch (const ZeroScale& e) {
        err << "degenerate parameter: " << e.what() << "\n";
        return undecided;
    }
    std::string canon = write_canon(img);
    if (!output.empty())
        write_out(output, canon);
    if (json) {
        Json rep;
        rep["command"] = "symmetry-map";
        rep["params"] = params_json(sp);
        rep["canon"] = canon_json(img);
        out << rep.dump(2) << "\n";
    } else if (output.empty()) {
        out << canon;
    }
    return ok;
}

int cmd_selftest(const std::string& profile, unsigned jobs, bool json, uint64_t seed, std::ostream& out)
{
    bool all_ok = true;
    for (auto& s : suites_for(profile)) {
        SuiteReport r = s.run({seed, jobs, 0});
        all_ok = all_ok && r.ok();
        if (json) {
            for (auto& t : r.trials) {
                Json line;
                line["suite"] = r.name;
                line["seed"] = t.seed;
                line["profile"] = t.profile;
                line["verdict"] = t.verdict;
                if (!t.detail.empty())
                    line["detail"] = t.detail;
                out << line.dump() << "\n";
            }
            Json sum;
            sum["suite"] = r.name;
            sum["passed"] = r.passed;
            sum["failed"] = r.failed;
            sum["redraws"] = r.redraws;
            out << sum.dump() << "\n";
            continue;
        }
        out << r.name << ": " << r.passed << " passed, " << r.failed << " failed, " << r.redraws
            << " degenerate draws redrawn\n";
        for (auto& t : r.trials)
            if (t.verdict != "pass")
                out << "  FAIL seed " << t.seed << " " << t.profile << (t.detail.empty() ? "" : ": " + t.detail) << "\n";
    }
    return all_ok ? ok : failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact canonical forms and parameter symmetries of L x N x N tensor states"};
    app.require_subcommand(1);
    uint64_t seed = 0;
    bool json = false;

    std::string input, output, hints;
    auto* canon = app.add_subcommand("canonicalize", "Canonical form of a state file");
    canon->add_option("input", input, "state or canon file")->required();
    canon->add_option("-o,--output", output, "write the canon file here");
    canon->add_option("--hints", hints, "comma-separated eigenvalue candidates");
    canon->add_flag("--json", json, "JSON report on stdout");
    canon->add_option("--seed", seed, "random seed");

    std::string fa, fb;
    auto* equiv = app.add_subcommand("equiv", "Decide whether two states lie in the same class");
    equiv->add_option("a", fa, "state or canon file")->required();
    equiv->add_option("b", fb, "state or canon file")->required();
    equiv->add_flag("--json", json, "JSON report on stdout");
    equiv->add_option("--seed", seed, "random seed");

    std::string z1 = "0", z2 = "0", z3 = "0", d2 = "1", d3 = "1";
    auto* smap = app.add_subcommand("symmetry-map", "Apply the parameter maps (rescale, JA, EA, EJ in that order)");
    smap->add_option("input", input, "canon or state file")->required();
    smap->add_option("-o,--output", output, "write the canon file here");
    smap->add_option("--z1", z1, "E-J superposition");
    smap->add_option("--z2", z2, "E-A superposition");
    smap->add_option("--z3", z3, "J-A superposition");
    smap->add_option("--d2", d2, "J rescale");
    smap->add_option("--d3", d3, "A rescale");
    smap->add_flag("--json", json, "JSON report on stdout");
    smap->add_option("--seed", seed, "random seed");

    std::string profile = "all";
    unsigned jobs = 1;
    auto* self = app.add_subcommand("selftest", "Run the randomized self-test suites");
    self->add_option("--profile", profile, "suite name or all");
    self->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    self->add_flag("--json", json, "JSON lines on stdout");
    self->add_option("--seed", seed, "random seed");

    std::vector<const char*> argv;
    for (auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return parse_error;
    }

    try {
        if (canon->parsed())
            return cmd_canonicalize(input, output, json, hints, seed, out, err);
        if (equiv->parsed())
            return cmd_equiv(fa, fb, json, seed, out);
        if (smap->parsed()) {
            SymmetryParams sp{Scalar::parse(z1), Scalar::parse(z2), Scalar::parse(z3), Scalar::parse(d2),
                              Scalar::parse(d3)};
            return cmd_symmetry_map(input, output, json, sp, seed, out, err);
        }
        if (self->parsed())
            return cmd_selftest(profile, jobs, json, seed, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const NotInField& e) {
        err << "eigenvalues outside Q(i): " << e.what() << "\n";
        return not_in_field;
    } catch (const NotCommuting& e) {
        err << "not commuting: " << e.what() << "\n";
        return not_commuting;
    } catch (const DegenerateParameter& e) {
        err << "degenerate parameter: " << e.what() << "\n";
        return undecided;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return failed;
    }
    return failed;
}

} // namespace slocc::cli
