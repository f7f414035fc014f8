/*
   Copyright 2026 The fqcurves Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fqc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fqc/census.hpp"
#include "fqc/constructions.hpp"
#include "fqc/ideals.hpp"
#include "fqc/json_io.hpp"
#include "fqc/mindegree.hpp"
#include "fqc/theorem.hpp"

namespace fqc::cli {

namespace {

// Input problems map to a usage error; everything else is a failed check.
int exit_code_for(Errc code) {
    switch (code) {
    case Errc::LocusMismatch:
    case Errc::HasLineComponent:
    case Errc::DivisionByZero:
    case Errc::DimensionMismatch:
    case Errc::RingMismatch: return kCheckFailed;
    default: return kUsage;
    }
}

std::uint64_t parse_budget(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v == 0 || text.find('-') != std::string::npos)
        throw Error(Errc::InvalidArgument, std::string(what) + " must be a positive integer, got '" + text + "'");
    return v;
}

std::string modulus_string(const Field& F) {
    if (F.e() == 1) return "t";
    std::string s;
    const auto& m = F.modulus();
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '+';
        if (m[i] != 1 || i == 0) s += std::to_string(m[i]);
        if (m[i] != 1 && i > 0) s += '*';
        if (i >= 1) s += 't';
        if (i > 1) s += '^' + std::to_string(i);
    }
    return s;
}

std::vector<FqElem> parse_elements(const Field& F, const std::vector<std::string>& items) {
    std::vector<FqElem> out;
    for (const auto& s : items) out.push_back(F.parse_element(s));
    return out;
}

std::string point_string(const Field& F, const ProjPoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) s += " : ";
        s += F.to_string(p.coords[i]);
    }
    return s + ")";
}

std::string check_mark(bool ok) { return ok ? "ok" : "FAIL"; }

// Options shared by several subcommands.
struct Options {
    std::string format = "text";
    unsigned n = 0;
    unsigned k = 0;
    std::optional<unsigned> dmax;
    std::string family = "complement";
    unsigned degree = 0;
    std::string poly;
    unsigned ext = 1;
    std::vector<std::string> alphas;
    std::vector<unsigned> mult;
    std::vector<std::string> matrix;
    std::vector<std::string> c;
    bool search_c = false;
    std::string filter = "line-free";
    std::uint64_t parts = 1;
    std::uint64_t part = 0;
    std::string mode = "parallel";
    std::string budget;
};

ScanMode parse_mode(const std::string& m) {
    if (m == "parallel") return ScanMode::Parallel;
    if (m == "serial") return ScanMode::Serial;
    if (m == "reference") return ScanMode::Reference;
    throw Error(Errc::InvalidArgument, "unknown scan mode '" + m + "'");
}

struct Result {
    int code = kPass;
    std::string body;
};

class Runner {
public:
    Runner(const RunConfig& cfg, const Options& opt) : cfg_(cfg), opt_(opt) {}

    Result field_cmd() {
        const FieldPtr F = field();
        std::optional<FieldExtension> ext;
        if (opt_.ext > 1) ext = extend(F, opt_.ext);
        if (json()) {
            Json j = field_to_json(*F);
            if (ext) {
                j["extension"] = field_to_json(*ext->ext);
                j["extension"]["generator_image"] = element_to_json(*ext->ext, ext->embed(F->generator()));
            }
            return {kPass, j.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << F->name() << " = F_" << F->p() << "[t]/(" << modulus_string(*F) << ")\n";
        os << "p = " << F->p() << ", e = " << F->e() << ", q = " << F->q() << "\n";
        os << "primitive element: " << F->to_string(F->primitive_element()) << "\n";
        if (ext) {
            const Field& E = *ext->ext;
            os << "extension " << E.name() << " = F_" << E.p() << "[t]/(" << modulus_string(E) << ")\n";
            os << "embedding: t -> " << E.to_string(ext->embed(F->e() == 1 ? Field::one() : F->generator()))
               << "\n";
        }
        return {kPass, os.str()};
    }

    GeneratorSet generators(const FieldPtr& F) const {
        if (opt_.family == "complement") return gens_complement(F, opt_.n, opt_.k);
        if (opt_.family == "full") return gens_full_projective(F, opt_.n);
        if (opt_.family == "affine") return gens_affine(F, opt_.n);
        throw Error(Errc::InvalidArgument, "unknown family '" + opt_.family + "'");
    }

    PointSet target_points(const FieldPtr& F) const {
        if (opt_.family == "complement")
            return enumerate_proj(F, opt_.n).minus(linear_subspace_points(F, opt_.n, opt_.k));
        if (opt_.family == "full") return enumerate_proj(F, opt_.n);
        return affine_points(F, opt_.n);
    }

    Result ideal_gens() {
        const FieldPtr F = field();
        const GeneratorSet G = generators(F);
        if (json()) {
            Json arr = Json::array();
            for (const auto& g : G.generators()) {
                Json j;
                j["label"] = g.label;
                j["text"] = g.poly.to_string();
                j["terms"] = poly_to_json(g.poly);
                arr.push_back(std::move(j));
            }
            return {kPass, arr.dump(2) + "\n"};
        }
        std::ostringstream os;
        for (const auto& g : G.generators()) os << g.label << ": " << g.poly.to_string() << "\n";
        return {kPass, os.str()};
    }

    Result ideal_verify() {
        const FieldPtr F = field();
        const GeneratorSet G = generators(F);
        const PointSet S = target_points(F);
        const unsigned dmax = opt_.dmax.value_or(default_dmax(G));
        IdealReport rep;
        try {
            rep = verify_ideal_equals_vanishing(G, S, dmax);
        } catch (const Error& e) {
            if (e.code() != Errc::LocusMismatch) throw;
            return {kCheckFailed, std::string("zero locus mismatch: ") + e.what() + "\n"};
        }
        rep.k = opt_.family == "complement" ? opt_.k : 0;
        if (json()) return {rep.passed() ? kPass : kCheckFailed, to_json(rep).dump(2) + "\n"};
        std::ostringstream os;
        os << "q = " << rep.q << ", n = " << rep.n;
        if (rep.k) os << ", k = " << rep.k;
        os << ", family " << opt_.family << "\n";
        os << "zero locus: " << rep.locus_size << " points, theta_q(n) = " << theta(rep.q, rep.n) << "\n";
        for (const auto& c : rep.per_degree)
            os << "d = " << c.d << ": dim I_d = " << c.ideal_dim << ", dim I(S)_d = " << c.vanishing_dim << "  "
               << check_mark(c.equal) << "\n";
        os << (rep.passed() ? "PASS" : "FAIL") << "\n";
        return {rep.passed() ? kPass : kCheckFailed, os.str()};
    }

    Result mindegree() {
        const FieldPtr F = field();
        const MinDegreeReport rep = verify_min_degree(F, opt_.n, cfg_.budget, parse_mode(opt_.mode));
        const int code = rep.passed() ? kPass : kCheckFailed;
        if (json()) return {code, to_json(rep).dump(2) + "\n"};
        std::ostringstream os;
        os << "q = " << rep.q << ", n = " << rep.n << ", threshold (q-1)n+1 = " << rep.threshold << "\n";
        for (const auto& l : rep.below)
            os << "d = " << l.d << ": " << l.candidates << " forms, " << l.hits
               << " cut out P^n(F_q) minus (1:0:...:0)  " << check_mark(l.hits == 0) << "\n";
        os << "witness at d = " << rep.threshold << ": " << rep.witness << "  " << check_mark(rep.witness_ok) << "\n";
        os << (rep.passed() ? "PASS" : "FAIL") << "\n";
        return {code, os.str()};
    }

    Result curve(const std::string& which) {
        const FieldPtr F = field();
        if (opt_.poly.empty()) throw Error(Errc::InvalidArgument, "--poly is required");
        const PlaneCurve C(parse_poly(F, 3, opt_.poly));
        if (which == "singular") return singular(C);
        if (json()) return {kPass, to_json(analyze(C)).dump(2) + "\n"};
        std::ostringstream os;
        if (which == "count") {
            os << "N_q(C) = " << C.n_points() << "\n";
        } else if (which == "lines") {
            const auto lines = line_components(C);
            os << lines.size() << " F_q-line component(s)\n";
            for (const auto& l : lines) os << l.to_string() << "\n";
        } else if (which == "missing") {
            const MissingPoints m = missing_points(C);
            os << m.points.size() << " missing point(s), " << (m.collinear ? "collinear" : "not collinear") << "\n";
            for (const auto& p : m.points) os << point_string(*F, p) << "\n";
        } else {
            const SziklaiStatus s = sziklai_classify(C);
            os << "N_q(C) = " << C.n_points() << ", (d-1)q+1 = " << (C.degree() - 1) * F->q() + 1 << "\n";
            os << to_string(s) << "\n";
        }
        return {kPass, os.str()};
    }

    Result singular(const PlaneCurve& C) {
        const SingularSearch s = singular_points_ext(C, opt_.ext);
        const Field& E = *s.extension.ext;
        if (json()) {
            Json j;
            j["extension"] = E.spec();
            Json pts = Json::array();
            for (const auto& p : s.points) pts.push_back(point_to_json(E, p));
            j["singular_points"] = std::move(pts);
            return {kPass, j.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << s.points.size() << " singular point(s) over " << E.name() << "\n";
        for (const auto& p : s.points) os << point_string(E, p) << "\n";
        return {kPass, os.str()};
    }

    Result construct(const std::string& which) {
        const FieldPtr F = field();
        const unsigned q = F->q();
        std::optional<PlaneCurve> curve;
        bool expect_line_free = false;
        std::string note;
        if (which == "qplus1") {
            if (opt_.degree && opt_.degree != q + 1)
                throw Error(Errc::BadDegreeRange, "the q+1 family has degree " + std::to_string(q + 1));
            QPlusOneParams p = default_qplus1_params(F);
            if (!opt_.matrix.empty()) {
                if (opt_.matrix.size() != 6) throw Error(Errc::InvalidArgument, "--matrix takes a0,a1,a2,b0,b1,b2");
                const auto m = parse_elements(*F, opt_.matrix);
                p.a = {m[0], m[1], m[2]};
                p.b = {m[3], m[4], m[5]};
            }
            curve.emplace(build_qplus1(p));
            expect_line_free = true;
            note = "singular point " + point_string(*F, qplus1_singular_point(p));
        } else {
            FcParams p = which == "fc" ? plain_fc_params(F, opt_.degree, parse_elements(*F, opt_.alphas))
                                       : remark_fc_params(F, opt_.degree, opt_.mult);
            if (!opt_.c.empty()) {
                p.c = parse_elements(*F, opt_.c);
                validate(p);
            }
            if (opt_.search_c || (which == "remark" && opt_.c.empty())) {
                const auto c = search_line_free_c(p);
                if (!c) return {kCheckFailed, "no c gives a curve without F_q-line components\n"};
                p.c = *c;
                expect_line_free = true;
            }
            std::string cs;
            for (auto v : p.c) cs += (cs.empty() ? "" : ",") + F->to_string(v);
            note = "c = (" + cs + ")";
            curve.emplace(build_fc(p));
        }
        const std::uint64_t target = construction_target(q, curve->degree());
        const ConstructionReport v = verify_construction(*curve, target, expect_line_free);
        const int code = v.passed() ? kPass : kCheckFailed;
        if (json()) {
            Json j;
            j["family"] = which;
            j["curve"] = to_json(analyze(*curve));
            j["verification"] = to_json(v);
            return {code, j.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << curve->equation().to_string() << "\n";
        os << "d = " << curve->degree() << ", " << note << "\n";
        os << "N_q(C) = " << v.points << " (expected " << v.expected_points << ")  " << check_mark(v.points_ok())
           << "\n";
        os << v.line_components.size() << " F_q-line component(s)";
        if (v.expect_line_free) os << "  " << check_mark(v.lines_ok());
        os << "\n";
        return {code, os.str()};
    }

    Result search() {
        const FieldPtr F = field();
        const CensusSpec spec{F, opt_.degree, parse_filter(opt_.filter), cfg_.budget};
        const CensusReport r = census_partition(spec, opt_.part, opt_.parts, parse_mode(opt_.mode));
        if (cfg_.format == Format::Csv) return {kPass, spectrum_csv(spec, r)};
        if (json()) {
            Json j = to_json(spec, r);
            j["parts"] = opt_.parts;
            j["part"] = opt_.part;
            return {kPass, j.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << "q = " << F->q() << ", d = " << spec.degree << ", filter " << to_string(spec.filter);
        if (opt_.parts > 1) os << ", part " << opt_.part << " of " << opt_.parts;
        os << "\n";
        os << "candidates: " << r.candidates << ", accepted: " << r.accepted << "\n";
        const auto m = r.max_points(), m2 = r.second_max_points();
        os << "M_q(d) = " << (m ? std::to_string(*m) : "-") << ", 2M_q(d) = " << (m2 ? std::to_string(*m2) : "-")
           << "\n";
        for (const auto& [n, count] : r.spectrum)
            os << "N = " << n << ": " << count << " (first: " << form_at(F, spec.degree, r.witnesses.at(n)).to_string()
               << ")\n";
        return {kPass, os.str()};
    }

    Result figure() {
        const FieldPtr F = field();
        const unsigned dmax = opt_.dmax.value_or(2 * F->q() + 3);
        const auto rows = figure_data(F->q(), dmax);
        if (json()) return {kPass, to_json(rows).dump(2) + "\n"};
        return {kPass, figure_csv(rows)};
    }

    Result main_theorem() {
        const FieldPtr F = field();
        const BatteryReport rep = main_theorem_battery(F, cfg_.budget);
        const int code = rep.passed() ? kPass : kCheckFailed;
        if (json()) {
            Json j;
            j["q"] = rep.q;
            Json cons = Json::array();
            for (const auto& c : rep.constructions) {
                Json x;
                x["d"] = c.d;
                x["family"] = c.family;
                x["equation"] = c.equation;
                x["expected"] = c.expected;
                x["n_points"] = c.points;
                x["line_free"] = c.line_free;
                x["line_free_required"] = c.line_free_required;
                x["passed"] = c.passed();
                cons.push_back(std::move(x));
            }
            j["constructions"] = std::move(cons);
            Json cen = Json::array();
            for (const auto& c : rep.censuses) {
                Json x = to_json(CensusSpec{F, c.d, CurveFilter::LineFree, cfg_.budget}, c.report);
                x["passed"] = c.passed();
                cen.push_back(std::move(x));
            }
            j["censuses"] = std::move(cen);
            j["passed"] = rep.passed();
            return {code, j.dump(2) + "\n"};
        }
        std::ostringstream os;
        os << "q = " << rep.q << ", theta_q(2) = " << theta(rep.q, 2) << "\n";
        for (const auto& c : rep.constructions) {
            os << "d = " << c.d << " [" << c.family << "]: N_q(C) = " << c.points << " (expected " << c.expected
               << "), " << (c.line_free ? "line-free" : "has F_q-line components") << "  " << check_mark(c.passed())
               << "\n";
        }
        for (const auto& c : rep.censuses) {
            const auto m = c.report.max_points(), m2 = c.report.second_max_points();
            os << "census d = " << c.d << ": M_q(d) = " << (m ? std::to_string(*m) : "-")
               << ", 2M_q(d) = " << (m2 ? std::to_string(*m2) : "-") << "  " << check_mark(c.passed()) << "\n";
        }
        os << (rep.passed() ? "PASS" : "FAIL") << "\n";
        return {code, os.str()};
    }

private:
    FieldPtr field() const { return Field::parse(cfg_.field); }
    bool json() const { return cfg_.format == Format::Json; }

    const RunConfig& cfg_;
    const Options& opt_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    Options opt;
    std::function<Result(Runner&)> action;

    CLI::App app{"Plane curves over finite fields: vanishing ideals, constructions and censuses", "fqc"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("-o,--output", cfg.output, "Write the result to this file");
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for randomized steps");
    app.add_option("--budget", opt.budget, "Candidate budget (overrides FQC_BUDGET)");

    auto add_field = [&](CLI::App* sub) { sub->add_option("--field", cfg.field, "Field order p or p^e"); };
    auto on = [&](CLI::App* sub, std::string name, std::function<Result(Runner&)> fn) {
        sub->callback([&, name, fn] {
            cfg.subcommand = name;
            action = fn;
        });
    };

    auto* field_cmd = app.add_subcommand("field", "Describe F_q and optionally an extension");
    add_field(field_cmd);
    field_cmd->add_option("--ext", opt.ext, "Extension degree m")->check(CLI::PositiveNumber);
    on(field_cmd, "field", [](Runner& r) { return r.field_cmd(); });

    auto* ideal = app.add_subcommand("ideal", "Generators of vanishing ideals");
    ideal->require_subcommand(1);
    for (const std::string name : {"gens", "verify"}) {
        auto* sub = ideal->add_subcommand(name, name == "gens" ? "List generators" : "Compare I_d with I(S)_d");
        add_field(sub);
        sub->add_option("-n", opt.n, "Ambient dimension")->required();
        sub->add_option("-k", opt.k, "Removed subspace is P^{k-1}");
        sub->add_option("--family", opt.family, "complement, full or affine")
            ->check(CLI::IsMember({"complement", "full", "affine"}));
        if (name == "verify") {
            sub->add_option("--dmax", opt.dmax, "Largest degree checked");
            on(sub, "ideal verify", [](Runner& r) { return r.ideal_verify(); });
        } else {
            on(sub, "ideal gens", [](Runner& r) { return r.ideal_gens(); });
        }
    }

    auto* mind = app.add_subcommand("mindegree", "Least degree cutting out P^n minus a point");
    add_field(mind);
    mind->add_option("-n", opt.n, "Ambient dimension")->required();
    mind->add_option("--mode", opt.mode, "parallel, serial or reference");
    on(mind, "mindegree", [](Runner& r) { return r.mindegree(); });

    auto* curve = app.add_subcommand("curve", "Analyse a plane curve");
    curve->require_subcommand(1);
    for (const std::string name : {"count", "lines", "missing", "singular", "sziklai"}) {
        auto* sub = curve->add_subcommand(name);
        add_field(sub);
        sub->add_option("--poly", opt.poly, "Ternary form, e.g. \"X^3+Y^3+Z^3\"")->required();
        if (name == "singular") sub->add_option("--ext", opt.ext, "Scan P^2(F_{q^m})")->check(CLI::PositiveNumber);
        on(sub, "curve " + name, [name](Runner& r) { return r.curve(name); });
    }

    auto* construct = app.add_subcommand("construct", "Build the extremal curve families");
    construct->require_subcommand(1);
    for (const std::string name : {"fc", "remark", "qplus1"}) {
        auto* sub = construct->add_subcommand(name);
        add_field(sub);
        auto* deg = sub->add_option("--degree", opt.degree, "Degree d");
        if (name != "qplus1") deg->required();
        if (name == "fc") {
            sub->add_option("--alphas", opt.alphas, "d-q+1 distinct elements")->delimiter(',');
            sub->add_flag("--search-c", opt.search_c, "Search the first c without line components");
        }
        if (name == "remark") sub->add_option("--mult", opt.mult, "Multiplicity of each element")->delimiter(',');
        if (name != "qplus1") sub->add_option("--c", opt.c, "Coefficients c_1..c_{d-q}")->delimiter(',');
        if (name == "qplus1") sub->add_option("--matrix", opt.matrix, "a0,a1,a2,b0,b1,b2")->delimiter(',');
        on(sub, "construct " + name, [name](Runner& r) { return r.construct(name); });
    }

    auto* search = app.add_subcommand("search", "Exhaustive census of degree-d curves");
    add_field(search);
    search->add_option("--degree", opt.degree, "Degree d")->required()->check(CLI::PositiveNumber);
    search->add_option("--filter", opt.filter, "all, line-free or certified");
    search->add_option("--parts", opt.parts, "Number of rank blocks");
    search->add_option("--part", opt.part, "Block index");
    search->add_option("--mode", opt.mode, "parallel, serial or reference");
    on(search, "search", [](Runner& r) { return r.search(); });

    auto* figure = app.add_subcommand("figure", "M_q(d) and 2M_q(d) table as CSV");
    add_field(figure);
    figure->add_option("--dmax", opt.dmax, "Largest degree");
    on(figure, "figure", [](Runner& r) { return r.figure(); });

    auto* thm = app.add_subcommand("main-theorem", "Constructions for q+1 <= d <= 2q+1 (and censuses for q = 2)");
    add_field(thm);
    on(thm, "main-theorem", [](Runner& r) { return r.main_theorem(); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    Result result;
    try {
        cfg.format = opt.format == "json" ? Format::Json : opt.format == "csv" ? Format::Csv : Format::Text;
        if (!opt.budget.empty()) {
            cfg.budget = parse_budget(opt.budget, "--budget");
        } else if (const char* env = std::getenv("FQC_BUDGET"); env && *env) {
            cfg.budget = parse_budget(env, "FQC_BUDGET");
        } else {
            cfg.budget = kDefaultBudget;
        }
#ifdef _OPENMP
        if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
        Runner runner(cfg, opt);
        result = action(runner);
    } catch (const Error& e) {
        err << "fqc: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "fqc: " << e.what() << "\n";
        return kCheckFailed;
    }

    if (cfg.output.empty()) {
        out << result.body;
        out.flush();
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file || !(file << result.body) || !file.flush()) {
            err << "fqc: cannot write " << cfg.output << "\n";
            return kIo;
        }
    }
    return result.code;
}

} // namespace fqc::cli
