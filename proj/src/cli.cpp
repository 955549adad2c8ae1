#include "prmforge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "prmforge/bounds.hpp"
#include "prmforge/cache.hpp"
#include "prmforge/codes.hpp"
#include "prmforge/error.hpp"
#include "prmforge/extremal.hpp"
#include "prmforge/gf.hpp"
#include "prmforge/hweights.hpp"
#include "prmforge/poly.hpp"
#include "prmforge/pspace.hpp"
#include "prmforge/verify.hpp"

namespace prmforge {

namespace {

using nlohmann::json;

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        return quoted + "\"";
    }
    if (v.is_array()) {
        // Rows of a nested array are separated by ';', entries by spaces.
        const bool nested = !v.empty() && v[0].is_array();
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += nested ? ';' : ' ';
            s += v[i].is_array() ? csv_cell(v[i]) : (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
        }
        return s;
    }
    return v.dump();
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::HypothesisViolated:
        case ErrorKind::DegreeTooLarge:
        case ErrorKind::DegreeDivisible:
        case ErrorKind::RankOutOfRange:
            return kExitHypothesis;
        case ErrorKind::SizeOverflow:
        case ErrorKind::UnsupportedFieldSize:
            return kExitTooLarge;
        default:
            return kExitUsage;
    }
}

struct Globals {
    std::string format = "json";
    std::string cache_dir;
    unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    std::string modulus;
};

struct Params {
    std::uint32_t q = 0;
    unsigned d = 0;
    unsigned m = 0;
    unsigned r = 0;
    std::string mode = "exhaustive";
    std::uint64_t trials = 10'000;
    bool trials_given = false;
    std::uint64_t seed = 1;
    bool projective = false;
    bool affine = false;
    std::string poly_file;
    std::string kind;
    bool emit_genmat = false;
    bool all = false;
    std::string suite = "acceptance";
    bool skip_slow = false;
};

Field make_field(const Params& p, const Globals& g) {
    std::optional<Coefficients> modulus;
    if (!g.modulus.empty()) modulus = parse_modulus_list(g.modulus);
    return Field::of_order(p.q, modulus);
}

class Runner {
   public:
    Runner(std::ostream& out, std::ostream& err, const Globals& g, const Params& p)
        : out_(out), err_(err), g_(g), p_(p) {}

    void emit(const json& doc) {
        if (g_.format == "csv") {
            out_ << to_csv(doc);
        } else {
            out_ << doc.dump(2) << '\n';
        }
    }

    int field() {
        const Field f = make_field(p_, g_);
        emit({
            {"schema_version", kSchemaVersion},
            {"p", f.p()},
            {"e", f.e()},
            {"q", f.q()},
            {"modulus", f.spec().modulus},
            {"primitive", f.primitive()},
        });
        return kExitOk;
    }

    int points() {
        if (p_.projective && p_.affine) throw ParseError("--projective and --affine are exclusive");
        const Field f = make_field(p_, g_);
        const PointList pts = p_.affine ? enumerate_affine_points(f, p_.m) : enumerate_projective_points(f, p_.m);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto pt = pts[i];
            for (std::size_t j = 0; j < pt.size(); ++j) out_ << (j ? "," : "") << pt[j];
            out_ << '\n';
        }
        return kExitOk;
    }

    int zeros() {
        const Field f = make_field(p_, g_);
        std::ifstream in(p_.poly_file);
        if (!in) throw ParseError("cannot read polynomial file '" + p_.poly_file + "'");
        const unsigned nvars = p_.affine ? p_.m : p_.m + 1;
        std::vector<Polynomial> polys;
        std::string line;
        while (std::getline(in, line)) {
            const auto b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos || line[b] == '#') continue;
            polys.push_back(parse_polynomial(f, line, nvars));
        }
        json doc{{"schema_version", kSchemaVersion}, {"q", f.q()}, {"m", p_.m}, {"polynomials", polys.size()}};
        if (p_.affine) {
            doc["space"] = "affine";
            doc["count"] = count_affine_zeros(f, polys, p_.m);
        } else {
            const auto zs = count_projective_zeros(f, polys, p_.m);
            doc["space"] = "projective";
            doc["count"] = zs.count;
            json pts = json::array();
            for (const auto& pt : zs.points.to_proj()) pts.push_back(pt.coords);
            doc["points"] = pts;
        }
        emit(doc);
        return kExitOk;
    }

    int code() {
        const Field f = make_field(p_, g_);
        const std::string kind = p_.kind.empty() ? "prm" : p_.kind;
        if (kind != "rm" && kind != "prm") throw ParseError("--kind must be rm or prm");
        const LinearCode c = kind == "rm" ? rm_code(f, p_.d, p_.m) : prm_code(f, p_.d, p_.m);
        if (p_.emit_genmat) {
            for (std::size_t i = 0; i < c.generator.rows(); ++i) {
                for (std::size_t j = 0; j < c.generator.cols(); ++j) out_ << (j ? " " : "") << c.generator(i, j);
                out_ << '\n';
            }
            return kExitOk;
        }
        const CodeParams params = kind == "rm" ? rm_params(f.q(), p_.d, p_.m) : prm_params(f.q(), p_.d, p_.m);
        emit({
            {"schema_version", kSchemaVersion},
            {"code", c.label()},
            {"q", f.q()},
            {"n", params.n},
            {"k", params.k},
            {"dmin", params.dmin},
        });
        return kExitOk;
    }

    int ghw() {
        const Field f = make_field(p_, g_);
        if (p_.mode != "exhaustive" && p_.mode != "random") throw ParseError("--mode must be exhaustive or random");
        const bool random = p_.mode == "random";
        const Space space = p_.affine ? Space::affine : Space::projective;
        const std::string mode_key = p_.mode + (p_.affine ? "/affine" : "/projective") +
                                     (random ? "/trials=" + std::to_string(p_.trials) : "") +
                                     (g_.modulus.empty() ? "" : "/modulus=" + g_.modulus);

        std::optional<ResultCache> cache;
        if (const auto dir = ResultCache::resolve_dir(g_.cache_dir.empty() ? std::nullopt
                                                                         : std::optional<std::string>(g_.cache_dir))) {
            cache.emplace(*dir, [this](const std::string& w) { err_ << "warning: " << w << '\n'; });
        }
        const CacheKey key{"ghw", f.q(), p_.d, p_.m, p_.r, mode_key, random ? p_.seed : 0, kSchemaVersion};
        if (cache) {
            if (auto hit = cache->get(key)) {
                json doc = hit->result;
                doc["elapsed_sec"] = hit->elapsed_sec;
                doc["cached"] = true;
                emit(doc);
                return kExitOk;
            }
        }

        SearchResult res;
        if (random) {
            res = er_random_search(f, p_.d, p_.m, p_.r, p_.trials, p_.seed, space);
        } else {
            SearchOptions so;
            so.threads = g_.threads;
            res = er_exhaustive(f, p_.d, p_.m, p_.r, space, so);
        }
        const std::int64_t n = p_.affine ? static_cast<std::int64_t>(enumerate_affine_points(f, p_.m).size())
                                         : p_k(f.q(), p_.m);
        json payload{
            {"schema_version", kSchemaVersion},
            {"q", f.q()},
            {"d", p_.d},
            {"m", p_.m},
            {"r", p_.r},
            {"space", p_.affine ? "affine" : "projective"},
            {"n", n},
            {"value", res.value},
            {"er", res.value},
            {"dr", ghw_from_er(n, res.value)},
            {"witness_rows", matrix_json(res.witness)},
            {"mode", res.mode.to_string()},
        };
        if (random) {
            payload["seed"] = p_.seed;
            payload["trials"] = p_.trials;
        }
        if (cache) {
            RunRecord rec;
            rec.command = "ghw";
            rec.parameters = {{"q", f.q()}, {"d", p_.d}, {"m", p_.m}, {"r", p_.r}, {"mode", mode_key}};
            rec.result = payload;
            rec.elapsed_sec = res.elapsed_sec;
            if (random) rec.seed = p_.seed;
            cache->put(key, rec);
        }
        payload["elapsed_sec"] = res.elapsed_sec;
        payload["cached"] = false;
        emit(payload);
        return kExitOk;
    }

    int bounds() {
        ReportOptions ro;
        ro.threads = g_.threads;
        json arr = json::array();
        for (const auto& rep : compare_report(p_.q, p_.d, p_.m, p_.r, ro)) {
            if (!p_.all && !rep.applicable && rep.name != "tbc_status") continue;
            arr.push_back({
                {"schema_version", kSchemaVersion},
                {"name", rep.name},
                {"value", rep.value ? json(*rep.value) : json(nullptr)},
                {"applicable", rep.applicable},
                {"reason", rep.reason},
            });
        }
        emit(arr);
        return kExitOk;
    }

    int witness() {
        const Field f = make_field(p_, g_);
        const std::string kind = p_.kind.empty() ? "pencil" : p_.kind;
        WitnessSystem w;
        if (kind == "pencil") {
            w = build_pencil_witness(f, p_.d, p_.m, p_.r);
        } else if (kind == "five-quadrics") {
            w = build_five_quadrics_witness(f);
        } else {
            throw ParseError("--kind must be pencil or five-quadrics");
        }
        json polys = json::array();
        for (const auto& poly : w.polys) polys.push_back(format_polynomial(poly));
        emit({
            {"schema_version", kSchemaVersion},
            {"q", f.q()},
            {"d", w.d},
            {"m", w.m},
            {"r", w.polys.size()},
            {"kind", to_string(w.construction)},
            {"polynomials", polys},
            {"claimed_count", w.claimed_count},
            {"verified", true},
            {"note", w.note},
        });
        return kExitOk;
    }

    int veronese() {
        const Field f = make_field(p_, g_);
        const VeroneseImage img = veronese_image(f, p_.d, p_.m);
        const LineCheckResult lines = veronese_line_check(f, img);
        json doc{
            {"schema_version", kSchemaVersion},
            {"q", f.q()},
            {"d", p_.d},
            {"m", p_.m},
            {"ambient_dim", img.k - 1},
            {"points", img.points.size()},
            {"lines_found", lines.lines_found},
        };
        doc["example"] = lines.example ? json::array({lines.example->first.coords, lines.example->second.coords})
                                       : json(nullptr);
        emit(doc);
        return kExitOk;
    }

    int verify() {
        VerifyOptions vo;
        vo.threads = g_.threads;
        vo.skip_slow = p_.skip_slow;
        if (p_.trials_given) vo.trials = p_.trials;
        vo.seed = p_.seed;
        vo.on_result = [this](const CheckResult& r) {
            err_ << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " ("
                 << r.anchor << "): " << r.detail << '\n';
        };
        const auto results = run_suite(p_.suite, vo);
        const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed || r.skipped; });
        if (g_.format == "csv") {
            json arr = json::array();
            for (const auto& r : results) arr.push_back(r.to_json());
            emit(arr);
        } else {
            json arr = json::array();
            for (const auto& r : results) arr.push_back(r.to_json());
            emit({{"schema_version", kSchemaVersion}, {"suite", p_.suite}, {"passed", ok}, {"results", arr}});
        }
        return ok ? kExitOk : kExitVerifyFailed;
    }

   private:
    std::ostream& out_;
    std::ostream& err_;
    const Globals& g_;
    const Params& p_;
};

}  // namespace

std::string to_csv(const json& doc) {
    std::vector<json> rows;
    if (doc.is_array()) {
        rows.assign(doc.begin(), doc.end());
    } else {
        rows.push_back(doc);
    }
    std::vector<std::string> header;
    for (const auto& row : rows) {
        for (const auto& [k, v] : row.items()) {
            if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
        }
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out << ',';
            if (row.contains(header[i])) out << csv_cell(row.at(header[i]));
        }
        out << '\n';
    }
    return out.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite fields, projective Reed-Muller codes and generalized Hamming weights", "prmforge"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    Params p;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache-dir", g.cache_dir, "Result cache directory (default $PRMFORGE_CACHE)");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--modulus", g.modulus, "Field modulus coefficients c0,...,ce (little-endian)");

    auto q_opt = [&](CLI::App* sub) { sub->add_option("--q", p.q, "Field order")->required(); };
    auto dmr = [&](CLI::App* sub, bool need_dm, bool need_r) {
        auto* d = sub->add_option("--d", p.d, "Degree");
        auto* m = sub->add_option("--m", p.m, "Dimension");
        auto* r = sub->add_option("--r", p.r, "Subspace dimension / number of polynomials");
        if (need_dm) {
            d->required();
            m->required();
        }
        if (need_r) r->required();
    };

    auto* field = app.add_subcommand("field", "Describe GF(q)");
    q_opt(field);

    auto* points = app.add_subcommand("points", "List the points of P^m or A^m");
    q_opt(points);
    points->add_option("--m", p.m, "Dimension")->required();
    points->add_flag("--projective", p.projective, "Projective space (default)");
    points->add_flag("--affine", p.affine, "Affine space");

    auto* zeros = app.add_subcommand("zeros", "Count common zeros of polynomials read from a file");
    q_opt(zeros);
    zeros->add_option("--m", p.m, "Dimension")->required();
    zeros->add_option("--poly-file", p.poly_file, "One polynomial per line")->required();
    zeros->add_flag("--projective", p.projective, "Homogeneous forms in P^m (default)");
    zeros->add_flag("--affine", p.affine, "Polynomials on A^m");

    auto* code = app.add_subcommand("code", "Parameters or generator matrix of RM_q(d,m) / PRM_q(d,m)");
    q_opt(code);
    dmr(code, true, false);
    code->add_option("--kind", p.kind, "rm or prm")->check(CLI::IsMember({"rm", "prm"}));
    code->add_flag("--emit-genmat", p.emit_genmat, "Print the generator matrix rows");

    auto* ghw = app.add_subcommand("ghw", "e_r(d,m) and the r-th generalized Hamming weight");
    q_opt(ghw);
    dmr(ghw, true, true);
    ghw->add_option("--mode", p.mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
    auto* trials = ghw->add_option("--trials", p.trials, "Random trials");
    ghw->add_option("--seed", p.seed, "Random seed");
    ghw->add_flag("--projective", p.projective, "Projective code (default)");
    ghw->add_flag("--affine", p.affine, "Affine code");

    auto* bounds = app.add_subcommand("bounds", "All bounds and known values for e_r(d,m)");
    q_opt(bounds);
    dmr(bounds, true, true);
    bounds->add_flag("--all", p.all, "Include entries whose hypotheses fail");

    auto* witness = app.add_subcommand("witness", "Explicit polynomial system with many common zeros");
    q_opt(witness);
    dmr(witness, false, false);
    witness->add_option("--kind", p.kind, "pencil or five-quadrics")
        ->check(CLI::IsMember({"pencil", "five-quadrics"}));

    auto* veronese = app.add_subcommand("veronese", "Count lines on a Veronese image");
    q_opt(veronese);
    dmr(veronese, true, false);

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--suite", p.suite, "Suite name")->check(CLI::IsMember(suite_names()));
    verify->add_flag("--skip-slow", p.skip_slow, "Skip slow checks");
    auto* vtrials = verify->add_option("--trials", p.trials, "Random trials for the randomized check");
    verify->add_option("--seed", p.seed, "Random seed");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    p.trials_given = trials->count() > 0 || vtrials->count() > 0;

    Runner run(out, err, g, p);
    try {
        if (*field) return run.field();
        if (*points) return run.points();
        if (*zeros) return run.zeros();
        if (*code) return run.code();
        if (*ghw) return run.ghw();
        if (*bounds) return run.bounds();
        if (*witness) {
            if (p.kind != "five-quadrics") {
                for (const char* name : {"--d", "--m", "--r"}) {
                    if (witness->get_option(name)->count() == 0) {
                        throw ParseError(std::string(name) + " is required for the pencil witness");
                    }
                }
            }
            return run.witness();
        }
        if (*veronese) return run.veronese();
        if (*verify) return run.verify();
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace prmforge
