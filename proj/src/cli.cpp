#include "sympmat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "sympmat/error.hpp"
#include "sympmat/io.hpp"
#include "sympmat/polytope.hpp"
#include "sympmat/strata.hpp"
#include "sympmat/witness.hpp"

namespace sympmat::cli {
namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Job {
    std::optional<int> n;
    std::string bases;
    std::string file;
    std::string format = "text";
    std::string out;
    std::string group = "bcn";
    std::string pair;
    bool full = false;
    bool survey = false;
};

Format parse_format(const std::string& f) {
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    return Format::Text;
}

int require_n(const Job& job) {
    if (!job.n) throw UsageError("--n is required");
    if (*job.n < 1) throw UsageError("--n must be >= 1");
    return *job.n;
}

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(what + " is not valid JSON: " + e.what());
    }
}

BasisSet checked_bases(const Json& j, int n) {
    BasisSet b;
    try {
        b = io::bases_from_json(j, n);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    GroundSet e{n};
    for (const Pair& p : b)
        if (!is_admissible_pair(p, e))
            throw UsageError("pair " + io::pair_to_json(p, n).dump() + " is not admissible");
    return b;
}

// Matroid input from --bases (with --n) or --file.
SymplecticMatroid read_matroid(const Job& job) {
    if (!job.file.empty() && !job.bases.empty()) throw UsageError("give either --bases or --file, not both");
    if (!job.file.empty()) {
        std::ifstream in(job.file);
        if (!in) throw UsageError("cannot read " + job.file);
        std::stringstream buf;
        buf << in.rdbuf();
        Json doc = parse_json_text(buf.str(), job.file);
        int n = 0;
        if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("bases"))
            throw UsageError(R"(matroid file needs {"n": int, "bases": [[int, int], ...]})");
        n = doc["n"].get<int>();
        if (n < 1) throw UsageError("n must be >= 1");
        if (job.n && *job.n != n) throw UsageError("--n disagrees with the file");
        return SymplecticMatroid(n, checked_bases(doc["bases"], n));
    }
    if (job.bases.empty()) throw UsageError("a matroid is required: --bases or --file");
    const int n = require_n(job);
    return SymplecticMatroid(n, checked_bases(parse_json_text(job.bases, "--bases"), n));
}

std::string text_of(const BasisSet& b, int n) {
    GroundSet e{n};
    std::string out = "{";
    for (std::size_t k = 0; k < b.size(); ++k)
        out += (k ? ", " : "") + e.name(b[k].lo) + e.name(b[k].hi);
    return out + "}";
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

void cmd_enumerate(const Job& job, Format fmt, std::ostream& os) {
    const int n = require_n(job);
    const auto all = enumerate_symplectic(n);
    std::map<std::size_t, int> histogram;
    for (const auto& m : all) ++histogram[m.bases().size()];
    std::optional<DegreeOneSurvey> survey;
    if (job.survey) survey = degree_one_survey(n);

    if (fmt == Format::Json) {
        Json hist = Json::array();
        for (auto [k, c] : histogram) hist.push_back(Json{{"bases", k}, {"count", c}});
        Json ms = Json::array();
        for (const auto& m : all) ms.push_back(io::bases_to_json(m.bases(), n));
        Json j{{"n", n}, {"count", all.size()}, {"histogram", std::move(hist)}, {"matroids", std::move(ms)}};
        if (survey)
            j["degree_one_survey"] = Json{{"matroids", survey->matroids},
                                          {"distinct_projections", survey->distinct_projections},
                                          {"symplectic_projections", survey->symplectic_projections}};
        emit_json(os, j);
    } else if (fmt == Format::Csv) {
        os << "index,size,bases\n";
        for (std::size_t k = 0; k < all.size(); ++k)
            os << k << ',' << all[k].bases().size() << ',' << csv_quote(io::bases_text(all[k].bases(), n)) << '\n';
    } else {
        os << all.size() << " symplectic matroids\n";
        for (auto [k, c] : histogram) os << "  " << k << (k == 1 ? " basis: " : " bases: ") << c << '\n';
        for (const auto& m : all) os << text_of(m.bases(), n) << '\n';
        if (survey)
            os << "degree-one survey: " << survey->matroids << " matroids, " << survey->distinct_projections
               << " distinct projections, " << survey->symplectic_projections << " symplectic\n";
    }
}

void cmd_orbits(const Job& job, Format fmt, std::ostream& os) {
    const int n = require_n(job);
    Group group;
    std::vector<BasisSet> sets;
    if (job.group == "bcn") {
        group = Group::BCn;
        for (const auto& m : enumerate_symplectic(n)) sets.push_back(m.bases());
    } else if (job.group == "s2n") {
        group = Group::S2n;
        if (n > 3) throw Error(ErrorKind::TooLarge, "S_2n orbits are limited to n <= 3");
        for (const auto& m : enumerate_symmetric(n)) sets.push_back(m.bases());
    } else {
        throw UsageError("--group must be bcn or s2n");
    }
    const auto orbs = orbits(sets, group, n);

    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& o : orbs) {
            Json members = Json::array();
            for (const auto& b : o.members) members.push_back(io::bases_to_json(b, n));
            arr.push_back(Json{{"representative", io::bases_to_json(o.representative, n)},
                               {"size", o.members.size()},
                               {"members", std::move(members)}});
        }
        emit_json(os, Json{{"n", n}, {"group", job.group}, {"count", orbs.size()}, {"orbits", std::move(arr)}});
    } else if (fmt == Format::Csv) {
        os << "orbit,size,representative\n";
        for (std::size_t k = 0; k < orbs.size(); ++k)
            os << k << ',' << orbs[k].members.size() << ',' << csv_quote(io::bases_text(orbs[k].representative, n))
               << '\n';
    } else {
        os << orbs.size() << " orbits\n";
        for (const auto& o : orbs) {
            os << "size " << o.members.size() << ": " << text_of(o.representative, n) << '\n';
            for (const auto& b : o.members) os << "    " << text_of(b, n) << '\n';
        }
    }
}

void cmd_representable(const Job& job, Format fmt, std::ostream& os) {
    const SymplecticMatroid m = read_matroid(job);
    const int n = m.n();
    RepresentabilityReport r;
    try {
        r = is_representable(m);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoLifting) throw;
    }

    if (fmt == Format::Json) {
        Json j = io::to_json(r, n);
        j["bases"] = io::bases_to_json(m.bases(), n);
        emit_json(os, j);
    } else if (fmt == Format::Csv) {
        os << "bases,representable,trichotomy,max_lifting,liftings\n";
        os << csv_quote(io::bases_text(m.bases(), n)) << ',' << (r.representable ? "true" : "false") << ','
           << io::to_string(r.trichotomy) << ',' << csv_quote(r.witness_lifting ? io::bags_text(*r.witness_lifting) : "")
           << ',' << r.liftings.size() << '\n';
    } else {
        os << text_of(m.bases(), n) << '\n';
        os << (r.representable ? "representable" : "not representable") << '\n';
        os << "trichotomy: " << io::to_string(r.trichotomy) << '\n';
        if (r.witness_lifting) os << "max lifting: " << io::bags_text(*r.witness_lifting) << '\n';
        os << "liftings: " << r.liftings.size() << '\n';
        for (const auto& l : r.liftings) os << "  degree " << l.degree << ": " << io::bags_text(l.matroid) << '\n';
    }
}

void cmd_witness(const Job& job, Format fmt, std::ostream& os) {
    std::optional<SymplecticMatroid> m;
    if (job.full) {
        if (!job.bases.empty() || !job.file.empty()) throw UsageError("--full takes no matroid input");
        const int n = require_n(job);
        m.emplace(n, admissible_pairs(n));
    } else {
        m = read_matroid(job);
    }
    const int n = m->n();
    const PluckerWitness w = build_symplectic_witness(*m);
    const CertificateCheck check = verify_certificate(w, *m);
    if (!check) throw std::logic_error("witness failed its own certificate");

    if (fmt == Format::Json) {
        Json j = io::to_json(w);
        j["bases"] = io::bases_to_json(m->bases(), n);
        j["certificate"] = io::to_json(check);
        emit_json(os, j);
    } else if (fmt == Format::Csv) {
        os << "i,j,value\n";
        GroundSet e{n};
        for (Position i = 1; i <= e.size(); ++i)
            for (Position j = i + 1; j <= e.size(); ++j)
                os << e.to_signed(i) << ',' << e.to_signed(j) << ',' << to_string(w.coordinate(i, j)) << '\n';
    } else {
        GroundSet e{n};
        os << text_of(m->bases(), n) << '\n';
        os << "columns:";
        for (Position p = 1; p <= e.size(); ++p) os << ' ' << e.name(p);
        os << '\n';
        for (std::size_t r = 0; r < 2; ++r) {
            os << "  [";
            for (std::size_t c = 0; c < w.matrix().cols(); ++c) os << (c ? ", " : "") << to_string(w.matrix()(r, c));
            os << "]\n";
        }
        os << "plucker:\n";
        for (Position i = 1; i <= e.size(); ++i)
            for (Position j = i + 1; j <= e.size(); ++j)
                os << "  x[" << e.name(i) << ',' << e.name(j) << "] = " << to_string(w.coordinate(i, j)) << '\n';
        os << "s = " << to_string(symplectic_sum(w)) << '\n';
        os << "certificate: " << (check ? "verified" : to_string(check.reason)) << '\n';
    }
}

void cmd_classify(const Job& job, Format fmt, std::ostream& os) {
    const int n = require_n(job);
    const Classification c = classify(n);
    if (fmt == Format::Json) {
        emit_json(os, io::to_json(c));
        return;
    }
    if (fmt == Format::Csv) {
        os << io::strata_csv(c);
        return;
    }
    int flagged = 0;
    for (const auto& r : c.strata) flagged += r.dims.flagged;
    os << c.strata.size() << " representable strata, " << flagged << " flagged\n";
    for (const auto& r : c.strata) {
        os << text_of(r.matroid.bases(), n) << "  deg " << r.degree << "  dim " << r.dims.total << " = "
           << r.dims.fiber << " + " << r.dims.quotient << "  formula " << r.dims.formula.total()
           << (r.dims.flagged ? " [flagged]" : "") << "  T' " << r.stabilizer_full.dim << '/'
           << r.stabilizer_full.components << "  T " << r.stabilizer_symplectic.dim << '/'
           << r.stabilizer_symplectic.components;
        if (r.homology) os << "  " << to_string(*r.homology);
        os << '\n';
    }
    if (!c.types.empty()) {
        os << c.types.size() << " invariant subvariety types\n";
        for (const auto& t : c.types)
            os << "  " << to_string(t.homology) << "  dim " << t.dim << "  " << text_of(t.stratum, n)
               << (t.closed_point_orbit ? " (closed point orbit)" : "") << '\n';
    }
}

void cmd_betti(const Job& job, Format fmt, std::ostream& os) {
    const int n = require_n(job);
    if (n < 2) throw Error(ErrorKind::InvalidInput, "betti needs n >= 2");
    const auto b = betti_numbers(n);
    long long total = 0;
    for (auto x : b) total += x;
    if (fmt == Format::Json) {
        emit_json(os, Json{{"n", n}, {"betti", b}, {"total", total}});
    } else if (fmt == Format::Csv) {
        os << "degree,rank\n";
        for (std::size_t k = 0; k < b.size(); ++k) os << 2 * k << ',' << b[k] << '\n';
    } else {
        for (std::size_t k = 0; k < b.size(); ++k) os << "H_" << 2 * k << " = Z^" << b[k] << '\n';
        os << "total rank " << total << '\n';
    }
}

void cmd_polytope(const Job& job, Format fmt, std::ostream& os) {
    const SymplecticMatroid m = read_matroid(job);
    const int n = m.n();
    const LatticePolytope p = symplectic_polytope(m);
    std::optional<SymmetricMatroid> lift;
    try {
        lift = is_representable(m).witness_lifting;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoLifting) throw;
    }
    std::optional<LatticePolytope> lifted;
    bool matches = false;
    if (lift) {
        lifted = symmetric_polytope(*lift);
        matches = hull_equal(project_pi(*lifted), p);
    }

    if (fmt == Format::Json) {
        Json j{{"n", n}, {"bases", io::bases_to_json(m.bases(), n)}, {"polytope", io::to_json(p)}};
        if (lifted) {
            j["max_lifting"] = io::to_json(*lift);
            j["lifted_polytope"] = io::to_json(*lifted);
            j["projection_matches"] = matches;
        }
        emit_json(os, j);
    } else if (fmt == Format::Csv) {
        os << "point\n";
        for (const auto& x : p.points) os << csv_quote(Json(x).dump()) << '\n';
    } else {
        os << text_of(m.bases(), n) << '\n';
        os << p.points.size() << " vertices, affine dimension " << affine_dim(p) << '\n';
        for (const auto& x : p.points) os << "  " << Json(x).dump() << '\n';
        if (lifted)
            os << "max lifting " << io::bags_text(*lift) << ": projected polytope "
               << (matches ? "matches" : "differs") << '\n';
    }
}

void cmd_schubert(const Job& job, Format fmt, std::ostream& os) {
    const int n = require_n(job);
    std::vector<SchubertVariety> vs;
    if (!job.pair.empty()) {
        Json j = parse_json_text(job.pair, "--pair");
        BasisSet b = checked_bases(Json::array({j}), n);
        vs.push_back(sp_schubert(b.front(), n));
    } else {
        for (const Pair& p : admissible_pairs(n)) vs.push_back(sp_schubert(p, n));
    }
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& v : vs) arr.push_back(io::to_json(v, n));
        emit_json(os, Json{{"n", n}, {"varieties", std::move(arr)}});
    } else if (fmt == Format::Csv) {
        os << "pair,dim,vanishing\n";
        for (const auto& v : vs)
            os << csv_quote(io::pair_to_json(v.pair, n).dump()) << ',' << v.dim << ','
               << csv_quote(io::bases_text(v.vanishing, n)) << '\n';
    } else {
        GroundSet e{n};
        for (const auto& v : vs)
            os << e.name(v.pair.lo) << e.name(v.pair.hi) << "  dim " << v.dim << "  vanishing "
               << v.vanishing.size() << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank-2 symplectic matroids and SpG(2, 2n)", "sympmat"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Job job;
    app.add_option("--n", job.n, "half the ground set size");
    app.add_option("--bases", job.bases, "matroid as signed pairs, e.g. \"[[1,2],[-1,-2]]\"");
    app.add_option("--file", job.file, "JSON file {\"n\": int, \"bases\": [[int, int], ...]}");
    app.add_option("--format", job.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", job.out, "write the report here instead of stdout");

    auto* enumerate = app.add_subcommand("enumerate", "all symplectic matroids for n <= 3");
    enumerate->add_flag("--degree-one-survey", job.survey, "also project every degree-1 symmetric matroid");
    auto* orbits_cmd = app.add_subcommand("orbits", "orbits under BC_n (or S_2n on symmetric matroids)");
    orbits_cmd->add_option("--group", job.group, "bcn or s2n")->check(CLI::IsMember({"bcn", "s2n"}));
    app.add_subcommand("representable", "liftings and representability of one matroid");
    auto* witness = app.add_subcommand("witness", "exact rational witness with certificate");
    witness->add_flag("--full", job.full, "use every admissible pair");
    app.add_subcommand("classify", "strata with dimensions, stabilizers and classes, n <= 3");
    app.add_subcommand("betti", "Betti numbers of SpG(2, 2n)");
    app.add_subcommand("polytope", "symplectic matroid polytope and its lifting");
    auto* schubert = app.add_subcommand("schubert", "symplectic Schubert varieties");
    schubert->add_option("--pair", job.pair, "signed pair, e.g. \"[1,-2]\"");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 2;
    }

    const Format fmt = parse_format(job.format);
    const std::string command = app.get_subcommands().front()->get_name();
    std::ostringstream report;
    try {
        if (command == "enumerate") cmd_enumerate(job, fmt, report);
        else if (command == "orbits") cmd_orbits(job, fmt, report);
        else if (command == "representable") cmd_representable(job, fmt, report);
        else if (command == "witness") cmd_witness(job, fmt, report);
        else if (command == "classify") cmd_classify(job, fmt, report);
        else if (command == "betti") cmd_betti(job, fmt, report);
        else if (command == "polytope") cmd_polytope(job, fmt, report);
        else cmd_schubert(job, fmt, report);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (job.out.empty()) {
        out << report.str();
    } else {
        std::ofstream file(job.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << job.out << '\n';
            return 2;
        }
        file << report.str();
    }
    return 0;
}

}  // namespace sympmat::cli
