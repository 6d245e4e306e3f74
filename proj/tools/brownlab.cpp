// brownlab: Brown numbers, van der Waerden numbers, witness ladders and bound tables.
//
// JSON results go to stdout; human-readable notes go to stderr.
// Exit codes: 0 affirmative, 1 negative-but-valid, 2 usage, 3 budget, 4 magnitude.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brownlab/bounds.hpp"
#include "brownlab/cache.hpp"
#include "brownlab/checker.hpp"
#include "brownlab/constructions.hpp"
#include "brownlab/errors.hpp"
#include "brownlab/io.hpp"
#include "brownlab/oracle.hpp"
#include "brownlab/search.hpp"
#include "brownlab/vdw.hpp"

using nlohmann::json;
using namespace brownlab;

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3, kMagnitude = 4 };

// Oracle cross-checks enumerate r^n colorings; keep them desk-sized.
constexpr double kOracleColoringLimit = 1 << 22;

struct Globals {
    std::optional<std::string> cache_dir;
    bool no_cache = false;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << data;
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
}

FiniteSet parse_set(const std::string& text) {
    std::vector<Position> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const auto x = std::stoull(item, &used);
        if (used != item.size()) throw InvalidArgument("bad set element '" + item + "'");
        v.push_back(x);
    }
    return FiniteSet(std::move(v));
}

std::string plain_digits(const Coloring& c) { return encode_body(c, Encoding::Plain); }

Budget make_budget(std::optional<std::uint64_t> nodes, std::optional<double> seconds) {
    Budget b;
    b.max_nodes = nodes;
    if (seconds) b.max_time = std::chrono::milliseconds(static_cast<long>(*seconds * 1000));
    return b;
}

json outcome_json(const SearchOutcome& o) {
    json j;
    j["kind"] = o.kind == OutcomeKind::Exact ? "exact" : "bracketed";
    if (o.kind == OutcomeKind::Exact) j["value"] = o.value;
    j["lower"] = o.lower;
    j["upper"] = o.upper ? json(o.upper->to_string()) : json(nullptr);
    j["nodes"] = o.nodes;
    j["wall_time_s"] = o.wall_time.count();
    j["budget_exhausted"] = o.budget_exhausted;
    j["reached_cap"] = o.reached_cap;
    j["witness_length"] = o.witness.length();
    return j;
}

std::optional<ResultCache> open_cache(const Globals& g) {
    if (g.no_cache) return std::nullopt;
    return ResultCache(ResultCache::resolve_dir(g.cache_dir));
}

// ---------------------------------------------------------------------------

struct BrownArgs {
    std::string f;
    Color r = 1;
    std::size_t max_n = 64;
    bool oracle = false;
    unsigned jobs = 1;
    bool require_exact = false;
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
    std::optional<std::string> cert_out;
};

bool valid_cached_brown(const json& res, const GrowthFn& f, Color r) {
    if (res.at("kind") != "exact") return false;
    const auto cert = certificate_from_json(res.at("certificate"));
    return cert.growth == f && cert.coloring.palette() == r &&
           res.at("value").get<std::uint64_t>() == cert.coloring.length() + 1 &&
           verify_certificate(cert);
}

int cmd_brown(const BrownArgs& a, const Globals& g) {
    if (a.r == 0) throw InvalidArgument("--r must be >= 1");
    const GrowthFn f = GrowthFn::parse(a.f);
    const GrowthFn used = f.nondecreasing() ? f : GrowthFn::closure(f);
    const std::string key = "brown|" + f.spec() + "|r=" + std::to_string(a.r);

    auto cache = open_cache(g);
    json result;
    std::string cache_state = cache ? "miss" : "off";
    if (cache) {
        if (auto hit = cache->load(key, [&](const json& res) { return valid_cached_brown(res, used, a.r); })) {
            result = *hit;
            cache_state = "hit";
        }
    }
    if (cache_state != "hit") {
        SearchOptions opts;
        opts.n_cap = a.max_n;
        opts.jobs = a.jobs;
        opts.budget = make_budget(a.max_nodes, a.max_seconds);
        const auto o = brown_number(f, a.r, opts);
        result = outcome_json(o);
        result["command"] = "brown";
        result["growth"] = f.spec();
        result["r"] = a.r;
        result["used_closure"] = o.used_closure;
        result["certificate"] = certificate_to_json(*o.certificate);
        result["witness"] = plain_digits(o.witness);
        if (cache && o.kind == OutcomeKind::Exact) cache->store(key, result);
    }
    result["cache"] = cache_state;

    if (a.cert_out) {
        write_file(*a.cert_out, result["certificate"].dump(2) + "\n");
        result["certificate_path"] = *a.cert_out;
    }

    int code = kOk;
    if (a.oracle) {
        // Covers every n up to the claimed value (exact) or the lower bound.
        const auto claim = result.at("lower").get<std::uint64_t>();
        if (std::pow(static_cast<double>(a.r), static_cast<double>(claim)) > kOracleColoringLimit ||
            claim > oracle::kDefaultLengthCap) {
            result["oracle"] = {{"status", "skipped"}, {"reason", "too many colorings"}};
        } else if (result["kind"] == "exact") {
            const auto v = oracle::brown_number(used, a.r, claim);
            const bool agrees = v && *v == claim;
            result["oracle"] = {{"status", agrees ? "agrees" : "DISAGREES"},
                                {"value", v ? json(*v) : json(nullptr)}};
            if (!agrees) {
                std::cerr << "brownlab: ORACLE DISAGREEMENT for " << key << ": search " << claim
                          << ", brute force " << (v ? std::to_string(*v) : "none") << "\n";
                code = kNegative;
            }
        } else {
            // Bracketed: no n below the lower bound may force a large set.
            const auto v = oracle::brown_number(used, a.r, claim - 1);
            result["oracle"] = {{"status", v ? "DISAGREES" : "agrees"}};
            if (v) code = kNegative;
        }
    }
    emit(result);
    std::cerr << "B_" << f.spec() << "(" << a.r << "): "
              << (result["kind"] == "exact" ? "= " + result["value"].dump()
                                            : ">= " + result["lower"].dump() + ", <= " +
                                                  result["upper"].dump())
              << " [" << cache_state << "]\n";
    if (code == kOk && a.require_exact && result["kind"] != "exact") code = kBudget;
    return code;
}

// ---------------------------------------------------------------------------

struct VdwArgs {
    Color r = 2;
    std::size_t l = 3;
    std::size_t max_n = 64;
    unsigned jobs = 1;
    bool require_exact = false;
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
};

bool valid_cached_vdw(const json& res, Color r, std::size_t l) {
    if (res.at("kind") != "exact") return false;
    const auto w = decode_coloring("palette " + std::to_string(r) + " length " +
                                   std::to_string(res.at("witness_length").get<std::size_t>()) +
                                   " encoding plain\n" + res.at("witness").get<std::string>());
    return res.at("value").get<std::uint64_t>() == w.length() + 1 && !ap_partition_check(w, l);
}

int cmd_vdw(const VdwArgs& a, const Globals& g) {
    if (a.r == 0 || a.l == 0) throw InvalidArgument("--r and --l must be >= 1");
    const std::string key = "vdw|r=" + std::to_string(a.r) + "|l=" + std::to_string(a.l);
    auto cache = open_cache(g);
    json result;
    std::string cache_state = cache ? "miss" : "off";
    if (cache) {
        if (auto hit = cache->load(key, [&](const json& res) { return valid_cached_vdw(res, a.r, a.l); })) {
            result = *hit;
            cache_state = "hit";
        }
    }
    if (cache_state != "hit") {
        SearchOptions opts;
        opts.n_cap = a.max_n;
        opts.jobs = a.jobs;
        opts.budget = make_budget(a.max_nodes, a.max_seconds);
        const auto o = vdw_number(a.r, a.l, opts);
        result = outcome_json(o);
        result["command"] = "vdw";
        result["r"] = a.r;
        result["l"] = a.l;
        result["witness"] = plain_digits(o.witness);
        if (cache && o.kind == OutcomeKind::Exact) cache->store(key, result);
    }
    result["cache"] = cache_state;
    emit(result);
    std::cerr << "W(" << a.r << "," << a.l << "): "
              << (result["kind"] == "exact" ? "= " + result["value"].dump()
                                            : ">= " + result["lower"].dump())
              << " [" << cache_state << "]\n";
    return a.require_exact && result["kind"] != "exact" ? kBudget : kOk;
}

// ---------------------------------------------------------------------------

struct LadderArgs {
    std::uint64_t s = 0;
    bool verify = false;
    std::optional<std::string> out;
    std::string encoding = "auto";
};

int cmd_ladder(const LadderArgs& a) {
    if ((a.verify || a.out) && a.s > kLadderMaterializeCap) {
        std::string why;
        try {
            why = "n_" + std::to_string(a.s) + " = " + ladder_length(a.s).to_scientific() +
                  " positions exceed the materialization cap (s <= " +
                  std::to_string(kLadderMaterializeCap) + ")";
        } catch (const MagnitudeOverflow& e) {
            why = std::string("exact n_") + std::to_string(a.s) + " unavailable: " + e.what();
        }
        throw MagnitudeOverflow(why);
    }
    const LadderStage st = ladder(a.s);
    json result = {{"command", "ladder"},
                   {"s", a.s},
                   {"length", st.length.to_string()},
                   {"length_bits", st.length.bit_length()},
                   {"palette", st.palette},
                   {"materialized", st.materialized()}};
    int code = kOk;
    if (a.verify) {
        const auto rep = ladder_verify(a.s);
        json classes = json::array();
        for (const auto& c : rep.classes) {
            classes.push_back({{"color", c.color},
                               {"size", c.size},
                               {"size_ok", c.size_ok},
                               {"star_ok", c.star_ok},
                               {"span_ok", c.span_ok}});
        }
        result["verify"] = {{"all_ok", rep.all_ok()}, {"classes", classes}};
        if (!rep.all_ok()) {
            result["verify"]["first_failure"] = rep.first_failure();
            code = kNegative;
        }
        std::cerr << "ladder s=" << a.s << ": " << (rep.all_ok() ? "all claims hold" : rep.first_failure())
                  << "\n";
    }
    if (a.out) {
        Encoding enc = preferred_encoding(st.coloring->length());
        if (a.encoding == "plain") enc = Encoding::Plain;
        if (a.encoding == "rle") enc = Encoding::Rle;
        write_file(*a.out, encode_coloring(*st.coloring, enc));
        result["out"] = *a.out;
        result["encoding"] = enc == Encoding::Plain ? "plain" : "rle";
    }
    emit(result);
    return code;
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& input, const std::string& spec) {
    const GrowthFn f = GrowthFn::parse(spec);
    const Coloring c = decode_coloring(read_file(input));
    json result = {{"command", "check"}, {"growth", f.spec()},
                   {"palette", c.palette()}, {"length", c.length()}};
    if (!f.nondecreasing()) {
        if (c.length() > oracle::kDefaultLengthCap) {
            throw InvalidArgument("growth '" + f.spec() +
                                  "' is not nondecreasing and the coloring is too long for the "
                                  "brute-force checker");
        }
        result["method"] = "bruteforce";
        if (auto h = oracle::has_large_homogeneous(c, f)) {
            result["witness"] = false;
            result["large_set"] = {{"color", h->color}, {"set", h->set.elements()}};
            emit(result);
            return kNegative;
        }
        result["witness"] = true;
        emit(result);
        return kOk;
    }
    result["method"] = "windows";
    if (auto v = has_large_homogeneous(c, f)) {
        result["witness"] = false;
        result["violation"] = violation_to_json(*v, color_class(c, v->color));
        std::cerr << "not a witness: color " << v->color << " has a window of length "
                  << v->length() << " with gap size " << v->gap_size << " > f = " << v->threshold
                  << "\n";
        emit(result);
        return kNegative;
    }
    result["witness"] = true;
    result["certificate"] = certificate_to_json(*is_witness(c, f));
    std::cerr << "witness: B_" << f.spec() << "(" << c.palette() << ") > " << c.length() << "\n";
    emit(result);
    return kOk;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
    std::optional<std::string> f;
    std::optional<std::uint64_t> m;
    std::uint64_t r_max = 1;
    std::string format = "json";
};

int cmd_bounds(const BoundsArgs& a, const Globals& g) {
    if (a.f.has_value() == a.m.has_value()) throw InvalidArgument("give exactly one of --f or --m");
    if (a.r_max == 0) throw InvalidArgument("--r-max must be >= 1");
    const GrowthFn f = a.m ? GrowthFn::linear(*a.m) : GrowthFn::parse(*a.f);
    const bool linear = f.kind() == GrowthFn::Kind::Linear || f.kind() == GrowthFn::Kind::Identity;
    auto cache = open_cache(g);

    std::vector<std::vector<std::string>> rows;
    for (std::uint64_t r = 1; r <= a.r_max; ++r) {
        std::string ardal;
        if (linear) {
            try {
                ardal = ardal_bound(f.slope(), r).to_string();
            } catch (const MagnitudeOverflow&) {
                ardal = "overflow";
            }
        }
        std::string recursion;
        try {
            recursion = upper_bound_seq(f, r).value.to_string();
        } catch (const MagnitudeOverflow&) {
            recursion = "overflow";
        }
        std::string best;
        if (cache && r <= 0xFFFFFFFFULL) {
            const std::string key = "brown|" + f.spec() + "|r=" + std::to_string(r);
            const GrowthFn used = f.nondecreasing() ? f : GrowthFn::closure(f);
            const Color rc = static_cast<Color>(r);
            if (auto hit = cache->load(key, [&](const json& res) { return valid_cached_brown(res, used, rc); })) {
                best = std::to_string(hit->at("value").get<std::uint64_t>());
            }
        }
        rows.push_back({std::to_string(r), ardal, recursion, best});
    }

    if (a.format == "csv") {
        std::cout << "r,ardal,recursion,best_known\n";
        for (const auto& row : rows) {
            std::cout << row[0] << ',' << row[1] << ',' << row[2] << ',' << row[3] << '\n';
        }
        return kOk;
    }
    json table = json::array();
    for (const auto& row : rows) {
        auto cell = [](const std::string& s) { return s.empty() ? json(nullptr) : json(s); };
        table.push_back({{"r", std::stoull(row[0])},
                         {"ardal", cell(row[1])},
                         {"recursion", cell(row[2])},
                         {"best_known", cell(row[3])}});
    }
    emit({{"command", "bounds"}, {"growth", f.spec()}, {"rows", table}});
    return kOk;
}

// ---------------------------------------------------------------------------

int cmd_diag(std::uint64_t d, std::size_t n, const std::optional<std::string>& out) {
    const Coloring c = diag_prefix(d, n);
    const Encoding enc = preferred_encoding(n);
    json result = {{"command", "diag"}, {"d", d}, {"n", n},
                   {"encoding", enc == Encoding::Plain ? "plain" : "rle"},
                   {"coloring", encode_body(c, enc)}};
    if (n >= 2 * d) result["max_gap_bounded_homogeneous"] = diag_bound_check(d, n);
    if (out) {
        write_file(*out, encode_coloring(c, enc));
        result["out"] = *out;
    }
    emit(result);
    return kOk;
}

int cmd_psgen(const std::string& input, std::size_t blocks) {
    const Coloring c = decode_coloring(read_file(input));
    const auto seq = ps_generate(c, blocks);
    json bl = json::array();
    for (std::size_t b = 0; b < seq.blocks.size(); ++b) {
        const auto& blk = seq.blocks[b];
        const auto first = seq.x[blk.first];
        const auto last = seq.x[blk.first + blk.size - 1];
        bl.push_back({{"n", b + 1}, {"first_index", blk.first}, {"min", first}, {"max", last},
                      {"gap", blk.size > 1 ? json(c[b + 1]) : json(nullptr)}});
    }
    emit({{"command", "psgen"}, {"x", seq.x.elements()}, {"blocks", bl}});
    return kOk;
}

int cmd_decompose(const std::string& set, std::uint64_t d, std::uint64_t horizon) {
    const FiniteSet x = parse_set(set);
    const auto dec = decompose_ps(x, d, horizon);
    std::vector<Position> meet;
    std::set_intersection(dec.y.begin(), dec.y.end(), dec.z.begin(), dec.z.end(),
                          std::back_inserter(meet));
    emit({{"command", "decompose"},
          {"d", d},
          {"horizon", horizon},
          {"y", dec.y.elements()},
          {"z", dec.z.elements()},
          {"x_equals_y_meet_z", meet == x.elements()},
          {"y_gap_size", gap_size(dec.y)}});
    return kOk;
}

int cmd_ap(const std::string& input, std::size_t l) {
    const Coloring c = decode_coloring(read_file(input));
    json result = {{"command", "ap"}, {"l", l}, {"length", c.length()}};
    if (auto ap = ap_partition_check(c, l)) {
        result["found"] = true;
        result["color"] = ap->color;
        result["start"] = ap->ap.start;
        result["diff"] = ap->ap.diff;
        result["elements"] = ap->ap.elements().elements();
        emit(result);
        return kOk;
    }
    result["found"] = false;
    emit(result);
    return kNegative;
}

int report_error(const char* kind, const std::exception& e, int code) {
    std::cerr << "brownlab: " << e.what() << "\n";
    emit({{"error", e.what()}, {"kind", kind}});
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"brownlab: Brown numbers, van der Waerden numbers and witness constructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("brownlab ") + kVersion);
    Globals g;
    app.add_option("--cache-dir", g.cache_dir, "Result cache directory (default: $BROWNLAB_CACHE)");
    app.add_flag("--no-cache", g.no_cache, "Do not read or write the result cache");

    BrownArgs brown;
    auto* sb = app.add_subcommand("brown", "Compute or bracket B_f(r)");
    sb->add_option("--f", brown.f, "Growth spec (id, linear:<m>, exp2, table:..., closure:...)")->required();
    sb->add_option("--r", brown.r, "Number of colors")->required();
    sb->add_option("--max-n", brown.max_n, "Longest coloring to search");
    sb->add_flag("--oracle", brown.oracle, "Cross-check against full enumeration");
    sb->add_option("--jobs", brown.jobs, "Worker threads");
    sb->add_flag("--require-exact", brown.require_exact, "Exit 3 unless the value is exact");
    sb->add_option("--max-nodes", brown.max_nodes, "Node budget");
    sb->add_option("--max-seconds", brown.max_seconds, "Wall-clock budget");
    sb->add_option("--cert-out", brown.cert_out, "Write the witness certificate here");

    VdwArgs vdw;
    auto* sv = app.add_subcommand("vdw", "Compute or bracket W(r, l)");
    sv->add_option("--r", vdw.r, "Number of colors")->required();
    sv->add_option("--l", vdw.l, "Progression length")->required();
    sv->add_option("--max-n", vdw.max_n, "Longest coloring to search");
    sv->add_option("--jobs", vdw.jobs, "Worker threads");
    sv->add_flag("--require-exact", vdw.require_exact, "Exit 3 unless the value is exact");
    sv->add_option("--max-nodes", vdw.max_nodes, "Node budget");
    sv->add_option("--max-seconds", vdw.max_seconds, "Wall-clock budget");

    LadderArgs lad;
    auto* sl = app.add_subcommand("ladder", "Build, export or verify ladder stage C_s");
    sl->add_option("--s", lad.s, "Stage")->required();
    sl->add_flag("--verify", lad.verify, "Verify size, window condition and span for every color");
    sl->add_option("--out", lad.out, "Write the coloring file here");
    sl->add_option("--encoding", lad.encoding, "auto, plain or rle")
        ->check(CLI::IsMember({"auto", "plain", "rle"}));

    std::string check_input, check_f;
    auto* sc = app.add_subcommand("check", "Check whether a coloring file is a witness");
    sc->add_option("--input", check_input, "Coloring file")->required();
    sc->add_option("--f", check_f, "Growth spec")->required();

    BoundsArgs bounds;
    auto* sbo = app.add_subcommand("bounds", "Tabulate upper bounds and known values");
    sbo->add_option("--f", bounds.f, "Growth spec");
    sbo->add_option("--m", bounds.m, "Slope of f(d) = m d");
    sbo->add_option("--r-max", bounds.r_max, "Largest r")->required();
    sbo->add_option("--format", bounds.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::uint64_t diag_d = 1;
    std::size_t diag_n = 0;
    std::optional<std::string> diag_out;
    auto* sd = app.add_subcommand("diag", "Emit a prefix of the diagonal coloring D(d, .)");
    sd->add_option("--d", diag_d, "Block length")->required();
    sd->add_option("--n", diag_n, "Prefix length")->required();
    sd->add_option("--out", diag_out, "Write the coloring file here");

    std::string ps_input;
    std::size_t ps_blocks = 0;
    auto* sp = app.add_subcommand("psgen", "Encode a coloring as a piecewise syndetic set");
    sp->add_option("--input", ps_input, "Coloring file giving the block gaps C(n)")->required();
    sp->add_option("--blocks", ps_blocks, "Number of blocks")->required();

    std::string dec_set;
    std::uint64_t dec_d = 1, dec_h = 0;
    auto* sdc = app.add_subcommand("decompose", "Split X as (syndetic) Y meet (thick) Z");
    sdc->add_option("--set", dec_set, "Comma-separated elements of X")->required();
    sdc->add_option("--d", dec_d, "Gap bound")->required();
    sdc->add_option("--horizon", dec_h, "Positions considered")->required();

    std::string ap_input;
    std::size_t ap_l = 3;
    auto* sa = app.add_subcommand("ap", "Find a monochromatic arithmetic progression");
    sa->add_option("--input", ap_input, "Coloring file")->required();
    sa->add_option("--l", ap_l, "Progression length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*sb) return cmd_brown(brown, g);
        if (*sv) return cmd_vdw(vdw, g);
        if (*sl) return cmd_ladder(lad);
        if (*sc) return cmd_check(check_input, check_f);
        if (*sbo) return cmd_bounds(bounds, g);
        if (*sd) return cmd_diag(diag_d, diag_n, diag_out);
        if (*sp) return cmd_psgen(ps_input, ps_blocks);
        if (*sdc) return cmd_decompose(dec_set, dec_d, dec_h);
        if (*sa) return cmd_ap(ap_input, ap_l);
    } catch (const ParseError& e) {
        return report_error("parse", e, kUsage);
    } catch (const MagnitudeOverflow& e) {
        return report_error("magnitude", e, kMagnitude);
    } catch (const ResourceLimit& e) {
        return report_error("budget", e, kBudget);
    } catch (const InsufficientPrefix& e) {
        return report_error("insufficient-prefix", e, kUsage);
    } catch (const PreconditionViolation& e) {
        return report_error("precondition", e, kUsage);
    } catch (const std::invalid_argument& e) {
        return report_error("argument", e, kUsage);
    } catch (const std::out_of_range& e) {
        return report_error("argument", e, kUsage);
    } catch (const std::exception& e) {
        return report_error("internal", e, kUsage);
    }
    return kUsage;
}
