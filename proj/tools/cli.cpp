#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "berndenom/arith.hpp"
#include "berndenom/denom.hpp"
#include "berndenom/errors.hpp"
#include "berndenom/prime_sieve.hpp"
#include "berndenom/scanner.hpp"
#include "berndenom/verify.hpp"

namespace berndenom::cli {

namespace {

using nlohmann::json;

enum class Format { csv, json };

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

PrimeSieve sieve_for(std::uint64_t bound)
{
    return PrimeSieve(std::max<std::uint64_t>(bound, 2));
}

unsigned default_threads()
{
    if (const char* env = std::getenv("BERNDENOM_THREADS")) {
        try {
            const std::uint64_t t = parse_count(env);
            if (t >= 1 && t <= 4096) return static_cast<unsigned>(t);
        } catch (const std::invalid_argument&) {
        }
        throw UsageError(std::string("BERNDENOM_THREADS must be a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string join(const std::vector<std::uint64_t>& v, char sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---- profile -------------------------------------------------------------

void cmd_profile(std::uint64_t n, Format format, std::ostream& out)
{
    if (n < 1) throw UsageError("profile: n must be >= 1");
    const PrimeSieve sieve = sieve_for(required_sieve_limit(n));
    const DenomProfile pr = profile(n, sieve);
    const std::vector<std::pair<std::string, std::string>> fields{
        {"n", std::to_string(pr.n)},
        {"dd", pr.dd.to_string()},
        {"dd_minus", pr.dd_minus.to_string()},
        {"dd_plus", pr.dd_plus.to_string()},
        {"dd_shared", pr.dd_shared.to_string()},
        {"dd_coprime", pr.dd_coprime.to_string()},
        {"dd_complement", pr.dd_complement.to_string()},
        {"dn", pr.dn.to_string()},
        {"db", pr.db.to_string()},
        {"ds", pr.ds.get_str()},
        {"omega_plus", std::to_string(pr.omega_plus)},
        {"rad_n", pr.rad_n.to_string()},
        {"rad_n1", pr.rad_n1.to_string()},
        {"in_rad_set", pr.in_rad_set ? "true" : "false"},
    };
    if (format == Format::csv) {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
        out << '\n';
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
        out << '\n';
        return;
    }
    json j;
    for (const auto& [key, value] : fields) j[key] = value;
    j["n"] = pr.n;
    j["omega_plus"] = pr.omega_plus;
    j["in_rad_set"] = pr.in_rad_set;
    emit_json(out, j);
}

// ---- seq -----------------------------------------------------------------

const std::vector<std::string>& sequence_names()
{
    static const std::vector<std::string> names{"dn", "dd", "db", "ds", "dd_plus", "dd_minus",
                                                "dd_coprime", "dd_shared", "dd_complement",
                                                "omega_plus", "db_k"};
    return names;
}

std::string sequence_value(const std::string& name, std::uint64_t n, std::uint64_t k,
                           const PrimeSieve& sieve)
{
    if (name == "db") return db(n, sieve).to_string();
    if (name == "ds") return ds(n, sieve).get_str();
    if (n == 0) throw UsageError("seq " + name + ": index 0 is undefined, start at 1");
    if (name == "dn") return dn(n).to_string();
    if (name == "dd") return dd(n, sieve).to_string();
    if (name == "dd_plus") return dd_split_sqrt(n, sieve).plus.to_string();
    if (name == "dd_minus") return dd_split_sqrt(n, sieve).minus.to_string();
    if (name == "dd_coprime") return dd_split_divisibility(n, sieve).coprime.to_string();
    if (name == "dd_shared") return dd_split_divisibility(n, sieve).shared.to_string();
    if (name == "dd_complement") return dd_split_divisibility(n, sieve).complement.to_string();
    if (name == "omega_plus") return std::to_string(omega_dd_plus(n, sieve));
    if (name == "db_k") return db_k(n, k, sieve).to_string();
    throw UsageError("seq: unknown sequence '" + name + "'");
}

void cmd_seq(const std::string& name, std::uint64_t lo, std::uint64_t hi, std::optional<std::uint64_t> k,
             Format format, std::ostream& out)
{
    const auto& names = sequence_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("seq: unknown sequence '" + name + "'");
    if ((name == "db_k") != k.has_value())
        throw UsageError(name == "db_k" ? "seq db_k: --k is required" : "seq: --k only applies to db_k");
    if (k && *k < 1) throw UsageError("seq db_k: --k must be >= 1");
    if (lo > hi) throw UsageError("seq: lo must not exceed hi");

    const PrimeSieve sieve = sieve_for(required_sieve_limit(hi));
    std::vector<std::pair<std::uint64_t, std::string>> rows;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        rows.emplace_back(n, sequence_value(name, n, k.value_or(0), sieve));
        if (n == hi) break;
    }
    if (format == Format::csv) {
        out << "n,value\n";
        for (const auto& [n, v] : rows) out << n << ',' << v << '\n';
        return;
    }
    json values = json::array();
    for (const auto& [n, v] : rows) values.push_back({{"n", n}, {"value", v}});
    json j{{"name", name}, {"lo", lo}, {"hi", hi}, {"values", values}};
    if (k) j["k"] = *k;
    emit_json(out, j);
}

// ---- scan ----------------------------------------------------------------

struct ScanArgs {
    std::uint64_t limit = 0;
    unsigned threads = 1;
    std::uint64_t chunk = std::uint64_t{1} << 20;
    std::optional<std::string> checkpoint;
    std::optional<std::size_t> stop_after;
};

int cmd_scan(const ScanArgs& a, Format format, std::ostream& out, std::ostream& err)
{
    if (a.limit < 1) throw UsageError("scan: --limit must be >= 1");
    if (a.chunk < 1) throw UsageError("scan: --chunk must be >= 1");
    const PrimeSieve sieve = sieve_for(scan_sieve_limit(a.limit));
    ScanOptions opt;
    opt.threads = a.threads;
    opt.chunk_size = a.chunk;
    if (a.checkpoint) opt.checkpoint = *a.checkpoint;
    opt.max_new_chunks = a.stop_after;
    opt.warnings = &err;
    const ScanReport r = run_scan(a.limit, sieve, opt);
    const ChunkSummary& t = r.totals;

    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(t.digest));
    const std::uint64_t scanned = r.chunks_done == 0 ? 0 : t.hi;

    if (format == Format::csv) {
        out << "field,value\n"
            << "limit," << r.limit << '\n'
            << "complete," << (r.complete ? "true" : "false") << '\n'
            << "scanned_through," << scanned << '\n'
            << "exceptional_count," << t.exceptional.size() << '\n'
            << "max_exceptional," << r.max_exceptional() << '\n'
            << "exceptional," << join(t.exceptional, ' ') << '\n'
            << "omega_sum," << t.omega_sum << '\n'
            << "omega_max," << t.omega_max << '\n'
            << "omega_max_at," << t.omega_max_at << '\n'
            << "bound_violations," << t.bound_violations << '\n'
            << "digest," << digest << '\n';
    } else {
        emit_json(out, json{{"limit", r.limit},
                            {"complete", r.complete},
                            {"scanned_through", scanned},
                            {"exceptional_count", t.exceptional.size()},
                            {"max_exceptional", r.max_exceptional()},
                            {"exceptional", t.exceptional},
                            {"omega_sum", t.omega_sum},
                            {"omega_max", t.omega_max},
                            {"omega_max_at", t.omega_max_at},
                            {"bound_violations", t.bound_violations},
                            {"digest", digest}});
    }
    return kExitOk;
}

// ---- sets / radset -------------------------------------------------------

void cmd_sets(std::uint64_t k, std::uint64_t limit, Format format, std::ostream& out)
{
    if (k < 1) throw UsageError("sets: --k must be >= 1");
    if (limit < 1) throw UsageError("sets: --limit must be >= 1");
    const PrimeSieve sieve = sieve_for(required_sieve_limit(limit));
    const SetReport r = find_sets(k, limit, sieve);
    std::vector<bool> next_prime;
    for (std::uint64_t n : r.members) next_prime.push_back(is_prime_u64(n + 1));

    if (format == Format::csv) {
        out << (k == 1 ? "n,n_plus_1_prime\n" : "n\n");
        for (std::size_t i = 0; i < r.members.size(); ++i) {
            out << r.members[i];
            if (k == 1) out << ',' << (next_prime[i] ? "true" : "false");
            out << '\n';
        }
        return;
    }
    json j{{"k", k}, {"limit", limit}, {"members", r.members}};
    if (k == 1) j["n_plus_1_prime"] = next_prime;
    emit_json(out, j);
}

void cmd_radset(std::uint64_t limit, Format format, std::ostream& out)
{
    if (limit < 1) throw UsageError("radset: --limit must be >= 1");
    const PrimeSieve sieve = sieve_for(required_sieve_limit(limit));
    const SetReport r = find_rad_set(limit, sieve);
    if (format == Format::csv) {
        out << "n\n";
        for (std::uint64_t n : r.members) out << n << '\n';
        return;
    }
    emit_json(out, json{{"limit", limit}, {"members", r.members}});
}

// ---- verify --------------------------------------------------------------

int cmd_verify(std::uint64_t limit, std::uint64_t oracle_limit, const std::optional<std::string>& fault,
               Format format, std::ostream& out)
{
    if (limit < 1) throw UsageError("verify: --limit must be >= 1");
    if (oracle_limit < 1 || oracle_limit > 1000) throw UsageError("verify: --oracle-limit must lie in [1, 1000]");
    VerifyOptions opt;
    opt.limit = limit;
    opt.oracle_limit = oracle_limit;
    if (fault) {
        const auto colon = fault->find(':');
        if (colon == std::string::npos) throw UsageError("verify: --inject-fault expects FAMILY:N");
        opt.fault = InjectedFault{fault->substr(0, colon), parse_count(fault->substr(colon + 1))};
    }
    const std::vector<FamilyResult> results = run_verification(opt);
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });

    if (format == Format::csv) {
        out << "family,status,checked,witness\n";
        for (const auto& r : results)
            out << r.name << ',' << (r.passed ? "pass" : "fail") << ',' << r.checked << ','
                << (r.witness ? std::to_string(*r.witness) : "") << '\n';
    } else {
        json fams = json::array();
        for (const auto& r : results) {
            json f{{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"witness", nullptr}};
            if (r.witness) f["witness"] = *r.witness;
            if (!r.passed) f["detail"] = r.detail;
            fams.push_back(f);
        }
        emit_json(out, json{{"limit", limit}, {"oracle_limit", oracle_limit}, {"passed", all}, {"families", fams}});
    }
    return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::uint64_t parse_count(const std::string& text)
{
    auto digits = [&](const std::string& s) {
        if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("not a count: '" + text + "'");
        return std::stoull(s);
    };
    auto power = [&](std::uint64_t base, std::uint64_t e, std::uint64_t scale) {
        std::uint64_t v = scale;
        for (std::uint64_t i = 0; i < e; ++i) {
            if (v > UINT64_MAX / std::max<std::uint64_t>(base, 1))
                throw std::invalid_argument("count out of range: '" + text + "'");
            v *= base;
        }
        return v;
    };
    if (auto caret = text.find('^'); caret != std::string::npos)
        return power(digits(text.substr(0, caret)), digits(text.substr(caret + 1)), 1);
    if (auto e = text.find_first_of("eE"); e != std::string::npos)
        return power(10, digits(text.substr(e + 1)), digits(text.substr(0, e)));
    return digits(text);
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Denominators of Bernoulli polynomials and their derivatives", "berndenom"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "csv";
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto count_option = [](CLI::App* sub, const std::string& name, std::string& target, const std::string& help) {
        return sub->add_option(name, target, help);
    };

    std::string profile_n;
    auto* profile_cmd = app.add_subcommand("profile", "All denominator quantities for one index n");
    profile_cmd->add_option("n", profile_n, "Index n >= 1")->required();

    std::string seq_name, seq_lo, seq_hi, seq_k;
    auto* seq_cmd = app.add_subcommand("seq", "Emit one sequence over [lo, hi]");
    seq_cmd->add_option("name", seq_name, "dn dd db ds dd_plus dd_minus dd_coprime dd_shared dd_complement omega_plus db_k")
        ->required();
    seq_cmd->add_option("lo", seq_lo, "First index")->required();
    seq_cmd->add_option("hi", seq_hi, "Last index")->required();
    count_option(seq_cmd, "--k", seq_k, "Derivative order (db_k only)");

    std::string scan_limit, scan_threads, scan_chunk, scan_checkpoint, scan_stop;
    auto* scan_cmd = app.add_subcommand("scan", "Scan [1, limit] for n without a prime p > sqrt(n) with s_p(n) >= p");
    count_option(scan_cmd, "--limit", scan_limit, "Upper end of the scan")->required();
    count_option(scan_cmd, "--threads", scan_threads, "Worker threads (default: BERNDENOM_THREADS or all cores)");
    count_option(scan_cmd, "--chunk", scan_chunk, "Indices per chunk");
    scan_cmd->add_option("--checkpoint", scan_checkpoint, "Resumable checkpoint file");
    count_option(scan_cmd, "--stop-after", scan_stop, "Stop after this many new chunks")->group("");

    std::string sets_k = "1", sets_limit = "10000";
    auto* sets_cmd = app.add_subcommand("sets", "Indices n whose k-th derivative of B_n(x) is integral");
    count_option(sets_cmd, "--k", sets_k, "Derivative order")->capture_default_str();
    count_option(sets_cmd, "--limit", sets_limit, "Search bound")->capture_default_str();

    std::string rad_limit = "10000";
    auto* rad_cmd = app.add_subcommand("radset", "Indices n with dd(n) = rad(n + 1)");
    count_option(rad_cmd, "--limit", rad_limit, "Search bound")->capture_default_str();

    std::string verify_limit = "10000", verify_oracle = "300", verify_fault;
    auto* verify_cmd = app.add_subcommand("verify", "Run the identity and oracle suites");
    count_option(verify_cmd, "--limit", verify_limit, "Identity checks cover 1..limit")->capture_default_str();
    count_option(verify_cmd, "--oracle-limit", verify_oracle, "Oracle checks cover 1..limit, at most 1000")
        ->capture_default_str();
    verify_cmd->add_option("--inject-fault", verify_fault, "FAMILY:N")->group("");

    std::vector<std::string> rev(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    const Format format = format_name == "json" ? Format::json : Format::csv;
    try {
        if (*profile_cmd) {
            cmd_profile(parse_count(profile_n), format, out);
        } else if (*seq_cmd) {
            std::optional<std::uint64_t> k;
            if (seq_cmd->count("--k")) k = parse_count(seq_k);
            cmd_seq(seq_name, parse_count(seq_lo), parse_count(seq_hi), k, format, out);
        } else if (*scan_cmd) {
            ScanArgs a;
            a.limit = parse_count(scan_limit);
            a.threads = scan_cmd->count("--threads") ? static_cast<unsigned>(parse_count(scan_threads))
                                                     : default_threads();
            if (a.threads < 1) throw UsageError("scan: --threads must be >= 1");
            if (scan_cmd->count("--chunk")) a.chunk = parse_count(scan_chunk);
            if (scan_cmd->count("--checkpoint")) a.checkpoint = scan_checkpoint;
            if (scan_cmd->count("--stop-after")) a.stop_after = parse_count(scan_stop);
            return cmd_scan(a, format, out, err);
        } else if (*sets_cmd) {
            cmd_sets(parse_count(sets_k), parse_count(sets_limit), format, out);
        } else if (*rad_cmd) {
            cmd_radset(parse_count(rad_limit), format, out);
        } else if (*verify_cmd) {
            std::optional<std::string> fault;
            if (verify_cmd->count("--inject-fault")) fault = verify_fault;
            return cmd_verify(parse_count(verify_limit), parse_count(verify_oracle), fault, format, out);
        }
    } catch (const SizingError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CheckpointError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace berndenom::cli
