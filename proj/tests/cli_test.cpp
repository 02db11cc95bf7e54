#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "berndenom");
    std::ostringstream out, err;
    const int code = berndenom::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

std::string column(const std::string& text, std::size_t col)
{
    std::string joined;
    auto rows = csv(text);
    for (std::size_t i = 1; i < rows.size(); ++i) joined += (i > 1 ? " " : "") + rows[i].at(col);
    return joined;
}

std::map<std::string, std::string> profile_csv(const std::string& text)
{
    auto rows = csv(text);
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < rows.at(0).size(); ++i) m[rows[0][i]] = rows.at(1).at(i);
    return m;
}

}  // namespace

TEST(Cli, ParseCount)
{
    using berndenom::cli::parse_count;
    EXPECT_EQ(parse_count("1000"), 1000u);
    EXPECT_EQ(parse_count("10^6"), 1000000u);
    EXPECT_EQ(parse_count("1e7"), 10000000u);
    EXPECT_EQ(parse_count("3e2"), 300u);
    EXPECT_THROW(parse_count("-5"), std::invalid_argument);
    EXPECT_THROW(parse_count("ten"), std::invalid_argument);
    EXPECT_THROW(parse_count("10^40"), std::invalid_argument);
}

TEST(Cli, Profile)
{
    auto p5 = profile_csv(run({"profile", "5"}).out);
    EXPECT_EQ(p5["dd"], "6");
    EXPECT_EQ(p5["dn"], "1");
    EXPECT_EQ(p5["db"], "6");
    auto p1 = profile_csv(run({"profile", "1"}).out);
    EXPECT_EQ(p1["dd"], "1");
    EXPECT_EQ(p1["dn"], "2");
    EXPECT_EQ(p1["db"], "2");
    EXPECT_EQ(p1["rad_n1"], "2");
    auto p8 = profile_csv(run({"profile", "8"}).out);
    EXPECT_EQ(p8["dd"], "3");
    EXPECT_EQ(p8["in_rad_set"], "true");
    EXPECT_EQ(run({"profile", "0"}).code, berndenom::cli::kExitUsage);
    EXPECT_EQ(run({"profile"}).code, berndenom::cli::kExitUsage);
}

TEST(Cli, Sequences)
{
    EXPECT_EQ(column(run({"seq", "dd", "1", "10"}).out, 1), "1 1 2 1 6 2 6 3 10 2");
    EXPECT_EQ(column(run({"seq", "ds", "0", "9"}).out, 1), "1 2 6 4 30 12 42 24 90 20");
    EXPECT_EQ(column(run({"seq", "dn", "1", "10"}).out, 1), "2 6 1 30 1 42 1 30 1 66");
    EXPECT_EQ(column(run({"seq", "db", "1", "10"}).out, 1), "2 6 2 30 6 42 6 30 10 66");
    EXPECT_EQ(run({"seq", "db_k", "--k", "2", "8", "8"}).out, "n,value\n8,3\n");
    EXPECT_EQ(column(run({"seq", "omega_plus", "7", "9"}).out, 1), "1 1 1");
    EXPECT_EQ(run({"seq", "bogus", "1", "3"}).code, berndenom::cli::kExitUsage);
    EXPECT_EQ(run({"seq", "db_k", "1", "3"}).code, berndenom::cli::kExitUsage);
    EXPECT_EQ(run({"seq", "dd", "--k", "2", "1", "3"}).code, berndenom::cli::kExitUsage);
    EXPECT_EQ(run({"seq", "dd", "0", "3"}).code, berndenom::cli::kExitUsage);
    EXPECT_EQ(run({"seq", "dd", "5", "3"}).code, berndenom::cli::kExitUsage);
}

TEST(Cli, Sets)
{
    const auto s1 = run({"sets", "--k", "1", "--limit", "10000"});
    EXPECT_EQ(s1.code, 0);
    EXPECT_EQ(column(s1.out, 0), "1 2 4 6 10 12 28 30 36 60");
    EXPECT_EQ(column(s1.out, 1), "true true true true true true true true true true");
    EXPECT_NE(run({"sets", "--k", "3", "--limit", "10000"}).out.find("\n392\n"), std::string::npos);
    EXPECT_EQ(column(run({"radset", "--limit", "10000"}).out, 0), "3 5 8 9 11 27 29 35 59");
}

TEST(Cli, Scan)
{
    const auto r = run({"scan", "--limit", "1000", "--threads", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::map<std::string, std::string> m;
    for (auto& row : csv(r.out)) m[row.at(0)] = row.size() > 1 ? row[1] : "";
    EXPECT_EQ(m["max_exceptional"], "192");
    EXPECT_EQ(m["bound_violations"], "0");
    EXPECT_EQ(m["complete"], "true");
}

TEST(Cli, ScanThreadsFromEnvironment)
{
    ::setenv("BERNDENOM_THREADS", "3", 1);
    const auto a = run({"scan", "--limit", "30000", "--chunk", "1000"});
    ::setenv("BERNDENOM_THREADS", "zero", 1);
    const auto bad = run({"scan", "--limit", "30000"});
    ::unsetenv("BERNDENOM_THREADS");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, run({"scan", "--limit", "30000", "--threads", "1"}).out);
    EXPECT_EQ(bad.code, berndenom::cli::kExitUsage);
}

TEST(Cli, ScanResumeIsByteIdentical)
{
    const fs::path p = fs::temp_directory_path() / "berndenom_cli_resume.ckpt";
    fs::remove(p);
    const auto full = run({"scan", "--limit", "10^5", "--chunk", "8192"});
    const auto partial = run({"scan", "--limit", "10^5", "--chunk", "8192", "--checkpoint", p.string(),
                              "--stop-after", "5", "--threads", "2"});
    EXPECT_EQ(partial.code, 0);
    EXPECT_NE(partial.out, full.out);
    const auto resumed = run({"scan", "--limit", "10^5", "--chunk", "8192", "--checkpoint", p.string()});
    EXPECT_EQ(resumed.out, full.out);
    const auto conflict = run({"scan", "--limit", "10^6", "--chunk", "8192", "--checkpoint", p.string()});
    EXPECT_EQ(conflict.code, berndenom::cli::kExitUsage);
    fs::remove(p);
}

TEST(Cli, Verify)
{
    const auto ok = run({"verify", "--limit", "500", "--oracle-limit", "60"});
    EXPECT_EQ(ok.code, berndenom::cli::kExitOk);
    EXPECT_EQ(ok.out.find("fail"), std::string::npos);
    const auto bad = run({"verify", "--limit", "500", "--oracle-limit", "60", "--inject-fault", "plus_divides_coprime:77"});
    EXPECT_EQ(bad.code, berndenom::cli::kExitVerifyFailed);
    EXPECT_NE(bad.out.find("plus_divides_coprime,fail,500,77"), std::string::npos);
    EXPECT_EQ(run({"verify", "--oracle-limit", "5000"}).code, berndenom::cli::kExitUsage);
}

TEST(Cli, Deterministic)
{
    for (const auto& args : std::vector<std::vector<std::string>>{{"profile", "360"},
                                                                  {"seq", "db", "0", "50"},
                                                                  {"--format", "json", "scan", "--limit", "5000"},
                                                                  {"sets", "--k", "2", "--limit", "2000"}})
        EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, JsonAndCsvCarryTheSameValues)
{
    {
        const auto c = csv(run({"seq", "dd", "1", "200"}).out);
        const auto j = json::parse(run({"--format", "json", "seq", "dd", "1", "200"}).out);
        ASSERT_EQ(j.at("values").size() + 1, c.size());
        for (std::size_t i = 0; i < j["values"].size(); ++i) {
            EXPECT_EQ(std::to_string(j["values"][i]["n"].get<std::uint64_t>()), c[i + 1][0]);
            EXPECT_EQ(j["values"][i]["value"].get<std::string>(), c[i + 1][1]);
        }
    }
    {
        const auto c = profile_csv(run({"profile", "1001"}).out);
        const auto j = json::parse(run({"profile", "1001", "--format", "json"}).out);
        ASSERT_EQ(j.size(), c.size());
        for (const auto& [key, value] : c) {
            const auto& v = j.at(key);
            const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
            EXPECT_EQ(s, value) << key;
        }
        EXPECT_EQ(c.at("dd"), "8113043370463207686510");
    }
    {
        const auto c = column(run({"sets", "--k", "2", "--limit", "1000"}).out, 0);
        const auto j = json::parse(run({"--format", "json", "sets", "--k", "2", "--limit", "1000"}).out);
        std::string joined;
        for (auto& v : j.at("members")) joined += (joined.empty() ? "" : " ") + v.dump();
        EXPECT_EQ(joined, c);
    }
    {
        std::map<std::string, std::string> c;
        for (auto& row : csv(run({"scan", "--limit", "2000"}).out)) c[row.at(0)] = row.size() > 1 ? row[1] : "";
        const auto j = json::parse(run({"--format", "json", "scan", "--limit", "2000"}).out);
        for (const auto& [key, value] : c) {
            if (key == "field") continue;
            const auto& v = j.at(key);
            std::string s;
            if (v.is_array()) {
                for (auto& e : v) s += (s.empty() ? "" : " ") + e.dump();
            } else {
                s = v.is_string() ? v.get<std::string>() : v.dump();
            }
            EXPECT_EQ(s, value) << key;
        }
    }
}

TEST(Cli, HelpAndUsage)
{
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({}).code, berndenom::cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, berndenom::cli::kExitUsage);
    EXPECT_EQ(run({"--format", "xml", "profile", "3"}).code, berndenom::cli::kExitUsage);
}
