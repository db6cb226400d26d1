#include <tqeuler/verify.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace tqeuler;

namespace {

verify_config small_config()
{
    verify_config cfg;
    cfg.max_n = 4;
    cfg.max_k = 4;
    cfg.max_b = 3;
    cfg.brute = 4;
    cfg.caps = enumeration_caps{};
    return cfg;
}

std::string strip_timing(ojson j)
{
    for (auto& c : j["cases"])
        c["ms"] = 0;
    return j.dump();
}

} // namespace

TEST(Registry, IdsAreUnique)
{
    std::set<std::string> seen;
    for (const auto& id : identity_registry())
        ASSERT_TRUE(seen.insert(id.id).second) << id.id;
    EXPECT_TRUE(seen.count("euler-main2"));
    EXPECT_TRUE(seen.count("t-closed"));
    EXPECT_TRUE(seen.count("zeng"));
}

TEST(Verify, SmallRunPasses)
{
    const auto report = run_verification(small_config());
    EXPECT_TRUE(report.ok()) << report_to_text(report);
    EXPECT_GT(report.count(case_status::pass), 100);
}

TEST(Verify, ResultsDoNotDependOnWorkerCount)
{
    auto cfg = small_config();
    const auto serial = report_to_json(run_verification(cfg));
    cfg.jobs = 3;
    const auto parallel = report_to_json(run_verification(cfg));
    EXPECT_EQ(strip_timing(serial), strip_timing(parallel));
}

TEST(Verify, SelectRestrictsIdentities)
{
    auto cfg = small_config();
    cfg.select = {"t-closed", "e-seq"};
    const auto report = run_verification(cfg);
    for (const auto& c : report.cases)
        ASSERT_TRUE(c.id == "t-closed" || c.id == "e-seq");
    EXPECT_EQ(report.cases.size(), 10u);
}

TEST(Verify, EnumeratorsBeyondBruteBoundAreSkipped)
{
    auto cfg = small_config();
    cfg.max_n = 6;
    cfg.brute = 4;
    cfg.select = {"euler-dyck"};
    const auto report = run_verification(cfg);
    EXPECT_EQ(report.count(case_status::pass), 5);
    EXPECT_EQ(report.count(case_status::skipped), 2);
    EXPECT_TRUE(report.ok());
}

TEST(Verify, MutationsAreCaught)
{
    auto cfg = small_config();
    cfg.max_k = 6;
    cfg.max_n = 8;
    cfg.select = {"t-closed", "euler-ks"};

    cfg.mutations = {mutation::t_closed_sign};
    auto report = run_verification(cfg);
    EXPECT_FALSE(report.ok());
    for (const auto& c : report.cases)
        if (c.status == case_status::fail)
            ASSERT_EQ(c.id, "t-closed");

    cfg.mutations = {mutation::e_ks_exponent};
    report = run_verification(cfg);
    EXPECT_FALSE(report.ok());
    for (const auto& c : report.cases)
        if (c.status == case_status::fail)
            ASSERT_EQ(c.id, "euler-ks");

    EXPECT_EQ(parse_mutation("t-closed-sign"), mutation::t_closed_sign);
    EXPECT_THROW(parse_mutation("nope"), error);
}

TEST(Report, JsonShape)
{
    auto cfg = small_config();
    cfg.select = {"t-closed"};
    const ojson j = report_to_json(run_verification(cfg));
    EXPECT_EQ(j["version"], 1);
    EXPECT_EQ(j["summary"]["pass"], 5);
    EXPECT_EQ(j["summary"]["fail"], 0);
    const auto& first = j["cases"][0];
    EXPECT_EQ(first["id"], "t-closed");
    EXPECT_EQ(first["params"]["k"], 0);
    EXPECT_EQ(first["status"], "pass");
    EXPECT_TRUE(first["detail"].is_null());
    EXPECT_TRUE(first["ms"].is_number());
    EXPECT_EQ(ojson::parse(j.dump()), j);
}

TEST(Report, TextListsEveryCase)
{
    auto cfg = small_config();
    cfg.select = {"t-closed"};
    const std::string text = report_to_text(run_verification(cfg));
    EXPECT_NE(text.find("PASS t-closed {\"k\":0}"), std::string::npos);
    EXPECT_NE(text.find("pass 5, fail 0, skipped 0"), std::string::npos);
}

TEST(Report, FailureCarriesBothSides)
{
    identity broken{"broken", "", [](const verify_config&) { return std::vector<ojson>{ojson{{"n", 1}}}; },
                    [](const ojson&, const verify_config&) -> cell_value { return laurent_poly(1); },
                    [](const ojson&, const verify_config&) -> cell_value { return laurent_poly(2); }};
    const auto report = run_verification(verify_config{}, {broken});
    ASSERT_EQ(report.cases.size(), 1u);
    EXPECT_EQ(report.cases[0].status, case_status::fail);
    EXPECT_EQ(report.cases[0].detail, "lhs: 1 | rhs: 2");
}
