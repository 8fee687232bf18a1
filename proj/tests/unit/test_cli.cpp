#include "rigidcalc/commands.hpp"
#include "rigidcalc/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rigidcalc;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path() /
               ("rigidcalc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write_family(long i)
    {
        const auto path = (dir_ / ("F" + std::to_string(i) + ".json")).string();
        EXPECT_EQ(run({"family", "--i", std::to_string(i), "--output", path}).code, 0);
        return path;
    }

    std::filesystem::path dir_;
};

} // namespace

TEST_F(CliTest, JordanAtInfinityOfF6)
{
    const auto r = run({"jordan", "--input", write_family(6), "--point", "inf"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "U(7)\n");
}

TEST_F(CliTest, JordanJsonIsOneDocument)
{
    const auto r = run({"jordan", "--input", write_family(2), "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = io::parse(r.out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[2].at("notation"), "U(3)");
}

TEST_F(CliTest, MiddleConvolutionOfF0)
{
    const auto r = run({"mc", "--input", write_family(0), "--lambda", "-1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto t = io::tuple_from_json(io::parse(r.out));
    EXPECT_EQ(t.rank(), 2u);
    // canonical serialization: re-emitting is byte-identical
    EXPECT_EQ(io::dump(io::to_json(t)) + "\n", r.out);
}

TEST_F(CliTest, InlineJsonInput)
{
    const std::string f0 = io::dump(io::to_json(build_F(0)));
    EXPECT_EQ(run({"rigidity", "--input", f0, "--expect-rigid"}).code, 0);
    EXPECT_EQ(run({"twist", "--input", f0, "--scalars", "-1,-1"}).code, 0);
}

TEST_F(CliTest, RigidityExpectRigid)
{
    const auto f3 = write_family(3);
    const auto r = run({"rigidity", "--input", f3, "--expect-rigid", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(io::parse(r.out).at("rigidity_index"), 2);

    const std::string reducible =
        io::dump(io::to_json(make_tuple(2, {Puncture::finite(0), Puncture::finite(1), Puncture::finite(2)},
                                        {ExactMatrix::diagonal({1L, -1L}), ExactMatrix::diagonal({1L, -1L}),
                                         ExactMatrix::diagonal({1L, -1L})})));
    EXPECT_EQ(run({"rigidity", "--input", reducible}).code, 0);
    EXPECT_EQ(run({"rigidity", "--input", reducible, "--expect-rigid"}).code, 1);
}

TEST_F(CliTest, IrreducibleAndRegular)
{
    const auto f4 = write_family(4);
    EXPECT_EQ(run({"irreducible", "--input", f4}).out, "absolutely irreducible\n");
    EXPECT_EQ(run({"regular", "--input", f4}).out, "RegularViaLemma(inf)\n");
}

TEST_F(CliTest, Table1)
{
    const auto r = run({"table1", "--max-i", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all rows match"), std::string::npos);
    const auto j = run({"table1", "--max-i", "0", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    const auto row = io::parse(j.out).at("rows")[0];
    EXPECT_EQ(row.at("jordan_at_0"), "(-1)");
    EXPECT_EQ(row.at("regular_certificate"), "RegularViaLemma(0)");
    EXPECT_EQ(run({"table1", "--max-i", "13"}).code, 2);
    EXPECT_EQ(run({"table1", "--max-i", "-1"}).code, 2);
}

TEST_F(CliTest, Hypergeom)
{
    const auto r = run({"hypergeom", "--a", "1,1,1", "--b", "zeta3,zeta3^2,-1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto t = io::tuple_from_json(io::parse(r.out));
    EXPECT_EQ(t.rank(), 3u);
    EXPECT_EQ(t.order(), 6);
    const auto m = run({"hypergeom", "--m", R"({"N": 2, "m": [{"zeta": "-1", "mult": 3}]})"});
    EXPECT_EQ(m.code, 0);
    EXPECT_NE(m.out.find("at inf: U(3)"), std::string::npos);
    EXPECT_EQ(run({"hypergeom", "--a", "1", "--b", "1,1"}).code, 2);
    EXPECT_EQ(run({"hypergeom", "--m", R"({"N": 2, "m": []})"}).code, 2);
}

TEST_F(CliTest, KatzReduce)
{
    const auto r = run({"katz-reduce", "--input", write_family(5), "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto steps = io::parse(r.out).at("steps");
    EXPECT_EQ(steps.back().at("rank"), 1);
    const std::string involutions = io::dump(io::to_json(make_tuple(
        2, {Puncture::finite(0), Puncture::finite(1), Puncture::finite(2)},
        {ExactMatrix::from_rows({{1, -2}, {0, -1}}), ExactMatrix::from_rows({{1, 0}, {2, -1}}),
         ExactMatrix::from_rows({{3, -4}, {2, -3}})})));
    EXPECT_EQ(run({"katz-reduce", "--input", involutions}).code, 1);
}

TEST_F(CliTest, WeilExitCodes)
{
    auto weil = [](const std::string& poly, const std::string& q, const std::string& w) {
        return run({"weil", "--poly", poly, "--q", q, "--w", w});
    };
    const auto fail = weil("X^2-3X+2", "2", "1");
    EXPECT_EQ(fail.code, 1);
    EXPECT_EQ(fail.out, "FailMagnitude\n");
    EXPECT_EQ(weil("X^2+X+1", "2", "1").out, "FailFunctionalEquation\n");
    EXPECT_EQ(weil("X^2 + 5", "5", "1").code, 0);
    EXPECT_EQ(weil("x^2 + 2x + 2", "2", "1").code, 0);
    EXPECT_EQ(weil("X^2-5X+4", "2", "2").out, "FailMagnitude\n");
    EXPECT_EQ(weil(R"({"N": 1, "coeffs": [{"N": 1, "coeffs": [["5", "1"]]}, {"N": 1, "coeffs": [["0", "1"]]}, {"N": 1, "coeffs": [["1", "1"]]}]})",
                   "5", "1")
                  .code,
              0);
    EXPECT_EQ(weil("X^2+5", "6", "1").code, 2);   // q not a prime power
    EXPECT_EQ(weil("2X^2+5", "5", "1").code, 2);  // not monic
    EXPECT_EQ(weil("X^2+X", "5", "1").code, 2);   // zero constant term
    EXPECT_EQ(weil("X^^2", "5", "1").code, 2);    // syntax
    EXPECT_EQ(run({"weil", "--poly", "X+5", "--q", "5"}).code, 2);
}

TEST_F(CliTest, PrecisionEnvironmentVariable)
{
    ::setenv("RIGIDCALC_PRECISION_BITS", "512", 1);
    EXPECT_EQ(run({"weil", "--poly", "X^2+5", "--q", "5", "--w", "1"}).code, 0);
    ::setenv("RIGIDCALC_PRECISION_BITS", "12", 1);
    EXPECT_EQ(run({"weil", "--poly", "X^2+5", "--q", "5", "--w", "1"}).code, 2);
    ::unsetenv("RIGIDCALC_PRECISION_BITS");
}

TEST_F(CliTest, InputErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"jordan"}).code, 2);
    EXPECT_EQ(run({"jordan", "--input", (dir_ / "missing.json").string()}).code, 2);
    EXPECT_EQ(run({"jordan", "--input", "{\"N\": 2"}).code, 2);
    EXPECT_EQ(run({"jordan", "--input", write_family(1), "--point", "7"}).code, 2);
    EXPECT_EQ(run({"jordan", "--input", write_family(1), "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"mc", "--input", write_family(1), "--lambda", "0"}).code, 2);
    EXPECT_EQ(run({"mc", "--input", write_family(1), "--lambda", "two"}).code, 2);
    EXPECT_EQ(run({"twist", "--input", write_family(1), "--scalars", "1"}).code, 2);
    EXPECT_EQ(run({"family", "--i", "-2"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliParsing, IntegerPolynomials)
{
    EXPECT_EQ(cli::parse_integer_polynomial("X^2-3X+2"), (std::vector<long>{2, -3, 1}));
    EXPECT_EQ(cli::parse_integer_polynomial("x^4 + 5"), (std::vector<long>{5, 0, 0, 0, 1}));
    EXPECT_EQ(cli::parse_integer_polynomial("X - 5"), (std::vector<long>{-5, 1}));
    EXPECT_EQ(cli::parse_integer_polynomial("-X+X^2"), (std::vector<long>{0, -1, 1}));
    EXPECT_EQ(cli::parse_integer_polynomial("3*X^2 + 10"), (std::vector<long>{10, 0, 3}));
    EXPECT_THROW(cli::parse_integer_polynomial(""), Error);
    EXPECT_THROW(cli::parse_integer_polynomial("X^"), Error);
    EXPECT_THROW(cli::parse_integer_polynomial("X Y"), Error);
}

TEST(CliParsing, ExitCodeMapping)
{
    EXPECT_EQ(cli::exit_code_for(ErrorCode::NotRigid), 1);
    EXPECT_EQ(cli::exit_code_for(ErrorCode::RootFindingFailure), 1);
    EXPECT_EQ(cli::exit_code_for(ErrorCode::ParseError), 2);
    EXPECT_EQ(cli::exit_code_for(ErrorCode::SingularMatrix), 2);
}
