#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "weierlab/cli.hpp"
#include "weierlab/complex_io.hpp"
#include "weierlab/modular.hpp"

using namespace weierlab;
using Complex = std::complex<double>;

namespace
{
struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string &text, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

struct Row {
    double a, b;
    Complex f;
    bool pole;
};

std::vector<Row> parse_csv(const std::string &csv)
{
    const auto lines = split(csv, '\n');
    REQUIRE(lines.front() == "a,b,re_z,im_z,re_f,im_f");
    std::vector<Row> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) {
            continue;
        }
        const auto cells = split(lines[i], ',');
        REQUIRE(cells.size() == 6);
        Row row{std::stod(cells[0]), std::stod(cells[1]), {}, cells[4].empty()};
        if (!row.pole) {
            row.f = Complex(std::stod(cells[4]), std::stod(cells[5]));
        }
        rows.push_back(row);
    }
    return rows;
}

// Values of the grid at column i and column i + shift, row by row.
void compare_columns(const std::vector<Row> &rows, int nx, int ny, int shift, const Complex &expected_difference,
                     double tolerance)
{
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i + shift < nx; ++i) {
            const auto &left = rows[static_cast<std::size_t>(j * nx + i)];
            const auto &right = rows[static_cast<std::size_t>(j * nx + i + shift)];
            if (left.pole || right.pole) {
                continue;
            }
            CHECK(std::abs(right.a - left.a - 1.0) <= 1e-12);
            CHECK(std::abs(right.f - left.f - expected_difference) <= tolerance);
        }
    }
}
} // namespace

TEST_CASE("parse_complex")
{
    CHECK(parse_complex("0+1i") == Complex(0, 1));
    CHECK(parse_complex("0.5-0.25i") == Complex(0.5, -0.25));
    CHECK(parse_complex("-1.5e-3+2E2i") == Complex(-1.5e-3, 200));
    CHECK(parse_complex("+3") == Complex(3, 0));
    CHECK(parse_complex("2") == Complex(2, 0));
    CHECK_FALSE(parse_complex("i"));
    CHECK_FALSE(parse_complex("1+i"));
    CHECK_FALSE(parse_complex("2i"));
    CHECK_FALSE(parse_complex(""));
    CHECK_FALSE(parse_complex("1+2j"));
    CHECK_FALSE(parse_complex("1 + 2i"));
    CHECK_FALSE(parse_complex("1+2i "));
    CHECK_FALSE(parse_complex("nan+0i"));
    CHECK_FALSE(parse_complex("1,5+0i"));
}

TEST_CASE("number formatting")
{
    CHECK(format_real15(0.0) == "0.000000000000000");
    CHECK(format_real15(std::numbers::pi / 2) == "1.5707963267949");
    CHECK(format_real_roundtrip(0.1) == "0.1");
    CHECK(std::stod(format_real_roundtrip(1.0 / 3)) == 1.0 / 3);
    CHECK(format_complex(Complex(1.5, -2)) == "1.5-2i");
}

TEST_CASE("function names round-trip")
{
    for (const auto *name : {"zeta", "zetaHat", "wp", "sigma", "theta", "thetaPrime", "raiseTheta",
                             "indexZeroQuotient", "eta", "e2", "g2", "g2Star", "sRegularized"}) {
        const auto f = cli::parse_function(name);
        REQUIRE(f);
        CHECK(cli::function_name(*f) == name);
    }
    CHECK_FALSE(cli::parse_function("Zeta"));
}

TEST_CASE("eval")
{
    const auto zeta = run_cli({"eval", "zeta", "--tau", "0+1i", "--z", "0.5+0i"});
    CHECK(zeta.code == 0);
    CHECK(zeta.out.ends_with("\n"));
    const auto fields = split(zeta.out.substr(0, zeta.out.size() - 1), ' ');
    REQUIRE(fields.size() == 2);
    CHECK(std::abs(std::stod(fields[0]) - std::numbers::pi / 2) <= 1e-4);
    CHECK(std::abs(std::stod(fields[1])) <= 1e-4);

    const auto lattice = run_cli({"eval", "zeta", "--tau", "0+1i", "--z", "0.5+0i", "--scheme", "lattice"});
    CHECK(lattice.code == 0);
    CHECK(std::abs(std::stod(split(lattice.out, ' ')[0]) - std::numbers::pi / 2) <= 1e-4);

    const auto theta = run_cli({"eval", "theta", "--tau", "0+1i", "--z", "0+0i"});
    CHECK(theta.code == 0);
    CHECK(theta.out == "0.000000000000000 0.000000000000000\n");

    const auto e2 = run_cli({"eval", "e2", "--tau", "0+1i"});
    CHECK(e2.code == 0);
    CHECK(std::abs(std::stod(split(e2.out, ' ')[0]) - 3 / std::numbers::pi) <= 1e-14);
}

TEST_CASE("eval errors")
{
    CHECK(run_cli({"eval", "zeta", "--tau", "0-1i", "--z", "0.5+0i"}).code == cli::bad_tau);
    CHECK(run_cli({"eval", "zeta", "--tau", "0+0i", "--z", "0.5+0i"}).code == cli::bad_tau);
    CHECK(run_cli({"eval", "eta", "--tau", "0+0.01i"}).code == cli::bad_tau);
    CHECK(run_cli({"eval", "zeta", "--tau", "0+1i", "--z", "1+1i"}).code == cli::pole);
    CHECK(run_cli({"eval", "zetaHat", "--tau", "0+1i", "--z", "0+0i"}).code == cli::pole);
    CHECK(run_cli({"eval", "zeta", "--tau", "i", "--z", "0.5+0i"}).code == cli::usage_error);
    CHECK(run_cli({"eval", "zeta", "--tau", "0+1i"}).code == cli::usage_error);
    CHECK(run_cli({"eval", "nope", "--tau", "0+1i", "--z", "1"}).code == cli::usage_error);
    CHECK(run_cli({"eval", "zeta", "--tau", "0+1i", "--z", "0.5", "--scheme", "fast"}).code == cli::usage_error);
    CHECK(run_cli({"eval", "zeta", "--tau", "0+1i", "--z", "0.5", "--shell", "0"}).code == cli::usage_error);
    CHECK(run_cli({"eval", "zeta", "--tau", "0+1i", "--z", "0.5", "--bogus"}).code == cli::usage_error);
    CHECK(run_cli({}).code == cli::usage_error);
    CHECK(run_cli({"frobnicate"}).code == cli::usage_error);
    CHECK(run_cli({"--help"}).code == cli::ok);
}

TEST_CASE("shell radius: the flag wins over the environment")
{
    const std::vector<std::string> args{"eval", "zeta", "--tau", "0+1i", "--z", "0.5+0i", "--scheme", "lattice"};
    const auto default_run = run_cli(args);
    ::setenv("WEIERLAB_SHELL_RADIUS", "3", 1);
    const auto env_run = run_cli(args);
    auto with_flag = args;
    with_flag.insert(with_flag.end(), {"--shell", "500"});
    const auto flag_run = run_cli(with_flag);
    ::setenv("WEIERLAB_SHELL_RADIUS", "many", 1);
    const auto bad_env = run_cli(args);
    ::unsetenv("WEIERLAB_SHELL_RADIUS");

    CHECK(env_run.code == 0);
    CHECK(env_run.out != default_run.out);
    CHECK(flag_run.out == default_run.out);
    CHECK(bad_env.code == cli::usage_error);
}

TEST_CASE("verify")
{
    const auto one = run_cli({"verify", "--suite", "theorem1_shift1", "--seed", "42"});
    CHECK(one.code == 0);
    CHECK(one.out.starts_with(R"({"checks":[{"name":"theorem1_shift1",)"));
    CHECK(one.out.ends_with("\"all_passed\":true}\n"));
    CHECK(one.err.starts_with("PASS theorem1_shift1"));

    const auto quiet = run_cli({"verify", "--suite", "theorem1_shift1", "--json"});
    CHECK(quiet.out == one.out);
    CHECK(quiet.err.empty());

    const auto two = run_cli({"verify", "--suite", "legendre,theorem1_shiftTau", "--tau-samples", "2"});
    CHECK(two.code == 0);
    CHECK(two.out.find("theorem1_shiftTau") < two.out.find("legendre"));

    const auto failing = run_cli({"verify", "--suite", "sigma_logderiv", "--shell", "2"});
    CHECK(failing.code == cli::checks_failed);
    CHECK(failing.out.ends_with("\"all_passed\":false}\n"));

    CHECK(run_cli({"verify", "--suite", "nonsense"}).code == cli::usage_error);
    CHECK(run_cli({"verify", "--suite", ","}).code == cli::usage_error);
    CHECK(run_cli({"verify", "--tau-samples", "0"}).code == cli::usage_error);
    CHECK(run_cli({"verify", "--tol-scale", "-1"}).code == cli::usage_error);
}

TEST_CASE("grid shape and order")
{
    const auto r = run_cli({"grid", "zetaHat", "--tau", "0.1+1.1i", "--nx", "2", "--ny", "2", "--out", "-"});
    REQUIRE(r.code == 0);
    const auto lines = split(r.out, '\n');
    // header, four rows, trailing empty piece from the final newline
    REQUIRE(lines.size() == 6);
    CHECK(lines[1].starts_with("0,0,0,0,,"));
    CHECK(lines[2].starts_with("0.5,0,0.5,0,"));
    CHECK(lines[3].starts_with("0,0.5,"));
    CHECK(lines[4].starts_with("0.5,0.5,"));
}

TEST_CASE("grid over two periods shows the completion is periodic and zeta is not")
{
    const std::vector<std::string> base{"--tau", "0.2+1.1i", "--nx", "8", "--ny", "4",
                                        "--box", "0,2,0,1", "--out", "-"};
    auto hat_args = std::vector<std::string>{"grid", "zetaHat"};
    hat_args.insert(hat_args.end(), base.begin(), base.end());
    auto zeta_args = std::vector<std::string>{"grid", "zeta"};
    zeta_args.insert(zeta_args.end(), base.begin(), base.end());

    const auto hat = run_cli(hat_args);
    const auto zeta = run_cli(zeta_args);
    REQUIRE(hat.code == 0);
    REQUIRE(zeta.code == 0);
    const auto hat_rows = parse_csv(hat.out);
    const auto zeta_rows = parse_csv(zeta.out);
    REQUIRE(hat_rows.size() == 32);
    REQUIRE(zeta_rows.size() == 32);
    CHECK(hat_rows[0].pole);
    CHECK(hat_rows[4].pole);

    compare_columns(hat_rows, 8, 4, 4, Complex(0, 0), 1e-8);
    const auto eta1 = g2(make_tau(Complex(0.2, 1.1)));
    compare_columns(zeta_rows, 8, 4, 4, eta1, 1e-8);
    CHECK(std::abs(eta1) > 1.0);
}

TEST_CASE("grid errors")
{
    CHECK(run_cli({"grid", "eta", "--tau", "0+1i", "--out", "-"}).code == cli::usage_error);
    CHECK(run_cli({"grid", "zeta", "--tau", "0+1i", "--nx", "1", "--out", "-"}).code == cli::usage_error);
    CHECK(run_cli({"grid", "zeta", "--tau", "0+1i", "--box", "0,0,0,1", "--out", "-"}).code == cli::usage_error);
    CHECK(run_cli({"grid", "zeta", "--tau", "0+1i", "--box", "0,1,0", "--out", "-"}).code == cli::usage_error);
    CHECK(run_cli({"grid", "zeta", "--tau", "0-1i", "--out", "-"}).code == cli::bad_tau);
    CHECK(run_cli({"grid", "zeta", "--tau", "0+1i", "--out", "/nonexistent-dir/grid.csv"}).code
          == cli::unwritable_output);
}

TEST_CASE("grid to a file matches standard output")
{
    const auto path = std::filesystem::temp_directory_path() / "weierlab_grid_test.csv";
    const auto to_file = run_cli({"grid", "theta", "--tau", "0+1i", "--out", path.string()});
    const auto to_stdout = run_cli({"grid", "theta", "--tau", "0+1i", "--out", "-"});
    REQUIRE(to_file.code == 0);
    std::ifstream in(path, std::ios::binary);
    const std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contents == to_stdout.out);
    std::filesystem::remove(path);
}
