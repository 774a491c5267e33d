#include <doctest.h>

#include <sstream>
#include <string>

#include <spinstarlab/io.hpp>
#include <spinstarlab/validation.hpp>

using namespace spinstarlab;

namespace {

std::string render_sweep(const TimeSeries& ts) {
    std::ostringstream os;
    write_sweep_csv(os, ts);
    return os.str();
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char ch : text)
        if (ch == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("format_value uses 12 significant digits") {
    CHECK(format_value(0.5) == "5.00000000000e-01");
    CHECK(format_value(0.0) == "0.00000000000e+00");
    CHECK(format_value(-1.0 / 3.0) == "-3.33333333333e-01");
}

TEST_CASE("sweep csv") {
    const SpinStarConfig cfg{4, 1.0, 2.0};
    const TimeSeries ts = trajectory(cfg, kPairUpDown, 1.0, 5, Engine::closed_form);
    const std::string text = render_sweep(ts);

    SUBCASE("schema") {
        const std::string header = text.substr(0, text.find('\n'));
        CHECK(header == "tau_a,b,d,e,re_c,im_c,cov_xx,cov_yy,concurrence");
        CHECK(count_lines(text) == 6);  // header + 5 rows
        const std::string first_row =
            text.substr(text.find('\n') + 1,
                        text.find('\n', text.find('\n') + 1) - text.find('\n') - 1);
        int commas = 0;
        for (char ch : first_row)
            if (ch == ',') ++commas;
        CHECK(commas == 8);  // 9 columns
        CHECK(first_row.substr(0, 18) == "0.00000000000e+00,");
        CHECK(first_row.find("1.00000000000e+00") != std::string::npos);  // b = 1 at tau = 0
    }

    SUBCASE("unix line endings, no BOM") {
        CHECK(text.find('\r') == std::string::npos);
        CHECK(text.front() == 't');
    }

    SUBCASE("byte-identical across runs") {
        const TimeSeries again = trajectory(cfg, kPairUpDown, 1.0, 5, Engine::closed_form);
        CHECK(render_sweep(again) == text);
    }
}

TEST_CASE("table csv") {
    std::ostringstream os;
    write_table_csv(os, {"x", "y"}, {{0.0, 1.0}, {2.0, 3.0}});
    const std::string text = os.str();
    CHECK(text.substr(0, 4) == "x,y\n");
    CHECK(count_lines(text) == 3);
    CHECK_THROWS_AS(write_table_csv(os, {"x"}, {{0.0}, {1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(write_table_csv(os, {"x", "y"}, {{0.0, 1.0}, {2.0}}), std::invalid_argument);
}

TEST_CASE("svg plot") {
    PlotSeries a{"first", {0.0, 1.0, 2.0}, {0.0, 1.0, 0.5}};
    PlotSeries b{"second", {0.0, 1.0, 2.0}, {1.0, 0.2, 0.7}};
    std::ostringstream os;
    write_svg_plot(os, "demo", "tau", {a, b});
    const std::string svg = os.str();
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("first") != std::string::npos);
    CHECK(svg.find("second") != std::string::npos);

    int polylines = 0;
    for (std::size_t at = svg.find("<polyline"); at != std::string::npos;
         at = svg.find("<polyline", at + 1))
        ++polylines;
    CHECK(polylines == 2);

    std::ostringstream again;
    write_svg_plot(again, "demo", "tau", {a, b});
    CHECK(again.str() == svg);

    CHECK_THROWS_AS(write_svg_plot(os, "empty", "x", {}), std::invalid_argument);
}

TEST_CASE("validation suite smoke run") {
    ValidationOptions opt;
    opt.bath_sizes = {2, 6};  // 6 keeps the sign-margin check meaningful
    opt.ratios = {1.0, 2.0};
    opt.grid_points = 9;
    opt.random_states = 300;
    const auto results = run_validation_suite(opt);
    REQUIRE(results.size() == 10);
    for (const auto& check : results) {
        INFO(check.name, " deviation=", check.deviation, " tol=", check.tolerance);
        CHECK(check.pass);
    }
    CHECK(all_passed(results));
}
