#include <doctest.h>

#include <sstream>

#include "deskcalc/csv.hpp"
#include "deskcalc/expr.hpp"
#include "deskcalc/format.hpp"
#include "deskcalc/svg.hpp"

using namespace deskcalc;

TEST_CASE("number formatting") {
    CHECK(format::full(0.1) == "0.1");
    CHECK(format::full(8.2) == "8.2");
    CHECK(format::sig6(1.23456789) == "1.23457");
    CHECK(format::sig6(1680.0) == "1680");
    CHECK(format::money(1.0) == "1.00");
    CHECK(format::money(104.060401) == "104.06");
    // full precision survives a round trip through text
    double v = 3.2 * 0.2;
    CHECK(std::stod(format::full(v)) == v);
}

TEST_CASE("riemann renders the total row") {
    auto r = calculus::riemann_sum(expr::parse("x+2"), 1.0, 3.0, 10,
                                   calculus::RiemannRule::Right);
    std::string table = format::render_riemann_table(r);
    CHECK(table.find("x_i") != std::string::npos);
    CHECK(table.find("f(x_i)*delta_x") != std::string::npos);

    auto tokens_of = [](const std::string& text) {
        std::vector<std::vector<std::string>> lines;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<std::string> toks;
            std::string tok;
            while (ls >> tok) toks.push_back(tok);
            lines.push_back(toks);
        }
        return lines;
    };
    auto lines = tokens_of(table);
    auto has_row = [&](const std::vector<std::string>& want) {
        for (const auto& l : lines) {
            if (l == want) return true;
        }
        return false;
    };
    CHECK(has_row({"1.2", "0.2", "3.2", "0.64"}));
    CHECK(has_row({"3", "0.2", "5", "1"}));
    CHECK(has_row({"Total", "8.2"}));

    std::string csv = format::render_riemann_csv(r);
    CHECK(csv.rfind("x_i,delta_x,f_x_i,product\n", 0) == 0);
    CHECK(csv.find(",,total,") != std::string::npos);
}

TEST_CASE("schedule renders money with two decimals") {
    auto s = finance::compound_schedule(100.0, 0.04, 4, 1, finance::Date{1994, 1, 1});
    std::string csv = format::render_schedule_csv(s);
    CHECK(csv.rfind("period,label,deposit,interest,balance\n", 0) == 0);
    CHECK(csv.find("1,1994-04-01,0.00,1.00,101.00") != std::string::npos);
    std::string table = format::render_schedule_table(s);
    CHECK(table.find("1994-04-01") != std::string::npos);
    CHECK(table.find("101.00") != std::string::npos);
}

TEST_CASE("grouped csv reader") {
    std::istringstream in("group,value\na,1\nb,2.5\na,3\n");
    auto samples = csv::read_grouped(in);
    REQUIRE(samples.size() == 2);
    CHECK(samples[0].label == "a");
    CHECK(samples[0].values == std::vector<double>{1.0, 3.0});
    CHECK(samples[1].values == std::vector<double>{2.5});

    std::istringstream bad_header("g,v\na,1\n");
    CHECK_THROWS_AS(csv::read_grouped(bad_header), std::runtime_error);
    std::istringstream bad_value("group,value\na,oops\n");
    CHECK_THROWS_AS(csv::read_grouped(bad_value), std::runtime_error);
    std::istringstream no_rows("group,value\n");
    CHECK_THROWS_AS(csv::read_grouped(no_rows), std::runtime_error);
}

TEST_CASE("line chart breaks the polyline at domain errors") {
    auto t = calculus::tabulate(expr::parse("1/x"), -2.0, 2.0, 1.0);
    std::string svg_text = svg::line_chart(t, "1/x");
    CHECK(svg_text.find("<svg") != std::string::npos);
    CHECK(svg_text.find("</svg>") != std::string::npos);
    CHECK(svg_text.find("width=\"640\"") != std::string::npos);
    // two runs of points, split by the x=0 row
    std::size_t first = svg_text.find("<polyline");
    REQUIRE(first != std::string::npos);
    CHECK(svg_text.find("<polyline", first + 1) != std::string::npos);
}

TEST_CASE("box plot emits one glyph per group") {
    std::vector<std::pair<std::string, stats::FiveNumberSummary>> groups{
        {"Engineering", {46, 75, 89, 95, 98}},
        {"Sciences", {45, 70, 79, 95.5, 99}},
    };
    std::string svg_text = svg::box_plot(groups, "Box plot");
    CHECK(svg_text.find("<svg") != std::string::npos);
    std::size_t count = 0;
    for (std::size_t pos = svg_text.find("class=\"box\""); pos != std::string::npos;
         pos = svg_text.find("class=\"box\"", pos + 1)) {
        ++count;
    }
    CHECK(count == 2);
    CHECK(svg_text.find(">Engineering<") != std::string::npos);
    CHECK(svg_text.find(">Sciences<") != std::string::npos);
}

TEST_CASE("ttest and anova tables carry the spreadsheet row labels") {
    stats::SummaryStats g1{65.93478261, 260.5956522, 46};
    stats::SummaryStats g2{80.45652174, 304.2980676, 46};
    auto r = stats::welch_t_test(g1, g2);
    std::string table = format::render_ttest_table(r);
    CHECK(table.find("t-Test: Two-Sample Assuming Unequal Variances") != std::string::npos);
    CHECK(table.find("P(T<=t) one-tail") != std::string::npos);
    CHECK(table.find("t Critical two-tail") != std::string::npos);

    auto a = stats::one_way_anova(std::vector<stats::GroupSummary>{
        {"a", {1.0, 1.0, 5}}, {"b", {2.0, 1.0, 5}}});
    std::string anova_table = format::render_anova_table(a);
    CHECK(anova_table.find("Source of Variation") != std::string::npos);
    CHECK(anova_table.find("Between Groups") != std::string::npos);
    CHECK(anova_table.find("Within Groups") != std::string::npos);
    CHECK(anova_table.find("F crit") != std::string::npos);
}
