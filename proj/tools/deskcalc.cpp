// deskcalc: desk-scale numerical toolkit CLI.
//
// Exit codes: 0 success, 1 usage/parse error, 2 domain/numeric error,
// 3 non-convergence.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "deskcalc/calculus.hpp"
#include "deskcalc/csv.hpp"
#include "deskcalc/expr.hpp"
#include "deskcalc/finance.hpp"
#include "deskcalc/format.hpp"
#include "deskcalc/stats.hpp"
#include "deskcalc/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitNoConvergence = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

std::vector<deskcalc::stats::Sample> read_grouped_csv(const std::string& path) {
    if (path == "-") return deskcalc::csv::read_grouped(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    return deskcalc::csv::read_grouped(in);
}

deskcalc::expr::Expr parse_fn(const std::string& text) {
    return deskcalc::expr::parse(text);
}

deskcalc::calculus::RiemannRule parse_rule(const std::string& name) {
    if (name == "left") return deskcalc::calculus::RiemannRule::Left;
    if (name == "right") return deskcalc::calculus::RiemannRule::Right;
    if (name == "midpoint") return deskcalc::calculus::RiemannRule::Midpoint;
    throw UsageError("unknown rule '" + name + "' (expected left, right or midpoint)");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace deskcalc;

    CLI::App app{"deskcalc: expression-driven optimization, integration, "
                 "interest schedules and statistics"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    // goalseek -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("goalseek", "Find x with f(x) = target");
        struct GoalseekOpts {
            std::string fn, format{"table"}, output;
            double target = 0.0, x0 = 0.0, tol = 1e-9;
            int max_iter = 100;
        };
        auto opts = std::make_shared<GoalseekOpts>();
        cmd->add_option("--fn", opts->fn, "expression in x")->required();
        cmd->add_option("--target", opts->target, "target value")->required();
        cmd->add_option("--x0", opts->x0, "start value")->required();
        cmd->add_option("--tol", opts->tol, "tolerance on |f(x) - target|");
        cmd->add_option("--max-iter", opts->max_iter, "iteration cap");
        cmd->add_option("--format", opts->format)->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("-o,--output", opts->output, "output file (default stdout)");
        cmd->callback([opts, &exit_code] {
            auto f = parse_fn(opts->fn);
            auto r = calculus::goal_seek(f, opts->target, opts->x0, opts->tol, opts->max_iter);
            if (opts->format == "csv") {
                std::ostringstream out;
                out << "x,residual,iterations,converged\n"
                    << format::full(r.x) << ',' << format::full(r.residual) << ','
                    << r.iterations << ',' << (r.converged ? "true" : "false") << '\n';
                write_output(out.str(), opts->output);
            } else {
                write_output(format::render_goalseek_table(r), opts->output);
            }
            if (!r.converged) exit_code = kExitNoConvergence;
        });
    }

    // minimize -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("minimize", "Locate and classify a stationary point");
        struct MinimizeOpts {
            std::string fn, format{"table"}, output;
            double x0 = 0.0;
        };
        auto opts = std::make_shared<MinimizeOpts>();
        cmd->add_option("--fn", opts->fn, "expression in x")->required();
        cmd->add_option("--x0", opts->x0, "start value")->required();
        cmd->add_option("--format", opts->format)->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("-o,--output", opts->output);
        cmd->callback([opts, &exit_code] {
            auto f = parse_fn(opts->fn);
            auto r = calculus::find_extremum(f, opts->x0);
            if (opts->format == "csv") {
                const char* kind = r.kind == calculus::ExtremumKind::Minimum ? "minimum"
                                   : r.kind == calculus::ExtremumKind::Maximum ? "maximum"
                                                                               : "inconclusive";
                std::ostringstream out;
                out << "x,fx,kind,second_derivative\n"
                    << format::full(r.x) << ',' << format::full(r.fx) << ',' << kind << ','
                    << format::full(r.second_derivative) << '\n';
                write_output(out.str(), opts->output);
            } else {
                write_output(format::render_extremum_table(r), opts->output);
            }
            if (!r.converged) exit_code = kExitNoConvergence;
        });
    }

    // riemann --------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("riemann", "Riemann-sum approximation of an integral");
        struct RiemannOpts {
            std::string fn, rule{"right"}, format{"table"}, output;
            double a = 0.0, b = 0.0;
            int n = 0;
        };
        auto opts = std::make_shared<RiemannOpts>();
        cmd->add_option("--fn", opts->fn)->required();
        cmd->add_option("--a", opts->a, "lower limit")->required();
        cmd->add_option("--b", opts->b, "upper limit")->required();
        cmd->add_option("--n", opts->n, "number of subintervals")->required();
        cmd->add_option("--rule", opts->rule)->check(CLI::IsMember({"left", "right", "midpoint"}));
        cmd->add_option("--format", opts->format)->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("-o,--output", opts->output);
        cmd->callback([opts] {
            auto f = parse_fn(opts->fn);
            auto r = calculus::riemann_sum(f, opts->a, opts->b, opts->n, parse_rule(opts->rule));
            write_output(opts->format == "csv" ? format::render_riemann_csv(r)
                                               : format::render_riemann_table(r),
                         opts->output);
        });
    }

    // tabulate / plot ------------------------------------------------
    {
        auto* cmd = app.add_subcommand("tabulate", "Tabulate f(x) over a range");
        struct TabulateOpts {
            std::string fn, format{"table"}, output;
            double from = 0.0, to = 0.0, step = 0.0;
        };
        auto opts = std::make_shared<TabulateOpts>();
        cmd->add_option("--fn", opts->fn)->required();
        cmd->add_option("--from", opts->from)->required();
        cmd->add_option("--to", opts->to)->required();
        cmd->add_option("--step", opts->step)->required();
        cmd->add_option("--format", opts->format)->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("-o,--output", opts->output);
        cmd->callback([opts] {
            auto f = parse_fn(opts->fn);
            auto t = calculus::tabulate(f, opts->from, opts->to, opts->step);
            write_output(opts->format == "csv" ? format::render_function_csv(t)
                                               : format::render_function_table(t),
                         opts->output);
        });
    }
    {
        auto* cmd = app.add_subcommand("plot", "SVG line chart of f(x) over a range");
        struct PlotOpts {
            std::string fn, output, title;
            double from = 0.0, to = 0.0, step = 0.0;
            int width = 640, height = 480;
        };
        auto opts = std::make_shared<PlotOpts>();
        cmd->add_option("--fn", opts->fn)->required();
        cmd->add_option("--from", opts->from)->required();
        cmd->add_option("--to", opts->to)->required();
        cmd->add_option("--step", opts->step)->required();
        cmd->add_option("--title", opts->title);
        cmd->add_option("--width", opts->width);
        cmd->add_option("--height", opts->height);
        cmd->add_option("--format", [](const std::vector<std::string>& vals) {
            if (vals.empty() || vals.front() == "svg") return true;
            throw UsageError("plot supports only --format svg");
        }, "output format (svg only)");
        cmd->add_option("-o,--output", opts->output);
        cmd->callback([opts] {
            auto f = parse_fn(opts->fn);
            auto t = calculus::tabulate(f, opts->from, opts->to, opts->step);
            std::string title = opts->title.empty() ? opts->fn : opts->title;
            write_output(svg::line_chart(t, title, opts->width, opts->height), opts->output);
        });
    }

    // interest -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("interest", "Compound-interest schedule");
        struct InterestOpts {
            double principal = 0.0, rate = 0.0;
            int periods_per_year = 1, n = 0;
            std::string start, format{"table"}, output;
            std::vector<std::string> deposits;
        };
        auto opts = std::make_shared<InterestOpts>();
        cmd->add_option("--principal", opts->principal)->required();
        cmd->add_option("--rate", opts->rate, "annual rate as a fraction, e.g. 0.04")->required();
        cmd->add_option("--periods-per-year", opts->periods_per_year)->required();
        cmd->add_option("--n", opts->n, "number of periods")->required();
        cmd->add_option("--start", opts->start, "start date YYYY-MM-DD");
        cmd->add_option("--deposit", opts->deposits,
                        "extra deposit as PERIOD=AMOUNT, repeatable");
        cmd->add_option("--format", opts->format)->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("-o,--output", opts->output);
        cmd->callback([opts] {
            std::optional<finance::Date> start;
            if (!opts->start.empty()) {
                start = finance::parse_iso_date(opts->start);
                if (!start) throw UsageError("bad date '" + opts->start + "' (want YYYY-MM-DD)");
            }
            std::map<int, double> extras;
            for (const auto& spec : opts->deposits) {
                std::size_t eq = spec.find('=');
                if (eq == std::string::npos) {
                    throw UsageError("bad --deposit '" + spec + "' (want PERIOD=AMOUNT)");
                }
                try {
                    extras[std::stoi(spec.substr(0, eq))] = std::stod(spec.substr(eq + 1));
                } catch (const std::logic_error&) {
                    throw UsageError("bad --deposit '" + spec + "' (want PERIOD=AMOUNT)");
                }
            }
            auto s = finance::compound_schedule(opts->principal, opts->rate,
                                                opts->periods_per_year, opts->n, start, extras);
            write_output(opts->format == "csv" ? format::render_schedule_csv(s)
                                               : format::render_schedule_table(s),
                         opts->output);
        });
    }

    // ttest ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "ttest", "Two-sample t-test assuming unequal variances (Welch)");
        struct TTestOpts {
            std::string input, format{"table"}, output;
            double mean1 = 0, var1 = 0, mean2 = 0, var2 = 0, alpha = 0.05;
            long n1 = 0, n2 = 0;
            bool has_summary = false;
        };
        auto opts = std::make_shared<TTestOpts>();
        auto* in = cmd->add_option("--input", opts->input, "group,value CSV ('-' for stdin)");
        auto* m1 = cmd->add_option("--mean1", opts->mean1);
        cmd->add_option("--var1", opts->var1)->needs(m1);
        cmd->add_option("--n1", opts->n1)->needs(m1);
        cmd->add_option("--mean2", opts->mean2)->needs(m1);
        cmd->add_option("--var2", opts->var2)->needs(m1);
        cmd->add_option("--n2", opts->n2)->needs(m1);
        cmd->add_option("--alpha", opts->alpha);
        in->excludes(m1);
        cmd->add_option("--format", opts->format)->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("-o,--output", opts->output);
        cmd->callback([opts, cmd] {
            stats::WelchTTestResult r;
            if (!opts->input.empty()) {
                auto groups = read_grouped_csv(opts->input);
                if (groups.size() != 2) {
                    throw UsageError("ttest needs exactly 2 groups, got " +
                                     std::to_string(groups.size()));
                }
                r = stats::welch_t_test(groups[0], groups[1], opts->alpha);
            } else if (cmd->count("--mean1")) {
                if (!cmd->count("--var1") || !cmd->count("--n1") || !cmd->count("--mean2") ||
                    !cmd->count("--var2") || !cmd->count("--n2")) {
                    throw UsageError("summary mode needs all of --mean1 --var1 --n1 "
                                     "--mean2 --var2 --n2");
                }
                if (opts->n1 < 2 || opts->n2 < 2) throw UsageError("group counts must be >= 2");
                stats::SummaryStats g1{opts->mean1, opts->var1, static_cast<std::size_t>(opts->n1)};
                stats::SummaryStats g2{opts->mean2, opts->var2, static_cast<std::size_t>(opts->n2)};
                r = stats::welch_t_test(g1, g2, opts->alpha);
            } else {
                throw UsageError("ttest needs --input or summary flags");
            }
            write_output(opts->format == "csv" ? format::render_ttest_csv(r)
                                               : format::render_ttest_table(r),
                         opts->output);
        });
    }

    // anova ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("anova", "One-way analysis of variance");
        struct AnovaOpts {
            std::string input, format{"table"}, output;
            std::vector<std::string> groups;
            double alpha = 0.05;
        };
        auto opts = std::make_shared<AnovaOpts>();
        auto* in = cmd->add_option("--input", opts->input, "group,value CSV ('-' for stdin)");
        auto* gr = cmd->add_option("--group", opts->groups,
                                   "summary group as LABEL:MEAN:VARIANCE:N, repeatable");
        in->excludes(gr);
        cmd->add_option("--alpha", opts->alpha);
        cmd->add_option("--format", opts->format)->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("-o,--output", opts->output);
        cmd->callback([opts] {
            stats::AnovaResult r;
            if (!opts->input.empty()) {
                r = stats::one_way_anova(read_grouped_csv(opts->input), opts->alpha);
            } else if (!opts->groups.empty()) {
                std::vector<stats::GroupSummary> summaries;
                for (const auto& spec : opts->groups) {
                    std::istringstream ss(spec);
                    std::string label, mean_s, var_s, n_s;
                    if (!std::getline(ss, label, ':') || !std::getline(ss, mean_s, ':') ||
                        !std::getline(ss, var_s, ':') || !std::getline(ss, n_s)) {
                        throw UsageError("bad --group '" + spec +
                                         "' (want LABEL:MEAN:VARIANCE:N)");
                    }
                    try {
                        summaries.push_back(
                            {label, {std::stod(mean_s), std::stod(var_s),
                                     static_cast<std::size_t>(std::stoul(n_s))}});
                    } catch (const std::logic_error&) {
                        throw UsageError("bad --group '" + spec +
                                         "' (want LABEL:MEAN:VARIANCE:N)");
                    }
                }
                r = stats::one_way_anova(summaries, opts->alpha);
            } else {
                throw UsageError("anova needs --input or --group flags");
            }
            write_output(opts->format == "csv" ? format::render_anova_csv(r)
                                               : format::render_anova_table(r),
                         opts->output);
        });
    }

    // summary / boxplot ----------------------------------------------
    {
        auto* cmd = app.add_subcommand("summary", "Per-group five-number summaries");
        struct SummaryOpts {
            std::string input, format{"table"}, output;
        };
        auto opts = std::make_shared<SummaryOpts>();
        cmd->add_option("--input", opts->input, "group,value CSV ('-' for stdin)")->required();
        cmd->add_option("--format", opts->format)->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("-o,--output", opts->output);
        cmd->callback([opts] {
            auto groups = read_grouped_csv(opts->input);
            std::vector<std::pair<std::string, stats::FiveNumberSummary>> rows;
            for (const auto& g : groups) {
                rows.emplace_back(g.label, stats::five_number_summary(g));
            }
            write_output(opts->format == "csv" ? format::render_summary_csv(rows)
                                               : format::render_summary_table(rows),
                         opts->output);
        });
    }
    {
        auto* cmd = app.add_subcommand("boxplot", "SVG box plot of grouped data");
        struct BoxplotOpts {
            std::string input, output, title{"Box plot"};
            int width = 640, height = 480;
        };
        auto opts = std::make_shared<BoxplotOpts>();
        cmd->add_option("--input", opts->input, "group,value CSV ('-' for stdin)")->required();
        cmd->add_option("--title", opts->title);
        cmd->add_option("--width", opts->width);
        cmd->add_option("--height", opts->height);
        cmd->add_option("--format", [](const std::vector<std::string>& vals) {
            if (vals.empty() || vals.front() == "svg") return true;
            throw UsageError("boxplot supports only --format svg");
        }, "output format (svg only)");
        cmd->add_option("-o,--output", opts->output);
        cmd->callback([opts] {
            auto groups = read_grouped_csv(opts->input);
            std::vector<std::pair<std::string, stats::FiveNumberSummary>> rows;
            for (const auto& g : groups) {
                rows.emplace_back(g.label, stats::five_number_summary(g));
            }
            write_output(svg::box_plot(rows, opts->title, opts->width, opts->height),
                         opts->output);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const expr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const expr::EvalError& e) {
        std::cerr << "domain error: " << e.what() << " in '" << e.subexpression() << "'\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return exit_code;
}
