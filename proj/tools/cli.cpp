#include "cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "partprod/analytic_bounds.hpp"
#include "partprod/inequality.hpp"
#include "partprod/max_partition.hpp"
#include "partprod/partition_table.hpp"
#include "partprod/remarks.hpp"
#include "partprod/report_json.hpp"
#include "partprod/rewriting.hpp"

namespace partprod::cli {
namespace {

using nlohmann::json;

enum class Format { Text, Csv, Json };

// Column-aligned plain-text table; numeric columns right-aligned.
class TextTable {
public:
    TextTable(std::vector<std::string> headers, std::vector<bool> right_align)
        : headers_(std::move(headers)), right_(std::move(right_align)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const {
        std::vector<std::size_t> width(headers_.size());
        for (std::size_t c = 0; c < headers_.size(); ++c) width[c] = headers_[c].size();
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        }
        print_row(os, headers_, width);
        for (const auto& row : rows_) print_row(os, row, width);
    }

private:
    void print_row(std::ostream& os, const std::vector<std::string>& row, const std::vector<std::size_t>& width) const {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            const std::string pad(width[c] - row[c].size(), ' ');
            line += right_[c] ? pad + row[c] : row[c] + pad;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }

    std::vector<std::string> headers_;
    std::vector<bool> right_;
    std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n ") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void print_csv(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) os << ',';
            os << csv_field(row[c]);
        }
        os << '\n';
    }
}

std::string fixed(double x, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

std::string pair_list(const PairSet& pairs) {
    std::string out;
    for (const auto& [a, b] : pairs) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return out.empty() ? "none" : out;
}

std::string argmax_list(const std::vector<Partition>& argmax, const std::string& sep) {
    std::string out;
    for (const Partition& mu : argmax) {
        if (!out.empty()) out += sep;
        out += format_partition_parens(mu);
    }
    return out;
}

int exit_code_for(bool failed, bool marginal) {
    if (failed) return kVerificationFailure;
    if (marginal) return kMarginal;
    return kPass;
}

int combine(int a, int b) {
    if (a == kVerificationFailure || b == kVerificationFailure) return kVerificationFailure;
    if (a == kMarginal || b == kMarginal) return kMarginal;
    return kPass;
}

std::string status_word(int code) {
    switch (code) {
        case kPass: return "PASS";
        case kMarginal: return "MARGINAL";
        default: return "FAIL";
    }
}

// One verification section: its exit code plus the three renderings.
struct Section {
    std::string name;
    int code = kPass;
    json data;
    std::string text;
    std::vector<std::vector<std::string>> csv;  // rows of (section, check, status, detail)
};

struct Settings {
    Format format = Format::Text;
    std::string out_file;
    int cap = default_enumeration_cap();
    double tol = 1e-9;

    long long pn_value = -1;
    long long pn_table = -1;
    int check_a = 0;
    int check_b = 0;
    int maxp_value = -1;
    int maxp_argmax = -1;
    int maxp_range = -1;
    std::string partition_text;

    int t1_amax = 10'000;
    int t2_nmax = kDefaultEnumerationCap;
    long long sandwich_nmax = 5000;
    long long lehmer_nmax = 2000;
    int lc_nmax = 1000;
};

class Runner {
public:
    Runner(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

    int pn() {
        if (s_.pn_table >= 0) {
            table_.ensure(s_.pn_table);
            if (s_.format == Format::Json) {
                json rows = json::array();
                for (long long n = 1; n <= s_.pn_table; ++n) rows.push_back({{"n", n}, {"p", table_.p(n)}});
                out_ << json{{"table", rows}}.dump(2) << '\n';
            } else if (s_.format == Format::Csv) {
                std::vector<std::vector<std::string>> rows{{"n", "p"}};
                for (long long n = 1; n <= s_.pn_table; ++n) rows.push_back({std::to_string(n), table_.p(n).to_string()});
                print_csv(out_, rows);
            } else {
                TextTable t({"n", "p(n)"}, {true, true});
                for (long long n = 1; n <= s_.pn_table; ++n) t.add({std::to_string(n), table_.p(n).to_string()});
                t.print(out_);
            }
            return kPass;
        }
        if (s_.pn_value < 0) throw CLI::ValidationError("pn", "give n or --table N");
        const BigCount v = table_.p(s_.pn_value);
        if (s_.format == Format::Json) {
            out_ << json{{"n", s_.pn_value}, {"p", v}}.dump(2) << '\n';
        } else if (s_.format == Format::Csv) {
            print_csv(out_, {{"n", "p"}, {std::to_string(s_.pn_value), v.to_string()}});
        } else {
            out_ << v.to_string() << '\n';
        }
        return kPass;
    }

    int check() {
        const InequalityVerdict v = compare_products(s_.check_a, s_.check_b, table_);
        if (s_.format == Format::Json) {
            out_ << json(v).dump(2) << '\n';
        } else if (s_.format == Format::Csv) {
            print_csv(out_, {{"a", "b", "lhs", "rhs", "outcome"},
                             {std::to_string(v.a), std::to_string(v.b), v.lhs.to_string(), v.rhs.to_string(),
                              std::string(to_string(v.outcome))}});
        } else {
            out_ << to_string(v.outcome) << ' ' << v.lhs.to_string() << ' ' << relation_symbol(v.outcome) << ' '
                 << v.rhs.to_string() << '\n';
        }
        return kPass;
    }

    int lambda_table() {
        std::vector<LambdaThreshold> rows;
        for (int a = 2; a <= 8; ++a) rows.push_back(lambda_threshold(a, s_.tol));
        if (s_.format == Format::Json) {
            out_ << json{{"tol", to_decimal(s_.tol)}, {"thresholds", rows}}.dump(2) << '\n';
        } else if (s_.format == Format::Csv) {
            std::vector<std::vector<std::string>> csv{{"a", "lambda", "lo", "hi", "precision"}};
            for (const auto& t : rows) {
                csv.push_back({std::to_string(t.a), t.lambda_text, to_decimal(t.lo), to_decimal(t.hi),
                               std::string(to_string(t.precision_used))});
            }
            print_csv(out_, csv);
        } else {
            TextTable t({"a", "lambda_a", "precision"}, {true, true, false});
            for (const auto& r : rows) t.add({std::to_string(r.a), fixed(r.lambda, 10), std::string(to_string(r.precision_used))});
            t.print(out_);
        }
        return kPass;
    }

    int maxp() {
        if (s_.maxp_argmax >= 0) {
            warn_cap();
            const MaxResult r = maxp_bruteforce(s_.maxp_argmax, table_, s_.cap);
            if (s_.format == Format::Json) {
                out_ << json(r).dump(2) << '\n';
            } else if (s_.format == Format::Csv) {
                std::vector<std::vector<std::string>> csv{{"n", "maxp", "partition"}};
                for (const Partition& mu : r.argmax) csv.push_back({std::to_string(r.n), r.maxp.to_string(), format_partition(mu)});
                print_csv(out_, csv);
            } else {
                out_ << argmax_list(r.argmax, " ") << '\n';
            }
            return kPass;
        }
        if (s_.maxp_range >= 0) {
            if (s_.format == Format::Json) {
                json rows = json::array();
                for (int n = 1; n <= s_.maxp_range; ++n) rows.push_back({{"n", n}, {"maxp", maxp_closed_form(n)}});
                out_ << json{{"range", rows}}.dump(2) << '\n';
            } else if (s_.format == Format::Csv) {
                std::vector<std::vector<std::string>> csv{{"n", "maxp"}};
                for (int n = 1; n <= s_.maxp_range; ++n) csv.push_back({std::to_string(n), maxp_closed_form(n).to_string()});
                print_csv(out_, csv);
            } else {
                TextTable t({"n", "maxp(n)"}, {true, true});
                for (int n = 1; n <= s_.maxp_range; ++n) t.add({std::to_string(n), maxp_closed_form(n).to_string()});
                t.print(out_);
            }
            return kPass;
        }
        if (s_.maxp_value < 0) throw CLI::ValidationError("maxp", "give n, --argmax N or --range N");
        const BigCount v = maxp_closed_form(s_.maxp_value);
        if (s_.format == Format::Json) {
            out_ << json{{"n", s_.maxp_value}, {"maxp", v}}.dump(2) << '\n';
        } else if (s_.format == Format::Csv) {
            print_csv(out_, {{"n", "maxp"}, {std::to_string(s_.maxp_value), v.to_string()}});
        } else {
            out_ << v.to_string() << '\n';
        }
        return kPass;
    }

    int normalize_cmd() {
        const Partition start = parse_partition(s_.partition_text);
        const RewriteTrace trace = normalize_traced(start, table_);
        if (s_.format == Format::Json) {
            out_ << json(trace).dump(2) << '\n';
            return kPass;
        }
        if (s_.format == Format::Csv) {
            std::vector<std::vector<std::string>> csv{{"step", "rule", "provenance", "before", "after", "p_before", "p_after"}};
            for (std::size_t i = 0; i < trace.steps.size(); ++i) {
                const auto& st = trace.steps[i];
                const auto& rule = rule_catalog()[st.rule_index];
                csv.push_back({std::to_string(i + 1), rule.label(), rule.provenance, format_partition(st.before),
                               format_partition(st.after), st.p_before.to_string(), st.p_after.to_string()});
            }
            print_csv(out_, csv);
            return kPass;
        }
        if (trace.steps.empty()) {
            out_ << format_partition_parens(start) << " already canonical (p = "
                 << p_extended(start, table_).to_string() << ")\n";
            return kPass;
        }
        out_ << "start " << format_partition_parens(start) << " p = " << trace.steps.front().p_before.to_string() << '\n';
        for (const auto& st : trace.steps) {
            const auto& rule = rule_catalog()[st.rule_index];
            out_ << rule.label() << " (" << rule.provenance << "): " << format_partition_parens(st.before) << " -> "
                 << format_partition_parens(st.after) << "  p " << st.p_before.to_string() << " -> "
                 << st.p_after.to_string() << '\n';
        }
        out_ << "fixed point " << format_partition_parens(trace.result) << " p = "
             << trace.steps.back().p_after.to_string() << '\n';
        return kPass;
    }

    Section theorem1() {
        progress("theorem1: gap(a,1) for 9 <= a <= " + std::to_string(s_.t1_amax) + ", thresholds, exhaustive pairs");
        Theorem1Config cfg;
        cfg.a_max = s_.t1_amax;
        cfg.tol = s_.tol;
        const Theorem1Report r = verify_theorem1(cfg, table_);

        Section sec;
        sec.name = "theorem1";
        sec.code = exit_code_for(!r.large_a.failures.empty() || !r.sets_match || !r.counterexamples.empty() ||
                                     !r.analytic_contradictions.empty(),
                                 r.marginal());
        sec.data = r;

        std::ostringstream os;
        os << "gap(a,1) > 0 for 9 <= a <= " << r.large_a.a_max << ": "
           << status_word(exit_code_for(!r.large_a.failures.empty(), !r.large_a.marginal.empty()))
           << " (min margin " << fixed(r.large_a.worst.margin, 10) << " at a = " << r.large_a.worst_a << ", "
           << to_string(r.large_a.worst.precision) << ")\n";
        TextTable t({"a", "lambda_a", "b_max"}, {true, true, true});
        for (std::size_t i = 0; i < r.thresholds.size(); ++i) {
            t.add({std::to_string(r.thresholds[i].a), fixed(r.thresholds[i].lambda, 10), std::to_string(r.b_max[i])});
        }
        t.print(os);
        os << "exhaustive pairs checked: " << r.pairs_checked << '\n';
        os << "failures:   " << pair_list(r.found.failures) << '\n';
        os << "equalities: " << pair_list(r.found.equalities) << '\n';
        os << "matches expected sets: " << (r.sets_match ? "yes" : "no") << '\n';
        for (const auto& v : r.counterexamples) {
            os << "counterexample: (" << v.a << "," << v.b << ") " << to_string(v.outcome) << ' ' << v.lhs.to_string()
               << ' ' << relation_symbol(v.outcome) << ' ' << v.rhs.to_string() << '\n';
        }
        for (const auto& v : r.analytic_contradictions) {
            os << "analytic region contradiction: (" << v.a << "," << v.b << ") " << to_string(v.outcome) << '\n';
        }
        sec.text = os.str();

        sec.csv.push_back({"theorem1", "large_a", status_word(exit_code_for(!r.large_a.failures.empty(), !r.large_a.marginal.empty())),
                           "min margin " + r.large_a.worst.margin_text + " at a=" + std::to_string(r.large_a.worst_a)});
        for (const auto& th : r.thresholds) {
            sec.csv.push_back({"theorem1", "lambda_" + std::to_string(th.a), "PASS", th.lambda_text});
        }
        sec.csv.push_back({"theorem1", "failures", r.sets_match ? "PASS" : "FAIL", pair_list(r.found.failures)});
        sec.csv.push_back({"theorem1", "equalities", r.sets_match ? "PASS" : "FAIL", pair_list(r.found.equalities)});
        sec.csv.push_back({"theorem1", "counterexamples", r.counterexamples.empty() ? "PASS" : "FAIL",
                           std::to_string(r.counterexamples.size())});
        return sec;
    }

    Section theorem2() {
        warn_cap();
        progress("theorem2: brute force over P(n) for n <= " + std::to_string(s_.t2_nmax));
        const Theorem2Report r = verify_theorem2(s_.t2_nmax, table_, s_.cap);
        Section sec;
        sec.name = "theorem2";
        sec.code = exit_code_for(!r.passed(), false);
        sec.data = r;

        std::ostringstream os;
        TextTable t({"n", "p(n)", "maxp(n)", "mu"}, {true, true, true, false});
        for (const auto& row : r.rows) {
            t.add({std::to_string(row.n), row.p_n.to_string(), row.max.maxp.to_string(), argmax_list(row.max.argmax, ", ")});
        }
        t.print(os);
        for (const auto& m : r.mismatches) os << "counterexample n = " << m.n << ": expected " << m.expected << ", found " << m.found << '\n';
        sec.text = os.str();

        for (const auto& row : r.rows) {
            sec.csv.push_back({"theorem2", "n=" + std::to_string(row.n), "PASS",
                               row.max.maxp.to_string() + " " + argmax_list(row.max.argmax, " ")});
        }
        for (const auto& m : r.mismatches) {
            sec.csv.push_back({"theorem2", "n=" + std::to_string(m.n), "FAIL", "expected " + m.expected + " found " + m.found});
        }
        return sec;
    }

    Section sandwich() {
        progress("sandwich: 2 <= n <= " + std::to_string(s_.sandwich_nmax) + ", Lehmer bracket 1 <= n <= " +
                 std::to_string(s_.lehmer_nmax));
        const BoundsSweepReport sw = sandwich_sweep(2, s_.sandwich_nmax, table_);
        const BoundsSweepReport lb = lehmer_bracket_sweep(1, s_.lehmer_nmax, table_);
        Section sec;
        sec.name = "sandwich";
        const int sw_code = exit_code_for(!sw.failures.empty(), !sw.marginal.empty());
        const int lb_code = exit_code_for(!lb.failures.empty(), !lb.marginal.empty());
        sec.code = combine(sw_code, lb_code);
        sec.data = json{{"sandwich", sw}, {"lehmer_bracket", lb}};

        auto describe = [](const BoundsSweepReport& r) {
            return "min margin " + fixed(r.worst.margin, 10) + " at n = " + std::to_string(r.worst_n) + ", " +
                   std::to_string(r.failures.size()) + " failures, " + std::to_string(r.marginal.size()) + " marginal";
        };
        std::ostringstream os;
        os << "sandwich bounds 2 <= n <= " << sw.n_hi << ": " << status_word(sw_code) << " (" << describe(sw) << ")\n";
        os << "Lehmer bracket 1 <= n <= " << lb.n_hi << ": " << status_word(lb_code) << " (" << describe(lb) << ")\n";
        sec.text = os.str();
        sec.csv.push_back({"sandwich", "sandwich", status_word(sw_code), describe(sw)});
        sec.csv.push_back({"sandwich", "lehmer_bracket", status_word(lb_code), describe(lb)});
        return sec;
    }

    Section logconcavity() {
        const int nmax = s_.lc_nmax;
        progress("logconcavity: n <= " + std::to_string(nmax));
        const LogConcavitySweep small = log_concavity_sweep(2, std::min(25, nmax), 1, table_);
        const LogConcavitySweep large =
            nmax >= 26 ? log_concavity_sweep(26, nmax, 2, table_) : LogConcavitySweep{26, nmax, 2, 0, {}};
        const int border_hi = std::max(4, nmax / 2);
        const IntSweep border = border_sweep(4, border_hi, table_);
        const IntSweep inj = injection_sweep(1, nmax, table_);

        Section sec;
        sec.name = "logconcavity";
        const bool ok_large = large.violations.empty();
        const bool ok_small = !small.violations.empty();
        const bool ok_border = border.violations.empty();
        const bool ok_inj = inj.violations.empty();
        sec.code = exit_code_for(!(ok_large && ok_small && ok_border && ok_inj), false);
        sec.data = json{{"log_concavity", large}, {"small_n_violations", small}, {"border", border}, {"injection", inj}};

        std::string small_list;
        for (const auto& [n, m] : small.violations) {
            if (!small_list.empty()) small_list += ' ';
            small_list += "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        }
        std::ostringstream os;
        os << "p(n)^2 > p(n-m)p(n+m), 26 <= n <= " << nmax << ", 1 < m < n: " << (ok_large ? "PASS" : "FAIL") << " ("
           << large.checked << " pairs, " << large.violations.size() << " violations)\n";
        os << "violations with n <= 25, 1 <= m < n: " << (small_list.empty() ? "none" : small_list) << '\n';
        os << "p(n)^2 > p(2n), 4 <= n <= " << border_hi << ": " << (ok_border ? "PASS" : "FAIL") << '\n';
        os << "p(1)p(n) < p(n+1), 1 <= n <= " << nmax << ": " << (ok_inj ? "PASS" : "FAIL") << '\n';
        sec.text = os.str();
        sec.csv.push_back({"logconcavity", "log_concavity", ok_large ? "PASS" : "FAIL", std::to_string(large.checked) + " pairs"});
        sec.csv.push_back({"logconcavity", "small_n_violations", ok_small ? "PASS" : "FAIL", small_list});
        sec.csv.push_back({"logconcavity", "border", ok_border ? "PASS" : "FAIL", std::to_string(border.checked) + " values"});
        sec.csv.push_back({"logconcavity", "injection", ok_inj ? "PASS" : "FAIL", std::to_string(inj.checked) + " values"});
        return sec;
    }

    int emit(const std::vector<Section>& sections) {
        int code = kPass;
        for (const auto& s : sections) code = combine(code, s.code);
        if (s_.format == Format::Json) {
            json j{{"status", status_word(code)}};
            for (const auto& s : sections) j[s.name] = s.data;
            out_ << j.dump(2) << '\n';
        } else if (s_.format == Format::Csv) {
            std::vector<std::vector<std::string>> rows{{"section", "check", "status", "detail"}};
            for (const auto& s : sections) rows.insert(rows.end(), s.csv.begin(), s.csv.end());
            print_csv(out_, rows);
        } else {
            for (const auto& s : sections) {
                out_ << "== " << s.name << " ==\n" << s.text << s.name << ": " << status_word(s.code) << "\n";
            }
            if (sections.size() > 1) out_ << "overall: " << status_word(code) << '\n';
        }
        return code;
    }

private:
    void progress(const std::string& msg) { err_ << "[partprod] " << msg << '\n'; }

    void warn_cap() {
        if (s_.cap > kDefaultEnumerationCap) {
            err_ << "[partprod] warning: enumeration cap raised to " << s_.cap << "; brute force grows like p(n)\n";
        }
    }

    const Settings& s_;
    std::ostream& out_;
    std::ostream& err_;
    PartitionTable table_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Exact verification of multiplicative partition-function inequalities and maximizers", "partprod"};
    app.fallthrough();
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
    app.add_option("--format", s.format, "Output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->type_name("{text,csv,json}");
    app.add_option("--out", s.out_file, "Write output to FILE instead of standard output");
    app.add_option("--cap", s.cap, "Brute-force enumeration cap (default: $PARTPROD_ENUM_CAP or 50)")
        ->check(CLI::Range(1, 200));
    app.add_option("--tol", s.tol, "Bisection tolerance for lambda_a")->check(CLI::PositiveNumber);

    auto* pn = app.add_subcommand("pn", "Exact partition numbers");
    pn->add_option("n", s.pn_value, "n >= 0")->check(CLI::NonNegativeNumber);
    pn->add_option("--table", s.pn_table, "Print p(n) for 1 <= n <= N")->check(CLI::NonNegativeNumber);

    auto* check = app.add_subcommand("check", "Compare p(a)p(b) with p(a+b)");
    check->add_option("a", s.check_a)->required()->check(CLI::PositiveNumber);
    check->add_option("b", s.check_b)->required()->check(CLI::PositiveNumber);

    auto* lambda = app.add_subcommand("lambda-table", "Thresholds lambda_a for a = 2..8");

    auto* maxp = app.add_subcommand("maxp", "Maximum of p(mu) over partitions of n");
    maxp->add_option("n", s.maxp_value, "closed-form maxp(n)")->check(CLI::NonNegativeNumber);
    maxp->add_option("--argmax", s.maxp_argmax, "All maximizers of n by brute force")->check(CLI::NonNegativeNumber);
    maxp->add_option("--range", s.maxp_range, "maxp(n) for 1 <= n <= N")->check(CLI::NonNegativeNumber);

    auto* norm = app.add_subcommand("normalize", "Rewrite a partition with the replacement rules");
    norm->add_option("partition", s.partition_text, "comma-separated parts, e.g. 7,2,4,4")->required();

    auto* verify = app.add_subcommand("verify", "Run verification sweeps");
    verify->require_subcommand(1);
    auto* v_t1 = verify->add_subcommand("theorem1", "p(a)p(b) >= p(a+b) pipeline");
    v_t1->add_option("--amax", s.t1_amax, "largest a for the gap(a,1) sweep")->check(CLI::Range(9, 10'000'000));
    auto* v_t2 = verify->add_subcommand("theorem2", "maximizers by brute force vs closed form");
    v_t2->add_option("--nmax", s.t2_nmax, "largest n")->check(CLI::Range(4, 200));
    auto* v_sw = verify->add_subcommand("sandwich", "exponential sandwich and Lehmer bracket");
    v_sw->add_option("--nmax", s.sandwich_nmax, "largest n for the sandwich")->check(CLI::Range(2, 100'000));
    v_sw->add_option("--lehmer-nmax", s.lehmer_nmax, "largest n for the Lehmer bracket")->check(CLI::Range(1, 100'000));
    auto* v_lc = verify->add_subcommand("logconcavity", "log-concavity, border case and injection inequality");
    v_lc->add_option("--nmax", s.lc_nmax, "largest n")->check(CLI::Range(4, 50'000));
    auto* v_all = verify->add_subcommand("all", "every verification with default bounds");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    std::unique_ptr<std::ofstream> file;
    if (!s.out_file.empty()) {
        file = std::make_unique<std::ofstream>(s.out_file, std::ios::binary);
        if (!*file) {
            err << "error: cannot open " << s.out_file << " for writing\n";
            return kUsageError;
        }
    }
    std::ostream& sink = file ? *file : out;

    Runner runner(s, sink, err);
    try {
        if (*pn) return runner.pn();
        if (*check) return runner.check();
        if (*lambda) return runner.lambda_table();
        if (*maxp) return runner.maxp();
        if (*norm) return runner.normalize_cmd();
        std::vector<Section> sections;
        if (*v_t1 || *v_all) sections.push_back(runner.theorem1());
        if (*v_t2 || *v_all) sections.push_back(runner.theorem2());
        if (*v_sw || *v_all) sections.push_back(runner.sandwich());
        if (*v_lc || *v_all) sections.push_back(runner.logconcavity());
        return runner.emit(sections);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace partprod::cli
