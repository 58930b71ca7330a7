#include <memory>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "partprod/analytic_bounds.hpp"
#include "partprod/enumerate.hpp"
#include "partprod/inequality.hpp"
#include "partprod/max_partition.hpp"
#include "partprod/partition_table.hpp"
#include "partprod/remarks.hpp"
#include "partprod/report_json.hpp"
#include "partprod/rewriting.hpp"

namespace py = pybind11;
using namespace partprod;

namespace {

PartitionTable& shared_table() {
    static PartitionTable table;
    return table;
}

py::int_ to_py(const BigCount& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.to_string().c_str(), nullptr, 10));
}

std::vector<int> to_list(const Partition& mu) { return {mu.parts().begin(), mu.parts().end()}; }

// Reports cross the boundary as plain dicts via their JSON form.
template <class T>
py::object to_py_dict(const T& value) {
    return py::module_::import("json").attr("loads")(nlohmann::json(value).dump());
}

}  // namespace

PYBIND11_MODULE(_partprod, m) {
    m.doc() = "Exact partition-function inequalities and maximal multiplicative partitions";

    py::register_exception<TiedMaximumError>(m, "TiedMaximumError", PyExc_ValueError);

    m.def("p", [](long long n) { return to_py(p_exact(n, shared_table())); }, py::arg("n"),
          "Exact number of partitions of n.");
    m.def("p_extended", [](std::vector<int> parts) { return to_py(p_extended(Partition(std::move(parts)), shared_table())); },
          py::arg("parts"), "Product of p over the parts.");
    m.def("partitions", [](int n) {
              std::vector<std::vector<int>> out;
              for (const Partition& mu : enumerate_partitions(n)) out.push_back(to_list(mu));
              return out;
          },
          py::arg("n"), "All partitions of n in reverse lexicographic order.");
    m.def("parse_partition", [](const std::string& text) { return to_list(parse_partition(text)); }, py::arg("text"));
    m.def("format_partition", [](std::vector<int> parts) { return format_partition(Partition(std::move(parts))); },
          py::arg("parts"));

    m.def("compare_products", [](int a, int b) { return to_py_dict(compare_products(a, b, shared_table())); },
          py::arg("a"), py::arg("b"));
    m.def("scan_exceptional", [](int sum_bound) { return to_py_dict(scan_exceptional(sum_bound, shared_table())); },
          py::arg("sum_bound"));
    m.def("S", [](int a, double lambda) { return S<double>(a, lambda); }, py::arg("a"), py::arg("lam"));
    m.def("T", [](int a, double lambda) { return T<double>(a, lambda); }, py::arg("a"), py::arg("lam"));
    m.def("gap", [](int a, double lambda) { return gap_function<double>(a, lambda); }, py::arg("a"), py::arg("lam"));
    m.def("lambda_threshold", [](int a, double tol) { return to_py_dict(lambda_threshold(a, tol)); }, py::arg("a"),
          py::arg("tol") = 1e-9);
    m.def("verify_large_a", [](int a_max) { return to_py_dict(verify_large_a(a_max)); }, py::arg("a_max"));
    m.def("verify_theorem1",
          [](int a_max) {
              Theorem1Config cfg;
              cfg.a_max = a_max;
              return to_py_dict(verify_theorem1(cfg, shared_table()));
          },
          py::arg("a_max") = 10'000);

    m.def("mu", [](long long n) { return mu<double>(n); }, py::arg("n"));
    m.def("lehmer_estimate",
          [](long long n) {
              const auto t = lehmer_log_terms<double>(n);
              py::dict d;
              d["n"] = n;
              d["mu"] = t.mu_n;
              d["log_main_term"] = t.log_main_term;
              d["log_error_cap"] = t.log_error_cap;
              return d;
          },
          py::arg("n"));
    m.def("sandwich_log_bounds",
          [](long long n) {
              const auto b = sandwich_log_bounds<double>(n);
              return py::make_tuple(b.log_lower, b.log_upper);
          },
          py::arg("n"));
    m.def("log_p", [](long long n) { return log_bigcount<double>(p_exact(n, shared_table())); }, py::arg("n"));
    m.def("sandwich_sweep", [](long long lo, long long hi) { return to_py_dict(sandwich_sweep(lo, hi, shared_table())); },
          py::arg("lo"), py::arg("hi"));
    m.def("lehmer_bracket_sweep",
          [](long long lo, long long hi) { return to_py_dict(lehmer_bracket_sweep(lo, hi, shared_table())); },
          py::arg("lo"), py::arg("hi"));

    m.def("canonical_max_partition", [](int n) { return to_list(canonical_max_partition(n)); }, py::arg("n"));
    m.def("maxp", [](int n) { return to_py(maxp_closed_form(n)); }, py::arg("n"));
    m.def("maxp_bruteforce", [](int n) { return to_py_dict(maxp_bruteforce(n, shared_table())); }, py::arg("n"));
    m.def("verify_theorem2", [](int n_max) { return to_py_dict(verify_theorem2(n_max, shared_table())); },
          py::arg("n_max") = kDefaultEnumerationCap);
    m.def("rule_catalog", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& r : rule_catalog()) out.emplace_back(r.label(), r.provenance);
        return out;
    });
    m.def("normalize", [](std::vector<int> parts) { return to_list(normalize(Partition(std::move(parts)), shared_table())); },
          py::arg("parts"));
    m.def("normalize_trace",
          [](std::vector<int> parts) { return to_py_dict(normalize_traced(Partition(std::move(parts)), shared_table())); },
          py::arg("parts"));
    m.def("log_concavity_check", [](int n, int k) { return to_py_dict(log_concavity_check(n, k, shared_table())); },
          py::arg("n"), py::arg("m"));
    m.def("injection_check", [](int n) { return to_py_dict(injection_check(n, shared_table())); }, py::arg("n"));
}
