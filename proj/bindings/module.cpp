#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tqf/closed_form.hpp"
#include "tqf/qform.hpp"
#include "tqf/sweep.hpp"
#include "tqf/weil.hpp"

namespace py = pybind11;

namespace {

py::object big_to_py(const tqf::BigInt& v) {
    // hex keeps the conversion linear and clear of python's decimal-digit cap
    std::ostringstream ss;
    ss << std::hex << (v < 0 ? tqf::BigInt(-v) : v);
    PyObject* obj = PyLong_FromString(ss.str().c_str(), nullptr, 16);
    if (!obj) throw py::error_already_set();
    auto mag = py::reinterpret_steal<py::object>(obj);
    if (v < 0) {
        PyObject* negated = PyNumber_Negative(mag.ptr());
        if (!negated) throw py::error_already_set();
        return py::reinterpret_steal<py::object>(negated);
    }
    return mag;
}

tqf::CurveParams params_of(unsigned p, unsigned r, unsigned b, unsigned a) {
    return tqf::CurveParams::make(p, r, b, a);
}

py::dict count(unsigned p, unsigned r, unsigned b, unsigned a, unsigned n,
               std::uint64_t budget, unsigned workers) {
    auto inst = tqf::make_instance(params_of(p, r, b, a), n);
    auto res = tqf::run_oracle(inst, budget, workers);
    py::dict d;
    d["zeros"] = big_to_py(res.zeros);
    d["w"] = res.w;
    d["lam"] = res.lambda;
    d["points"] = big_to_py(res.points);
    return d;
}

py::dict predict(unsigned p, unsigned r, unsigned b, unsigned a, unsigned n) {
    auto pred = tqf::predict(params_of(p, r, b, a), n);
    py::dict d;
    d["status"] = pred.covered() ? "covered" : "outside-theorem";
    d["branch"] = pred.branch;
    d["w"] = pred.w;
    d["lam"] = pred.lambda ? py::object(py::int_(*pred.lambda)) : py::object(py::none());
    d["zeros"] = pred.zeros ? big_to_py(*pred.zeros) : py::object(py::none());
    d["points"] = pred.points ? big_to_py(*pred.points) : py::object(py::none());
    return d;
}

py::list level_sets(unsigned p, unsigned r, unsigned b, unsigned a, unsigned n,
                    std::uint64_t budget, unsigned workers) {
    auto inst = tqf::make_instance(params_of(p, r, b, a), n);
    auto counts = tqf::count_level_sets(inst, budget, workers);
    py::list out;
    for (const auto& c : counts) out.append(big_to_py(c));
    return out;
}

py::dict period(unsigned p, unsigned r, unsigned b, unsigned a) {
    auto info = tqf::find_period(params_of(p, r, b, a));
    py::dict d;
    d["s"] = info.s;
    d["witness"] = info.witness;
    d["maximal_half"] = info.maximal_half;
    return d;
}

py::list lpoly(unsigned p, unsigned r, unsigned b, unsigned a, std::uint64_t budget,
               unsigned workers) {
    auto params = params_of(p, r, b, a);
    tqf::CountSequence cs;
    cs.params = params;
    std::uint64_t g = tqf::genus(params);
    for (unsigned n = 1; n <= 2 * g; ++n) {
        auto inst = tqf::make_instance(params, n);
        cs.entries.push_back({n, tqf::run_oracle(inst, budget, workers).points,
                              tqf::CountSource::Oracle});
    }
    auto L = tqf::lpoly_from_counts(cs);
    py::list out;
    for (const auto& c : L.coeffs) out.append(big_to_py(c));
    return out;
}

py::dict verify(std::vector<unsigned> ps, std::vector<std::pair<unsigned, unsigned>> pairs,
                unsigned n_max, std::uint64_t budget, unsigned workers, bool raw_tables) {
    tqf::SweepConfig config;
    if (!ps.empty()) config.ps = ps;
    if (!pairs.empty()) config.pairs.assign(pairs.begin(), pairs.end());
    config.n_max = n_max;
    config.budget = budget;
    config.workers = workers;
    config.raw_tables = raw_tables;
    auto report = tqf::run_verify_sweep(config);
    py::dict d;
    d["rows"] = report.rows.size();
    d["oracle_rows"] = report.oracle_rows;
    d["covered"] = report.covered;
    d["outside"] = report.outside;
    d["disagreements"] = report.disagreements;
    return d;
}

} // namespace

PYBIND11_MODULE(_tqf, m) {
    m.doc() = "exact zero counts of two-term trace forms over finite fields";
    m.def("count", &count, py::arg("p"), py::arg("r"), py::arg("b"), py::arg("a"), py::arg("n"),
          py::arg("budget") = tqf::kDefaultBudget, py::arg("workers") = 0,
          "exhaustive zero count, radical dimension, sign and point count");
    m.def("predict", &predict, py::arg("p"), py::arg("r"), py::arg("b"), py::arg("a"),
          py::arg("n"), "closed-form prediction (any degree)");
    m.def("level_sets", &level_sets, py::arg("p"), py::arg("r"), py::arg("b"), py::arg("a"),
          py::arg("n"), py::arg("budget") = tqf::kDefaultBudget, py::arg("workers") = 0,
          "per-value counts indexed by subfield element");
    m.def("period", &period, py::arg("p"), py::arg("r"), py::arg("b"), py::arg("a"),
          "smallest degree where the curve is minimal");
    m.def("lpoly", &lpoly, py::arg("p"), py::arg("r"), py::arg("b"), py::arg("a"),
          py::arg("budget") = tqf::kDefaultBudget, py::arg("workers") = 0,
          "L-polynomial coefficients reconstructed from exhaustive counts");
    m.def("verify", &verify, py::arg("ps") = std::vector<unsigned>{},
          py::arg("pairs") = std::vector<std::pair<unsigned, unsigned>>{},
          py::arg("n_max") = 0, py::arg("budget") = tqf::kDefaultBudget,
          py::arg("workers") = 0, py::arg("raw_tables") = false,
          "oracle vs prediction sweep; returns row and disagreement counts");
}
