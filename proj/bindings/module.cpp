#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homc/classify.hpp"
#include "homc/io.hpp"
#include "homc/limits.hpp"
#include "homc/reduced.hpp"
#include "homc/simulate.hpp"
#include "homc/tensor.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<double>> matrix_rows(const homc::Matrix& m) {
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (std::int64_t r = 0; r < m.rows(); ++r) {
        std::vector<double> row;
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (std::int64_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "higher-order Markov chain analysis on stochastic transition tensors";

    py::register_exception<homc::CapacityError>(m, "CapacityError");
    py::register_exception<homc::BudgetError>(m, "BudgetError");
    static py::exception<homc::NoLimitError> no_limit(m, "NoLimitError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const homc::NoLimitError& e) {
            no_limit(e.what());
        }
    });

    py::class_<homc::Caps>(m, "Caps")
        .def(py::init<>())
        .def_readwrite("max_entries", &homc::Caps::max_entries)
        .def_readwrite("max_reduced_dim", &homc::Caps::max_reduced_dim)
        .def_readwrite("max_subset_states", &homc::Caps::max_subset_states)
        .def_readwrite("pattern_budget", &homc::Caps::pattern_budget);

    py::class_<homc::StochasticTensor>(m, "StochasticTensor")
        .def(py::init([](int order, int dim, std::vector<double> values) {
                 return homc::StochasticTensor(order, dim, std::move(values));
             }),
             py::arg("order"), py::arg("dim"), py::arg("values"))
        .def_property_readonly("order", &homc::StochasticTensor::order)
        .def_property_readonly("dim", &homc::StochasticTensor::dim)
        .def_property_readonly("values",
                               [](const homc::StochasticTensor& t) { return t.values(); })
        .def("at", &homc::StochasticTensor::at, py::arg("index"),
             "entry at a 1-based length-m multi-index")
        .def("fiber", &homc::StochasticTensor::fiber, py::arg("context"),
             "mode-1 fiber at a 1-based length-(m-1) context, most recent state first")
        .def("__eq__", [](const homc::StochasticTensor& a, const homc::StochasticTensor& b) { return a == b; });

    py::class_<homc::ValidationReport>(m, "ValidationReport")
        .def_property_readonly("valid", &homc::ValidationReport::valid)
        .def_property_readonly("fiber_violations",
                               [](const homc::ValidationReport& r) {
                                   std::vector<std::pair<homc::MultiIndex, double>> out;
                                   for (const auto& v : r.fiber_violations) out.emplace_back(v.context, v.sum);
                                   return out;
                               })
        .def_property_readonly("entry_violations", [](const homc::ValidationReport& r) {
            std::vector<std::pair<homc::MultiIndex, double>> out;
            for (const auto& v : r.entry_violations) out.emplace_back(v.index, v.value);
            return out;
        });

    py::class_<homc::ReducedMatrix>(m, "ReducedMatrix")
        .def_property_readonly("order", [](const homc::ReducedMatrix& q) { return q.order; })
        .def_property_readonly("dim", [](const homc::ReducedMatrix& q) { return q.dim; })
        .def_property_readonly("size", &homc::ReducedMatrix::size)
        .def("rows", [](const homc::ReducedMatrix& q) { return matrix_rows(q.q); });

    py::class_<homc::PatternTrace>(m, "PatternTrace")
        .def_property_readonly("length",
                               [](const homc::PatternTrace& t) { return t.patterns.size(); })
        .def_readonly("cycle_start", &homc::PatternTrace::cycle_start)
        .def_readonly("cycle_length", &homc::PatternTrace::cycle_length);

    py::class_<homc::IrreducibilityVerdict>(m, "IrreducibilityVerdict")
        .def_readonly("irreducible", &homc::IrreducibilityVerdict::irreducible)
        .def_readonly("counterexample", &homc::IrreducibilityVerdict::counterexample);
    py::class_<homc::ErgodicityVerdict>(m, "ErgodicityVerdict")
        .def_readonly("ergodic", &homc::ErgodicityVerdict::ergodic)
        .def_readonly("uncovered_index", &homc::ErgodicityVerdict::uncovered_index);
    py::class_<homc::RegularityVerdict>(m, "RegularityVerdict")
        .def_readonly("regular", &homc::RegularityVerdict::regular)
        .def_readonly("witness_k", &homc::RegularityVerdict::witness_k);
    py::class_<homc::ClassificationReport>(m, "ClassificationReport")
        .def_readonly("irreducible", &homc::ClassificationReport::irreducible)
        .def_readonly("ergodic", &homc::ClassificationReport::ergodic)
        .def_readonly("regular", &homc::ClassificationReport::regular)
        .def_readonly("q_regular", &homc::ClassificationReport::via_q);

    py::class_<homc::StateDistribution>(m, "StateDistribution")
        .def_readonly("probs", &homc::StateDistribution::probs);
    py::class_<homc::JointDistribution>(m, "JointDistribution")
        .def(py::init([](std::vector<double> probs) {
                 homc::check_distribution(probs);
                 return homc::JointDistribution{std::move(probs)};
             }),
             py::arg("probs"))
        .def_readonly("probs", &homc::JointDistribution::probs);

    py::class_<homc::ConvergenceDiagnostics>(m, "ConvergenceDiagnostics")
        .def_readonly("epsilon", &homc::ConvergenceDiagnostics::epsilon)
        .def_readonly("bound_factor", &homc::ConvergenceDiagnostics::bound_factor)
        .def_readonly("spreads", &homc::ConvergenceDiagnostics::spreads)
        .def_readonly("upper", &homc::ConvergenceDiagnostics::upper)
        .def_readonly("lower", &homc::ConvergenceDiagnostics::lower);

    py::enum_<homc::LimitKind>(m, "LimitKind")
        .value("RANK_ONE", homc::LimitKind::RankOne)
        .value("GENERAL", homc::LimitKind::General)
        .value("CYCLE", homc::LimitKind::Cycle)
        .value("EXHAUSTED", homc::LimitKind::Exhausted);

    py::class_<homc::LimitOutcome>(m, "LimitOutcome")
        .def_readonly("kind", &homc::LimitOutcome::kind)
        .def_readonly("pi", &homc::LimitOutcome::pi)
        .def_readonly("limit", &homc::LimitOutcome::limit)
        .def_readonly("period", &homc::LimitOutcome::period)
        .def_readonly("representatives", &homc::LimitOutcome::representatives)
        .def_readonly("iterations", &homc::LimitOutcome::iterations)
        .def_readonly("diagnostics", &homc::LimitOutcome::diagnostics);

    py::class_<homc::Trajectory>(m, "Trajectory")
        .def_readonly("states", &homc::Trajectory::states)
        .def_readonly("seed", &homc::Trajectory::seed)
        .def_readonly("initial", &homc::Trajectory::initial)
        .def_readonly("dim", &homc::Trajectory::dim);

    m.def("to_linear", &homc::to_linear, py::arg("index"), py::arg("n"),
          "1-based linear position of a 1-based multi-index");
    m.def("from_linear", &homc::from_linear, py::arg("pos"), py::arg("n"), py::arg("length"));

    m.def("validate", &homc::validate, py::arg("tensor"), py::arg("tol") = homc::kStochasticTol);
    m.def("identity_tensor", &homc::identity_tensor, py::arg("order"), py::arg("dim"),
          py::arg("caps") = homc::Caps{});
    m.def("matricize", [](const homc::StochasticTensor& t) { return matrix_rows(homc::matricize(t)); },
          py::arg("tensor"), "mode-1 matricization as a list of rows");

    m.def("build_reduced", &homc::build_reduced, py::arg("tensor"), py::arg("caps") = homc::Caps{});
    m.def("matrix_power",
          [](const homc::ReducedMatrix& q, std::int64_t k) { return matrix_rows(homc::matrix_power(q, k)); },
          py::arg("q"), py::arg("k"));
    m.def("pattern_trace", &homc::pattern_trace, py::arg("q"), py::arg("max_steps") = 0,
          py::arg("caps") = homc::Caps{});
    m.def("q_regular",
          [](const homc::ReducedMatrix& q) {
              const homc::RegularityWitness w = homc::q_regular(q);
              return homc::RegularityVerdict{w.regular, w.witness_k};
          },
          py::arg("q"));
    m.def("closed_form_power",
          [](const homc::StochasticTensor& t, int ell) { return matrix_rows(homc::closed_form_power(t, ell)); },
          py::arg("tensor"), py::arg("ell"));

    m.def("is_irreducible", &homc::is_irreducible, py::arg("tensor"), py::arg("caps") = homc::Caps{});
    m.def("is_ergodic", &homc::is_ergodic, py::arg("tensor"), py::arg("caps") = homc::Caps{});
    m.def("is_regular", &homc::is_regular, py::arg("tensor"), py::arg("caps") = homc::Caps{});
    m.def("regular_via_q", &homc::regular_via_q, py::arg("tensor"), py::arg("caps") = homc::Caps{});
    m.def("classify", &homc::classify, py::arg("tensor"), py::arg("caps") = homc::Caps{});

    m.def("boxtimes", &homc::boxtimes, py::arg("a"), py::arg("b"));
    m.def("kstep", &homc::kstep, py::arg("tensor"), py::arg("k"));
    m.def("limit_tensor",
          [](const homc::StochasticTensor& t, double tol, std::int64_t max_iter, int window, int patience) {
              return homc::limit_tensor(t, {tol, max_iter, window, patience});
          },
          py::arg("tensor"), py::arg("tol") = 1e-10, py::arg("max_iter") = 100000, py::arg("window") = 16,
          py::arg("patience") = 0);
    m.def("limiting_distribution",
          [](const homc::StochasticTensor& t, double tol, std::int64_t max_iter) {
              return homc::limiting_distribution(t, {tol, max_iter}).pi;
          },
          py::arg("tensor"), py::arg("tol") = 1e-10, py::arg("max_iter") = 100000);
    m.def("stationary_joint", &homc::stationary_joint, py::arg("q"), py::arg("tol") = 1e-10,
          py::arg("max_iter") = 100000, py::arg("caps") = homc::Caps{});
    m.def("limiting_distribution_eig", &homc::limiting_distribution_eig, py::arg("tensor"),
          py::arg("tol") = 1e-10, py::arg("max_iter") = 100000, py::arg("caps") = homc::Caps{});
    m.def("initial_dependent_limit", &homc::initial_dependent_limit, py::arg("r"), py::arg("w"));
    m.def("evolve", &homc::evolve, py::arg("tensor"), py::arg("y_init"), py::arg("steps"),
          py::arg("caps") = homc::Caps{});

    m.def("sample_path", &homc::sample_path, py::arg("tensor"), py::arg("initial"), py::arg("length"),
          py::arg("seed"));
    m.def("empirical_distribution", &homc::empirical_distribution, py::arg("trajectory"),
          py::arg("burn_in"));

    m.def("loads", [](const std::string& text) { return homc::parse_tensor(text); }, py::arg("text"),
          "parse a tensor from its JSON form");
    m.def("dumps", &homc::emit_tensor, py::arg("tensor"), "tensor JSON with round-trip precision");
}
