#include "homc/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace homc {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ArgumentError("input is not valid JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ArgumentError(std::string("missing or non-integer field \"") + key + "\"");
    }
    return j[key].get<int>();
}

std::vector<double> get_number_array(const json& j, const char* key) {
    const json& arr = j[key];
    if (!arr.is_array()) throw ArgumentError(std::string("field \"") + key + "\" must be an array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number()) throw ArgumentError(std::string("field \"") + key + "\" holds a non-number");
        out.push_back(v.get<double>());
    }
    return out;
}

/// Shortest text with 17 significant digits; round-trips any double.
void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void append_doubles(std::string& out, const std::vector<double>& vs) {
    out += '[';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        append_double(out, vs[i]);
    }
    out += ']';
}

void append_ints(std::string& out, const std::vector<int>& vs) {
    out += '[';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vs[i]);
    }
    out += ']';
}

void append_tensor(std::string& out, const StochasticTensor& t) {
    out += "{\"order\":" + std::to_string(t.order()) + ",\"dim\":" + std::to_string(t.dim()) +
           ",\"values\":";
    append_doubles(out, t.values());
    out += '}';
}

}  // namespace

StochasticTensor parse_tensor(const std::string& text, const Caps& caps) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ArgumentError("tensor JSON must be an object");
    const int order = get_int(j, "order");
    const int dim = get_int(j, "dim");
    const bool has_values = j.contains("values");
    const bool has_entries = j.contains("entries");
    if (has_values && has_entries) {
        throw ArgumentError("tensor JSON carries both \"values\" and \"entries\"; exactly one is allowed");
    }
    if (!has_values && !has_entries) {
        throw ArgumentError("tensor JSON needs either \"values\" or \"entries\"");
    }
    if (has_values) {
        return StochasticTensor(order, dim, get_number_array(j, "values"), caps);
    }
    const std::int64_t total = checked_pow(dim, order, caps.max_entries);
    std::vector<double> values(static_cast<std::size_t>(total), 0.0);
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    const json& entries = j["entries"];
    if (!entries.is_array()) throw ArgumentError("field \"entries\" must be an array");
    for (const json& e : entries) {
        if (!e.is_object() || !e.contains("index") || !e.contains("value")) {
            throw ArgumentError("each entry needs \"index\" and \"value\"");
        }
        const json& idx_json = e["index"];
        if (!idx_json.is_array() || static_cast<int>(idx_json.size()) != order) {
            throw ArgumentError("entry index must be an array of length " + std::to_string(order));
        }
        MultiIndex idx;
        for (const json& c : idx_json) {
            if (!c.is_number_integer()) throw ArgumentError("entry index components must be integers");
            idx.push_back(c.get<int>());
        }
        const std::int64_t pos = to_linear(idx, dim);
        if (seen[static_cast<std::size_t>(pos - 1)]) {
            std::string msg = "duplicate entry index (";
            for (std::size_t i = 0; i < idx.size(); ++i) {
                if (i) msg += ",";
                msg += std::to_string(idx[i]);
            }
            throw ArgumentError(msg + ")");
        }
        seen[static_cast<std::size_t>(pos - 1)] = true;
        if (!e["value"].is_number()) throw ArgumentError("entry value must be a number");
        values[static_cast<std::size_t>(pos - 1)] = e["value"].get<double>();
    }
    return StochasticTensor(order, dim, std::move(values), caps);
}

StochasticTensor load_tensor(const std::string& path, const Caps& caps) {
    return parse_tensor(read_file(path), caps);
}

JointDistribution parse_joint(const std::string& text, int order, int dim) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ArgumentError("joint distribution JSON must be an object");
    if (get_int(j, "order") != order || get_int(j, "dim") != dim) {
        throw ShapeError("joint distribution is for order " + std::to_string(get_int(j, "order")) +
                         ", dim " + std::to_string(get_int(j, "dim")) + "; tensor has order " +
                         std::to_string(order) + ", dim " + std::to_string(dim));
    }
    if (!j.contains("probs")) throw ArgumentError("joint distribution JSON needs \"probs\"");
    std::vector<double> probs = get_number_array(j, "probs");
    const std::int64_t expected = checked_pow(dim, order - 1, std::numeric_limits<std::int64_t>::max());
    if (static_cast<std::int64_t>(probs.size()) != expected) {
        throw ShapeError("joint distribution has " + std::to_string(probs.size()) + " entries, expected " +
                         std::to_string(expected));
    }
    check_distribution(probs);
    return {std::move(probs)};
}

JointDistribution load_joint(const std::string& path, int order, int dim) {
    return parse_joint(read_file(path), order, dim);
}

std::string emit_tensor(const StochasticTensor& t) {
    std::string out;
    append_tensor(out, t);
    out += '\n';
    return out;
}

std::string emit_reduced(const ReducedMatrix& q) {
    std::string out = "{\"N\":" + std::to_string(q.size()) + ",\"order\":" + std::to_string(q.order) +
                      ",\"dim\":" + std::to_string(q.dim) + ",\"values\":";
    append_doubles(out, q.q.values());
    out += "}\n";
    return out;
}

std::string emit_validation(const ValidationReport& report) {
    std::string out = "{\"valid\":";
    out += report.valid() ? "true" : "false";
    out += ",\"tolerance\":";
    append_double(out, report.tolerance);
    out += ",\"fiber_violations\":[";
    for (std::size_t i = 0; i < report.fiber_violations.size(); ++i) {
        if (i) out += ',';
        out += "{\"context\":";
        append_ints(out, report.fiber_violations[i].context);
        out += ",\"sum\":";
        append_double(out, report.fiber_violations[i].sum);
        out += '}';
    }
    out += "],\"entry_violations\":[";
    for (std::size_t i = 0; i < report.entry_violations.size(); ++i) {
        if (i) out += ',';
        out += "{\"index\":";
        append_ints(out, report.entry_violations[i].index);
        out += ",\"value\":";
        append_double(out, report.entry_violations[i].value);
        out += '}';
    }
    out += "]}\n";
    return out;
}

std::string emit_classification(const ClassificationReport& report) {
    std::string out = "{\"irreducible\":{\"verdict\":";
    out += report.irreducible.irreducible ? "true" : "false";
    if (report.irreducible.counterexample) {
        out += ",\"counterexample\":";
        append_ints(out, *report.irreducible.counterexample);
    }
    out += "},\"ergodic\":{\"verdict\":";
    out += report.ergodic.ergodic ? "true" : "false";
    if (report.ergodic.uncovered_index) {
        out += ",\"uncovered_index\":";
        append_ints(out, *report.ergodic.uncovered_index);
    }
    out += "},\"regular\":{\"verdict\":";
    out += report.regular.regular ? "true" : "false";
    if (report.regular.witness_k) {
        out += ",\"witness_k\":" + std::to_string(*report.regular.witness_k);
    }
    out += "},\"q_regular\":{\"verdict\":";
    out += report.via_q.regular ? "true" : "false";
    if (report.via_q.witness_k) {
        out += ",\"witness_k\":" + std::to_string(*report.via_q.witness_k);
    }
    out += "},\"caps\":{\"max_entries\":" + std::to_string(report.caps.max_entries) +
           ",\"max_reduced_dim\":" + std::to_string(report.caps.max_reduced_dim) +
           ",\"max_subset_states\":" + std::to_string(report.caps.max_subset_states) +
           ",\"pattern_budget\":" + std::to_string(report.caps.pattern_budget) + "}}\n";
    return out;
}

std::string emit_limit_outcome(const LimitOutcome& outcome, const StateDistribution* pi_eigen) {
    std::string out = "{\"kind\":\"";
    switch (outcome.kind) {
        case LimitKind::RankOne: out += "rank_one"; break;
        case LimitKind::General: out += "general"; break;
        case LimitKind::Cycle: out += "cycle"; break;
        case LimitKind::Exhausted: out += "exhausted"; break;
    }
    out += "\",\"iterations\":" + std::to_string(outcome.iterations);
    if (outcome.pi) {
        out += ",\"pi\":";
        append_doubles(out, outcome.pi->probs);
    }
    if (pi_eigen) {
        out += ",\"pi_eigen\":";
        append_doubles(out, pi_eigen->probs);
    }
    if (outcome.limit) {
        out += ",\"limit\":";
        append_tensor(out, *outcome.limit);
    }
    if (outcome.kind == LimitKind::Cycle) {
        out += ",\"period\":" + std::to_string(outcome.period);
        out += ",\"representatives\":[";
        for (std::size_t i = 0; i < outcome.representatives.size(); ++i) {
            if (i) out += ',';
            append_tensor(out, outcome.representatives[i]);
        }
        out += ']';
    }
    out += ",\"diagnostics\":{\"epsilon\":";
    append_double(out, outcome.diagnostics.epsilon);
    out += ",\"bound_factor\":";
    append_double(out, outcome.diagnostics.bound_factor);
    out += ",\"spreads\":";
    append_doubles(out, outcome.diagnostics.spreads);
    out += "}}\n";
    return out;
}

std::string emit_evolution(const std::vector<StateDistribution>& marginals, int first_t) {
    std::string out = "{\"first_t\":" + std::to_string(first_t) + ",\"marginals\":[";
    for (std::size_t i = 0; i < marginals.size(); ++i) {
        if (i) out += ',';
        append_doubles(out, marginals[i].probs);
    }
    out += "]}\n";
    return out;
}

std::string emit_simulation(const Trajectory& traj, const StateDistribution& empirical,
                            std::int64_t burn_in) {
    std::string out = "{\"trajectory\":{\"seed\":" + std::to_string(traj.seed) + ",\"initial\":";
    append_ints(out, traj.initial);
    out += ",\"states\":";
    append_ints(out, traj.states);
    out += "},\"empirical\":{\"burn_in\":" + std::to_string(burn_in) + ",\"probs\":";
    append_doubles(out, empirical.probs);
    out += "}}\n";
    return out;
}

}  // namespace homc
