#include "maxcon/io.hpp"

#include "maxcon/error.hpp"
#include "maxcon/graph.hpp"

#include <fstream>
#include <sstream>

namespace maxcon {

Json to_json(ExtendedReal x) {
    if (x.is_finite()) return Json(x.value());
    return Json("-inf");
}

ExtendedReal extended_real_from_json(const Json& j) {
    if (j.is_number_integer()) return ExtendedReal{j.get<std::int64_t>()};
    if (j.is_string()) return parse_extended_real(j.get<std::string>());
    throw ParseError(0, "expected an integer or \"-inf\", got " + j.dump());
}

Json to_json(const StateVector& x) {
    Json arr = Json::array();
    for (const auto& v : x) arr.push_back(to_json(v));
    return arr;
}

Json trace_to_json(const Trace& trace) {
    Json arr = Json::array();
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
        Json rec;
        rec["step"] = k;
        rec["values"] = to_json(trace.states[k]);
        rec["converged"] = trace.converged_at.has_value() && k >= *trace.converged_at;
        arr.push_back(std::move(rec));
    }
    return arr;
}

namespace {

std::size_t positive_index(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
        throw ParseError(0, std::string(what) + " must be a positive integer, got " + j.dump());
    }
    return j.get<std::size_t>();
}

}  // namespace

AdjMatrix matrix_from_json(const Json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) {
        const auto path = base_dir / j.get<std::string>();
        std::ifstream in(path);
        if (!in) throw ParseError(0, "cannot open matrix file " + path.string());
        try {
            return read_matrix(in);
        } catch (const ParseError& e) {
            throw ParseError(0, path.string() + ": " + e.what());
        }
    }
    if (j.is_array()) {
        const std::size_t n = j.size();
        if (n == 0) throw ParseError(0, "inline matrix has no rows");
        AdjMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& row = j[i];
            if (!row.is_array() || row.size() != n) {
                throw ParseError(0, "inline matrix row " + std::to_string(i + 1) + " must have " +
                                        std::to_string(n) + " entries");
            }
            for (std::size_t c = 0; c < n; ++c) {
                const ExtendedReal v = extended_real_from_json(row[c]);
                if (v == ExtendedReal{0}) {
                    a.set_zero(i, c);
                } else if (v.is_neg_inf()) {
                    if (i == c) throw ParseError(0, "inline matrix diagonal entry must be 0");
                } else {
                    throw ParseError(0, "inline matrix entries must be 0 or \"-inf\"");
                }
            }
        }
        return a;
    }
    if (j.is_object() && j.contains("n") && j.contains("edges")) {
        const std::size_t n = positive_index(j.at("n"), "n");
        Digraph g(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError(0, "edge must be a [j, i] pair");
            const std::size_t from = positive_index(e[0], "edge endpoint");
            const std::size_t to = positive_index(e[1], "edge endpoint");
            if (from > n || to > n) throw ParseError(0, "edge endpoint out of range 1.." + std::to_string(n));
            g.add_edge(from - 1, to - 1);
        }
        return adjacency(g);
    }
    throw ParseError(0, "unrecognised matrix entry " + j.dump());
}

std::vector<AdjMatrix> pool_from_json(const Json& j, const std::filesystem::path& base_dir) {
    const Json* list = &j;
    if (j.is_object()) {
        if (!j.contains("pool")) throw ParseError(0, "pool object needs a \"pool\" list");
        list = &j.at("pool");
    }
    if (!list->is_array() || list->empty()) throw ParseError(0, "pool must be a non-empty list");
    std::vector<AdjMatrix> pool;
    for (const auto& entry : *list) pool.push_back(matrix_from_json(entry, base_dir));
    for (const auto& m : pool)
        if (m.size() != pool.front().size()) throw DimensionError("pool matrices differ in dimension");
    return pool;
}

SwitchingSchedule schedule_from_json(const Json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ParseError(0, "schedule must be a JSON object");
    SwitchingSchedule s;
    s.pool = pool_from_json(j, base_dir);
    if (j.contains("n") && positive_index(j.at("n"), "n") != s.pool.front().size()) {
        throw DimensionError("schedule n does not match the pool dimension");
    }
    if (j.contains("sequence")) {
        for (const auto& idx : j.at("sequence")) {
            const std::size_t one_based = positive_index(idx, "sequence index");
            if (one_based > s.pool.size()) {
                throw ParseError(0, "sequence index " + std::to_string(one_based) + " exceeds pool size");
            }
            s.sequence.push_back(one_based - 1);
        }
    }
    return s;
}

Json mortality_result_to_json(const MortalityResult& r) {
    Json out;
    out["mortal"] = r.mortal;
    if (r.mortal) {
        Json w = Json::array();
        for (auto idx : r.witness) w.push_back(idx + 1);
        out["witness"] = std::move(w);
        out["witness_length"] = *r.witness_length;
    } else {
        out["witness"] = nullptr;
        out["witness_length"] = nullptr;
    }
    return out;
}

GenSpec genspec_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError(0, "generator spec must be a JSON object");
    GenSpec spec;
    try {
        spec.family = parse_family(j.at("family").get<std::string>());
        spec.n = j.at("n").get<std::size_t>();
        if (j.contains("p")) spec.p = j.at("p").get<double>();
        if (j.contains("k")) spec.k = j.at("k").get<std::size_t>();
        if (j.contains("beta")) spec.beta = j.at("beta").get<double>();
        if (j.contains("m")) spec.m = j.at("m").get<std::size_t>();
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("generator spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

Json fault_report_to_json(const FaultReport& r, std::size_t expected_steps) {
    Json out;
    out["verdict"] = r.fault ? "FAULT" : "CLEAN";
    out["expected_steps"] = expected_steps;
    out["trials"] = r.trials;
    out["failed_trials"] = r.failed_trials;
    if (r.first_failed_argmax) {
        out["first_failed_argmax"] = *r.first_failed_argmax + 1;
    } else {
        out["first_failed_argmax"] = nullptr;
    }
    return out;
}

Json diameter_summary_to_json(const DiameterSummary& s) {
    auto opt = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
    Json out;
    out["samples"] = s.samples;
    out["strongly_connected"] = s.strongly_connected;
    out["sc_fraction"] = s.sc_fraction;
    out["min_diameter"] = opt(s.min_diameter);
    out["median_diameter"] = opt(s.median_diameter);
    out["max_diameter"] = opt(s.max_diameter);
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, path.string() + ": " + e.what());
    }
}

}  // namespace maxcon
