#include "zeta/cli.hpp"

#include "zeta/loop_oracle.hpp"
#include "zeta/verify.hpp"
#include "zeta/vn_det.hpp"
#include "zeta/zeta_finite.hpp"
#include "zeta/zeta_periodic.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace zeta {

using nlohmann::json;

namespace {

json series_to_json(const TruncatedSeries<Rational>& f) {
    json a = json::array();
    for (int k = 0; k <= f.order(); ++k) a.push_back(f.coeff(k).get_str());
    return a;
}

json table_to_json(const LoopCountTable& table) {
    json a = json::array();
    for (int l = 1; l <= table.max_length; ++l) a.push_back({l, table.at(l).get_str()});
    return a;
}

json input_echo(const GraphDocument& doc) {
    json j;
    j["digest"] = document_digest(doc);
    j["vertices"] = doc.vertices.size();
    j["geometric_edges"] = doc.edges.size();
    j["rank"] = doc.rank;
    return j;
}

std::string verdict(const TruncatedSeries<Rational>& a, const TruncatedSeries<Rational>& b) {
    int order = std::min(a.order(), b.order());
    for (int k = 0; k <= order; ++k)
        if (a.coeff(k) != b.coeff(k)) return "mismatch at u^" + std::to_string(k);
    return "equal";
}

json evaluation_json(const TruncatedSeries<Rational>& z, const CliOptions& options,
                     const Rational& norm_bound) {
    double bound = norm_bound.get_d();
    SeriesEvaluation ev = eval_series(z, options.evaluate_at, bound);
    json j;
    j["u0"] = {options.evaluate_at.real(), options.evaluate_at.imag()};
    j["value"] = {ev.value.real(), ev.value.imag()};
    j["norm_bound"] = bound;
    j["outside_radius"] = ev.outside_radius;
    return j;
}

void emit_report(std::ostream& out, const json& j, OutputFormat format) {
    if (format == OutputFormat::json) {
        out << j.dump(2) << "\n";
        return;
    }
    // Flat CSV: section,key,value
    for (const auto& [section, content] : j.items()) {
        if (content.is_object()) {
            for (const auto& [key, value] : content.items()) {
                if (value.is_array()) {
                    for (std::size_t k = 0; k < value.size(); ++k)
                        out << section << "," << key << "." << k << ","
                            << (value[k].is_string() ? value[k].get<std::string>()
                                                     : value[k].dump())
                            << "\n";
                } else {
                    out << section << "," << key << ","
                        << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
                }
            }
        } else if (content.is_array()) {
            for (std::size_t k = 0; k < content.size(); ++k)
                out << section << "," << k << ","
                    << (content[k].is_string() ? content[k].get<std::string>() : content[k].dump())
                    << "\n";
        } else {
            out << section << ",,"
                << (content.is_string() ? content.get<std::string>() : content.dump()) << "\n";
        }
    }
}

} // namespace

int cmd_finite(std::ostream& out, std::ostream& err, const GraphDocument& doc,
               const CliOptions& options) {
    if (doc.rank > 0) {
        err << "input error: rank " << doc.rank << " document; use the periodic command\n";
        return kExitInputError;
    }
    VoltageGraph vg;
    try {
        vg = document_to_voltage_graph(doc);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }

    FiniteOperators ops;
    try {
        ops = build_operators(vg.base);
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }

    const int order = options.order;
    TruncatedSeries<Rational> det_t = det_vn(edge_pencil(ops, order));
    TruncatedSeries<Rational> det_delta = det_vn(vertex_pencil(ops, order));
    TruncatedSeries<Rational> ihara = binomial_factor(-ops.chi, order) * det_delta;
    TruncatedSeries<Rational> log_z = log(det_t);

    json report;
    report["input"] = input_echo(doc);
    report["order"] = order;
    report["convention"] = options.convention == Convention::paper ? "paper" : "classical";
    report["chi"] = weighted_chi(document_vertex_orders(doc), document_edge_orders(doc)).get_str();
    report["series"]["det_I_minus_Tu"] = series_to_json(det_t);
    report["series"]["det_Delta"] = series_to_json(det_delta);
    report["series"]["zeta_via_ihara"] = series_to_json(ihara);
    report["series"]["log_Z"] = series_to_json(log_z);
    report["series"]["Z"] = series_to_json(det_t);
    if (options.convention == Convention::classical)
        report["series"]["Z_classical"] = series_to_json(series_inverse(det_t));
    std::string v = verdict(det_t, ihara);
    report["checks"]["bass_hashimoto"] = v;
    if (options.has_evaluation)
        report["evaluation"] = evaluation_json(det_t, options, row_sum_norm(ops.T));

    emit_report(out, report, options.format);
    return v == "equal" ? kExitOk : kExitVerifyFailure;
}

int cmd_periodic(std::ostream& out, std::ostream& err, const GraphDocument& doc,
                 const CliOptions& options) {
    if (doc.rank == 0) {
        err << "input error: rank 0 document; use the finite command\n";
        return kExitInputError;
    }
    VoltageGraph vg;
    PeriodicOperators ops;
    try {
        vg = document_to_voltage_graph(doc);
        ops = build_periodic(vg);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }

    const int order = options.order;
    TruncatedSeries<Rational> log_z = log_zeta(vg, order);
    TruncatedSeries<Rational> z = exp(log_z);
    TruncatedSeries<Rational> det_delta = det_vn(vertex_pencil(ops, order));
    EqualityReport bh = bass_hashimoto_check(vg, order);
    LoopCountTable table = invert_log_zeta(log_z);

    json report;
    report["input"] = input_echo(doc);
    report["order"] = order;
    report["convention"] = options.convention == Convention::paper ? "paper" : "classical";
    report["chi2"] = ops.chi2.get_str();
    report["series"]["det_I_minus_Tu"] = series_to_json(bh.lhs);
    report["series"]["det_Delta"] = series_to_json(det_delta);
    report["series"]["log_Z"] = series_to_json(log_z);
    report["series"]["Z"] = series_to_json(z);
    if (options.convention == Convention::classical)
        report["series"]["Z_classical"] = series_to_json(series_inverse(z));
    report["loop_table"] = table_to_json(table);
    if (!table.flagged.empty()) report["loop_table_flagged_lengths"] = table.flagged;
    report["checks"]["bass_hashimoto"] =
        bh.equal ? "equal" : "mismatch at u^" + std::to_string(bh.first_mismatch);
    if (options.has_evaluation)
        report["evaluation"] = evaluation_json(z, options, row_sum_norm(ops.T));

    emit_report(out, report, options.format);
    return bh.equal ? kExitOk : kExitVerifyFailure;
}

int cmd_loops(std::ostream& out, std::ostream& err, const GraphDocument& doc, int max_length,
              const CliOptions& options) {
    if (max_length < 1) {
        err << "input error: maximum length must be >= 1\n";
        return kExitInputError;
    }
    VoltageGraph vg;
    try {
        vg = document_to_voltage_graph(doc);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }

    TruncatedSeries<Rational> log_z(max_length);
    try {
        if (doc.rank == 0)
            log_z = log(zeta_via_T(vg.base, max_length));
        else
            log_z = log_zeta(vg, max_length);
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    LoopCountTable inverted = invert_log_zeta(log_z);

    bool all_agree = true;
    json rows = json::array();
    std::ostringstream csv;
    csv << "length,enumerated,inverted,verdict\n";
    for (int l = 1; l <= max_length; ++l) {
        Rational enumerated = frac(count_loop_classes(vg, l));
        Rational from_inversion = inverted.at(l);
        bool agree = enumerated == from_inversion;
        all_agree = all_agree && agree;
        csv << l << "," << enumerated.get_str() << "," << from_inversion.get_str() << ","
            << (agree ? "agree" : "disagree") << "\n";
        rows.push_back({l, enumerated.get_str(), from_inversion.get_str(),
                        agree ? "agree" : "disagree"});
    }

    if (options.format == OutputFormat::json)
        out << rows.dump(2) << "\n";
    else
        out << csv.str();
    return all_agree ? kExitOk : kExitVerifyFailure;
}

int cmd_verify(std::ostream& out, std::ostream& err, const std::string& selector,
               const CliOptions& options) {
    std::vector<SuiteResult> results;
    bool known = false;
    if (selector == "det-axioms" || selector == "all") {
        results.push_back(verify_det_axioms(options.seed));
        known = true;
    }
    if (selector == "bass-hashimoto" || selector == "all") {
        results.push_back(verify_bass_hashimoto(options.seed));
        known = true;
    }
    if (selector == "trace-lemma" || selector == "all") {
        results.push_back(verify_trace_lemma(options.seed));
        known = true;
    }
    if (selector == "inversion-roundtrip" || selector == "all") {
        results.push_back(verify_inversion_roundtrip(options.seed));
        known = true;
    }
    if (!known) {
        err << "usage error: unknown suite '" << selector
            << "' (expected det-axioms, bass-hashimoto, trace-lemma, inversion-roundtrip, all)\n";
        return kExitInputError;
    }

    bool all_passed = true;
    for (const SuiteResult& r : results) {
        if (r.passed()) {
            out << r.name << ": pass (" << r.checks << " checks)\n";
        } else {
            all_passed = false;
            out << r.name << ": FAIL (" << r.failures << "/" << r.checks << " checks failed)\n";
            for (const std::string& dump : r.counterexamples)
                out << "counterexample:\n" << dump << "\n";
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailure;
}

} // namespace zeta
