#pragma once

#include "zeta/graph_doc.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace zeta {

enum class Convention { paper, classical };
enum class OutputFormat { json, csv };

struct CliOptions {
    int order = 12;
    Convention convention = Convention::paper;
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 1;
    bool has_evaluation = false;
    std::complex<double> evaluate_at{0.0, 0.0};
};

// Exit codes shared by all commands: 0 success, 1 verification failure,
// 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitInputError = 2;

int cmd_finite(std::ostream& out, std::ostream& err, const GraphDocument& doc,
               const CliOptions& options);

int cmd_periodic(std::ostream& out, std::ostream& err, const GraphDocument& doc,
                 const CliOptions& options);

int cmd_loops(std::ostream& out, std::ostream& err, const GraphDocument& doc, int max_length,
              const CliOptions& options);

// selector is one of det-axioms, bass-hashimoto, trace-lemma,
// inversion-roundtrip, all.
int cmd_verify(std::ostream& out, std::ostream& err, const std::string& selector,
               const CliOptions& options);

} // namespace zeta
