#pragma once

#include "leibniz/json_io.hpp"

namespace leibniz {

// Exit code contract: 0 = success, 1 = a checked property failed (invalid
// tensor, failed computation), 2 = unusable input (parse error, wrong
// dimension, impossible backend request).
inline constexpr int exit_ok = 0;
inline constexpr int exit_property_failure = 1;
inline constexpr int exit_input_error = 2;

struct CommandOptions {
    TolerancePolicy tol;
    std::optional<Backend> force_backend;  // --backend
    bool allow_invalid = false;            // --allow-invalid
};

struct CommandOutcome {
    int exit_code = exit_ok;
    io::json report;
};

CommandOutcome cmd_check(const io::ParsedAlgebra& in, const CommandOptions& opt);
CommandOutcome cmd_classify(const io::ParsedAlgebra& in, const CommandOptions& opt);
CommandOutcome cmd_analyze(const io::ParsedAlgebra& in, const CommandOptions& opt);
CommandOutcome cmd_series(const io::ParsedAlgebra& in, const CommandOptions& opt);
CommandOutcome cmd_engel(const io::ParsedAlgebra& in, const std::string& element_text,
                         const CommandOptions& opt);
CommandOutcome cmd_cartan(const io::ParsedAlgebra& in, const CommandOptions& opt);
CommandOutcome cmd_maximals(const io::ParsedAlgebra& in, const CommandOptions& opt);
CommandOutcome cmd_derivations(const io::ParsedAlgebra& in, const CommandOptions& opt);
CommandOutcome cmd_killing(const io::ParsedAlgebra& in, const CommandOptions& opt);
CommandOutcome cmd_is_cyclic(const io::ParsedAlgebra& in, const CommandOptions& opt);

// Comma-separated coordinates: exact scalar texts on the exact backend,
// decimal numbers on the float backend.
Element parse_element_text(const std::string& text, size_t dim, Backend b);

}  // namespace leibniz
