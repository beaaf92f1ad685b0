#pragma once

// JSON problem documents and the command dispatcher behind the toricb tool.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricb/exactnum.hpp"
#include "toricb/multiplier.hpp"
#include "toricb/polyhedra.hpp"

namespace toricb {

using Json = nlohmann::ordered_json;

/// Malformed input (exit code 1).
class ProblemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProblemOptions {
    std::optional<Rational> alpha;
    std::optional<Rational> max;
    std::optional<MembershipMode> mode;
    std::optional<unsigned> box_cap;
    std::optional<unsigned> kappa;
    std::optional<std::vector<unsigned>> schedule;
    std::optional<bool> assume_normal;
    std::optional<bool> check_normal;

    /// Fields set in `other` win.
    void merge(const ProblemOptions& other);
};

struct ProblemDocument {
    IntMatrix matrix;
    bool polynomial = false;
    std::vector<IntVec> monomials;
    std::vector<SemigroupPolynomial> polynomials;
    ProblemOptions options;
};

enum ExitCode : int { ok = 0, malformed = 1, structural = 2, uncertified = 3, failed = 4 };

/// Parses a document. Rationals are strings "p/q" or JSON integers; floats
/// are rejected. Throws ProblemError.
ProblemDocument parse_problem(const Json& doc);
ProblemDocument parse_problem_text(const std::string& text);

/// "1,2,3" -> {1, 2, 3}. Throws ProblemError.
std::vector<unsigned> parse_schedule(const std::string& text);

struct RunResult {
    int exit_code = ExitCode::ok;
    Json report;
    std::string summary;
};

const std::vector<std::string>& commands();

/// Runs one command. Never throws; failures become exit codes with an
/// "error" field in the report.
RunResult run(const std::string& command, const ProblemDocument& doc);

}  // namespace toricb
