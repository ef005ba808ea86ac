#pragma once

#include <iosfwd>
#include <string>

namespace gdinfo::cli {

enum class Command { Check, Te, Di, SplitX, SplitW, OracleCompare };
enum class Format { Csv, Json };
enum class Units { Nats, Bits };

struct RunConfig {
    Command command = Command::Check;
    std::string input;
    std::string output;  // empty = stdout
    double s = 0.0;
    double t = 0.0;
    double step = 1e-3;
    double oracle_dt = 1e-3;
    Format format = Format::Csv;
    Units units = Units::Nats;
    bool check_hypotheses = false;
};

/// Exit status: 0 success, 2 hypothesis violation, 1 I/O or numeric failure.
/// Diagnostics go to `err` as a single line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gdinfo::cli
