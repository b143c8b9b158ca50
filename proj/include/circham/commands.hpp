#pragma once

#include <circham/digraph.hpp>
#include <circham/search.hpp>

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace circham {

inline constexpr const char * tool_version = "circham 1.0.0";

/// Process exit codes shared by every command.
enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

/// Plain-text report: header, [inputs], [results], [timing]. Everything
/// except the timing section is a pure function of the inputs.
class RunReport {
public:
    explicit RunReport(std::string command);

    void input(std::string key, std::string value);
    void result(std::string line);
    void finish();

    std::string render() const;

    /// Render without the [timing] section, for determinism checks.
    std::string render_untimed() const;

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<std::string> results_;
    std::chrono::steady_clock::time_point start_;
    std::chrono::duration<double> elapsed_{};
};

/// The graph checked by `verify`, with the circulant it claims to be.
struct VerifyTarget {
    CirculantSpec spec;
    Digraph graph;
};

/// Cay(Z_12; {2,3,8}).
VerifyTarget jackson_counterexample();

/// Runs the seven checks on target; exit_ok iff all pass.
int cmd_verify(std::ostream & out, const VerifyTarget & target = jackson_counterexample());

struct HamArgs {
    int n = 0;
    std::vector<int> set;
    bool oracle = false;
    bool witness = false;
};
int cmd_ham(std::ostream & out, const HamArgs & args);

struct SearchArgs {
    int min_n = 0;
    int max_n = 0;
    SearchOptions options;
    std::optional<std::string> json_path;
};
int cmd_search(std::ostream & out, const SearchArgs & args);

/// Machine-readable form of a search report; timing is the last member.
std::string search_report_json(const SearchReport & report);

int cmd_iso(std::ostream & out, int n, const std::vector<int> & set_a, const std::vector<int> & set_b);

int cmd_adam(std::ostream & out, int n, int k, const std::optional<std::vector<int>> & anchor, int workers = 1);

/// Writes the bare document; format is "dot" or "edges".
int cmd_export(std::ostream & out, int n, const std::vector<int> & set, const std::string & format);

/// Parses argv and dispatches. Usage errors print to err and return exit_usage.
int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

}
