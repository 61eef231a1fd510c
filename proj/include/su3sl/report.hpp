#pragma once

#include <string>
#include <vector>

#include "su3sl/json_io.hpp"

namespace su3sl {

struct Assertion {
    std::string name;
    std::string anchor;  // stable slug naming the claim being checked
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string command;
    json inputs = json::object();
    std::vector<Assertion> assertions;
    json extra = json::object();  // command-specific payload

    void check(const std::string& name, const std::string& anchor, bool pass,
               const std::string& detail = "") {
        assertions.push_back({name, anchor, pass, detail});
    }

    bool all_pass() const {
        for (auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }
    int exit_status() const { return all_pass() ? 0 : 1; }

    json to_json() const {
        json as = json::array();
        for (auto& a : assertions)
            as.push_back(json{{"name", a.name},
                              {"anchor", a.anchor},
                              {"status", a.pass ? "pass" : "fail"},
                              {"detail", a.detail}});
        json j{{"schema", "su3sl-report/1"},
               {"command", command},
               {"inputs", inputs},
               {"assertions", std::move(as)},
               {"exit_status", exit_status()}};
        if (!extra.empty()) j["results"] = extra;
        return j;
    }
};

struct UsageError : Error {
    using Error::Error;
};

/// Parse and dispatch one subcommand; throws UsageError for bad argv.
Report run_command(const std::vector<std::string>& args);

/// Full CLI driver: prints the report (stdout or --json PATH), returns the
/// exit status; usage errors return 2 with a message on stderr.
int cli_main(int argc, char** argv);

} // namespace su3sl
