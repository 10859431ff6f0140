// Command-line front end; links only the C API.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splinter/capi.h"

namespace {

struct ParamList {
  std::vector<std::string> keys, values;
  std::vector<const char*> key_ptrs, value_ptrs;

  void add(const std::string& k, const std::string& v) {
    keys.push_back(k);
    values.push_back(v);
  }
  void finalize() {
    for (const auto& k : keys) key_ptrs.push_back(k.c_str());
    for (const auto& v : values) value_ptrs.push_back(v.c_str());
  }
  size_t size() const { return keys.size(); }
  const char* const* kp() const { return key_ptrs.empty() ? nullptr : key_ptrs.data(); }
  const char* const* vp() const { return value_ptrs.empty() ? nullptr : value_ptrs.data(); }
};

// Leftover arguments of the form --key value (or --key=value).
bool parse_extras(const std::vector<std::string>& args, ParamList& out) {
  for (size_t i = 0; i < args.size(); ++i) {
    std::string a = args[i];
    if (a.rfind("--", 0) != 0 || a.size() <= 2) {
      std::cerr << "error: expected --param value, got '" << a << "'\n";
      return false;
    }
    a = a.substr(2);
    auto eq = a.find('=');
    if (eq != std::string::npos) {
      out.add(a.substr(0, eq), a.substr(eq + 1));
    } else {
      if (i + 1 >= args.size()) {
        std::cerr << "error: missing value for --" << a << "\n";
        return false;
      }
      out.add(a, args[++i]);
    }
  }
  return true;
}

int status_to_exit(splinter_status s) { return static_cast<int>(s); }

void print_error(splinter_status s) {
  std::cerr << "error (" << status_to_exit(s) << "): " << splinter_last_error() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splinter: exact verification scenarios for Frobenius actions, cover towers and "
               "positivity bookkeeping"};
  app.require_subcommand(1);

  // run <name> [--param value]...
  auto* run = app.add_subcommand("run", "run a named scenario");
  std::string run_name, out_path, format = "table";
  bool no_cache = false;
  run->add_option("name", run_name, "scenario name")->required();
  run->add_option("--out", out_path, "write the canonical report to a file");
  run->add_option("--format", format, "table | machine")->check(CLI::IsMember({"table", "machine"}));
  run->add_flag("--no-cache", no_cache, "bypass the on-disk cache");
  run->allow_extras();

  auto* list = app.add_subcommand("list", "list scenarios and their parameters");
  std::string filter;
  list->add_option("filter", filter, "substring filter on scenario names");

  auto* cache = app.add_subcommand("cache", "inspect or clear the report cache");
  std::string cache_action, cache_name;
  cache->add_option("action", cache_action, "get | put | clear")->required();
  cache->add_option("name", cache_name, "scenario name (for get/put)");
  cache->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints usage or help text
    return rc == 0 ? 0 : status_to_exit(SPLINTER_INVALID);
  }

  if (run->parsed()) {
    ParamList params;
    if (!parse_extras(run->remaining(), params)) return status_to_exit(SPLINTER_INVALID);
    params.finalize();
    splinter_report* rep = nullptr;
    splinter_status s = splinter_run_scenario(run_name.c_str(), params.kp(), params.vp(), params.size(),
                                              no_cache ? nullptr : "", !no_cache, &rep);
    if (!rep) {
      print_error(s);
      return status_to_exit(s);
    }
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        splinter_report_release(rep);
        return status_to_exit(SPLINTER_INVALID);
      }
      out << splinter_report_machine(rep);
    }
    if (format == "machine") {
      std::cout << splinter_report_machine(rep);
    } else {
      char* table = nullptr;
      if (splinter_report_table(rep, &table) == SPLINTER_OK) {
        std::cout << table;
        splinter_string_release(table);
      }
    }
    if (s == SPLINTER_MISMATCH) std::cerr << "verdict mismatch against an embedded expectation\n";
    splinter_report_release(rep);
    return status_to_exit(s);
  }

  if (list->parsed()) {
    char* text = nullptr;
    splinter_status s = splinter_list_scenarios(filter.empty() ? nullptr : filter.c_str(), &text);
    if (s != SPLINTER_OK) {
      print_error(s);
      return status_to_exit(s);
    }
    std::cout << text;
    splinter_string_release(text);
    return 0;
  }

  if (cache->parsed()) {
    if (cache_action == "clear") {
      splinter_status s = splinter_cache_clear("");
      if (s != SPLINTER_OK) print_error(s);
      return status_to_exit(s);
    }
    if (cache_action != "get" && cache_action != "put") {
      std::cerr << "error: cache action must be get, put or clear\n";
      return status_to_exit(SPLINTER_INVALID);
    }
    if (cache_name.empty()) {
      std::cerr << "error: cache " << cache_action << " needs a scenario name\n";
      return status_to_exit(SPLINTER_INVALID);
    }
    ParamList params;
    if (!parse_extras(cache->remaining(), params)) return status_to_exit(SPLINTER_INVALID);
    params.finalize();
    if (cache_action == "get") {
      char* bytes = nullptr;
      splinter_status s =
          splinter_cache_get("", cache_name.c_str(), params.kp(), params.vp(), params.size(), &bytes);
      if (s != SPLINTER_OK) {
        print_error(s);
        return status_to_exit(s);
      }
      if (!bytes) {
        std::cout << "cache: miss\n";
      } else {
        std::cout << bytes;
        splinter_string_release(bytes);
      }
      return 0;
    }
    // put: compute (or reuse) and store.
    splinter_report* rep = nullptr;
    splinter_status s = splinter_run_scenario(cache_name.c_str(), params.kp(), params.vp(), params.size(),
                                              "", 1, &rep);
    if (!rep) {
      print_error(s);
      return status_to_exit(s);
    }
    std::cout << "cache: stored\n";
    splinter_report_release(rep);
    return status_to_exit(s);
  }

  return 0;
}
