// Command-line front end for the parity compilation library. Talks to the
// shared library exclusively through the C API in parity.h.
//
// Exit codes: 0 success, 1 negative decision (not isomorphic / not equal /
// not compilable), 2 input error, 3 resource guard exceeded.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parity.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

int exit_code_for(parity_status st) {
  switch (st) {
    case PARITY_OK:
      return kExitOk;
    case PARITY_ERR_GUARD:
      return kExitGuard;
    case PARITY_ERR_INPUT:
    case PARITY_ERR_UNSUPPORTED:
    default:
      return kExitInput;
  }
}

struct HypergraphDeleter {
  void operator()(parity_hypergraph* h) const { parity_hypergraph_free(h); }
};
using HypergraphPtr = std::unique_ptr<parity_hypergraph, HypergraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { parity_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void fail(parity_status st) {
  std::cerr << "error: " << parity_last_error() << "\n";
  std::exit(exit_code_for(st));
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(kExitInput);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_ising(const std::string& path, const std::string& content) {
  if (path.size() >= 6 && path.substr(path.size() - 6) == ".ising") return true;
  for (char c : content) {
    if (c == '{') return false;
    if (!std::isspace(static_cast<unsigned char>(c))) break;
  }
  return !content.empty() && content.find('{') == std::string::npos;
}

HypergraphPtr load_input(const std::string& path) {
  std::string content = read_file(path);
  parity_hypergraph* raw = nullptr;
  if (looks_like_ising(path, content)) {
    char* warnings = nullptr;
    parity_status st = parity_hypergraph_from_ising(content.c_str(), &raw, &warnings);
    if (st != PARITY_OK) fail(st);
    if (warnings) {
      CString guard(warnings);
      json w = json::parse(warnings);
      for (const auto& msg : w) {
        std::cerr << "notice: " << msg.get<std::string>() << "\n";
      }
    }
  } else {
    parity_status st = parity_hypergraph_from_json(content.c_str(), &raw);
    if (st != PARITY_OK) fail(st);
  }
  return HypergraphPtr(raw);
}

void print_owned(char* s) {
  CString guard(s);
  std::cout << s;
}

// ASCII grid in the style of the compiled-layout figures: one cell per
// compiled vertex showing "id{a,b}" with its source edge, plaquettes
// filling the gaps.
void render_rect_ascii(const json& rect) {
  const auto& grid = rect["grid"];
  std::size_t m = rect["m"].get<std::size_t>();
  std::size_t n = rect["n"].get<std::size_t>();
  std::vector<std::vector<std::string>> cells(m, std::vector<std::string>(n));
  std::size_t width = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t id = i * n + j + 1;
      std::ostringstream ss;
      ss << id << "{" << grid[i][j][0].get<long>() << ","
         << grid[i][j][1].get<long>() << "}";
      cells[i][j] = ss.str();
      width = std::max(width, cells[i][j].size());
    }
  }
  auto pad = [&](const std::string& s) {
    std::string out = s;
    out.resize(width, ' ');
    return out;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::ostringstream row;
    for (std::size_t j = 0; j < n; ++j) {
      row << pad(cells[i][j]);
      if (j + 1 < n) row << "---";
    }
    std::cout << row.str() << "\n";
    if (i + 1 < m) {
      std::ostringstream sep;
      for (std::size_t j = 0; j < n; ++j) {
        sep << pad(j + 1 < n ? "|  []" : "|");
        if (j + 1 < n) sep << "   ";
      }
      std::cout << sep.str() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parity: compile optimization problems onto parity layouts"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for basis enumeration");

  std::string in_a, in_b;
  std::uint64_t cap = 100000;
  std::uint64_t max_labels = 64;
  std::uint64_t basis_index = 0;
  std::string basis_choice = "auto";
  bool ascii = false;

  auto* cmd_cycles = app.add_subcommand("cycles", "cycle-space basis and dimension");
  cmd_cycles->add_option("input", in_a)->required();

  auto* cmd_constraints =
      app.add_subcommand("constraints", "constraint-space basis of a hypergraph");
  cmd_constraints->add_option("input", in_a)->required();

  auto* cmd_compile =
      app.add_subcommand("compile", "compiled hypergraph of a chosen basis");
  cmd_compile->add_option("input", in_a)->required();
  cmd_compile->add_option("--basis", basis_choice,
                          "auto (deterministic fundamental basis) or a basis index");
  cmd_compile->add_option("--cap", cap, "basis enumeration cap");

  auto* cmd_set =
      app.add_subcommand("compiled-set", "all compiled hypergraph classes");
  cmd_set->add_option("input", in_a)->required();
  cmd_set->add_option("--cap", cap, "basis enumeration cap");

  auto* cmd_par = app.add_subcommand("par-equal",
                                     "decide equality of compiled hypergraph sets");
  cmd_par->add_option("a", in_a)->required();
  cmd_par->add_option("b", in_b)->required();
  cmd_par->add_option("--cap", cap, "basis enumeration cap");

  auto* cmd_pre = app.add_subcommand("preimage", "parity preimage of a layout");
  cmd_pre->add_option("layout", in_a)->required();
  cmd_pre->add_option("--max-labels", max_labels, "label universe guard");

  auto* cmd_rect =
      app.add_subcommand("rect-compile", "compile onto a rectangular layout");
  cmd_rect->add_option("problem", in_a)->required();
  cmd_rect->add_flag("--ascii", ascii, "render the grid as ASCII");

  auto* cmd_iso = app.add_subcommand("iso", "hypergraph isomorphism");
  cmd_iso->add_option("a", in_a)->required();
  cmd_iso->add_option("b", in_b)->required();

  CLI11_PARSE(app, argc, argv);

  if (cmd_cycles->parsed()) {
    HypergraphPtr h = load_input(in_a);
    char* out = nullptr;
    parity_status st = parity_cycle_basis(h.get(), &out);
    if (st != PARITY_OK) fail(st);
    print_owned(out);
    return kExitOk;
  }

  if (cmd_constraints->parsed()) {
    HypergraphPtr h = load_input(in_a);
    char* out = nullptr;
    parity_status st = parity_constraint_basis(h.get(), &out);
    if (st != PARITY_OK) fail(st);
    print_owned(out);
    return kExitOk;
  }

  if (cmd_compile->parsed()) {
    HypergraphPtr h = load_input(in_a);
    char* out = nullptr;
    parity_status st;
    if (basis_choice == "auto") {
      st = parity_compile_auto(h.get(), &out);
    } else {
      try {
        basis_index = std::stoull(basis_choice);
      } catch (...) {
        std::cerr << "error: --basis expects 'auto' or an index\n";
        return kExitInput;
      }
      st = parity_compile_basis_index(h.get(), basis_index, cap, &out);
    }
    if (st != PARITY_OK) fail(st);
    print_owned(out);
    return kExitOk;
  }

  if (cmd_set->parsed()) {
    HypergraphPtr h = load_input(in_a);
    char* out = nullptr;
    parity_status st = parity_compiled_set(h.get(), cap, threads, &out);
    if (st != PARITY_OK) fail(st);
    print_owned(out);
    return kExitOk;
  }

  if (cmd_par->parsed()) {
    HypergraphPtr a = load_input(in_a);
    HypergraphPtr b = load_input(in_b);
    int equal = 0;
    parity_status st = parity_par_equal(a.get(), b.get(), cap, &equal);
    if (st != PARITY_OK) fail(st);
    std::cout << (equal ? "equal" : "not equal") << "\n";
    return equal ? kExitOk : kExitNegative;
  }

  if (cmd_pre->parsed()) {
    HypergraphPtr h = load_input(in_a);
    char* out = nullptr;
    parity_status st = parity_preimage(h.get(), max_labels, &out);
    if (st != PARITY_OK) fail(st);
    print_owned(out);
    return kExitOk;
  }

  if (cmd_rect->parsed()) {
    HypergraphPtr h = load_input(in_a);
    int compilable = 0;
    char* out = nullptr;
    parity_status st = parity_rect_compile(h.get(), &compilable, &out);
    if (st != PARITY_OK) fail(st);
    if (!compilable) {
      std::cout << "not complete bipartite\n";
      return kExitNegative;
    }
    CString guard(out);
    json rect = json::parse(out);
    if (ascii) {
      render_rect_ascii(rect);
    } else {
      std::cout << out;
    }
    return kExitOk;
  }

  if (cmd_iso->parsed()) {
    HypergraphPtr a = load_input(in_a);
    HypergraphPtr b = load_input(in_b);
    int iso = 0;
    parity_status st = parity_is_isomorphic(a.get(), b.get(), &iso);
    if (st != PARITY_OK) fail(st);
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    return iso ? kExitOk : kExitNegative;
  }

  return kExitInput;
}
