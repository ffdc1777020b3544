// osg: command-line front end over the C API in libosg.
//
// Exit codes: 0 success / consistent, 1 validation failure or theorem
// mismatch, 2 usage or I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "osg/osg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct SemigroupDeleter {
  void operator()(osg_semigroup* s) const { osg_free(s); }
};
using SemigroupPtr = std::unique_ptr<osg_semigroup, SemigroupDeleter>;

struct StringDeleter {
  void operator()(char* s) const { osg_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int report_error(osg_status status) {
  std::cerr << "osg: " << osg_status_string(status);
  if (*osg_last_error() != '\0') std::cerr << ": " << osg_last_error();
  std::cerr << '\n';
  switch (status) {
    case OSG_ERR_INVALID_STRUCTURE: return kExitInvalid;
    default:                        return kExitUsage;
  }
}

// Loads FILE, echoing diagnostics on failure. Returns nullptr with `exit`
// set when loading fails.
SemigroupPtr load(std::string const& path, int& exit) {
  osg_semigroup* raw = nullptr;
  char* diag = nullptr;
  osg_status const status = osg_load(path.c_str(), &raw, &diag);
  CString diagnostics(diag);
  if (status == OSG_OK) return SemigroupPtr(raw);
  if (status == OSG_ERR_INVALID_STRUCTURE && diagnostics) {
    std::cerr << path << ": invalid structure\n" << diagnostics.get();
    exit = kExitInvalid;
  } else {
    exit = report_error(status);
  }
  return nullptr;
}

std::string structure_name(std::string const& path) {
  return std::filesystem::path(path).stem().string();
}

osg_format parse_format(std::string const& f) {
  return f == "json" ? OSG_FORMAT_JSON : OSG_FORMAT_TEXT;
}

osg_options make_options(std::string const& eidem, std::string const& quant) {
  osg_options o = osg_default_options();
  o.idempotents = eidem == "eq" ? OSG_IDEMPOTENT_EQ : OSG_IDEMPOTENT_LEQ;
  o.linv_quantifier = quant == "exists" ? OSG_EXISTS : OSG_FORALL;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ordered semigroup analysis toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", osg_version());

  std::string file, format = "text", eidem = "leq", quant = "forall", relation, where, filter,
                    emit_dir, output;
  std::size_t n = 0, limit = 0, threads = 1;
  bool up_to_iso = false, count = false, allow_large = false;

  auto add_readings = [&](CLI::App* cmd) {
    cmd->add_option("--eidem", eidem, "ordered idempotents: e<=e^2 (leq) or e=e^2 (eq)")
        ->check(CLI::IsMember({"leq", "eq"}));
    cmd->add_option("--linv-quant", quant, "quantifier over idempotent pairs")
        ->check(CLI::IsMember({"forall", "exists"}));
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "check a structure file");
  validate->add_option("FILE", file)->required();

  auto* analyze = app.add_subcommand("analyze", "classify a structure and check every theorem");
  analyze->add_option("FILE", file)->required();
  add_format(analyze);
  add_readings(analyze);

  auto* theorems = app.add_subcommand("theorems", "evaluate the theorem suite on a structure");
  theorems->add_option("FILE", file)->required();
  add_format(theorems);
  add_readings(theorems);

  auto* green = app.add_subcommand("green", "print a Green's relation");
  green->add_option("FILE", file)->required();
  green->add_option("--relation", relation)->required()->check(CLI::IsMember({"L", "R", "J", "H"}));
  add_format(green);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate all ordered semigroups of order n");
  enumerate->add_option("-n", n)->required();
  enumerate->add_flag("--up-to-iso", up_to_iso);
  enumerate->add_option("--filter", filter, "predicate expression");
  auto* count_flag = enumerate->add_flag("--count", count);
  enumerate->add_option("--emit", emit_dir, "write one osg file per structure")->excludes(count_flag);
  enumerate->add_option("--threads", threads);
  enumerate->add_flag("--allow-large", allow_large, "permit n = 5");

  auto* search = app.add_subcommand("search", "find structures satisfying an expression");
  search->add_option("-n", n)->required();
  search->add_option("--where", where)->required();
  search->add_option("--limit", limit);
  search->add_flag("--up-to-iso", up_to_iso);
  search->add_option("--threads", threads);

  auto* power = app.add_subcommand("power", "power semigroup of a plain semigroup");
  power->add_option("FILE", file)->required();
  power->add_option("-o", output, "output file (default: stdout)");

  auto* corpus = app.add_subcommand("corpus", "theorem suite over all structures of order <= n");
  corpus->add_option("-n", n)->required();
  corpus->add_option("--emit", emit_dir, "directory for mismatching structures");
  corpus->add_option("--threads", threads);
  add_format(corpus);
  add_readings(corpus);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int exit = kExitOk;
  osg_options const options = make_options(eidem, quant);

  if (validate->parsed()) {
    auto s = load(file, exit);
    if (!s) return exit;
    std::cout << file << ": valid ordered semigroup with " << osg_size(s.get()) << " elements\n";
    return kExitOk;
  }

  if (analyze->parsed() || theorems->parsed()) {
    auto s = load(file, exit);
    if (!s) return exit;
    char* out = nullptr;
    int mismatch = 0;
    osg_status const status =
        analyze->parsed()
            ? osg_analyze(s.get(), structure_name(file).c_str(), &options, parse_format(format), &out)
            : osg_theorems(s.get(), structure_name(file).c_str(), &options, parse_format(format),
                           &out, &mismatch);
    CString text(out);
    if (status != OSG_OK) return report_error(status);
    std::cout << text.get();
    return mismatch != 0 ? kExitInvalid : kExitOk;
  }

  if (green->parsed()) {
    auto s = load(file, exit);
    if (!s) return exit;
    char* out = nullptr;
    osg_status const status = osg_green(s.get(), relation[0], parse_format(format), &out);
    CString text(out);
    if (status != OSG_OK) return report_error(status);
    std::cout << text.get();
    return kExitOk;
  }

  if (enumerate->parsed()) {
    osg_enumerate_options e{};
    e.n = n;
    e.up_to_iso = up_to_iso ? 1 : 0;
    e.allow_large = allow_large ? 1 : 0;
    e.threads = threads;
    e.emit_dir = emit_dir.empty() ? nullptr : emit_dir.c_str();
    e.filter = filter.empty() ? nullptr : filter.c_str();
    char* out = nullptr;
    osg_status const status = osg_enumerate(&e, &out);
    CString text(out);
    if (status != OSG_OK) return report_error(status);
    std::string const all = text.get();
    // --count prints only the summary line.
    std::cout << (count ? all.substr(0, all.find('\n') + 1) : all);
    return kExitOk;
  }

  if (search->parsed()) {
    char* out = nullptr;
    std::size_t found = 0;
    osg_status const status =
        osg_search(n, where.c_str(), limit, up_to_iso ? 1 : 0, threads, &out, &found);
    CString text(out);
    if (status != OSG_OK) return report_error(status);
    std::cout << text.get();
    std::cerr << found << " match" << (found == 1 ? "" : "es") << '\n';
    return kExitOk;
  }

  if (power->parsed()) {
    auto s = load(file, exit);
    if (!s) return exit;
    osg_semigroup* raw = nullptr;
    osg_status status = osg_power(s.get(), &raw);
    if (status != OSG_OK) return report_error(status);
    SemigroupPtr p(raw);
    char* out = nullptr;
    status = osg_serialize(p.get(), &out);
    CString text(out);
    if (status != OSG_OK) return report_error(status);
    if (output.empty()) {
      std::cout << text.get();
    } else {
      std::ofstream f(output);
      if (!f || !(f << text.get())) {
        std::cerr << "osg: cannot write '" << output << "'\n";
        return kExitUsage;
      }
    }
    return kExitOk;
  }

  if (corpus->parsed()) {
    char* out = nullptr;
    std::size_t mismatches = 0;
    osg_status const status = osg_corpus_verify(n, &options, threads,
                                                emit_dir.empty() ? nullptr : emit_dir.c_str(),
                                                parse_format(format), &out, &mismatches);
    CString text(out);
    if (status != OSG_OK) return report_error(status);
    std::cout << text.get();
    return mismatches != 0 ? kExitInvalid : kExitOk;
  }

  return kExitUsage;
}
