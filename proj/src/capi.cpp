#include "osg/osg.h"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "osg/constructions.hpp"
#include "osg/core.hpp"
#include "osg/enumerate.hpp"
#include "osg/report.hpp"
#include "osg/verify.hpp"

struct osg_semigroup {
  osg::OrderedSemigroup value;
};

namespace {

thread_local std::string last_error;

char* duplicate(std::string const& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

osg_status fail(osg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps exceptions escaping the C++ core onto status codes.
template <typename F>
osg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (osg::ExpressionError const& e) {
    return fail(OSG_ERR_EXPRESSION, e.what());
  } catch (std::length_error const& e) {
    return fail(OSG_ERR_BOUND, e.what());
  } catch (std::invalid_argument const& e) {
    return fail(OSG_ERR_INVALID_ARGUMENT, e.what());
  } catch (std::bad_alloc const&) {
    return fail(OSG_ERR_INTERNAL, "out of memory");
  } catch (std::exception const& e) {
    return fail(OSG_ERR_INTERNAL, e.what());
  }
}

osg::VerifyOptions to_verify_options(osg_options const* options) {
  osg::VerifyOptions v;
  v.limits = osg::Limits::from_environment();
  if (options != nullptr) {
    v.readings.idempotents = options->idempotents == OSG_IDEMPOTENT_EQ
                                 ? osg::IdempotentReading::eq
                                 : osg::IdempotentReading::leq;
    v.readings.linv_quantifier =
        options->linv_quantifier == OSG_EXISTS ? osg::PairQuantifier::exists
                                               : osg::PairQuantifier::forall;
  }
  return v;
}

osg::Format to_format(osg_format f) {
  return f == OSG_FORMAT_JSON ? osg::Format::json : osg::Format::text;
}

osg_status from_validation(osg::ValidationResult result, osg_semigroup** out,
                           char** diagnostics) {
  if (!result.ok()) {
    std::string text;
    for (auto const& d : result.diagnostics) text += osg::format_diagnostic(d) + "\n";
    if (diagnostics != nullptr) *diagnostics = duplicate(text);
    return fail(OSG_ERR_INVALID_STRUCTURE, text);
  }
  *out = new osg_semigroup{std::move(*result.value)};
  return OSG_OK;
}

}  // namespace

extern "C" {

const char* osg_version(void) { return "1.0.0"; }

const char* osg_status_string(osg_status status) {
  switch (status) {
    case OSG_OK:                    return "ok";
    case OSG_ERR_INVALID_ARGUMENT:  return "invalid argument";
    case OSG_ERR_INVALID_STRUCTURE: return "invalid structure";
    case OSG_ERR_IO:                return "i/o error";
    case OSG_ERR_BOUND:             return "size bound exceeded";
    case OSG_ERR_EXPRESSION:        return "invalid expression";
    case OSG_ERR_INTERNAL:          return "internal error";
  }
  return "unknown status";
}

const char* osg_last_error(void) { return last_error.c_str(); }

void osg_string_free(char* s) { std::free(s); }

osg_options osg_default_options(void) { return osg_options{OSG_IDEMPOTENT_LEQ, OSG_FORALL}; }

osg_status osg_parse(const char* text, osg_semigroup** out, char** diagnostics) {
  if (diagnostics != nullptr) *diagnostics = nullptr;
  if (text == nullptr || out == nullptr) return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    return from_validation(osg::parse(text, osg::Limits::from_environment()), out, diagnostics);
  });
}

osg_status osg_load(const char* path, osg_semigroup** out, char** diagnostics) {
  if (diagnostics != nullptr) *diagnostics = nullptr;
  if (path == nullptr || out == nullptr) return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(OSG_ERR_IO, std::string("cannot open '") + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string const text = buffer.str();
  return osg_parse(text.c_str(), out, diagnostics);
}

void osg_free(osg_semigroup* s) { delete s; }

size_t osg_size(const osg_semigroup* s) { return s == nullptr ? 0 : s->value.size(); }

const char* osg_element_name(const osg_semigroup* s, size_t index) {
  if (s == nullptr || index >= s->value.size()) return nullptr;
  return s->value.name(static_cast<osg::Element>(index)).c_str();
}

size_t osg_product(const osg_semigroup* s, size_t a, size_t b) {
  if (s == nullptr || a >= s->value.size() || b >= s->value.size()) return SIZE_MAX;
  return s->value.product(static_cast<osg::Element>(a), static_cast<osg::Element>(b));
}

int osg_leq(const osg_semigroup* s, size_t a, size_t b) {
  if (s == nullptr || a >= s->value.size() || b >= s->value.size()) return 0;
  return s->value.leq(static_cast<osg::Element>(a), static_cast<osg::Element>(b)) ? 1 : 0;
}

osg_status osg_serialize(const osg_semigroup* s, char** out) {
  if (s == nullptr || out == nullptr) return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = duplicate(osg::serialize(s->value));
    return OSG_OK;
  });
}

osg_status osg_analyze(const osg_semigroup* s, const char* name, const osg_options* options,
                       osg_format format, char** out) {
  if (s == nullptr || out == nullptr) return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = duplicate(osg::render_analysis(s->value, name != nullptr ? name : "",
                                          to_verify_options(options), to_format(format)));
    return OSG_OK;
  });
}

osg_status osg_theorems(const osg_semigroup* s, const char* name, const osg_options* options,
                        osg_format format, char** out, int* mismatch) {
  if (s == nullptr || out == nullptr) return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto const report = osg::theorem_suite(s->value, to_verify_options(options));
    if (mismatch != nullptr) *mismatch = report.has_mismatch() ? 1 : 0;
    *out = duplicate(osg::render_theorems(s->value, name != nullptr ? name : "", report,
                                          to_format(format)));
    return OSG_OK;
  });
}

osg_status osg_green(const osg_semigroup* s, char relation, osg_format format, char** out) {
  if (s == nullptr || out == nullptr) return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  osg::GreenKind kind;
  switch (relation) {
    case 'L': kind = osg::GreenKind::L; break;
    case 'R': kind = osg::GreenKind::R; break;
    case 'J': kind = osg::GreenKind::J; break;
    case 'H': kind = osg::GreenKind::H; break;
    default:
      return fail(OSG_ERR_INVALID_ARGUMENT, "relation must be one of L, R, J, H");
  }
  return guarded([&] {
    *out = duplicate(osg::render_green(s->value, kind, to_format(format)));
    return OSG_OK;
  });
}

osg_status osg_predicate(const osg_semigroup* s, const char* name, int* holds) {
  if (s == nullptr || name == nullptr || holds == nullptr) {
    return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *holds = osg::evaluate_predicate(s->value, name).holds() ? 1 : 0;
    return OSG_OK;
  });
}

osg_status osg_power(const osg_semigroup* s, osg_semigroup** out) {
  if (s == nullptr || out == nullptr) return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new osg_semigroup{osg::power_semigroup(s->value, osg::Limits::from_environment())};
    return OSG_OK;
  });
}

osg_status osg_enumerate(const osg_enumerate_options* options, char** out) {
  if (options == nullptr || out == nullptr) return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    osg::EnumerateOptions e;
    e.up_to_iso = options->up_to_iso != 0;
    e.allow_large = options->allow_large != 0;
    e.threads = options->threads == 0 ? 1 : options->threads;
    e.limits = osg::Limits::from_environment();
    std::optional<osg::PredicateExpression> filter;
    if (options->filter != nullptr) filter = osg::PredicateExpression::parse(options->filter);
    auto corpus = osg::enumerate_corpus(options->n, e);
    std::size_t classes = 0;
    for (std::size_t k = 0; k < corpus.entries.size(); ++k) {
      classes += k == 0 || corpus.entries[k].canonical != corpus.entries[k - 1].canonical;
    }
    std::string text = "tables: " + std::to_string(corpus.table_count) +
                       ", ordered: " + std::to_string(corpus.ordered_count) +
                       ", classes: " + std::to_string(classes);
    if (filter) {
      std::erase_if(corpus.entries, [&](osg::CorpusEntry const& entry) {
        return !filter->evaluate(entry.structure);
      });
      text += ", matching: " + std::to_string(corpus.entries.size());
    }
    text += "\n";
    if (options->emit_dir != nullptr) {
      std::size_t files = 0;
      try {
        files = osg::emit_corpus(corpus, options->emit_dir);
      } catch (std::runtime_error const& err) {
        return fail(OSG_ERR_IO, err.what());
      }
      text += "wrote " + std::to_string(files) + " files to " + options->emit_dir + "\n";
    }
    text += osg::corpus_manifest(corpus);
    *out = duplicate(text);
    return OSG_OK;
  });
}

osg_status osg_search(size_t n, const char* expression, size_t limit, int up_to_iso,
                      size_t threads, char** out, size_t* count) {
  if (expression == nullptr || out == nullptr) {
    return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto const expr = osg::PredicateExpression::parse(expression);
    osg::SearchOptions options;
    options.limit = limit;
    options.enumerate.up_to_iso = up_to_iso != 0;
    options.enumerate.threads = threads == 0 ? 1 : threads;
    options.enumerate.limits = osg::Limits::from_environment();
    auto const found = osg::search(n, expr, options);
    std::string text;
    for (std::size_t k = 0; k < found.size(); ++k) {
      text += (k == 0 ? "" : "\n") + std::string("# match ") + std::to_string(k + 1) + "\n" +
              osg::serialize(found[k]);
    }
    if (count != nullptr) *count = found.size();
    *out = duplicate(text);
    return OSG_OK;
  });
}

osg_status osg_corpus_verify(size_t n_max, const osg_options* options, size_t threads,
                             const char* emit_dir, osg_format format, char** out,
                             size_t* mismatches) {
  if (out == nullptr) return fail(OSG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto const v = to_verify_options(options);
    if (n_max < 1 || n_max > v.limits.enumerate_large_n) {
      throw std::length_error("corpus verification supports orders 1.." +
                              std::to_string(v.limits.enumerate_large_n));
    }
    auto const summary = osg::corpus_verify(n_max, v, threads == 0 ? 1 : threads);
    if (mismatches != nullptr) *mismatches = summary.mismatch_count();
    if (emit_dir != nullptr && !summary.mismatches.empty()) {
      try {
        osg::emit_mismatches(summary, emit_dir);
      } catch (std::runtime_error const& err) {
        return fail(OSG_ERR_IO, err.what());
      }
    }
    *out = duplicate(osg::render_corpus_summary(summary, to_format(format)));
    return OSG_OK;
  });
}

}  // extern "C"
