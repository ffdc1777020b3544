// Text and JSON renderings of analyses. Witnesses are always printed as
// element names. JSON objects keep a fixed key order:
//   {"structure": ..., "classes": {...}, "green": {...}, "theorems": {...}}

#ifndef OSG_REPORT_HPP
#define OSG_REPORT_HPP

#include <string>

#include "osg/core.hpp"
#include "osg/ideals_green.hpp"
#include "osg/verify.hpp"

namespace osg {

enum class Format { text, json };

std::string render_analysis(OrderedSemigroup const& s, std::string const& name,
                            VerifyOptions const& options, Format format);

std::string render_theorems(OrderedSemigroup const& s, std::string const& name,
                            TheoremReport const& report, Format format);

std::string render_green(OrderedSemigroup const& s, GreenKind kind, Format format);

std::string render_corpus_summary(CorpusSummary const& summary, Format format);

}  // namespace osg

#endif  // OSG_REPORT_HPP
